#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "d43/b1l.hpp"
#include "d43/crystal.hpp"
#include "d43/demazure.hpp"
#include "d43/graph.hpp"
#include "d43/path.hpp"
#include "d43/perfect.hpp"

namespace py = pybind11;
using namespace d43;

namespace {

py::object report_to_py(const Report& r) {
    return py::module_::import("json").attr("loads")(r.to_json().dump());
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::string weight_repr(const Weight& w) {
    std::ostringstream os;
    os << "Weight(" << w.c0 << ", " << w.c1 << ", " << w.c2 << ", " << w.cd << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "D4(3) perfect crystal B^{1,L}, path model, and Demazure verification";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

    py::class_<Weight>(m, "Weight")
        .def(py::init([](long long c0, long long c1, long long c2, long long cd) {
                 return Weight{c0, c1, c2, cd};
             }),
             py::arg("c0") = 0, py::arg("c1") = 0, py::arg("c2") = 0, py::arg("cd") = 0)
        .def_readwrite("c0", &Weight::c0)
        .def_readwrite("c1", &Weight::c1)
        .def_readwrite("c2", &Weight::c2)
        .def_readwrite("cd", &Weight::cd)
        .def("__repr__", &weight_repr)
        .def("__eq__", [](const Weight& a, const Weight& b) { return a == b; })
        .def("__add__", [](const Weight& a, const Weight& b) { return a + b; })
        .def("__sub__", [](const Weight& a, const Weight& b) { return a - b; })
        .def("__rmul__", [](const Weight& a, long long n) { return n * a; })
        .def("__hash__", [](const Weight& w) {
            return py::hash(py::make_tuple(w.c0, w.c1, w.c2, w.cd));
        });

    m.def("fundamental", &fundamental, py::arg("i"));
    m.def("delta", &delta);
    m.def("simple_root", &simple_root, py::arg("i"));
    m.def("pair_h", &pair_h, py::arg("mu"), py::arg("i"));
    m.def("level", &level, py::arg("mu"));
    m.def("is_dominant", &is_dominant, py::arg("mu"));
    m.def("reflect", &reflect, py::arg("i"), py::arg("mu"));
    m.def("apply_word", &apply_word, py::arg("word"), py::arg("mu"));
    m.def("stream_index", &stream_index, py::arg("t"));
    m.def("wk_word", &wk_word, py::arg("k"));
    m.def("root_coefficients", &root_coefficients, py::arg("mu"), py::arg("base"));
    m.def("bruhat_increases", &bruhat_increases, py::arg("word"), py::arg("j"), py::arg("mu"));
    m.def("wt_from_eps_phi", &wt_from_eps_phi, py::arg("eps"), py::arg("phi"));

    m.def("enumerate_b", &enumerate_b, py::arg("L"));
    m.def("in_b", &in_b, py::arg("b"), py::arg("L"));
    m.def("s_of", &s_of, py::arg("b"));
    m.def("t_of", &t_of, py::arg("b"));
    m.def("z_of",
          [](const Elem& b) {
              const ZVec z = z_of(b);
              return py::make_tuple(z.z1, z.z2, z.z3, z.z4);
          },
          py::arg("b"));
    m.def("script_a", &script_a, py::arg("b"));
    m.def("f", &f, py::arg("i"), py::arg("b"), py::arg("L"));
    m.def("e", &e, py::arg("i"), py::arg("b"), py::arg("L"));
    m.def("eps", &eps, py::arg("i"), py::arg("b"), py::arg("L"));
    m.def("phi", &phi, py::arg("i"), py::arg("b"), py::arg("L"));
    m.def("wt", &wt, py::arg("b"), py::arg("L"));
    m.def("f_max", &f_max, py::arg("i"), py::arg("b"), py::arg("L"));
    m.def("minimal_elements", &minimal_elements, py::arg("L"));
    m.def("minimal_parametrized", &minimal_parametrized, py::arg("L"));

    m.def("tensor_f", &tensor_f, py::arg("i"), py::arg("t"), py::arg("L"));
    m.def("tensor_e", &tensor_e, py::arg("i"), py::arg("t"), py::arg("L"));
    m.def("tensor_eps", &tensor_eps, py::arg("i"), py::arg("t"), py::arg("L"));
    m.def("tensor_phi", &tensor_phi, py::arg("i"), py::arg("t"), py::arg("L"));
    m.def("tensor_wt", &tensor_wt, py::arg("t"), py::arg("L"));

    py::class_<Path>(m, "Path")
        .def(py::init([](int l, std::vector<Elem> prefix) {
                 return canonical({l, std::move(prefix)});
             }),
             py::arg("l"), py::arg("prefix") = std::vector<Elem>{})
        .def_readonly("l", &Path::l)
        .def_readonly("prefix", &Path::prefix)
        .def("__eq__", [](const Path& a, const Path& b) { return a == b; })
        .def("__hash__",
             [](const Path& p) {
                 py::tuple flat(p.prefix.size() * 6 + 1);
                 flat[0] = p.l;
                 std::size_t n = 1;
                 for (const Elem& b : p.prefix)
                     for (const int x : b) flat[n++] = x;
                 return py::hash(flat);
             })
        .def("__repr__", [](const Path& p) {
            std::ostringstream os;
            os << "Path(l=" << p.l << ", prefix=[";
            for (std::size_t k = 0; k < p.prefix.size(); ++k) {
                os << (k ? ", " : "") << "(";
                for (int j = 0; j < 6; ++j)
                    os << (j ? "," : "") << p.prefix[k][static_cast<std::size_t>(j)];
                os << ")";
            }
            os << "])";
            return os.str();
        });

    m.def("bbar", &bbar, py::arg("l"));
    m.def("ground_state", &ground_state, py::arg("l"));
    m.def("path_f", &path_f, py::arg("i"), py::arg("p"));
    m.def("path_e", &path_e, py::arg("i"), py::arg("p"));
    m.def("path_eps_phi", &path_eps_phi, py::arg("i"), py::arg("p"));
    m.def("path_wt", &path_wt, py::arg("p"));
    m.def("demazure_paths", &demazure_paths, py::arg("k"), py::arg("l"),
          py::arg("budget") = kDefaultBudget);
    m.def("pk_set", &pk_set, py::arg("k"), py::arg("l"), py::arg("budget") = kDefaultBudget);

    py::enum_<PredicateId>(m, "PredicateId")
        .value("P", PredicateId::P)
        .value("Q1", PredicateId::Q1)
        .value("Q2", PredicateId::Q2)
        .value("Q3", PredicateId::Q3)
        .value("Q4", PredicateId::Q4)
        .value("Q5", PredicateId::Q5)
        .value("Q6", PredicateId::Q6);

    m.def("ba", [](int a, int l) { return ba_j(a, l).elements; }, py::arg("a"), py::arg("l"));
    m.def("demazure_chain", &demazure_chain, py::arg("l"));
    m.def("predicate", &predicate, py::arg("id"), py::arg("b"), py::arg("l"));
    m.def("predicate_ba", &predicate_ba, py::arg("a"), py::arg("l"));

    m.def("predicate_cross_check",
          [](int l) { return report_to_py(predicate_cross_check(l)); }, py::arg("l"));
    m.def("perfect_axioms",
          [](int L, std::size_t budget) { return report_to_py(perfect_axioms(L, budget)); },
          py::arg("L"), py::arg("budget") = kDefaultBudget);
    m.def("verify_condition1", [](int l) { return report_to_py(verify_condition1(l)); },
          py::arg("l"));
    m.def("verify_condition2", [](int l) { return report_to_py(verify_condition2(l)); },
          py::arg("l"));
    m.def("verify_condition3",
          [](int l, int kmax) { return report_to_py(verify_condition3(l, kmax)); }, py::arg("l"),
          py::arg("kmax") = 60);
    m.def("lemma_weyl_check", [](int jmax) { return report_to_py(lemma_weyl_check(jmax)); },
          py::arg("jmax") = 10);
    m.def("verify_theorem",
          [](int l, int kmax, std::size_t budget) {
              return report_to_py(verify_theorem(l, kmax, budget));
          },
          py::arg("l"), py::arg("kmax") = 12, py::arg("budget") = kDefaultBudget);

    m.def("graph_dot",
          [](int L, std::size_t budget) {
              return export_dot(build_graph(enumerate_b(L), B1LOps{L}, budget));
          },
          py::arg("L"), py::arg("budget") = kDefaultBudget);
    m.def("graph_json",
          [](int L, std::size_t budget) {
              return json_to_py(graph_to_json(build_graph(enumerate_b(L), B1LOps{L}, budget)));
          },
          py::arg("L"), py::arg("budget") = kDefaultBudget);
}

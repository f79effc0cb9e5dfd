#include <set>

#include "doctest.h"

#include "d43/crystal.hpp"
#include "d43/errors.hpp"
#include "d43/graph.hpp"

using namespace d43;

namespace {

const Elem kBar = {0, 1, 1, 1, 1, 0};  // level 3

}  // namespace

TEST_CASE("tensor statistics") {
    const Tensor bb = {kBar, kBar};
    CHECK(tensor_eps_phi(2, bb, 3) == std::pair<int, int>{1, 1});
    CHECK(tensor_eps_phi(0, {Elem{3, 0, 0, 0, 0, 0}, Elem{0, 3, 0, 0, 0, 0}}, 3) ==
          std::pair<int, int>{9, 0});
    CHECK(tensor_wt(bb, 3) == Weight{0, 0, 0, 0});
    CHECK_THROWS_AS(tensor_eps(0, Tensor{}, 3), std::invalid_argument);
    // phi = eps + <h_i, wt> over a sample of pairs
    const auto all = enumerate_b(1);
    for (const Elem& x : all)
        for (const Elem& y : all)
            for (int i = 0; i < 3; ++i) {
                const Tensor t = {x, y};
                const auto [ev, pv] = tensor_eps_phi(i, t, 1);
                CHECK(pv - ev == pair_h(tensor_wt(t, 1), i));
                CHECK(ev >= 0);
                CHECK(pv >= 0);
            }
}

TEST_CASE("tensor operators") {
    const Tensor bb = {kBar, kBar};
    CHECK(tensor_f(2, bb, 3) == Tensor{kBar, Elem{0, 0, 3, 1, 1, 0}});
    CHECK_FALSE(tensor_f(1, bb, 3).has_value());
    // right action selected, and the right factor's lowering vanishes
    CHECK_FALSE(tensor_f(0, {Elem{3, 0, 0, 0, 0, 0}, kBar}, 3).has_value());
    CHECK(tensor_e(2, {kBar, Elem{0, 0, 3, 1, 1, 0}}, 3) == bb);
    CHECK_FALSE(tensor_e(0, bb, 3).has_value());
    // mutual inversion over all pairs at L = 1
    const auto all = enumerate_b(1);
    for (const Elem& x : all)
        for (const Elem& y : all)
            for (int i = 0; i < 3; ++i) {
                const Tensor t = {x, y};
                if (const auto ft = tensor_f(i, t, 1)) CHECK(tensor_e(i, *ft, 1) == t);
                if (const auto et = tensor_e(i, t, 1)) CHECK(tensor_f(i, *et, 1) == t);
            }
}

TEST_CASE("weight from statistics") {
    CHECK(wt_from_eps_phi({0, 0, 1}, {0, 0, 1}) == Weight{0, 0, 0, 0});
    CHECK(wt(Elem{0, 1, 1, 1, 1, 0}, 3) == Weight{0, 0, 0, 0});
    CHECK(wt(Elem{2, 0, 0, 0, 0, 0}, 2) == Weight{-4, 2, 0, 0});
}

TEST_CASE("graph construction") {
    CHECK(build_graph<B1LOps>({}, B1LOps{1}).vertices.empty());
    const auto g1 = build_graph<B1LOps>({{0, 1, 1, 1, 1, 0}}, B1LOps{3});
    CHECK(g1.vertices.size() == 112);
    CHECK(is_connected(g1));
    CHECK(std::is_sorted(g1.edges.begin(), g1.edges.end()));
    CHECK_THROWS_AS(build_graph<B1LOps>({{0, 1, 1, 1, 1, 0}}, B1LOps{3}, 5), BudgetExceeded);
}

TEST_CASE("axiom checker on the real crystals") {
    for (int L = 1; L <= 3; ++L) {
        const auto elems = enumerate_b(L);
        const B1LOps ops{L};
        const auto g = build_graph(elems, ops);
        CHECK(axiom_check(g).empty());
        CHECK(axiom_check(g, elems, ops).empty());
        CHECK(is_connected(g));
    }
    // tensor square at L = 1
    std::vector<Tensor> pairs;
    for (const Elem& x : enumerate_b(1))
        for (const Elem& y : enumerate_b(1)) pairs.push_back({x, y});
    const TensorOps tops{1};
    std::sort(pairs.begin(), pairs.end(), [&](const Tensor& a, const Tensor& b) {
        return tops.encode(a) < tops.encode(b);
    });
    const auto gt = build_graph(pairs, tops);
    CHECK(gt.vertices.size() == 64);
    CHECK(axiom_check(gt, pairs, tops).empty());
    CHECK(is_connected(gt));
}

TEST_CASE("axiom checker flags corrupted graphs") {
    CrystalGraph g;
    g.vertices.push_back({{0}, Weight{0, 0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    g.edges.push_back({0, 1, 0});  // f-loop: wt cannot drop, eps cannot rise
    CHECK_FALSE(axiom_check(g).empty());

    auto g2 = build_graph<B1LOps>({{0, 0, 0, 0, 0, 0}}, B1LOps{1});
    REQUIRE_FALSE(g2.vertices.empty());
    g2.vertices.front().phi[0] += 1;  // break phi = eps + <h, wt>
    CHECK_FALSE(axiom_check(g2).empty());
}

TEST_CASE("decorated-graph equality") {
    const auto g = build_graph<B1LOps>({{0, 0, 0, 0, 0, 0}}, B1LOps{2});
    CHECK(graphs_equal(g, g));

    // vertex order is irrelevant: reverse it and remap edges
    CrystalGraph rev;
    const std::size_t n = g.vertices.size();
    for (std::size_t k = 0; k < n; ++k) rev.vertices.push_back(g.vertices[n - 1 - k]);
    for (const GraphEdge& ed : g.edges)
        rev.edges.push_back({n - 1 - ed.src, ed.label, n - 1 - ed.dst});
    CHECK(graphs_equal(g, rev));

    // a missing edge is detected
    CrystalGraph cut = g;
    cut.edges.pop_back();
    CHECK_FALSE(graphs_equal(g, cut));

    // a decoration difference is detected
    CrystalGraph tweaked = g;
    tweaked.vertices.front().eps[2] += 1;
    CHECK_FALSE(graphs_equal(g, tweaked));
}

TEST_CASE("DOT round trip") {
    CHECK(export_dot(CrystalGraph{}) == "digraph crystal {\n}\n");
    for (int L = 1; L <= 2; ++L) {
        const auto g = build_graph(enumerate_b(L), B1LOps{L});
        const std::string dot = export_dot(g);
        CHECK(dot == export_dot(g));  // deterministic
        const CrystalGraph back = parse_dot(dot);
        CHECK(back.vertices.size() == g.vertices.size());
        CHECK(back.edges == g.edges);
        CHECK(export_dot(back) == dot);  // parse/re-export is the identity on bytes
    }
}

TEST_CASE("graph JSON encoding") {
    const auto g = build_graph(enumerate_b(1), B1LOps{1});
    const auto doc = graph_to_json(g);
    REQUIRE(doc.contains("vertices"));
    REQUIRE(doc.contains("edges"));
    CHECK(doc["vertices"].size() == 8);
    for (const auto& edge : doc["edges"]) {
        REQUIRE(edge.size() == 3);
        CHECK(edge[1].get<int>() >= 0);
        CHECK(edge[1].get<int>() <= 2);
    }
}

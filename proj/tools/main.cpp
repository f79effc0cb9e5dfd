#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "d43/b1l.hpp"
#include "d43/demazure.hpp"
#include "d43/graph.hpp"
#include "d43/path.hpp"
#include "d43/perfect.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    int l = 1;
    int L = 0;  // 0: derive 3l
    int a = -1;
    int k = -1;
    int kmax = -1;  // suite-dependent default
    int jmax = 10;
    bool paths = false;
    std::string suite;
    std::string format;
    std::string out;
    std::size_t budget = d43::kDefaultBudget;
};

std::string tuple_str(const d43::Elem& b) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ')';
    return os.str();
}

std::string path_str(const d43::Path& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.prefix.size(); ++i)
        out += (i ? "," : "") + tuple_str(p.prefix[i]);
    return out + "]";
}

json elems_json(const std::vector<d43::Elem>& v) {
    json out = json::array();
    for (const d43::Elem& b : v) out.push_back(json(b));
    return out;
}

int write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f.good()) {
        std::cerr << "error: cannot write " << path << '\n';
        return 1;
    }
    return 0;
}

int resolve_level(const RunConfig& cfg) {
    if (cfg.L == 0) return 3 * cfg.l;
    if (cfg.L != 3 * cfg.l)
        throw std::invalid_argument("inconsistent levels: L must equal 3l here");
    return cfg.L;
}

// cfg.format is shared by all subcommands, so the per-command default is
// resolved here rather than at option registration.
std::string resolve_format(const RunConfig& cfg, const char* fallback) {
    return cfg.format.empty() ? std::string(fallback) : cfg.format;
}

int cmd_enumerate(const RunConfig& cfg) {
    const std::string format = resolve_format(cfg, "text");
    const std::vector<d43::Elem> elems = d43::enumerate_b(cfg.L);
    if (format == "json") {
        const json doc = {{"level", cfg.L}, {"count", elems.size()}, {"elements", elems_json(elems)}};
        return write_out(cfg.out, doc.dump(2) + "\n");
    }
    if (format == "text") {
        std::ostringstream os;
        for (const d43::Elem& b : elems) os << tuple_str(b) << '\n';
        os << "count: " << elems.size() << '\n';
        return write_out(cfg.out, os.str());
    }
    throw std::invalid_argument("enumerate supports --format text|json");
}

d43::Report crystal_axiom_report(int L, std::size_t budget) {
    d43::Report r;
    r.check = "crystal-axioms";
    r.params = {{"L", L}};
    const std::vector<d43::Elem> elems = d43::enumerate_b(L);
    const d43::B1LOps ops{L};
    const d43::CrystalGraph g = d43::build_graph(elems, ops, budget);
    for (const std::string& v : d43::axiom_check(g, elems, ops)) r.fail({{"message", v}});
    r.tables["vertices"] = g.vertices.size();
    r.tables["edges"] = g.edges.size();
    r.tables["connected"] = d43::is_connected(g);
    return r;
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<d43::Report> reports;
    const auto run_suite = [&](const std::string& s) {
        if (s == "crystal") {
            reports.push_back(crystal_axiom_report(resolve_level(cfg), cfg.budget));
        } else if (s == "perfect") {
            reports.push_back(d43::perfect_axioms(resolve_level(cfg), cfg.budget));
        } else if (s == "predicates") {
            reports.push_back(d43::predicate_cross_check(cfg.l));
        } else if (s == "condition1") {
            reports.push_back(d43::verify_condition1(cfg.l));
        } else if (s == "condition2") {
            reports.push_back(d43::verify_condition2(cfg.l));
        } else if (s == "condition3") {
            reports.push_back(d43::verify_condition3(cfg.l, cfg.kmax < 0 ? 60 : cfg.kmax));
        } else if (s == "lemma-weyl") {
            reports.push_back(d43::lemma_weyl_check(cfg.jmax));
        } else if (s == "theorem") {
            reports.push_back(
                d43::verify_theorem(cfg.l, cfg.kmax < 0 ? 12 : cfg.kmax, cfg.budget));
        } else {
            throw std::invalid_argument("unknown suite: " + s);
        }
    };
    if (cfg.suite == "all") {
        for (const char* s : {"crystal", "perfect", "predicates", "condition1", "condition2",
                              "condition3", "lemma-weyl", "theorem"})
            run_suite(s);
    } else {
        run_suite(cfg.suite);
    }

    bool all_ok = true;
    for (const d43::Report& r : reports) all_ok = all_ok && r.ok;

    const std::string format = resolve_format(cfg, "json");
    std::string text;
    if (format == "text") {
        std::ostringstream os;
        for (const d43::Report& r : reports)
            os << r.check << ' ' << r.params.dump() << ": " << (r.ok ? "pass" : "fail")
               << (r.ok ? "" : " (" + std::to_string(r.violations.size()) + " violations)")
               << '\n';
        text = os.str();
    } else if (format == "json") {
        if (reports.size() == 1) {
            text = reports.front().to_json().dump(2) + "\n";
        } else {
            json arr = json::array();
            for (const d43::Report& r : reports) arr.push_back(r.to_json());
            text = arr.dump(2) + "\n";
        }
    } else {
        throw std::invalid_argument("verify supports --format text|json");
    }
    const int io = write_out(cfg.out, text);
    if (io != 0) return io;
    return all_ok ? 0 : 1;
}

int cmd_demazure(const RunConfig& cfg) {
    if ((cfg.a >= 0) == (cfg.k >= 0))
        throw std::invalid_argument("pass exactly one of --a or --k");
    if (cfg.paths && cfg.k < 0) throw std::invalid_argument("--paths requires --k");
    const std::string format = resolve_format(cfg, "text");
    const int L = 3 * cfg.l;

    if (cfg.a >= 0) {
        const std::vector<d43::Elem> elems = d43::ba_j(cfg.a, cfg.l).elements;
        if (format == "dot")
            return write_out(cfg.out, d43::export_dot(d43::induced_graph(elems, d43::B1LOps{L})));
        if (format == "json") {
            const json doc = {{"l", cfg.l},
                              {"a", cfg.a},
                              {"count", elems.size()},
                              {"elements", elems_json(elems)}};
            return write_out(cfg.out, doc.dump(2) + "\n");
        }
        std::ostringstream os;
        for (const d43::Elem& b : elems) os << tuple_str(b) << '\n';
        os << "count: " << elems.size() << '\n';
        return write_out(cfg.out, os.str());
    }

    const std::vector<d43::Path> ps = d43::demazure_paths(cfg.k, cfg.l, cfg.budget);
    if (format == "dot")
        return write_out(cfg.out, d43::export_dot(d43::induced_path_graph(ps, cfg.l)));
    if (format == "json") {
        json arr = json::array();
        for (const d43::Path& p : ps) arr.push_back(json(p.prefix));
        const json doc = {{"l", cfg.l}, {"k", cfg.k}, {"count", ps.size()}, {"paths", arr}};
        return write_out(cfg.out, doc.dump(2) + "\n");
    }
    std::ostringstream os;
    for (const d43::Path& p : ps) os << path_str(p) << '\n';
    os << "count: " << ps.size() << '\n';
    return write_out(cfg.out, os.str());
}

int cmd_export(const RunConfig& cfg) {
    const std::string format = resolve_format(cfg, "dot");
    const d43::CrystalGraph g =
        d43::build_graph(d43::enumerate_b(cfg.L), d43::B1LOps{cfg.L}, cfg.budget);
    if (format == "dot") return write_out(cfg.out, d43::export_dot(g));
    if (format == "json") return write_out(cfg.out, d43::graph_to_json(g).dump(2) + "\n");
    throw std::invalid_argument("export supports --format dot|json");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("D43_BUDGET")) {
        try {
            const long long v = std::stoll(env);
            if (v <= 0) throw std::invalid_argument("nonpositive");
            cfg.budget = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            std::cerr << "usage error: D43_BUDGET must be a positive integer\n";
            return 2;
        }
    }

    int rc = 0;
    CLI::App app{"D4(3) level-L perfect crystal, path model, and Demazure verification"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--budget", cfg.budget, "vertex/path cap")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list B^{1,L}");
    enumerate->add_option("--L", cfg.L, "crystal level")->required()->check(CLI::PositiveNumber);
    add_common(enumerate);
    enumerate->callback([&] { rc = cmd_enumerate(cfg); });

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite, "crystal|perfect|predicates|condition1|condition2|condition3|lemma-weyl|theorem|all")
        ->required()
        ->check(CLI::IsMember({"crystal", "perfect", "predicates", "condition1", "condition2",
                               "condition3", "lemma-weyl", "theorem", "all"}));
    verify->add_option("--l", cfg.l, "Demazure level (lambda = l*Lambda2)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--L", cfg.L, "crystal level (must equal 3l)")->check(CLI::PositiveNumber);
    verify->add_option("--kmax", cfg.kmax, "Weyl word length bound");
    verify->add_option("--jmax", cfg.jmax, "quadratic-formula bound")->check(CLI::PositiveNumber);
    add_common(verify);
    verify->callback([&] { rc = cmd_verify(cfg); });

    CLI::App* demazure = app.add_subcommand("demazure", "Demazure subsets and path sets");
    demazure->add_option("--l", cfg.l, "Demazure level")->check(CLI::PositiveNumber);
    demazure->add_option("--a", cfg.a, "subset index 0..6")->check(CLI::Range(0, 6));
    demazure->add_option("--k", cfg.k, "Weyl word length")->check(CLI::NonNegativeNumber);
    demazure->add_flag("--paths", cfg.paths, "emit paths (with --k)");
    add_common(demazure);
    demazure->callback([&] { rc = cmd_demazure(cfg); });

    CLI::App* exp = app.add_subcommand("export", "crystal graph of B^{1,L}");
    exp->add_option("--L", cfg.L, "crystal level")->required()->check(CLI::PositiveNumber);
    add_common(exp);
    exp->callback([&] { rc = cmd_export(cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const d43::BudgetExceeded& ex) {
        std::cerr << "budget exceeded: " << ex.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return rc;
}

#include "d43/perfect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace d43 {

namespace {

nlohmann::json wj(const Weight& w) { return nlohmann::json::array({w.c0, w.c1, w.c2, w.cd}); }

// Coefficients (c1, c2) with lambda - mu = c1*alpha1_cl + c2*alpha2_cl, valid
// for level-0 differences (the classical weight lattice of G2 equals its root
// lattice, so the coefficients are always integers).
std::pair<long long, long long> cone_coefficients(const Weight& lambda, const Weight& mu) {
    const long long d1 = lambda.c1 - mu.c1, d2 = lambda.c2 - mu.c2;
    return {2 * d1 + 3 * d2, d1 + 2 * d2};
}

bool weight_leq(const Weight& mu, const Weight& lambda) {
    const auto [c1, c2] = cone_coefficients(lambda, mu);
    return c1 >= 0 && c2 >= 0;
}

}  // namespace

Report perfect_axioms(int L, std::size_t budget) {
    if (L < 1) throw std::invalid_argument("L must be >= 1");
    Report r;
    r.check = "perfect-axioms";
    r.params = {{"L", L}};

    const std::vector<Elem> B = enumerate_b(L);
    r.tables["B_size"] = B.size();

    // (2) connectivity of B (x) B: the BFS component of one seed is the whole
    // square.
    {
        const Tensor seed = {B.front(), B.front()};
        const CrystalGraph g = build_graph<TensorOps>({seed}, TensorOps{L}, budget);
        const std::size_t expected = B.size() * B.size();
        r.tables["tensor_component"] = g.vertices.size();
        r.tables["tensor_square"] = expected;
        if (g.vertices.size() != expected || !is_connected(g))
            r.fail({{"condition", 2},
                    {"component", g.vertices.size()},
                    {"expected", expected}});
    }

    // (3) unique maximal weight lambda0 dominating wt(B), attained once.
    {
        std::map<Weight, int> multiplicity;
        for (const Elem& b : B) ++multiplicity[wt(b, L)];
        std::vector<Weight> maximal;
        for (const auto& [w, n] : multiplicity) {
            bool top = true;
            for (const auto& [v, m] : multiplicity)
                if (!(v == w) && weight_leq(w, v)) {
                    top = false;
                    break;
                }
            if (top) maximal.push_back(w);
        }
        if (maximal.size() != 1) {
            nlohmann::json tops = nlohmann::json::array();
            for (const Weight& w : maximal) tops.push_back(wj(w));
            r.fail({{"condition", 3}, {"maximal_weights", std::move(tops)}});
        } else {
            const Weight lambda0 = maximal.front();
            r.tables["lambda0"] = wj(lambda0);
            r.tables["lambda0_multiplicity"] = multiplicity.at(lambda0);
            for (const auto& [w, n] : multiplicity)
                if (!weight_leq(w, lambda0))
                    r.fail({{"condition", 3},
                            {"weight_outside_cone", wj(w)}});
            if (multiplicity.at(lambda0) != 1)
                r.fail({{"condition", 3},
                        {"lambda0", wj(lambda0)},
                        {"multiplicity", multiplicity.at(lambda0)}});
        }
    }

    // (4) level(eps(b)) >= L everywhere.
    for (const Elem& b : B) {
        const long long lv = eps(0, b, L) + 2LL * eps(1, b, L) + 3LL * eps(2, b, L);
        if (lv < L)
            r.fail({{"condition", 4}, {"element", nlohmann::json(b)}, {"eps_level", lv}});
    }

    // (5) unique b^lambda and b_lambda per dominant classical weight of
    // level L.
    {
        nlohmann::json rows = nlohmann::json::array();
        for (int k2 = 0; 3 * k2 <= L; ++k2)
            for (int k1 = 0; 2 * k1 + 3 * k2 <= L; ++k1) {
                const int k0 = L - 2 * k1 - 3 * k2;
                std::vector<Elem> by_eps, by_phi;
                for (const Elem& b : B) {
                    if (eps(0, b, L) == k0 && eps(1, b, L) == k1 && eps(2, b, L) == k2)
                        by_eps.push_back(b);
                    if (phi(0, b, L) == k0 && phi(1, b, L) == k1 && phi(2, b, L) == k2)
                        by_phi.push_back(b);
                }
                if (by_eps.size() != 1 || by_phi.size() != 1)
                    r.fail({{"condition", 5},
                            {"lambda", nlohmann::json::array({k0, k1, k2})},
                            {"eps_matches", by_eps.size()},
                            {"phi_matches", by_phi.size()}});
                nlohmann::json row = {{"lambda", nlohmann::json::array({k0, k1, k2})}};
                if (by_eps.size() == 1) row["b_eps"] = nlohmann::json(by_eps.front());
                if (by_phi.size() == 1) row["b_phi"] = nlohmann::json(by_phi.front());
                rows.push_back(std::move(row));
            }
        r.tables["dominant_weights"] = std::move(rows);
    }

    return r;
}

}  // namespace d43

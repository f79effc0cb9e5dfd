#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "d43/crystal.hpp"
#include "d43/errors.hpp"

namespace d43 {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct GraphVertex {
    std::vector<int> enc;  // canonical integer encoding of the element
    Weight wt{};
    std::array<int, 3> eps{}, phi{};

    friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

struct GraphEdge {
    std::size_t src;
    int label;
    std::size_t dst;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
    friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

// Vertices in canonical order (lexicographic on enc), edges sorted.
struct CrystalGraph {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;
};

// Operator families over a concrete element type. Each adapter provides
// f/e/eps/phi/wt/encode; graphs are built and checked through this interface.
struct B1LOps {
    int L;
    using element = Elem;
    std::optional<Elem> f(int i, const Elem& b) const { return d43::f(i, b, L); }
    std::optional<Elem> e(int i, const Elem& b) const { return d43::e(i, b, L); }
    int eps(int i, const Elem& b) const { return d43::eps(i, b, L); }
    int phi(int i, const Elem& b) const { return d43::phi(i, b, L); }
    Weight wt(const Elem& b) const { return d43::wt(b, L); }
    std::vector<int> encode(const Elem& b) const { return {b.begin(), b.end()}; }
};

struct TensorOps {
    int L;
    using element = Tensor;
    std::optional<Tensor> f(int i, const Tensor& t) const { return tensor_f(i, t, L); }
    std::optional<Tensor> e(int i, const Tensor& t) const { return tensor_e(i, t, L); }
    int eps(int i, const Tensor& t) const { return tensor_eps(i, t, L); }
    int phi(int i, const Tensor& t) const { return tensor_phi(i, t, L); }
    Weight wt(const Tensor& t) const { return tensor_wt(t, L); }
    std::vector<int> encode(const Tensor& t) const {
        std::vector<int> out;
        for (const Elem& b : t) out.insert(out.end(), b.begin(), b.end());
        return out;
    }
};

// BFS closure of the seeds under all f_i and e_i; deterministic result.
template <class Ops>
CrystalGraph build_graph(const std::vector<typename Ops::element>& seeds, const Ops& ops,
                         std::size_t budget = kDefaultBudget) {
    using element = typename Ops::element;
    std::set<element> seen(seeds.begin(), seeds.end());
    std::vector<element> stack(seen.begin(), seen.end());
    while (!stack.empty()) {
        const element b = stack.back();
        stack.pop_back();
        for (int i = 0; i < 3; ++i) {
            for (const auto& nb : {ops.f(i, b), ops.e(i, b)}) {
                if (!nb || seen.count(*nb)) continue;
                if (seen.size() >= budget)
                    throw BudgetExceeded("graph closure exceeded budget of " +
                                         std::to_string(budget) + " vertices");
                seen.insert(*nb);
                stack.push_back(*nb);
            }
        }
    }

    std::vector<element> verts(seen.begin(), seen.end());
    std::sort(verts.begin(), verts.end(), [&](const element& a, const element& b) {
        return ops.encode(a) < ops.encode(b);
    });
    std::map<std::vector<int>, std::size_t> index;
    CrystalGraph g;
    g.vertices.reserve(verts.size());
    for (const element& b : verts) {
        GraphVertex v;
        v.enc = ops.encode(b);
        v.wt = ops.wt(b);
        for (int i = 0; i < 3; ++i) {
            v.eps[static_cast<std::size_t>(i)] = ops.eps(i, b);
            v.phi[static_cast<std::size_t>(i)] = ops.phi(i, b);
        }
        index.emplace(v.enc, g.vertices.size());
        g.vertices.push_back(std::move(v));
    }
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (int i = 0; i < 3; ++i)
            if (const auto nb = ops.f(i, verts[u]))
                g.edges.push_back({u, i, index.at(ops.encode(*nb))});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Decorated graph on exactly the given elements; edges kept only when both
// endpoints lie in the set.
template <class Ops>
CrystalGraph induced_graph(std::vector<typename Ops::element> elems, const Ops& ops) {
    std::sort(elems.begin(), elems.end(), [&](const auto& a, const auto& b) {
        return ops.encode(a) < ops.encode(b);
    });
    std::map<std::vector<int>, std::size_t> index;
    CrystalGraph g;
    g.vertices.reserve(elems.size());
    for (const auto& b : elems) {
        GraphVertex v;
        v.enc = ops.encode(b);
        v.wt = ops.wt(b);
        for (int i = 0; i < 3; ++i) {
            v.eps[static_cast<std::size_t>(i)] = ops.eps(i, b);
            v.phi[static_cast<std::size_t>(i)] = ops.phi(i, b);
        }
        index.emplace(v.enc, g.vertices.size());
        g.vertices.push_back(std::move(v));
    }
    for (std::size_t u = 0; u < elems.size(); ++u)
        for (int i = 0; i < 3; ++i)
            if (const auto nb = ops.f(i, elems[u])) {
                const auto it = index.find(ops.encode(*nb));
                if (it != index.end()) g.edges.push_back({u, i, it->second});
            }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Checks Def-2.1-style axioms expressible on the decorated graph alone:
// phi = eps + <h,wt> per vertex, weight/eps/phi steps along edges, per-label
// degree bounds, nonnegative eps/phi. Returns violation descriptions.
std::vector<std::string> axiom_check(const CrystalGraph& g);

// Full check including mutual inversion f(i,b)=b' <=> e(i,b')=b through ops,
// and agreement of the stored decorations with ops.
template <class Ops>
std::vector<std::string> axiom_check(const CrystalGraph& g,
                                     const std::vector<typename Ops::element>& verts,
                                     const Ops& ops) {
    std::vector<std::string> out = axiom_check(g);
    if (verts.size() != g.vertices.size()) {
        out.push_back("vertex list size mismatch");
        return out;
    }
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) index.emplace(g.vertices[k].enc, k);
    std::set<std::pair<std::size_t, int>> edge_of;
    for (const GraphEdge& ed : g.edges) edge_of.insert({ed.src, ed.label});
    for (std::size_t u = 0; u < verts.size(); ++u) {
        for (int i = 0; i < 3; ++i) {
            const auto fb = ops.f(i, verts[u]);
            if (fb.has_value() != edge_of.count({u, i})) {
                out.push_back("edge set disagrees with f at vertex " + std::to_string(u) +
                              " label " + std::to_string(i));
                continue;
            }
            if (!fb) continue;
            const auto back = ops.e(i, *fb);
            if (!back || ops.encode(*back) != ops.encode(verts[u]))
                out.push_back("e(f(b)) != b at vertex " + std::to_string(u) + " label " +
                              std::to_string(i));
            if (!index.count(ops.encode(*fb)))
                out.push_back("f image escapes the vertex set at vertex " + std::to_string(u));
        }
        for (int i = 0; i < 3; ++i) {
            const auto eb = ops.e(i, verts[u]);
            if (!eb) continue;
            const auto back = ops.f(i, *eb);
            if (!back || ops.encode(*back) != ops.encode(verts[u]))
                out.push_back("f(e(b)) != b at vertex " + std::to_string(u) + " label " +
                              std::to_string(i));
        }
    }
    return out;
}

bool is_connected(const CrystalGraph& g);

// Decorated-graph equality after canonical sorting by (wt, eps, phi, enc).
bool graphs_equal(const CrystalGraph& a, const CrystalGraph& b);

std::string export_dot(const CrystalGraph& g);
// Reads back exactly the subset of DOT emitted by export_dot (labels and
// edges only; decorations are not round-tripped).
CrystalGraph parse_dot(const std::string& text);

nlohmann::json graph_to_json(const CrystalGraph& g);

}  // namespace d43

#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "d43/crystal.hpp"
#include "d43/graph.hpp"

namespace d43 {

Elem bbar(int l);  // (0,l,l,l,l,0), the weight-zero element with eps = phi = l*L2

// Element of the highest-weight crystal B(l*L2) in the path model: a finite
// prefix (p(N-1), ..., p(0)) over B^{1,3l} followed by an implicit constant
// tail of bbar(l). Canonical form: the prefix never starts with bbar(l).
struct Path {
    int l = 1;
    std::vector<Elem> prefix;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

Path ground_state(int l);     // empty prefix
Path canonical(Path p);       // strip leading bbar entries
std::vector<int> path_encode(const Path& p);

// Crystal structure via the tensor rule against a formal highest-weight cap
// with eps_i = 0, phi_i = l*<L2, h_i>. If f selects the cap, one tail entry
// is exposed and the rule re-evaluated (at most once, asserted); if e selects
// the cap the result is null.
std::optional<Path> path_f(int i, const Path& p);
std::optional<Path> path_e(int i, const Path& p);
std::pair<int, int> path_eps_phi(int i, const Path& p);
Weight path_wt(const Path& p);  // l*L2 + sum of prefix weights, classical

// All paths with p(m) = bbar for m >= j, p(j-1) in B_a^{(j)} and free entries
// below, where k = 6(j-1)+a; the kappa = 1 tensor-factor description.
std::vector<Path> pk_set(int k, int l, std::size_t budget = kDefaultBudget);

// Demazure set B_{w^(k)}(l*L2) in the path model: fold the reflection stream
// oldest-first, closing under path_f at each step.
std::vector<Path> demazure_paths(int k, int l, std::size_t budget = kDefaultBudget);

// One closure step, seeds processed in the given order (the fixed point is
// order-independent; tests rely on being able to vary the order).
std::vector<Path> path_f_closure(int i, std::vector<Path> seeds,
                                 std::size_t budget = kDefaultBudget);

struct PathOps {
    int l;
    using element = Path;
    std::optional<Path> f(int i, const Path& p) const { return path_f(i, p); }
    std::optional<Path> e(int i, const Path& p) const { return path_e(i, p); }
    int eps(int i, const Path& p) const { return path_eps_phi(i, p).first; }
    int phi(int i, const Path& p) const { return path_eps_phi(i, p).second; }
    Weight wt(const Path& p) const { return path_wt(p); }
    std::vector<int> encode(const Path& p) const { return path_encode(p); }
};

// Decorated graph induced on a path set (edges kept when both ends lie in it).
CrystalGraph induced_path_graph(const std::vector<Path>& paths, int l);

}  // namespace d43

#include "d43/path.hpp"

#include <set>
#include <stdexcept>

#include "d43/demazure.hpp"

namespace d43 {

namespace {

int cap_phi(int i, int l) { return i == 2 ? l : 0; }

void check_level(int l) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
}

}  // namespace

Elem bbar(int l) { return {0, l, l, l, l, 0}; }

Path ground_state(int l) {
    check_level(l);
    return {l, {}};
}

Path canonical(Path p) {
    std::size_t k = 0;
    while (k < p.prefix.size() && p.prefix[k] == bbar(p.l)) ++k;
    p.prefix.erase(p.prefix.begin(), p.prefix.begin() + static_cast<std::ptrdiff_t>(k));
    return p;
}

std::vector<int> path_encode(const Path& p) {
    std::vector<int> out;
    for (const Elem& b : p.prefix) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::optional<Path> path_f(int i, const Path& p) {
    const int L = 3 * p.l;
    std::vector<Elem> prefix = p.prefix;
    int exposures = 0;
    while (prefix.empty() || cap_phi(i, p.l) > tensor_eps(i, prefix, L)) {
        // phi(cap) = phi(bbar) and eps(bbar (x) rest) >= eps(bbar) = phi(cap),
        // so after one exposure the cap can never be selected again.
        if (++exposures > 1) throw std::logic_error("path_f selected the cap twice");
        prefix.insert(prefix.begin(), bbar(p.l));
    }
    auto res = tensor_f(i, prefix, L);
    if (!res) return std::nullopt;
    return canonical({p.l, std::move(*res)});
}

std::optional<Path> path_e(int i, const Path& p) {
    const int L = 3 * p.l;
    if (p.prefix.empty() || cap_phi(i, p.l) >= tensor_eps(i, p.prefix, L))
        return std::nullopt;  // rule selects the cap, whose eps is 0
    auto res = tensor_e(i, p.prefix, L);
    if (!res) return std::nullopt;
    return canonical({p.l, std::move(*res)});
}

std::pair<int, int> path_eps_phi(int i, const Path& p) {
    const int L = 3 * p.l;
    const long long lam = cap_phi(i, p.l);  // <l*L2, h_i>
    const auto eval = [&](const std::vector<Elem>& prefix) -> std::pair<int, int> {
        if (prefix.empty()) return {0, static_cast<int>(lam)};
        long long wrest = 0;
        for (const Elem& b : prefix) wrest += pair_h(wt(b, L), i);
        const int ev = static_cast<int>(
            std::max<long long>(0, tensor_eps(i, prefix, L) - lam));
        const int pv = static_cast<int>(
            std::max<long long>(tensor_phi(i, prefix, L), lam + wrest));
        return {ev, pv};
    };
    const auto got = eval(p.prefix);
    // must be stable under exposing one more tail entry
    std::vector<Elem> padded = p.prefix;
    padded.insert(padded.begin(), bbar(p.l));
    if (got != eval(padded)) throw std::logic_error("path eps/phi not tail-stable");
    return got;
}

Weight path_wt(const Path& p) {
    const int L = 3 * p.l;
    Weight w = static_cast<long long>(p.l) * fundamental(2);
    for (const Elem& b : p.prefix) w = w + wt(b, L);
    return w;
}

std::vector<Path> path_f_closure(int i, std::vector<Path> seeds, std::size_t budget) {
    std::set<Path> seen(seeds.begin(), seeds.end());
    std::vector<Path>& stack = seeds;
    while (!stack.empty()) {
        const Path p = stack.back();
        stack.pop_back();
        const auto np = path_f(i, p);
        if (!np || seen.count(*np)) continue;
        if (seen.size() >= budget)
            throw BudgetExceeded("path closure exceeded budget of " + std::to_string(budget) +
                                 " paths");
        seen.insert(*np);
        stack.push_back(*np);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Path> demazure_paths(int k, int l, std::size_t budget) {
    check_level(l);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    std::vector<Path> out = {ground_state(l)};
    for (int t = 1; t <= k; ++t) out = path_f_closure(stream_index(t), out, budget);
    return out;
}

std::vector<Path> pk_set(int k, int l, std::size_t budget) {
    check_level(l);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (k == 0) return {ground_state(l)};
    const int j = (k - 1) / 6 + 1;
    const int a = k - 6 * (j - 1);
    const std::vector<Elem> slice = ba_j(a, l).elements;
    const std::vector<Elem> full = enumerate_b(3 * l);

    std::set<Path> out;
    std::vector<Elem> entries(static_cast<std::size_t>(j));
    // odometer over the j-1 free positions below p(j-1)
    std::vector<std::size_t> digits(static_cast<std::size_t>(j - 1), 0);
    for (const Elem& top : slice) {
        entries[0] = top;
        for (;;) {
            for (std::size_t d = 0; d < digits.size(); ++d) entries[d + 1] = full[digits[d]];
            if (out.size() >= budget)
                throw BudgetExceeded("path set exceeded budget of " + std::to_string(budget) +
                                     " paths");
            out.insert(canonical({l, entries}));
            std::size_t d = digits.size();
            while (d > 0 && ++digits[d - 1] == full.size()) digits[--d] = 0;
            if (d == 0) break;
        }
    }
    return {out.begin(), out.end()};
}

CrystalGraph induced_path_graph(const std::vector<Path>& paths, int l) {
    return induced_graph(paths, PathOps{l});
}

}  // namespace d43

#include "d43/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace d43 {

namespace {

// eps of the sub-product t[from..] for every suffix start, rightmost first.
std::vector<int> suffix_eps(int i, const Tensor& t, int L) {
    std::vector<int> out(t.size());
    const std::size_t n = t.size();
    out[n - 1] = eps(i, t[n - 1], L);
    for (std::size_t k = n - 1; k-- > 0;) {
        const long long w = pair_h(wt(t[k], L), i);
        out[k] = std::max<long long>(eps(i, t[k], L), out[k + 1] - w);
    }
    return out;
}

}  // namespace

int tensor_eps(int i, const Tensor& t, int L) {
    if (t.empty()) throw std::invalid_argument("empty tensor");
    return suffix_eps(i, t, L)[0];
}

int tensor_phi(int i, const Tensor& t, int L) {
    if (t.empty()) throw std::invalid_argument("empty tensor");
    long long acc = phi(i, t.back(), L);
    for (std::size_t k = t.size() - 1; k-- > 0;) {
        long long wrest = 0;
        for (std::size_t m = k + 1; m < t.size(); ++m) wrest += pair_h(wt(t[m], L), i);
        acc = std::max<long long>(acc, phi(i, t[k], L) + wrest);
    }
    return static_cast<int>(acc);
}

std::pair<int, int> tensor_eps_phi(int i, const Tensor& t, int L) {
    return {tensor_eps(i, t, L), tensor_phi(i, t, L)};
}

Weight tensor_wt(const Tensor& t, int L) {
    Weight w;
    for (const Elem& b : t) w = w + wt(b, L);
    return w;
}

std::optional<Tensor> tensor_f(int i, const Tensor& t, int L) {
    if (t.empty()) throw std::invalid_argument("empty tensor");
    const auto se = suffix_eps(i, t, L);
    std::size_t k = 0;
    while (k + 1 < t.size() && phi(i, t[k], L) <= se[k + 1]) ++k;
    const auto nb = f(i, t[k], L);
    if (!nb) return std::nullopt;
    Tensor out = t;
    out[k] = *nb;
    return out;
}

std::optional<Tensor> tensor_e(int i, const Tensor& t, int L) {
    if (t.empty()) throw std::invalid_argument("empty tensor");
    const auto se = suffix_eps(i, t, L);
    std::size_t k = 0;
    while (k + 1 < t.size() && phi(i, t[k], L) < se[k + 1]) ++k;
    const auto nb = e(i, t[k], L);
    if (!nb) return std::nullopt;
    Tensor out = t;
    out[k] = *nb;
    return out;
}

}  // namespace d43

#include "d43/weight.hpp"

#include <string>

namespace d43 {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("weight arithmetic overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("weight arithmetic overflow");
    return r;
}

void check_index(int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("reflection index must be 0, 1 or 2");
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
    return {checked_add(a.c0, b.c0), checked_add(a.c1, b.c1), checked_add(a.c2, b.c2),
            checked_add(a.cd, b.cd)};
}

Weight operator-(const Weight& a, const Weight& b) {
    return a + (-1LL) * b;
}

Weight operator*(long long n, const Weight& a) {
    return {checked_mul(n, a.c0), checked_mul(n, a.c1), checked_mul(n, a.c2),
            checked_mul(n, a.cd)};
}

Weight fundamental(int i) {
    check_index(i);
    Weight w;
    (i == 0 ? w.c0 : i == 1 ? w.c1 : w.c2) = 1;
    return w;
}

Weight delta() { return {0, 0, 0, 1}; }

Weight simple_root(int i) {
    check_index(i);
    static const Weight roots[3] = {{2, -1, 0, 1}, {-1, 2, -1, 0}, {0, -3, 2, 0}};
    return roots[i];
}

long long pair_h(const Weight& mu, int i) {
    check_index(i);
    return i == 0 ? mu.c0 : i == 1 ? mu.c1 : mu.c2;
}

long long level(const Weight& mu) {
    return checked_add(mu.c0, checked_add(checked_mul(2, mu.c1), checked_mul(3, mu.c2)));
}

bool is_dominant(const Weight& mu) { return mu.c0 >= 0 && mu.c1 >= 0 && mu.c2 >= 0; }

Weight wt_from_eps_phi(const std::array<int, 3>& eps, const std::array<int, 3>& phi) {
    return {phi[0] - eps[0], phi[1] - eps[1], phi[2] - eps[2], 0};
}

Weight reflect(int i, const Weight& mu) {
    return mu - pair_h(mu, i) * simple_root(i);
}

Weight apply_word(const WeylWord& w, const Weight& mu) {
    Weight out = mu;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(*it, out);
    return out;
}

int stream_index(int t) {
    if (t < 1) throw std::invalid_argument("stream position is 1-based");
    static const int stream[6] = {2, 1, 2, 1, 0, 1};
    return stream[(t - 1) % 6];
}

WeylWord wk_word(int k) {
    WeylWord w(static_cast<std::size_t>(k));
    for (int t = 1; t <= k; ++t) w[static_cast<std::size_t>(k - t)] = stream_index(t);
    return w;
}

std::array<long long, 3> root_coefficients(const Weight& mu, const Weight& base) {
    const Weight d = base - mu;
    // In coordinates: d.c0 = 2m0 - m1, d.c1 = -m0 + 2m1 - 3m2,
    //                 d.c2 = -m1 + 2m2, d.cd = m0.
    const long long m0 = d.cd;
    const long long m1 = checked_add(checked_mul(2, m0), -d.c0);
    const long long num = checked_add(checked_add(-m0, checked_mul(2, m1)), -d.c1);
    if (num % 3 != 0) throw NotInRootLattice("difference is not in the root lattice");
    const long long m2 = num / 3;
    if (checked_add(-m1, checked_mul(2, m2)) != d.c2)
        throw NotInRootLattice("difference is not in the root lattice");
    return {m0, m1, m2};
}

bool bruhat_increases(const WeylWord& w, int j, const Weight& mu) {
    check_index(j);
    if (!is_dominant(mu)) throw std::invalid_argument("bruhat_increases requires a dominant weight");
    return pair_h(apply_word(w, mu), j) > 0;
}

}  // namespace d43

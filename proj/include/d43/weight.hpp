#pragma once

#include <array>
#include <vector>

#include "d43/errors.hpp"

namespace d43 {

// Integer weight of affine type D4(3) in the basis (L0, L1, L2, delta).
// Level is the pairing with c = h0 + 2h1 + 3h2; delta pairs to 0 with every h_i.
struct Weight {
    long long c0 = 0, c1 = 0, c2 = 0, cd = 0;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(long long n, const Weight& a);

// Simple reflections are indexed 0,1,2 throughout.
using WeylWord = std::vector<int>;

Weight fundamental(int i);  // L_i
Weight delta();             // = alpha0 + 2*alpha1 + alpha2
// alpha0 = 2L0 - L1 + delta, alpha1 = -L0 + 2L1 - L2, alpha2 = -3L1 + 2L2
Weight simple_root(int i);

long long pair_h(const Weight& mu, int i);  // <mu, h_i>
long long level(const Weight& mu);          // <mu, c> = c0 + 2c1 + 3c2
bool is_dominant(const Weight& mu);

// Classical weight recovered from crystal statistics: sum (phi_i - eps_i) L_i.
Weight wt_from_eps_phi(const std::array<int, 3>& eps, const std::array<int, 3>& phi);

Weight reflect(int i, const Weight& mu);  // r_i(mu) = mu - <mu,h_i> alpha_i
// Word entries act right to left: apply_word({a,b}, mu) = r_a(r_b(mu)).
Weight apply_word(const WeylWord& w, const Weight& mu);

// Reflection index stream (2,1,2,1,0,1), periodic; t is 1-based.
int stream_index(int t);
// Word for w^(k) = r_{i_k} ... r_{i_1}: first k stream entries, newest first.
WeylWord wk_word(int k);

// Unique (m0,m1,m2) with base - mu = m0*alpha0 + m1*alpha1 + m2*alpha2.
// The 4-coordinate system is overdetermined; inconsistency throws NotInRootLattice.
std::array<long long, 3> root_coefficients(const Weight& mu, const Weight& base);

// <w(mu), h_j> > 0 for dominant mu: certificate that r_j w covers w in Bruhat order.
bool bruhat_increases(const WeylWord& w, int j, const Weight& mu);

}  // namespace d43

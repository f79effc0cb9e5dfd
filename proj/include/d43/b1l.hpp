#pragma once

#include <array>
#include <optional>
#include <vector>

#include "d43/weight.hpp"

namespace d43 {

// Element of the level-L perfect crystal B^{1,L}: (x1, x2, x3, xb3, xb2, xb1),
// all >= 0, x3 = xb3 (mod 2), s(b) <= L.
using Elem = std::array<int, 6>;

struct ZVec {
    int z1, z2, z3, z4;
    friend bool operator==(const ZVec&, const ZVec&) = default;
};

int s_of(const Elem& b);  // x1 + x2 + (x3+xb3)/2 + xb2 + xb1
int t_of(const Elem& b);  // x2 + (x3+xb3)/2
// z1 = xb1-x1, z2 = xb2-xb3, z3 = x3-x2, z4 = (xb3-x3)/2
ZVec z_of(const Elem& b);
// A(b) = (0, z1, z1+z2, z1+z2+3z4, z1+z2+z3+3z4, 2z1+z2+z3+3z4)
std::array<int, 6> script_a(const Elem& b);

bool in_b(const Elem& b, int L);

// Which of the six mutually exclusive condition blocks holds (0-based: 0 <-> F1).
// Throws PartitionViolation unless exactly one block is satisfied.
int f_case(const Elem& b);
int e_case(const Elem& b);

// Coordinate increments applied per case; exposed so tests can derive the
// per-case s/parity behaviour from the rows themselves.
const std::array<std::array<int, 6>, 6>& f0_deltas();
const std::array<std::array<int, 6>, 6>& e0_deltas();

// Crystal operators; empty optional is the "0" result (a coordinate went
// negative or s exceeded L after applying the matching row).
std::optional<Elem> f(int i, const Elem& b, int L);
std::optional<Elem> e(int i, const Elem& b, int L);

int eps(int i, const Elem& b, int L);
int phi(int i, const Elem& b, int L);

Weight wt(const Elem& b, int L);  // classical weight, delta coefficient 0

Elem f_max(int i, Elem b, int L);  // f_i applied phi_i(b) times

std::vector<Elem> enumerate_b(int L);  // all of B^{1,L}, lexicographic

// {b : level(eps(b)) = L} via the closed formulas, and the parametrized set
// {(a,b,b,b,b,a) : 2a+3b <= L} it is expected to equal.
std::vector<Elem> minimal_elements(int L);
std::vector<Elem> minimal_parametrized(int L);

}  // namespace d43

#pragma once

#include <array>
#include <set>
#include <vector>

#include "d43/b1l.hpp"
#include "d43/graph.hpp"
#include "d43/report.hpp"

namespace d43 {

// Least superset of S closed under f_i, nulls discarded.
std::set<Elem> f_closure(int i, std::set<Elem> S, int L, std::size_t budget = kDefaultBudget);

// B_a^{(j)}: iterated f-closures from {bbar} along the reflection stream.
// The chain is j-independent (the ground-state tail is constant), so j is
// recorded as 1.
struct DemazureSubset {
    int a = 0;
    int j = 1;
    std::vector<Elem> elements;  // lexicographic
};
DemazureSubset ba_j(int a, int l);

// b_0, ..., b_6 of the f_max chain starting at bbar(l).
std::array<Elem, 7> demazure_chain(int l);

enum class PredicateId { P, Q1, Q2, Q3, Q4, Q5, Q6 };

// Literal evaluation of the corresponding inequality list at level L = 3l.
bool predicate(PredicateId id, const Elem& b, int l);

// The explicit set descriptions of B_a^{(j)}: unions of z-inequality filters
// over B^{1,3l} (set C additionally requires x1 = 0; Q5/Q6 carry x1 > 0).
std::vector<Elem> predicate_ba(int a, int l);

// Closure vs explicit description for every a; mismatches are reported
// element-by-element and never reconciled (the closure is the definition).
Report predicate_cross_check(int l);

// B_6^{(j)} = B (the kappa = 1 prerequisite).
Report verify_condition1(int l);

// <l*L2, h_{i_a}> <= eps_{i_a}(b) on B_{a-1}^{(j)} for every step a; the
// nonvacuous cases a = 1, 3 need eps_2 >= l, witnessed by xb2 = l.
Report verify_condition2(int l);

// Positivity <w^(k) L2, h_{i_{k+1}}> > 0 for all k < kmax, plus a comparison
// of the computed pairings against the closed linear forms under both index
// conventions ("as printed": evaluate at j; "shifted": evaluate at j-1).
Report verify_condition3(int l, int kmax);

// w^(k) L2 = L2 - m0 a0 - m1 a1 - m2 a2 for k <= 6*jmax: internal consistency
// of the reflection iteration is asserted unconditionally; the printed
// quadratics are tabulated under both conventions and the unique best fit is
// reported (anomalous entries listed, not patched).
Report lemma_weyl_check(int jmax);

// demazure_paths(k,l) = pk_set(k,l) as path sets and as decorated graphs,
// for every k <= kmax.
Report verify_theorem(int l, int kmax, std::size_t budget = kDefaultBudget);

}  // namespace d43

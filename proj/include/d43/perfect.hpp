#pragma once

#include "d43/b1l.hpp"
#include "d43/graph.hpp"
#include "d43/report.hpp"

namespace d43 {

// Perfectness of B^{1,L}, one report entry per condition:
//   (2) B (x) B is connected;
//   (3) a unique maximal classical weight lambda0 under the alpha1/alpha2
//       cone order, with wt(B) below it and exactly one element attaining it;
//   (4) level(eps(b)) >= L for every b;
//   (5) for every dominant classical weight lambda of level L there are
//       unique elements b^lambda (eps = lambda) and b_lambda (phi = lambda).
Report perfect_axioms(int L, std::size_t budget = kDefaultBudget);

}  // namespace d43

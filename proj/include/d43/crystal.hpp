#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "d43/b1l.hpp"

namespace d43 {

// b1 (x) b2 (x) ... (x) bn over B^{1,L}, index 0 leftmost, nested to the right.
using Tensor = std::vector<Elem>;

// eps/phi of the right-nested product via
//   eps(x (x) y) = max(eps(x), eps(y) - <h_i, wt x>)
//   phi(x (x) y) = max(phi(y), phi(x) + <h_i, wt y>)
int tensor_eps(int i, const Tensor& t, int L);
int tensor_phi(int i, const Tensor& t, int L);
std::pair<int, int> tensor_eps_phi(int i, const Tensor& t, int L);

Weight tensor_wt(const Tensor& t, int L);

// f acts on the left factor iff phi_i(left) > eps_i(rest); e iff >=.
std::optional<Tensor> tensor_f(int i, const Tensor& t, int L);
std::optional<Tensor> tensor_e(int i, const Tensor& t, int L);

}  // namespace d43

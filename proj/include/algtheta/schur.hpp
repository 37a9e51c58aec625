#pragma once

#include <set>

#include "algtheta/multipoly.hpp"
#include "algtheta/semigroup.hpp"

namespace algtheta {

/// Coefficient of t^k in exp(sum_i x_i t^i) over the given weighted ring, whose
/// variable i-1 plays the role of x_i. Zero for k < 0.
MultiPoly elementary_sw(int k, const RingPtr& ring);
MultiPoly elementary_sw(int k, std::size_t num_vars);

struct SchurWeierstrass {
  Partition lambda;
  MultiPoly polynomial;
};

/// det(sigma_{lambda_i + j - i}) over x_1..x_{lambda_1 + len - 1}.
SchurWeierstrass schur_weierstrass(const Partition& lambda);
/// The same determinant expressed in a caller-supplied x ring (at least lambda_1 + len - 1 variables).
MultiPoly schur_weierstrass(const Partition& lambda, const RingPtr& ring);

/// sigma_lambda(p_1, p_2/2, p_3/3, ...) in u_1..u_n with p_i the power sums.
MultiPoly to_symmetric_schur(const Partition& lambda, int n);

/// The indices i of the variables x_i occurring in sigma.
std::set<int> variable_support(const SchurWeierstrass& sigma);

}  // namespace algtheta

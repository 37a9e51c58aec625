#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "algtheta/curve.hpp"
#include "algtheta/sato.hpp"
#include "algtheta/theta.hpp"

namespace algtheta {

struct KPResidualReport {
  std::array<Rat, 3> base;
  int order = 0;
  /// Taylor coefficients of d_x(4 f_t - 6 f f_x - f_xxx) - 3 f_yy at the base point,
  /// all monomials X^a Y^b T^c with a + b + c <= order - 5, graded then lex.
  std::vector<Rat> residual;
  bool verdict = false;
};

/// Residual of f = 2 d_x^2 log phi for a polynomial phi(X, Y, T) in the shifted
/// coordinates around the base point. Throws Error "singular base point, re-sample" when
/// phi(0) = 0.
KPResidualReport kp_residual_of(const MultiPoly& phi, const std::array<Rat, 3>& base, int order);

/// phi = theta(U x + V y + W t), U, V, W the first three columns of A (zero if absent).
KPResidualReport kp_residual(const ThetaPolynomial& theta, const AbelData& a, const std::array<Rat, 3>& base, int order);

/// phi = tau(x, y, t, 0, 0, ...); needs an exact tau.
KPResidualReport tau_kp_check(const TauPolynomial& t, const std::array<Rat, 3>& base, int order);

/// Runs the check at `bases` random base points, re-sampling up to 20 times per point
/// when a base point lies on the divisor.
std::vector<KPResidualReport> kp_suite(const ThetaPolynomial& theta, const AbelData& a, int order, int bases,
                                       std::uint64_t seed);
std::vector<KPResidualReport> tau_kp_suite(const TauPolynomial& t, int order, int bases, std::uint64_t seed);

}  // namespace algtheta

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algtheta/curve.hpp"
#include "algtheta/multipoly.hpp"
#include "algtheta/sato.hpp"

namespace algtheta {

/// z_i belongs to the singular point singularities[group] and has gap (weight) w.
struct ThetaVariable {
  std::string name;
  int group = 0;
  int gap = 1;
};

enum class Provenance { FromTau, Implicitized };

struct ThetaPolynomial {
  /// In z_1..z_g with wt(z_i) = gap of z_i.
  MultiPoly polynomial;
  std::vector<ThetaVariable> variables;
  Provenance provenance = Provenance::FromTau;
  /// tau(x) = tau_scalar * theta(A x) (single singularity); zero when unknown.
  Rat tau_scalar = 0;
};

/// Owning singular point and gap of each basis differential: the point where it has a
/// pole, gap = pole order - 1 (first declared point if there are several).
std::vector<ThetaVariable> theta_variables(const CurveSpec& c, const std::vector<SingularityData>& sing);

/// prod_j (z^j_1)^{|lambda_j|}, z^j_1 the gap-1 variable of group j; empty if some group
/// has no gap-1 variable.
Exponent leading_exponent(const std::vector<ThetaVariable>& vars, const std::vector<SingularityData>& sing);

/// Scales p so that the coefficient at `lead` is 1 (or, when that coefficient is zero or
/// lead is empty, the first term of top total degree in the printing order). Returns the
/// factor divided out.
Rat normalize_theta(MultiPoly& p, const Exponent& lead);

/// Sets x_h = 0 for h in H, renames x_{w_i} -> z_i and normalizes. Needs an exact tau
/// and a basis with F_i monic of degree w_i - 1 and no F_j (j != i) with a term of
/// degree w_i - 1, singular only at infinity.
ThetaPolynomial theta_from_tau(const TauPolynomial& t, const CurveSpec& c, const std::vector<SingularityData>& sing);

enum class SupportMode {
  /// total degree <= D, degree in each group j <= |lambda_j|
  Grouped,
  /// total degree <= D only
  TotalDegree,
};

struct ImplicitizationOptions {
  std::uint64_t seed = 1;
  SupportMode mode = SupportMode::Grouped;
  /// Total degree bound; -1 means sum_j |lambda_j|.
  int degree = -1;
  /// Raise the bound from 1 until the kernel is nonzero, ignoring `degree`.
  bool discover_degree = false;
  /// Numerators in [-height, height], denominators in [1, height].
  int height = 24;
};

struct ImplicitizationStats {
  int degree = 0;
  std::size_t monomials = 0;
  std::size_t fit_samples = 0;
  std::size_t fresh_samples = 0;
  int primes = 0;
};

/// Vanishing polynomial of the Abel image of C^{g-1}, from exact samples. Throws Error
/// "degree bound violated" (trivial kernel) or "underdetermined" (kernel dimension > 1).
ThetaPolynomial theta_by_implicitization(const CurveSpec& c, const std::vector<SingularityData>& sing,
                                         const ImplicitizationOptions& opt, ImplicitizationStats* stats = nullptr);

struct DegreeReport {
  std::vector<int> group_degrees;
  int total_degree = 0;
  Exponent leading_monomial;
  std::string leading_monomial_text;
  bool leading_unique = true;
  int bound = 0;
  bool bound_attained = false;
  /// total degree equals sum_j |lambda_j|
  bool matches_lambda = false;
};

DegreeReport degree_report(const ThetaPolynomial& theta, const std::vector<SingularityData>& sing);

struct RelationReport {
  bool ok = false;
  /// tau = scalar * exp(sum_i (sum_h c_h t_h^i) x_i) * theta(A x)
  Rat scalar = 0;
  /// (t_h, c_h) for every finite singular point u = 1/t_h
  std::vector<std::pair<Rat, int>> exponents;
  /// Weight through which the identity was checked.
  int order = 0;
  bool exact = false;
  /// First weight where the two sides differ, or -1.
  int first_bad_weight = -1;
};

/// order < 0: exact identity when tau is exact, otherwise the frame's wmax.
RelationReport relation_check(const CurveSpec& c, const std::vector<SingularityData>& sing, const TauPolynomial& t,
                              const ThetaPolynomial& theta, int order = -1, std::uint64_t seed = 1);

}  // namespace algtheta

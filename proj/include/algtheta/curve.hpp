#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algtheta/linalg.hpp"
#include "algtheta/semigroup.hpp"
#include "algtheta/upoly.hpp"

namespace algtheta {

/// A point of the normalization P^1: a rational affine parameter or infinity.
struct BranchPoint {
  bool infinite = false;
  Rat value;

  static BranchPoint at(const Rat& a) { return {false, a}; }
  static BranchPoint infinity() { return {true, Rat(0)}; }
  /// "inf" or an exact rational.
  static BranchPoint parse(const std::string& text);
  std::string to_string() const;
  bool operator==(const BranchPoint& o) const { return infinite == o.infinite && (infinite || value == o.value); }
  bool operator<(const BranchPoint& o) const;
};

/// u -> (phi_0(u) : ... : phi_n(u)), homogenized to the given degree.
struct Parametrization {
  std::vector<UPoly> components;
  int degree = 0;
  bool operator==(const Parametrization&) const = default;
};

/// A rational curve given by its canonical differentials omega_i = F_i(u) du.
struct CurveSpec {
  std::string name;
  /// Set for monomial curves.
  std::optional<NumericalSemigroup> semigroup;
  std::vector<RationalFunction> differentials;
  std::vector<BranchPoint> singular_points;
  Rat base_point = 0;
  std::optional<Parametrization> parametrization;

  int genus() const { return static_cast<int>(differentials.size()); }
  bool operator==(const CurveSpec& o) const;
};

struct SingularityData {
  BranchPoint point;
  NumericalSemigroup semigroup;
  Partition lambda;

  int delta() const { return semigroup.delta(); }
  const std::vector<int>& gaps() const { return semigroup.gaps(); }
};

/// The monomial curve of a symmetric semigroup: omega_i = u^{w_i - 1} du, singular at
/// infinity, base point 0, with a birational monomial parametrization.
CurveSpec monomial_curve(const NumericalSemigroup& s);

/// Replaces u by u + base_point so that the base point becomes 0.
CurveSpec normalize_base_point(const CurveSpec& c);

/// Change of coordinate v = u / (1 - u/a), sending the finite point a to infinity and
/// fixing 0. Differentials, singular points and the parametrization are carried along.
CurveSpec move_to_infinity(const CurveSpec& c, const Rat& a);

struct Fiber {
  std::vector<BranchPoint> points;
};

struct Classification {
  bool algebraic = true;
  /// Branch points where the map is not an immersion, i.e. unibranch singular points.
  std::vector<BranchPoint> cusps;
  /// Fibers with more than one point.
  std::vector<Fiber> multibranch;
  /// Arithmetic genus of the image, from its Hilbert polynomial.
  int arithmetic_genus = 0;
  /// Sum of the delta invariants of the cusps.
  int cusp_delta = 0;
};

/// Arithmetic genus of the image curve, read off from the Hilbert function of the
/// image in degrees past the Castelnuovo bound. Throws RejectedCurve when the image has
/// degree below the parametrization degree (the map is not birational).
int arithmetic_genus(const Parametrization& p);

/// Unibranch test for a parametrized rational curve: the image is unibranch iff its
/// arithmetic genus equals the total delta of the cusps. Otherwise the fibers with
/// several points are located by resultants. Throws Error for a constant map,
/// RejectedCurve when singular data sits at irrational parameters.
Classification classify_algebraic(const Parametrization& p);

/// Echelon basis (monic, ascending valuation) of the completed local ring at a branch
/// point, truncated at s^precision, plus its value semigroup.
struct LocalRing {
  BranchPoint point;
  int precision = 0;
  std::vector<std::vector<Rat>> basis;
  NumericalSemigroup semigroup = NumericalSemigroup::from_generators({1});
};

LocalRing local_ring(const Parametrization& p, const BranchPoint& point);

/// Singular points with their value semigroups. Uses the parametrization when present
/// (local rings), otherwise the pole orders of the differentials. Rejects
/// non-algebraic curves and non-symmetric semigroups.
std::vector<SingularityData> singularity_analysis(const CurveSpec& c);

/// Rosenlicht differentials of the parametrized curve, solved point by point: reduced
/// echelon basis, grouped by singular point in the given order, ascending pole order.
std::vector<RationalFunction> canonical_basis(const Parametrization& p, const std::vector<SingularityData>& sing);

/// True iff omega has poles only at the singular points and passes the residue test
/// against every local-ring element of value below the conductor.
bool is_rosenlicht(const RationalFunction& f, const std::vector<LocalRing>& rings);

/// Checks the declared differentials: poles at declared points, no residues, linear
/// independence, and the Rosenlicht conditions when a parametrization is present.
void validate_curve(const CurveSpec& c, const std::vector<SingularityData>& sing);

/// Laurent coefficients of F(u) du at a branch point in the local parameter s
/// (s = u - a, or s = 1/u at infinity): entry k is the coefficient of s^{k - order}.
struct Laurent {
  int order = 0;  ///< pole order (may be <= 0)
  std::vector<Rat> coeffs;
};
Laurent laurent_at(const RationalFunction& f, const BranchPoint& point, int terms);

struct AbelData {
  /// A[j][k-1] = coefficient of u^{k-1} in F_j at 0, so z_j = sum_k A[j][k-1] x_k.
  RatMatrix A;
  /// Integral of omega_j from 0 to u.
  std::vector<RationalFunction> antiderivatives;

  std::size_t rows() const { return A.size(); }
  std::size_t columns() const { return A.empty() ? 0 : A.front().size(); }
  /// The same map in power-sum coordinates: entry A[j][k-1] / k multiplies p_k.
  RatMatrix power_sum_matrix() const;
};

/// Abel data with `columns` columns (default: the largest gap of any singularity).
/// Throws Error "logarithmic abelian integral" when some omega has a residue.
AbelData abel_data(const CurveSpec& c, int columns = -1);

}  // namespace algtheta

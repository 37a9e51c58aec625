#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algtheta/rational.hpp"

namespace algtheta {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& c);
  /// c * u^k
  static UPoly monomial(int k, const Rat& c = 1);
  /// u - a
  static UPoly linear_root(const Rat& a);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  Rat leading() const;
  int valuation() const;

  Rat operator()(const Rat& x) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rat& c) { return a *= c; }
  bool operator==(const UPoly& o) const = default;

  UPoly pow(unsigned n) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// p(u + a)
  UPoly shifted(const Rat& a) const;
  /// u^d p(1/u) for the given d >= degree.
  UPoly reversed(int d) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);
/// Multiplicity of the root a in p (p nonzero).
int root_multiplicity(const UPoly& p, const Rat& a);
/// Distinct rational roots in increasing order (p nonzero).
std::vector<Rat> rational_roots(const UPoly& p);
Rat resultant(const UPoly& a, const UPoly& b);

struct PoleTerm {
  Rat location;
  int order = 1;  ///< k in c/(u-a)^k
  Rat coeff;
  bool operator==(const PoleTerm&) const = default;
};

struct PartialFractions {
  UPoly polynomial_part;
  /// Sorted by (location, order); zero coefficients are omitted.
  std::vector<PoleTerm> poles;
};

/// Univariate rational function num/den with monic, coprime denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(UPoly::constant(1)) {}
  RationalFunction(UPoly num, UPoly den);
  explicit RationalFunction(UPoly num) : RationalFunction(std::move(num), UPoly::constant(1)) {}

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rat operator()(const Rat& x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Rat& c);
  bool operator==(const RationalFunction& o) const = default;

  /// Order of the pole at a (0 when regular there).
  int pole_order_at(const Rat& a) const;
  /// Order of the pole at infinity of the differential f(u) du: deg num - deg den + 2.
  int differential_pole_order_at_infinity() const;
  /// Taylor coefficients c_0..c_{n-1} of f(a + s); a must not be a pole.
  std::vector<Rat> taylor(const Rat& a, int n) const;
  /// Composition f(g).
  RationalFunction compose(const RationalFunction& g) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  UPoly num_;
  UPoly den_;
};

/// Polynomial part plus pole terms. Throws Error naming the factor when the
/// denominator does not split into rational linear factors.
PartialFractions partial_fractions(const RationalFunction& f);
RationalFunction resum(const PartialFractions& pf);

}  // namespace algtheta

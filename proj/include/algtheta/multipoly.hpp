#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "algtheta/rational.hpp"

namespace algtheta {

/// An ordered list of named indeterminates, each carrying a positive weight.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  /// Index of a variable by name; throws Error when absent.
  std::size_t index_of(const std::string& name) const;
  bool has(const std::string& name) const;

  bool operator==(const Ring& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights);
/// Variables prefix1..prefixN, all of weight 1.
RingPtr make_plain_ring(const std::string& prefix, std::size_t n);
/// The Sato ring x1..xn with wt(x_i) = i.
RingPtr x_ring(std::size_t n);

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rat>;

  explicit MultiPoly(RingPtr ring);

  static MultiPoly constant(RingPtr ring, const Rat& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly variable(RingPtr ring, const std::string& name);
  static MultiPoly monomial(RingPtr ring, Exponent exponent, const Rat& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero exponent).
  Rat constant_term() const;
  Rat coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rat& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& o) const;

  MultiPoly pow(unsigned n) const;

  int weight_of(const Exponent& e) const;
  /// Maximum over terms of sum exponent*weight. Throws on the zero polynomial.
  int weighted_degree() const;
  /// Minimum weight of a term. Throws on the zero polynomial.
  int min_weight() const;
  int total_degree() const;
  /// Maximum total degree restricted to the given variables.
  int degree_in(std::span<const std::size_t> vars) const;
  /// Maximum over terms of the weight restricted to the given variables.
  int weighted_degree_in(std::span<const std::size_t> vars) const;
  bool is_weighted_homogeneous() const;

  MultiPoly truncated(int max_weight) const;
  MultiPoly weight_component(int weight) const;
  MultiPoly derivative(std::size_t var) const;
  Rat evaluate(std::span<const Rat> values) const;
  /// Sets the listed variables to zero.
  MultiPoly zero_variables(const std::set<std::size_t>& vars) const;
  /// Indices of variables that occur with positive exponent.
  std::set<std::size_t> support() const;
  /// Re-expresses the polynomial in another ring, matching variables by name.
  MultiPoly embed(RingPtr target) const;

  /// Canonical text: terms by weighted degree (descending), then in lex monomial order
  /// (x1 > x2 > ...), so the exponent vectors of equal weight appear in descending order.
  std::string to_string() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// Weight-truncated product: drops every term of weight above max_weight.
MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, int max_weight);

/// Composition p(images[0], images[1], ...). All images must share one ring.
/// With max_weight >= 0 every intermediate product is truncated at that weight.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images,
                     int max_weight = -1);

/// Composition by variable name; every variable of p must be assigned.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment,
                     RingPtr target);

/// Divides p exactly by (x_i - x_j). Throws if the division leaves a remainder.
MultiPoly divide_by_difference(const MultiPoly& p, std::size_t i, std::size_t j);

}  // namespace algtheta

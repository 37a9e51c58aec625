#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "algtheta/error.hpp"
#include "algtheta/multipoly.hpp"
#include "algtheta/rational.hpp"

namespace algtheta {

namespace detail {

inline Rat zero_like(const Rat&) { return Rat(0); }
inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.ring()); }
inline bool is_zero(const Rat& r) { return r == 0; }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Multiplicative inverse of a constant series coefficient.
inline Rat unit_inverse(const Rat& r) { return 1 / r; }
inline Rat unit_inverse(const MultiPoly& p) {
  if (!p.is_constant() || p.is_zero()) throw Error("series: constant coefficient is not a unit");
  return 1 / p.constant_term();
}

}  // namespace detail

/// Truncated power series c_0 + c_1 t + ... + c_{N-1} t^{N-1}. Coefficients are Rat,
/// or MultiPoly for series over a polynomial ring (a grading variable over a
/// multivariate Taylor expansion). No operation reports a coefficient at or beyond N.
template <class C>
class TruncSeries {
 public:
  /// The zero series of order n whose coefficients live where `like` lives.
  TruncSeries(int order, const C& like) : c_(static_cast<std::size_t>(order), detail::zero_like(like)) {
    if (order < 1) throw Error("series: order bound must be positive");
  }
  TruncSeries(std::vector<C> coeffs, int order) : TruncSeries(order, coeffs.at(0)) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }

  int order() const { return static_cast<int>(c_.size()); }
  const C& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  C& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<C>& coeffs() const { return c_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (int k = 0; k < order(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (int k = 0; k < order(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TruncSeries& operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rat& s) { return a *= s; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.order(), a.c_[0]);
    for (int i = 0; i < a.order(); ++i) {
      if (detail::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j < a.order(); ++j) {
        if (detail::is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

  /// Multiplicative inverse; the constant coefficient must be a nonzero constant.
  TruncSeries inverse() const {
    const Rat inv0 = detail::unit_inverse(c_[0]);
    TruncSeries r(order(), c_[0]);
    r.c_[0] = c_[0] * Rat(0);
    r.c_[0] += one_like() * inv0;
    for (int k = 1; k < order(); ++k) {
      C acc = detail::zero_like(c_[0]);
      for (int i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = acc * (-inv0);
    }
    return r;
  }

  /// d/dt; the result has order N-1 (at least 1).
  TruncSeries derivative() const {
    const int n = std::max(1, order() - 1);
    TruncSeries r(n, c_[0]);
    for (int k = 1; k < order(); ++k) r.c_[k - 1] = c_[k] * Rat(k);
    return r;
  }

  /// Antiderivative with zero constant term, same order bound.
  TruncSeries integral() const {
    TruncSeries r(order(), c_[0]);
    for (int k = 1; k < order(); ++k) r.c_[k] = c_[k - 1] * Rat(1, k);
    return r;
  }

 private:
  void check(const TruncSeries& o) const {
    if (o.order() != order()) throw Error("series: mismatched order bounds");
  }
  C one_like() const {
    if constexpr (std::is_same_v<C, Rat>) {
      return Rat(1);
    } else {
      return C::constant(c_[0].ring(), 1);
    }
  }

  std::vector<C> c_;
};

/// log(s / s_0), i.e. the logarithm with the (generally irrational) constant log s_0
/// dropped. exp(series_log(s)) * s_0 == s up to the order bound.
/// Throws "log of non-unit" when s_0 == 0.
template <class C>
TruncSeries<C> series_log(const TruncSeries<C>& s) {
  if (detail::is_zero(s[0])) throw Error("log of non-unit");
  const Rat inv0 = detail::unit_inverse(s[0]);
  TruncSeries<C> l(s.order(), s[0]);
  for (int k = 1; k < s.order(); ++k) {
    C acc = s[k] * Rat(k);
    for (int i = 1; i < k; ++i) acc -= l[i] * s[k - i] * Rat(i);
    l[k] = acc * (inv0 / k);
  }
  return l;
}

/// exp(s) for a series with zero constant term.
template <class C>
TruncSeries<C> series_exp(const TruncSeries<C>& s) {
  if (!detail::is_zero(s[0])) throw Error("exp of a series with nonzero constant term");
  TruncSeries<C> e(s.order(), s[0]);
  if constexpr (std::is_same_v<C, Rat>) {
    e[0] = 1;
  } else {
    e[0] = C::constant(s[0].ring(), 1);
  }
  for (int k = 1; k < s.order(); ++k) {
    C acc = detail::zero_like(s[0]);
    for (int i = 1; i <= k; ++i) acc += s[i] * e[k - i] * Rat(i);
    e[k] = acc * Rat(1, k);
  }
  return e;
}

using Series = TruncSeries<Rat>;

}  // namespace algtheta

#include "algtheta/upoly.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "algtheta/error.hpp"
#include "algtheta/linalg.hpp"

namespace algtheta {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly({c}); }

UPoly UPoly::monomial(int k, const Rat& c) {
  if (k < 0) throw Error("negative exponent in a polynomial");
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v[k] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Rat& a) { return UPoly({-a, Rat(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::coeff(int k) const {
  return k < 0 || k > degree() ? Rat(0) : c_[static_cast<std::size_t>(k)];
}

Rat UPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

int UPoly::valuation() const {
  if (c_.empty()) throw Error("valuation of the zero polynomial");
  int k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

Rat UPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::pow(unsigned n) const {
  UPoly result = constant(1), b = *this;
  for (; n; n >>= 1) {
    if (n & 1u) result = result * b;
    if (n > 1) b = b * b;
  }
  return result;
}

UPoly UPoly::derivative() const {
  std::vector<Rat> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly r(*this);
  r *= 1 / leading();
  return r;
}

UPoly UPoly::shifted(const Rat& a) const {
  // Horner in the shifted variable: p(u + a).
  UPoly acc;
  const UPoly lin({a, Rat(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

UPoly UPoly::reversed(int d) const {
  if (d < degree()) throw Error("reversal degree below the polynomial degree");
  std::vector<Rat> r(static_cast<std::size_t>(d) + 1, Rat(0));
  for (int i = 0; i <= degree(); ++i) r[d - i] = c_[i];
  return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) out += algtheta::to_string(mag);
    else if (mag == 1) out += mono;
    else out += algtheta::to_string(mag) + "*" + mono;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  const Rat inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rat f = r[k] * inv;
    q[k - db] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

int root_multiplicity(const UPoly& p, const Rat& a) {
  if (p.is_zero()) throw Error("root multiplicity in the zero polynomial");
  return p.shifted(a).valuation();
}

namespace {

using modp::u64;

/// Primitive integer polynomial proportional to p.
std::vector<BigInt> primitive_integer(const UPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<BigInt> z;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  for (auto& v : z) v /= g;
  return z;
}

std::vector<u64> reduce_mod(const std::vector<BigInt>& f, u64 p) {
  std::vector<u64> r;
  for (const auto& c : f) {
    BigInt m = c % BigInt(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    r.push_back(m.get_ui());
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<u64> mod_rem(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
  const u64 inv = modp::inv(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 f = modp::mul(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = modp::sub(a[shift + i], modp::mul(f, b[i], p), p);
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::size_t mod_gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
  while (!b.empty()) {
    auto r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

BigInt eval_big(const std::vector<BigInt>& f, const BigInt& x, const BigInt& m) {
  BigInt acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % m;
  return acc;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error("roots of the zero polynomial");
  std::vector<Rat> roots;
  UPoly q = squarefree_part(p);
  if (q.degree() <= 0) return roots;
  if (q.coeff(0) == 0) {
    roots.push_back(0);
    q = divmod(q, UPoly::monomial(1)).first;
  }
  if (q.degree() >= 1) {
    const std::vector<BigInt> f = primitive_integer(q);
    std::vector<BigInt> df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<unsigned long>(i));
    BigInt bound = abs(f.front()) > abs(f.back()) ? BigInt(abs(f.front())) : BigInt(abs(f.back()));
    const BigInt target = 2 * bound * bound + 1;

    u64 p0 = 2;
    std::vector<u64> fp;
    for (;;) {
      p0 = modp::next_prime(p0);
      fp = reduce_mod(f, p0);
      if (fp.size() != f.size()) continue;
      auto dfp = reduce_mod(df, p0);
      if (dfp.empty() || mod_gcd_degree(fp, dfp, p0) != 0) continue;
      break;
    }
    for (u64 r = 0; r < p0; ++r) {
      u64 acc = 0;
      for (auto it = fp.rbegin(); it != fp.rend(); ++it) acc = modp::add(modp::mul(acc, r, p0), *it, p0);
      if (acc != 0) continue;
      BigInt x = static_cast<unsigned long>(r), m = static_cast<unsigned long>(p0);
      while (m <= target) {
        BigInt m2 = m * m;
        BigInt fx = eval_big(f, x, m2), dx = eval_big(df, x, m2);
        BigInt dinv;
        if (mpz_invert(dinv.get_mpz_t(), dx.get_mpz_t(), m2.get_mpz_t()) == 0) break;
        x = (x - fx * dinv) % m2;
        if (x < 0) x += m2;
        m = m2;
      }
      auto cand = rational_reconstruct(x, m);
      if (cand && q(*cand) == 0) roots.push_back(*cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rat resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (b.degree() == 0) return rat_pow(b.leading(), a.degree());
  if (a.degree() == 0) return rat_pow(a.leading(), b.degree());
  if (a.degree() < b.degree()) {
    const Rat r = resultant(b, a);
    return (a.degree() * b.degree()) % 2 ? Rat(-r) : r;
  }
  UPoly r = divmod(a, b).second;
  if (r.is_zero()) return 0;
  Rat s = rat_pow(b.leading(), a.degree() - r.degree()) * resultant(b, r);
  return (a.degree() * b.degree()) % 2 ? Rat(-s) : s;
}

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly::constant(1);
    return;
  }
  UPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Rat l = den.leading();
  num *= 1 / l;
  den *= 1 / l;
  num_ = std::move(num);
  den_ = std::move(den);
}

Rat RationalFunction::operator()(const Rat& x) const {
  const Rat d = den_(x);
  if (d == 0) throw Error("evaluation at a pole");
  return num_(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const RationalFunction& a, const Rat& c) {
  return RationalFunction(a.num_ * c, a.den_);
}

int RationalFunction::pole_order_at(const Rat& a) const {
  return den_.shifted(a).valuation();
}

int RationalFunction::differential_pole_order_at_infinity() const {
  if (num_.is_zero()) throw Error("pole order of the zero differential");
  return num_.degree() - den_.degree() + 2;
}

std::vector<Rat> RationalFunction::taylor(const Rat& a, int n) const {
  const UPoly N = num_.shifted(a), D = den_.shifted(a);
  if (D.coeff(0) == 0) throw Error("Taylor expansion at a pole");
  std::vector<Rat> out(static_cast<std::size_t>(std::max(n, 0)), Rat(0));
  const Rat inv = 1 / D.coeff(0);
  for (int k = 0; k < n; ++k) {
    Rat acc = N.coeff(k);
    for (int i = 1; i <= std::min(k, D.degree()); ++i) acc -= D.coeff(i) * out[k - i];
    out[k] = acc * inv;
  }
  return out;
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
  auto horner = [&](const UPoly& p) {
    RationalFunction acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
      acc = acc * g + RationalFunction(UPoly::constant(*it));
    return acc;
  };
  return horner(num_) / horner(den_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

PartialFractions partial_fractions(const RationalFunction& f) {
  PartialFractions pf;
  auto [q, r] = divmod(f.numerator(), f.denominator());
  pf.polynomial_part = q;
  if (r.is_zero()) return pf;
  UPoly rest = f.denominator();
  for (const Rat& a : rational_roots(rest)) {
    const int k = root_multiplicity(rest, a);
    const UPoly factor = UPoly::linear_root(a).pow(static_cast<unsigned>(k));
    const UPoly cofactor = divmod(f.denominator(), factor).first;
    // Principal part at a: Taylor coefficients of r / cofactor at a.
    const auto t = RationalFunction(r, cofactor).taylor(a, k);
    for (int i = 0; i < k; ++i)
      if (t[i] != 0) pf.poles.push_back(PoleTerm{a, k - i, t[i]});
    rest = divmod(rest, factor).first;
  }
  if (rest.degree() > 0)
    throw Error("denominator factor " + rest.monic().to_string() + " has no rational roots");
  std::sort(pf.poles.begin(), pf.poles.end(), [](const PoleTerm& x, const PoleTerm& y) {
    return x.location != y.location ? x.location < y.location : x.order < y.order;
  });
  return pf;
}

RationalFunction resum(const PartialFractions& pf) {
  RationalFunction acc{pf.polynomial_part};
  for (const auto& t : pf.poles)
    acc = acc + RationalFunction(UPoly::constant(t.coeff),
                                 UPoly::linear_root(t.location).pow(static_cast<unsigned>(t.order)));
  return acc;
}

}  // namespace algtheta

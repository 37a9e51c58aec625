#include "algtheta/theta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "algtheta/error.hpp"
#include "algtheta/linalg.hpp"

namespace algtheta {

namespace {

using modp::u64;

int lambda_total(const std::vector<SingularityData>& sing) {
  int d = 0;
  for (const auto& s : sing) d += s.lambda.size();
  return d;
}

RingPtr theta_ring(const std::vector<ThetaVariable>& vars) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& v : vars) {
    names.push_back(v.name);
    weights.push_back(v.gap);
  }
  return make_ring(names, weights);
}

std::vector<std::size_t> group_indices(const std::vector<ThetaVariable>& vars, int group) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].group == group) idx.push_back(i);
  return idx;
}

/// Exponent vectors of the support, in a fixed order.
std::vector<Exponent> support(const std::vector<ThetaVariable>& vars, const std::vector<SingularityData>& sing,
                              SupportMode mode, int degree) {
  const std::size_t g = vars.size();
  std::vector<int> cap(sing.size(), degree);
  if (mode == SupportMode::Grouped)
    for (std::size_t j = 0; j < sing.size(); ++j) cap[j] = std::min(degree, sing[j].lambda.size());
  std::vector<Exponent> out;
  Exponent e(g, 0);
  std::vector<int> used(sing.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == g) {
      out.push_back(e);
      return;
    }
    const int grp = vars[i].group;
    for (int k = 0; k <= left && used[grp] + k <= cap[grp]; ++k) {
      e[i] = k;
      used[grp] += k;
      rec(i + 1, left - k);
      used[grp] -= k;
    }
    e[i] = 0;
  };
  rec(0, degree);
  return out;
}

/// Row echelon form over F_p with rows inserted one at a time.
class Echelon {
 public:
  Echelon(std::size_t cols, u64 p) : cols_(cols), p_(p) {}

  bool insert(std::vector<u64> v) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0) continue;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        const u64 iv = modp::inv(v[c], p_);
        for (std::size_t j = c; j < cols_; ++j) v[j] = modp::mul(v[j], iv, p_);
        rows_.emplace(c, std::move(v));
        return true;
      }
      const u64 f = v[c];
      const auto& r = it->second;
      for (std::size_t j = c; j < cols_; ++j)
        if (r[j]) v[j] = modp::sub(v[j], modp::mul(f, r[j], p_), p_);
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<std::vector<u64>> kernel() const {
    std::vector<std::vector<u64>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (rows_.count(f)) continue;
      std::vector<u64> v(cols_, 0);
      v[f] = 1;
      for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        const auto& r = it->second;
        u64 acc = 0;
        for (std::size_t j = it->first + 1; j < cols_; ++j)
          if (r[j] && v[j]) acc = modp::add(acc, modp::mul(r[j], v[j], p_), p_);
        v[it->first] = acc ? p_ - acc : 0;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  u64 p_;
  std::map<std::size_t, std::vector<u64>> rows_;
};

struct Sampler {
  std::vector<RationalFunction> antiderivatives;
  std::vector<Rat> avoid;
  std::mt19937_64 rng;
  int height;
  std::size_t params;

  Rat random_rat() {
    for (;;) {
      const long num = static_cast<long>(rng() % static_cast<u64>(2 * height + 1)) - height;
      const long den = static_cast<long>(rng() % static_cast<u64>(height)) + 1;
      Rat r = make_rat(num, den);
      if (std::find(avoid.begin(), avoid.end(), r) == avoid.end()) return r;
    }
  }

  /// z = sum_k integral_0^{u_k} omega for random u_1..u_{g-1}.
  std::vector<Rat> point() {
    std::vector<Rat> z(antiderivatives.size(), Rat(0));
    for (std::size_t k = 0; k < params; ++k) {
      const Rat u = random_rat();
      for (std::size_t j = 0; j < z.size(); ++j) z[j] += antiderivatives[j](u);
    }
    return z;
  }
};

std::vector<u64> monomial_row(const std::vector<Exponent>& mons, const std::vector<Rat>& z, u64 p, int degree) {
  std::vector<std::vector<u64>> powers(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    const u64 zj = modp::reduce(z[j], p);
    powers[j].assign(static_cast<std::size_t>(degree) + 1, 1);
    for (int k = 1; k <= degree; ++k) powers[j][k] = modp::mul(powers[j][k - 1], zj, p);
  }
  std::vector<u64> row(mons.size());
  for (std::size_t m = 0; m < mons.size(); ++m) {
    u64 v = 1;
    for (std::size_t j = 0; j < z.size(); ++j)
      if (mons[m][j]) v = modp::mul(v, powers[j][mons[m][j]], p);
    row[m] = v;
  }
  return row;
}

u64 dot(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  u64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) s = modp::add(s, modp::mul(a[i], b[i], p), p);
  return s;
}

const u64 kPrimeBase = u64(1) << 61;

u64 nth_prime(int k) {
  u64 p = kPrimeBase;
  for (int i = 0; i <= k; ++i) p = modp::next_prime(p);
  return p;
}

enum class KernelStatus { Zero, One, Many };

/// Kernel of the sample matrix over F_p. Rows beyond the first `eager` are only
/// inserted when they do not annihilate the current kernel.
KernelStatus modular_kernel(const std::vector<Exponent>& mons, const std::vector<std::vector<Rat>>& pts, u64 p,
                            int degree, std::vector<u64>& vec) {
  const std::size_t n = mons.size();
  Echelon e(n, p);
  const std::size_t eager = std::min(pts.size(), n + 8);
  std::vector<std::vector<u64>> rest;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto row = monomial_row(mons, pts[i], p, degree);
    if (i < eager) e.insert(std::move(row));
    else rest.push_back(std::move(row));
  }
  for (;;) {
    if (e.rank() == n) return KernelStatus::Zero;
    auto k = e.kernel();
    if (k.size() > 1) {
      for (auto& r : rest) e.insert(std::move(r));
      rest.clear();
      k = e.kernel();
      if (k.size() == 0) return KernelStatus::Zero;
      if (k.size() > 1) return KernelStatus::Many;
    }
    bool clean = true;
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (dot(*it, k[0], p) != 0) {
        e.insert(std::move(*it));
        rest.erase(it);
        clean = false;
        break;
      }
    if (clean) {
      vec = std::move(k[0]);
      return KernelStatus::One;
    }
  }
}

bool vanishes(const MultiPoly& theta, const std::vector<std::vector<Rat>>& pts) {
  for (const auto& z : pts)
    if (theta.evaluate(z) != 0) return false;
  return true;
}

}  // namespace

std::vector<ThetaVariable> theta_variables(const CurveSpec& c0, const std::vector<SingularityData>& sing) {
  const CurveSpec c = normalize_base_point(c0);
  std::vector<ThetaVariable> vars;
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    ThetaVariable v;
    v.name = "z" + std::to_string(i + 1);
    v.group = -1;
    for (std::size_t j = 0; j < sing.size() && v.group < 0; ++j) {
      const int order = laurent_at(c.differentials[i], sing[j].point, 0).order;
      if (order >= 2) {
        v.group = static_cast<int>(j);
        v.gap = order - 1;
      }
    }
    if (v.group < 0) throw Error("differential " + std::to_string(i + 1) + " has no pole at a singular point");
    vars.push_back(v);
  }
  return vars;
}

Exponent leading_exponent(const std::vector<ThetaVariable>& vars, const std::vector<SingularityData>& sing) {
  Exponent e(vars.size(), 0);
  for (std::size_t j = 0; j < sing.size(); ++j) {
    int found = -1;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i].group == static_cast<int>(j) && vars[i].gap == 1) found = static_cast<int>(i);
    if (found < 0) return {};
    e[static_cast<std::size_t>(found)] = sing[j].lambda.size();
  }
  return e;
}

Rat normalize_theta(MultiPoly& p, const Exponent& lead) {
  if (p.is_zero()) throw Error("cannot normalize the zero polynomial");
  Rat c = lead.empty() ? Rat(0) : p.coefficient(lead);
  if (c == 0) {
    const int top = p.total_degree();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      int d = 0;
      for (int x : it->first) d += x;
      if (d == top) {
        c = it->second;
        break;
      }
    }
  }
  p *= 1 / c;
  return c;
}

ThetaPolynomial theta_from_tau(const TauPolynomial& t, const CurveSpec& c0, const std::vector<SingularityData>& sing) {
  if (!t.exact) throw Error("multi-singularity curves use implicitization");
  const CurveSpec c = normalize_base_point(c0);
  if (c.genus() == 0) throw Error("theta_from_tau: genus zero");
  if (sing.size() != 1 || !sing[0].point.infinite)
    throw Error("theta_from_tau needs a single singular point at infinity");
  const auto vars = theta_variables(c, sing);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& F = c.differentials[i];
    const int deg = vars[i].gap - 1;
    if (!F.is_polynomial() || F.numerator().leading() != 1)
      throw Error("basis not in normal form: differential " + std::to_string(i + 1) + " is not a monic polynomial");
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (j != i && c.differentials[j].numerator().coeff(deg) != 0)
        throw Error("basis not in normal form: differential " + std::to_string(j + 1) + " has a term of degree " +
                    std::to_string(deg));
  }
  const auto& S = sing[0].semigroup;
  std::map<int, std::size_t> rename;
  for (std::size_t i = 0; i < vars.size(); ++i) rename[vars[i].gap] = i;
  const RingPtr ring = theta_ring(vars);
  MultiPoly theta(ring);
  for (const auto& [e, coef] : t.polynomial.terms()) {
    Exponent z(vars.size(), 0);
    bool keep = true;
    for (std::size_t k = 0; k < e.size() && keep; ++k) {
      if (e[k] == 0) continue;
      const int index = static_cast<int>(k) + 1;
      if (S.contains(index)) {
        keep = false;
      } else {
        auto it = rename.find(index);
        if (it == rename.end()) throw Error("tau involves x" + std::to_string(index) + " outside the gap set");
        z[it->second] = e[k];
      }
    }
    if (keep) theta.add_term(z, coef);
  }
  if (theta.is_zero()) throw Error("tau vanishes on the gap variables");
  ThetaPolynomial out{theta, vars, Provenance::FromTau, Rat(0)};
  out.tau_scalar = normalize_theta(out.polynomial, leading_exponent(vars, sing));
  return out;
}

ThetaPolynomial theta_by_implicitization(const CurveSpec& c0, const std::vector<SingularityData>& sing,
                                         const ImplicitizationOptions& opt, ImplicitizationStats* stats) {
  const CurveSpec c = normalize_base_point(c0);
  const int g = c.genus();
  if (g < 1) throw Error("implicitization needs genus >= 1");
  const auto vars = theta_variables(c, sing);
  const AbelData abel = abel_data(c, 1);
  Sampler sampler{abel.antiderivatives, {}, std::mt19937_64(opt.seed), std::max(opt.height, 2), static_cast<std::size_t>(g - 1)};
  for (const auto& s : sing)
    if (!s.point.infinite) sampler.avoid.push_back(s.point.value);

  const int lam = lambda_total(sing);
  std::vector<int> degrees;
  if (opt.discover_degree) {
    for (int k = 1; k <= g * (g + 1) / 2 + 2; ++k) degrees.push_back(k);
  } else {
    degrees.push_back(opt.degree >= 0 ? opt.degree : lam);
  }
  const SupportMode mode = opt.discover_degree ? SupportMode::TotalDegree : opt.mode;
  const Exponent lead = leading_exponent(vars, sing);

  for (int degree : degrees) {
    const auto mons = support(vars, sing, mode, degree);
    const std::size_t m = 2 * mons.size();
    std::vector<std::vector<Rat>> fit;
    for (std::size_t i = 0; i < m; ++i) fit.push_back(sampler.point());

    std::vector<u64> vec;
    KernelStatus status = modular_kernel(mons, fit, nth_prime(0), degree, vec);
    if (status == KernelStatus::Many) {
      for (std::size_t i = 0; i < m; ++i) fit.push_back(sampler.point());
      status = modular_kernel(mons, fit, nth_prime(0), degree, vec);
      if (status == KernelStatus::Many) throw Error("underdetermined: kernel dimension > 1 at degree " + std::to_string(degree));
    }
    if (status == KernelStatus::Zero) {
      if (opt.discover_degree) continue;
      throw Error("degree bound violated: no polynomial of degree " + std::to_string(degree) + " vanishes on the samples");
    }

    // Normalization coordinate, fixed by the first prime.
    std::size_t norm = mons.size();
    if (!lead.empty())
      for (std::size_t i = 0; i < mons.size(); ++i)
        if (mons[i] == lead && vec[i] != 0) norm = i;
    if (norm == mons.size())
      for (std::size_t i = 0; i < mons.size() && norm == mons.size(); ++i)
        if (vec[i] != 0) norm = i;

    std::vector<BigInt> residues(mons.size());
    BigInt modulus = 1;
    for (int prime = 0; prime < 8; ++prime) {
      const u64 p = nth_prime(prime);
      if (prime > 0 && modular_kernel(mons, fit, p, degree, vec) != KernelStatus::One) continue;
      if (vec[norm] == 0) continue;
      const u64 iv = modp::inv(vec[norm], p);
      const BigInt mp = static_cast<unsigned long>(p);
      for (std::size_t i = 0; i < mons.size(); ++i) {
        const BigInt r = static_cast<unsigned long>(modp::mul(vec[i], iv, p));
        residues[i] = crt(residues[i], modulus, r, mp);
      }
      modulus *= mp;
      MultiPoly theta(theta_ring(vars));
      bool complete = true;
      for (std::size_t i = 0; i < mons.size() && complete; ++i) {
        const auto q = rational_reconstruct(residues[i], modulus);
        if (!q) complete = false;
        else if (*q != 0) theta.add_term(mons[i], *q);
      }
      if (!complete) continue;
      if (!vanishes(theta, fit)) continue;
      std::vector<std::vector<Rat>> fresh;
      for (std::size_t i = 0; i < 2 * m; ++i) fresh.push_back(sampler.point());
      if (!vanishes(theta, fresh)) continue;
      if (stats) *stats = ImplicitizationStats{degree, mons.size(), fit.size(), fresh.size(), prime + 1};
      ThetaPolynomial out{theta, vars, Provenance::Implicitized, Rat(0)};
      normalize_theta(out.polynomial, lead);
      return out;
    }
    throw Error("implicitization did not reconstruct an exact vanishing polynomial");
  }
  throw Error("degree bound violated: no vanishing polynomial up to degree " + std::to_string(degrees.back()));
}

DegreeReport degree_report(const ThetaPolynomial& theta, const std::vector<SingularityData>& sing) {
  DegreeReport r;
  const auto& p = theta.polynomial;
  for (std::size_t j = 0; j < sing.size(); ++j) {
    const auto idx = group_indices(theta.variables, static_cast<int>(j));
    r.group_degrees.push_back(idx.empty() ? 0 : p.degree_in(idx));
  }
  r.total_degree = p.total_degree();
  int count = 0;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    int d = 0;
    for (int x : it->first) d += x;
    if (d != r.total_degree) continue;
    if (count++ == 0) r.leading_monomial = it->first;
  }
  r.leading_unique = count == 1;
  r.leading_monomial_text = MultiPoly::monomial(p.ring(), r.leading_monomial, 1).to_string();
  const int g = static_cast<int>(theta.variables.size());
  r.bound = g * (g + 1) / 2;
  r.bound_attained = r.total_degree == r.bound;
  r.matches_lambda = r.total_degree == lambda_total(sing);
  return r;
}

namespace {

/// theta(Z_1(u), ..., Z_g(u)) for rational functions Z_j.
RationalFunction compose_theta(const MultiPoly& theta, const std::vector<RationalFunction>& z) {
  std::vector<std::vector<RationalFunction>> powers(z.size());
  RationalFunction acc;
  for (const auto& [e, coef] : theta.terms()) {
    RationalFunction term(UPoly::constant(coef));
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      auto& pw = powers[j];
      if (pw.empty()) pw.push_back(RationalFunction(UPoly::constant(1)));
      while (static_cast<int>(pw.size()) <= e[j]) pw.push_back(pw.back() * z[j]);
      term = term * pw[static_cast<std::size_t>(e[j])];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

RelationReport relation_check(const CurveSpec& c0, const std::vector<SingularityData>& sing, const TauPolynomial& t,
                              const ThetaPolynomial& theta, int order, std::uint64_t seed) {
  const CurveSpec c = normalize_base_point(c0);
  const int g = c.genus();
  RelationReport rep;
  bool polynomial = true;
  int columns = 1;
  for (const auto& F : c.differentials) {
    polynomial = polynomial && F.is_polynomial();
    columns = std::max(columns, F.numerator().degree() + 1);
  }
  rep.exact = t.exact && polynomial && order < 0;
  if (!rep.exact) {
    if (order < 0) order = t.wmax;
    if (order > t.wmax && !t.exact)
      throw Error("relation order " + std::to_string(order) + " beyond the tau truncation " + std::to_string(t.wmax));
    columns = order;
  }
  const AbelData abel = abel_data(c, columns);

  // c_h from pole orders of theta along u_1 -> 1/t_h.
  std::mt19937_64 rng(seed);
  std::vector<Rat> avoid;
  for (const auto& s : sing)
    if (!s.point.infinite) avoid.push_back(s.point.value);
  auto random_u = [&] {
    for (;;) {
      const Rat r = make_rat(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 13) + 1);
      if (std::find(avoid.begin(), avoid.end(), r) == avoid.end()) return r;
    }
  };
  std::vector<int> cprime(sing.size(), 0);
  for (int trial = 0; trial < 2; ++trial) {
    std::vector<RationalFunction> z;
    std::vector<Rat> shift(static_cast<std::size_t>(g), Rat(0));
    for (int k = 1; k < g; ++k) {
      const Rat u = random_u();
      for (int j = 0; j < g; ++j) shift[j] += abel.antiderivatives[j](u);
    }
    for (int j = 0; j < g; ++j) z.push_back(abel.antiderivatives[j] + RationalFunction(UPoly::constant(shift[j])));
    const RationalFunction th = compose_theta(theta.polynomial, z);
    for (std::size_t h = 0; h < sing.size(); ++h)
      if (!sing[h].point.infinite) cprime[h] = std::max(cprime[h], th.pole_order_at(sing[h].point.value));
  }
  for (std::size_t h = 0; h < sing.size(); ++h)
    if (!sing[h].point.infinite)
      rep.exponents.emplace_back(1 / sing[h].point.value, 2 * sing[h].delta() - cprime[h]);

  const int nvars = std::max({columns, t.wmax, 1});
  const RingPtr xr = x_ring(static_cast<std::size_t>(nvars));
  std::vector<MultiPoly> images;
  for (int j = 0; j < g; ++j) {
    MultiPoly zj(xr);
    for (std::size_t k = 0; k < abel.columns(); ++k) zj += MultiPoly::variable(xr, k) * abel.A[j][k];
    images.push_back(zj);
  }
  MultiPoly rhs = substitute(theta.polynomial, images, rep.exact ? -1 : order);
  if (!rep.exponents.empty()) {
    MultiPoly e = MultiPoly::constant(xr, 1);
    for (int i = 1; i <= order; ++i) {
      Rat s = 0;
      for (const auto& [th, ch] : rep.exponents) s += ch * rat_pow(th, i);
      if (s == 0) continue;
      // exp(s x_i) through weight `order`
      MultiPoly ex = MultiPoly::constant(xr, 1), term = MultiPoly::constant(xr, 1);
      for (int n = 1; n * i <= order; ++n) {
        term = term * MultiPoly::variable(xr, static_cast<std::size_t>(i - 1)) * (s / n);
        ex += term;
      }
      e = multiply_truncated(e, ex, order);
    }
    rhs = multiply_truncated(e, rhs, order);
  }
  MultiPoly lhs = t.polynomial.embed(xr);
  if (!rep.exact) {
    lhs = lhs.truncated(order);
    rep.order = order;
  } else {
    rep.order = std::max(lhs.is_zero() ? 0 : lhs.weighted_degree(), rhs.is_zero() ? 0 : rhs.weighted_degree());
  }
  if (lhs.is_zero() || rhs.is_zero()) {
    rep.first_bad_weight = 0;
    return rep;
  }
  const int w0 = lhs.min_weight();
  const MultiPoly low = lhs.weight_component(w0);
  const auto& [e0, c0coef] = *low.terms().begin();
  const Rat r0 = rhs.coefficient(e0);
  if (r0 == 0) {
    rep.first_bad_weight = std::min(w0, rhs.min_weight());
    return rep;
  }
  rep.scalar = c0coef / r0;
  const MultiPoly diff = lhs - rhs * rep.scalar;
  if (!diff.is_zero()) {
    rep.first_bad_weight = diff.min_weight();
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace algtheta

#include "algtheta/curve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "algtheta/error.hpp"
#include "algtheta/multipoly.hpp"

namespace algtheta {

BranchPoint BranchPoint::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return at(parse_rat(text));
}

std::string BranchPoint::to_string() const { return infinite ? "inf" : algtheta::to_string(value); }

bool BranchPoint::operator<(const BranchPoint& o) const {
  if (infinite != o.infinite) return !infinite;
  return !infinite && value < o.value;
}

bool CurveSpec::operator==(const CurveSpec& o) const {
  return name == o.name && semigroup == o.semigroup && differentials == o.differentials &&
         singular_points == o.singular_points && base_point == o.base_point && parametrization == o.parametrization;
}

namespace {

using Vec = std::vector<Rat>;

Vec series_mul(const Vec& a, const Vec& b, std::size_t n) {
  Vec r(n, Rat(0));
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

Vec series_div(const Vec& a, const Vec& b, std::size_t n) {
  if (b.empty() || b[0] == 0) throw Error("series division by a non-unit");
  Vec r(n, Rat(0));
  const Rat inv = 1 / b[0];
  for (std::size_t k = 0; k < n; ++k) {
    Rat acc = k < a.size() ? a[k] : Rat(0);
    for (std::size_t i = 1; i <= k && i < b.size(); ++i) acc -= b[i] * r[k - i];
    r[k] = acc * inv;
  }
  return r;
}

int valuation(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

/// phi in the local parameter at the point, as a polynomial in s.
UPoly local_polynomial(const UPoly& phi, const BranchPoint& p, int degree) {
  return p.infinite ? phi.reversed(degree) : phi.shifted(p.value);
}

Vec truncate(const UPoly& q, std::size_t n) {
  Vec v(n, Rat(0));
  for (std::size_t k = 0; k < n && static_cast<int>(k) <= q.degree(); ++k) v[k] = q.coeff(static_cast<int>(k));
  return v;
}

std::string point_list(const std::vector<BranchPoint>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + pts[i].to_string();
  return s + "}";
}

std::string fiber_name(std::size_t k) {
  switch (k) {
    case 2: return "double point";
    case 3: return "triple point";
    case 4: return "quadruple point";
    default: return std::to_string(k) + "-fold point";
  }
}

void check_parametrization(const Parametrization& p) {
  if (p.components.size() < 2) throw InputError("a parametrization needs at least two components");
  int top = -1;
  for (const auto& c : p.components) top = std::max(top, c.degree());
  if (top > p.degree) throw InputError("component degree exceeds the declared degree");
  if (top < p.degree) throw InputError("parametrization has a base point at infinity");
  UPoly g;
  for (const auto& c : p.components) g = gcd(g, c);
  if (g.degree() > 0) throw InputError("parametrization components share the factor " + g.to_string());
}

/// Determinant of the Sylvester matrix of a and b for formal degrees m and n.
Rat sylvester(const Vec& a, const Vec& b, int m, int n) {
  const int size = m + n;
  RatMatrix s(size, Vec(size, Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return determinant(s);
}

UPoly interpolate(const std::vector<Rat>& xs, std::vector<Rat> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  UPoly result = UPoly::constant(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) result = result * UPoly::linear_root(xs[i]) + UPoly::constant(ys[i]);
  return result;
}

/// Bivariate q(u1, u2) specialized at u1 = x, as a coefficient vector in u2 of length len.
Vec specialize(const MultiPoly& q, const Rat& x, std::size_t len) {
  Vec v(len, Rat(0));
  for (const auto& [e, c] : q.terms()) v.at(static_cast<std::size_t>(e[1])) += c * rat_pow(x, e[0]);
  return v;
}

UPoly strip_rational_roots(UPoly f, const std::vector<Rat>& roots) {
  for (const Rat& a : roots)
    while (f.degree() > 0 && f(a) == 0) f = divmod(f, UPoly::linear_root(a)).first;
  return f;
}

}  // namespace

namespace {

using modp::u64;

/// Echelon basis over F_p of polynomials (coefficient vectors) keyed by leading index.
class ModSpan {
 public:
  ModSpan(std::size_t len, u64 p) : len_(len), p_(p) {}
  bool insert(std::vector<u64> v) {
    for (std::size_t i = len_; i-- > 0;) {
      if (v[i] == 0) continue;
      auto it = rows_.find(i);
      if (it == rows_.end()) {
        const u64 inv = modp::inv(v[i], p_);
        for (auto& x : v) x = modp::mul(x, inv, p_);
        rows_.emplace(i, std::move(v));
        return true;
      }
      const u64 f = v[i];
      const auto& r = it->second;
      for (std::size_t j = 0; j <= i; ++j)
        if (r[j] != 0) v[j] = modp::sub(v[j], modp::mul(f, r[j], p_), p_);
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, std::vector<u64>>& rows() const { return rows_; }

 private:
  std::size_t len_;
  u64 p_;
  std::map<std::size_t, std::vector<u64>> rows_;
};

/// Dimensions of the degree-k parts of the homogeneous coordinate ring of the image,
/// for k = 1..kmax, over F_p.
std::vector<std::size_t> hilbert_function(const Parametrization& par, int kmax, u64 p) {
  const std::size_t d = static_cast<std::size_t>(par.degree);
  std::vector<std::vector<u64>> comps;
  for (const auto& c : par.components) {
    std::vector<u64> v(d + 1, 0);
    for (int k = 0; k <= c.degree(); ++k) v[static_cast<std::size_t>(k)] = modp::reduce(c.coeff(k), p);
    comps.push_back(std::move(v));
  }
  std::vector<std::size_t> h;
  std::vector<std::vector<u64>> prev = {{1}};
  for (int k = 1; k <= kmax; ++k) {
    const std::size_t len = d * static_cast<std::size_t>(k) + 1;
    ModSpan span(len, p);
    for (const auto& a : prev)
      for (const auto& b : comps) {
        std::vector<u64> prod(len, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] == 0) continue;
          for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] = modp::add(prod[i + j], modp::mul(a[i], b[j], p), p);
        }
        span.insert(std::move(prod));
      }
    h.push_back(span.rank());
    prev.clear();
    for (const auto& [lead, row] : span.rows()) prev.push_back(row);
  }
  return h;
}

}  // namespace

int arithmetic_genus(const Parametrization& par) {
  check_parametrization(par);
  const int d = par.degree;
  const auto h1 = hilbert_function(par, 1, modp::next_prime(u64(1) << 61)).front();
  const int n = static_cast<int>(h1) - 1;
  const int kmax = std::max(1, d - n + 2) + 2;
  // A rank over F_p never exceeds the rank over Q; two primes make a drop vanishingly unlikely.
  std::vector<std::size_t> h = hilbert_function(par, kmax, modp::next_prime(u64(1) << 61));
  const auto h2 = hilbert_function(par, kmax, modp::next_prime((u64(1) << 61) + (u64(1) << 40)));
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = std::max(h[i], h2[i]);
  const long slope1 = static_cast<long>(h[kmax - 1]) - static_cast<long>(h[kmax - 2]);
  const long slope2 = static_cast<long>(h[kmax - 2]) - static_cast<long>(h[kmax - 3]);
  if (slope1 != d || slope2 != d)
    throw RejectedCurve("the parametrization is not birational onto its image (image degree " + std::to_string(slope1) +
                        ", parametrization degree " + std::to_string(d) + ")");
  return d * kmax + 1 - static_cast<int>(h[kmax - 1]);
}

Classification classify_algebraic(const Parametrization& p) {
  check_parametrization(p);
  const int d = p.degree;
  const auto& phi = p.components;
  const std::size_t n = phi.size();
  Classification out;

  // Non-immersed points: common zeros of all Wronskians.
  UPoly wg;
  bool moving = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      UPoly w = phi[i] * phi[j].derivative() - phi[j] * phi[i].derivative();
      moving = moving || !w.is_zero();
      wg = gcd(wg, w);
    }
  if (!moving) throw Error("constant map");
  if (wg.degree() > 0) {
    const auto roots = rational_roots(wg);
    UPoly rest = strip_rational_roots(wg, roots);
    if (rest.degree() > 0)
      throw RejectedCurve("singular branch point at an irrational parameter (root of " + rest.monic().to_string() + ")");
    for (const auto& a : roots) out.cusps.push_back(BranchPoint::at(a));
  }
  {
    std::vector<UPoly> psi;
    for (const auto& c : phi) psi.push_back(c.reversed(d));
    bool cusp = true;
    for (std::size_t i = 0; i < n && cusp; ++i)
      for (std::size_t j = i + 1; j < n && cusp; ++j)
        if (psi[i].coeff(0) * psi[j].coeff(1) - psi[j].coeff(0) * psi[i].coeff(1) != 0) cusp = false;
    if (cusp) out.cusps.push_back(BranchPoint::infinity());
  }

  out.arithmetic_genus = arithmetic_genus(p);
  for (const auto& c : out.cusps) out.cusp_delta += local_ring(p, c).semigroup.delta();
  if (out.arithmetic_genus == out.cusp_delta) return out;

  if (d >= 2) {
    // q_ij = (phi_i(u1) phi_j(u2) - phi_j(u1) phi_i(u2)) / (u1 - u2)
    const RingPtr ring = make_plain_ring("u", 2);
    std::vector<MultiPoly> q;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        MultiPoly num(ring);
        for (int a = 0; a <= phi[i].degree(); ++a)
          for (int b = 0; b <= phi[j].degree(); ++b) {
            num.add_term({a, b}, phi[i].coeff(a) * phi[j].coeff(b));
            num.add_term({b, a}, -phi[i].coeff(a) * phi[j].coeff(b));
          }
        if (!num.is_zero()) q.push_back(divide_by_difference(num, 0, 1));
      }
    std::mt19937_64 rng(0x5eed);
    auto combo = [&] {
      MultiPoly c(ring);
      for (const auto& qi : q) c += qi * Rat(static_cast<long>(rng() % 97) + 1);
      return c;
    };
    const int m = d - 1;
    const int bound = 2 * m * m;
    std::vector<Rat> xs;
    for (int k = 0; k <= bound; ++k) xs.emplace_back(k);
    auto resultant_in_u1 = [&](const MultiPoly& a, const MultiPoly& b) {
      std::vector<Rat> ys;
      for (const auto& x : xs) ys.push_back(sylvester(specialize(a, x, m + 1), specialize(b, x, m + 1), m, m));
      return interpolate(xs, ys);
    };
    const MultiPoly qa = combo(), qb = combo(), qc = combo();
    UPoly g = gcd(resultant_in_u1(qa, qb), resultant_in_u1(qa, qc));
    if (g.is_zero()) throw RejectedCurve("the parametrization is not birational onto its image");

    const auto roots = g.degree() > 0 ? rational_roots(g) : std::vector<Rat>{};
    UPoly rest = strip_rational_roots(g, roots);
    for (int round = 0; round < 3 && rest.degree() > 0; ++round) {
      const UPoly r = resultant_in_u1(combo(), combo());
      if (!r.is_zero()) rest = gcd(rest, r);
    }
    if (rest.degree() > 0)
      throw RejectedCurve("multibranch fiber at irrational parameters (root of " + rest.monic().to_string() + ")");

    Vec lead;
    for (const auto& c : phi) lead.push_back(c.coeff(d));
    std::map<BranchPoint, BranchPoint> parent;
    std::function<BranchPoint(const BranchPoint&)> find = [&](const BranchPoint& x) {
      auto it = parent.find(x);
      if (it == parent.end() || it->second == x) return x;
      return it->second = find(it->second);
    };
    auto unite = [&](const BranchPoint& x, const BranchPoint& y) {
      parent.try_emplace(x, x);
      parent.try_emplace(y, y);
      const BranchPoint rx = find(x), ry = find(y);
      if (!(rx == ry)) parent[ry] = rx;
    };
    for (const Rat& a : roots) {
      UPoly h;
      for (const auto& qi : q) {
        const Vec v = specialize(qi, a, static_cast<std::size_t>(m) + 1);
        h = gcd(h, UPoly(v));
      }
      if (h.is_zero()) throw Error("constant map");
      if (h.degree() > 0) {
        const auto partners = rational_roots(h);
        UPoly leftover = strip_rational_roots(h, partners);
        if (leftover.degree() > 0)
          throw RejectedCurve("multibranch fiber at irrational parameters (partner of " + to_string(a) + ")");
        for (const Rat& b : partners)
          if (b != a) unite(BranchPoint::at(a), BranchPoint::at(b));
      }
      bool at_infinity = true;
      for (std::size_t i = 0; i < n && at_infinity; ++i)
        for (std::size_t j = i + 1; j < n && at_infinity; ++j)
          if (phi[i](a) * lead[j] - phi[j](a) * lead[i] != 0) at_infinity = false;
      if (at_infinity) unite(BranchPoint::at(a), BranchPoint::infinity());
    }
    std::map<BranchPoint, std::vector<BranchPoint>> groups;
    for (const auto& [x, unused] : parent) groups[find(x)].push_back(x);
    for (auto& [root, pts] : groups) {
      std::sort(pts.begin(), pts.end());
      if (pts.size() > 1) out.multibranch.push_back(Fiber{pts});
    }
  }
  if (out.multibranch.empty())
    throw RejectedCurve("arithmetic genus " + std::to_string(out.arithmetic_genus) + " exceeds the total cusp delta " +
                        std::to_string(out.cusp_delta) + " but no multibranch fiber was found");
  out.algebraic = false;
  return out;
}

LocalRing local_ring(const Parametrization& p, const BranchPoint& point) {
  for (int n = 16; n <= 2048; n *= 2) {
    const std::size_t N = static_cast<std::size_t>(n);
    std::vector<Vec> comps;
    for (const auto& c : p.components) comps.push_back(truncate(local_polynomial(c, point, p.degree), N));
    std::size_t k = 0;
    while (k < comps.size() && comps[k][0] == 0) ++k;
    if (k == comps.size()) throw InputError("parametrization has a base point at u = " + point.to_string());
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i == k) continue;
      Vec y = series_div(comps[i], comps[k], N);
      y[0] = 0;
      if (valuation(y) >= 0) gens.push_back(std::move(y));
    }
    std::map<int, Vec> basis;
    basis[0] = Vec(N, Rat(0));
    basis[0][0] = 1;
    auto reduce = [&](Vec v) {
      for (;;) {
        const int val = valuation(v);
        if (val < 0) return v;
        auto it = basis.find(val);
        if (it == basis.end()) return v;
        const Rat f = v[val];
        for (std::size_t i = static_cast<std::size_t>(val); i < N; ++i)
          if (it->second[i] != 0) v[i] -= f * it->second[i];
      }
    };
    std::vector<int> queue;
    auto insert = [&](Vec v) {
      v = reduce(std::move(v));
      const int val = valuation(v);
      if (val < 0) return;
      const Rat inv = 1 / v[val];
      for (auto& x : v) x *= inv;
      basis.emplace(val, std::move(v));
      queue.push_back(val);
    };
    for (const auto& y : gens) insert(y);
    while (!queue.empty()) {
      const int val = queue.back();
      queue.pop_back();
      const Vec b = basis.at(val);
      for (const auto& y : gens) insert(series_mul(b, y, N));
    }
    std::set<int> values;
    for (const auto& [val, v] : basis) values.insert(val);
    const int mult = values.size() > 1 ? *std::next(values.begin()) : -1;
    if (mult < 0) throw Error("constant map near u = " + point.to_string());
    int conductor = -1;
    for (int c = 0; c + mult <= n && conductor < 0; ++c) {
      bool run = true;
      for (int i = c; i < c + mult && run; ++i) run = values.count(i) > 0;
      if (run) conductor = c;
    }
    if (conductor < 0) continue;
    std::vector<int> gaps;
    for (int w = 1; w < conductor; ++w)
      if (!values.count(w)) gaps.push_back(w);
    LocalRing ring;
    ring.point = point;
    ring.precision = n;
    for (auto& [val, v] : basis) ring.basis.push_back(v);
    ring.semigroup = NumericalSemigroup::from_gaps(gaps);
    return ring;
  }
  throw RejectedCurve("the branch at u = " + point.to_string() + " does not have a numerical value semigroup (the map is not birational)");
}

Laurent laurent_at(const RationalFunction& f, const BranchPoint& point, int terms) {
  Laurent l;
  l.coeffs.assign(static_cast<std::size_t>(std::max(terms, 0)), Rat(0));
  if (f.is_zero()) return l;
  const UPoly& num = f.numerator();
  const UPoly& den = f.denominator();
  if (!point.infinite) {
    UPoly D = den.shifted(point.value);
    const int v = D.valuation();
    D = divmod(D, UPoly::monomial(v)).first;
    l.order = v;
    l.coeffs = RationalFunction(num.shifted(point.value), D).taylor(0, terms);
  } else {
    // u = 1/s, du = -ds/s^2
    l.order = num.degree() - den.degree() + 2;
    l.coeffs = RationalFunction(num.reversed(num.degree()), den.reversed(den.degree())).taylor(0, terms);
    for (auto& c : l.coeffs) c = -c;
  }
  return l;
}

namespace {

/// Res_{s=0} of f * omega, f a power series (valuation >= 0).
Rat residue_against(const Vec& f, const Laurent& omega) {
  Rat r = 0;
  for (int i = 0; i < omega.order; ++i) {
    const int k = omega.order - 1 - i;
    if (static_cast<std::size_t>(i) < f.size() && static_cast<std::size_t>(k) < omega.coeffs.size())
      r += f[i] * omega.coeffs[k];
  }
  return r;
}

std::vector<LocalRing> rings_for(const Parametrization& p, const std::vector<SingularityData>& sing) {
  std::vector<LocalRing> rings;
  for (const auto& s : sing) rings.push_back(local_ring(p, s.point));
  return rings;
}

}  // namespace

std::vector<RationalFunction> canonical_basis(const Parametrization& p, const std::vector<SingularityData>& sing) {
  std::vector<RationalFunction> out;
  int total = 0;
  for (const auto& s : sing) {
    const LocalRing ring = local_ring(p, s.point);
    const int delta = ring.semigroup.delta();
    const int c = 2 * delta;
    total += delta;
    // Unknown j has pole order order_of[j] at the point.
    std::vector<int> order_of;
    std::vector<Laurent> unknowns;
    if (s.point.infinite) {
      for (int e = 0; e <= c - 2; ++e) {
        Laurent l;
        l.order = e + 2;
        l.coeffs = {Rat(-1)};
        unknowns.push_back(l);
        order_of.push_back(e + 2);
      }
    } else {
      for (int k = 1; k <= c; ++k) {
        Laurent l;
        l.order = k;
        l.coeffs = {Rat(1)};
        unknowns.push_back(l);
        order_of.push_back(k);
      }
    }
    RatMatrix conditions;
    for (const auto& f : ring.basis) {
      if (valuation(f) >= c) continue;
      Vec row;
      for (const auto& u : unknowns) row.push_back(residue_against(f, u));
      conditions.push_back(std::move(row));
    }
    RatMatrix kernel = nullspace(conditions, unknowns.size());
    if (static_cast<int>(kernel.size()) != delta)
      throw RejectedCurve("input is not Gorenstein of declared genus: " + std::to_string(kernel.size()) +
                          " differentials at u = " + s.point.to_string() + ", expected " + std::to_string(delta));
    // Reduced echelon form with the highest pole orders as pivots.
    const std::size_t m = unknowns.size();
    RatMatrix rev(kernel.size(), Vec(m));
    for (std::size_t r = 0; r < kernel.size(); ++r)
      for (std::size_t j = 0; j < m; ++j) rev[r][j] = kernel[r][m - 1 - j];
    rref(rev);
    std::reverse(rev.begin(), rev.end());
    for (const auto& row : rev) {
      RationalFunction f;
      for (std::size_t j = 0; j < m; ++j) {
        const Rat& x = row[m - 1 - j];
        if (x == 0) continue;
        if (s.point.infinite) {
          f = f + RationalFunction(UPoly::monomial(static_cast<int>(j), x));
        } else {
          f = f + RationalFunction(UPoly::constant(x), UPoly::linear_root(s.point.value).pow(static_cast<unsigned>(j + 1)));
        }
      }
      out.push_back(f);
    }
  }
  (void)total;
  return out;
}

bool is_rosenlicht(const RationalFunction& f, const std::vector<LocalRing>& rings) {
  if (f.is_zero()) return true;
  bool inf_declared = false;
  for (const auto& r : rings) inf_declared = inf_declared || r.point.infinite;
  if (!inf_declared && f.differential_pole_order_at_infinity() > 0) return false;
  for (const Rat& a : rational_roots(f.denominator())) {
    bool declared = false;
    for (const auto& r : rings) declared = declared || (!r.point.infinite && r.point.value == a);
    if (!declared) return false;
  }
  if (rational_roots(f.denominator()).size() != static_cast<std::size_t>(squarefree_part(f.denominator()).degree()))
    return false;
  for (const auto& r : rings) {
    const int c = r.semigroup.conductor();
    const Laurent l = laurent_at(f, r.point, std::max(c, 1));
    if (l.order > c) return false;
    for (const auto& g : r.basis) {
      if (valuation(g) >= c) continue;
      if (residue_against(g, l) != 0) return false;
    }
  }
  return true;
}

namespace {

/// Gap sets read off from the pole orders of the differentials at each point.
std::vector<SingularityData> analysis_from_poles(const CurveSpec& c) {
  const int g = c.genus();
  int max_order = 2;
  for (const auto& f : c.differentials)
    for (const auto& p : c.singular_points) max_order = std::max(max_order, laurent_at(f, p, 0).order);
  std::vector<std::vector<Laurent>> lau(c.singular_points.size());
  for (std::size_t j = 0; j < c.singular_points.size(); ++j)
    for (const auto& f : c.differentials) lau[j].push_back(laurent_at(f, c.singular_points[j], max_order));
  // coefficient of s^{-k} at point j for differential i
  auto principal = [&](std::size_t j, std::size_t i, int k) {
    const Laurent& l = lau[j][i];
    const int idx = l.order - k;
    return idx >= 0 && idx < static_cast<int>(l.coeffs.size()) ? l.coeffs[idx] : Rat(0);
  };
  std::vector<SingularityData> out;
  int total = 0;
  for (std::size_t j = 0; j < c.singular_points.size(); ++j) {
    RatMatrix conditions;
    for (std::size_t o = 0; o < c.singular_points.size(); ++o) {
      if (o == j) continue;
      for (int k = 1; k <= max_order; ++k) {
        Vec row;
        for (int i = 0; i < g; ++i) row.push_back(principal(o, static_cast<std::size_t>(i), k));
        conditions.push_back(std::move(row));
      }
    }
    RatMatrix kernel = conditions.empty() ? RatMatrix{} : nullspace(conditions, static_cast<std::size_t>(g));
    if (conditions.empty())
      for (int i = 0; i < g; ++i) {
        Vec e(static_cast<std::size_t>(g), Rat(0));
        e[i] = 1;
        kernel.push_back(e);
      }
    RatMatrix orders;
    for (const auto& v : kernel) {
      Vec row;
      for (int k = max_order; k >= 1; --k) {
        Rat x = 0;
        for (int i = 0; i < g; ++i) x += v[i] * principal(j, static_cast<std::size_t>(i), k);
        row.push_back(x);
      }
      orders.push_back(std::move(row));
    }
    const auto pivots = rref(orders);
    std::vector<int> gaps;
    for (auto col : pivots) gaps.push_back(max_order - static_cast<int>(col) - 1);
    if (std::find(gaps.begin(), gaps.end(), 0) != gaps.end())
      throw RejectedCurve("differential with a residue at u = " + c.singular_points[j].to_string());
    total += static_cast<int>(gaps.size());
    NumericalSemigroup s = NumericalSemigroup::from_generators({1});
    try {
      s = NumericalSemigroup::from_gaps(gaps);
    } catch (const Error&) {
      throw RejectedCurve("pole orders at u = " + c.singular_points[j].to_string() + " do not come from a semigroup");
    }
    if (s.delta() == 0) throw InputError("declared singular point u = " + c.singular_points[j].to_string() + " carries no poles");
    out.push_back(SingularityData{c.singular_points[j], s, partition_from_gaps(s)});
  }
  if (total != g) throw RejectedCurve("input is not Gorenstein of declared genus");
  return out;
}

}  // namespace

std::vector<SingularityData> singularity_analysis(const CurveSpec& c) {
  std::vector<SingularityData> out;
  if (c.base_point != 0) return singularity_analysis(normalize_base_point(c));
  for (const auto& p : c.singular_points)
    if (!p.infinite && p.value == c.base_point) throw InputError("base point coincides with a singular point");
  if (c.parametrization) {
    const Classification cls = classify_algebraic(*c.parametrization);
    if (!cls.algebraic) {
      const Fiber& f = cls.multibranch.front();
      throw RejectedCurve(fiber_name(f.points.size()) + ": not unibranch, fiber " + point_list(f.points) +
                          " (the theta divisor is algebraic only for rational curves with unibranch singularities)");
    }
    std::vector<BranchPoint> declared = c.singular_points, found = cls.cusps;
    std::sort(declared.begin(), declared.end());
    std::sort(found.begin(), found.end());
    if (!(declared == found))
      throw InputError("declared singular points " + point_list(declared) + " but the parametrization is singular at " +
                       point_list(found));
    for (const auto& p : c.singular_points) {
      const LocalRing ring = local_ring(*c.parametrization, p);
      if (!ring.semigroup.is_gorenstein())
        throw RejectedCurve("singularity at u = " + p.to_string() + " has non-symmetric value semigroup " +
                            ring.semigroup.to_string() + " (w not in H iff 2 delta - 1 - w in H fails)");
      out.push_back(SingularityData{p, ring.semigroup, partition_from_gaps(ring.semigroup)});
    }
  } else {
    out = analysis_from_poles(c);
    for (const auto& s : out)
      if (!s.semigroup.is_gorenstein())
        throw RejectedCurve("singularity at u = " + s.point.to_string() + " has non-symmetric value semigroup " +
                            s.semigroup.to_string() + " (w not in H iff 2 delta - 1 - w in H fails)");
  }
  validate_curve(c, out);
  return out;
}

void validate_curve(const CurveSpec& c, const std::vector<SingularityData>& sing) {
  if (c.base_point != 0) return validate_curve(normalize_base_point(c), sing);
  bool inf_declared = false;
  for (const auto& p : c.singular_points) inf_declared = inf_declared || p.infinite;
  std::size_t span = 1;
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    const auto& f = c.differentials[i];
    const std::string which = "differential " + std::to_string(i + 1);
    if (f.is_zero()) throw InputError(which + " is zero");
    span += static_cast<std::size_t>(f.numerator().degree() + f.denominator().degree()) + 1;
    const PartialFractions pf = partial_fractions(f);
    for (const auto& t : pf.poles) {
      if (std::find(c.singular_points.begin(), c.singular_points.end(), BranchPoint::at(t.location)) ==
          c.singular_points.end())
        throw InputError(which + " has a pole at the undeclared point u = " + to_string(t.location));
      if (t.order == 1) throw RejectedCurve(which + " has a residue at u = " + to_string(t.location));
    }
    if (!inf_declared && f.differential_pole_order_at_infinity() > 0)
      throw InputError(which + " has a pole at the undeclared point u = inf");
  }
  RatMatrix taylor;
  for (const auto& f : c.differentials) taylor.push_back(f.taylor(0, static_cast<int>(span)));
  if (rref(taylor).size() != c.differentials.size()) throw InputError("the differentials are linearly dependent");
  int total = 0;
  for (const auto& s : sing) total += s.delta();
  if (total != c.genus())
    throw RejectedCurve("input is not Gorenstein of declared genus: " + std::to_string(c.genus()) +
                        " differentials for total delta " + std::to_string(total));
  if (c.parametrization) {
    const auto rings = rings_for(*c.parametrization, sing);
    for (std::size_t i = 0; i < c.differentials.size(); ++i)
      if (!is_rosenlicht(c.differentials[i], rings))
        throw RejectedCurve("differential " + std::to_string(i + 1) + " fails the Rosenlicht residue conditions");
  }
}

CurveSpec monomial_curve(const NumericalSemigroup& s) {
  if (!s.is_gorenstein()) throw RejectedCurve("monomial curve of non-symmetric semigroup " + s.to_string());
  if (s.delta() < 1) throw Error("monomial curve needs delta >= 1");
  CurveSpec c;
  c.name = s.to_string();
  c.semigroup = s;
  for (int w : s.gaps()) c.differentials.emplace_back(UPoly::monomial(w - 1));
  c.singular_points = {BranchPoint::infinity()};
  // Local coordinates s^h at infinity for the generators, plus s^{N-1}, s^N in H so that
  // the chart at u = 0 is smooth and the map is injective on the finite line.
  std::set<int> exps(s.generators().begin(), s.generators().end());
  int top = *exps.rbegin();
  if (!exps.count(top - 1)) {
    top = std::max(s.conductor(), top) + 1;
    exps.insert(top - 1);
    exps.insert(top);
  }
  Parametrization p;
  p.degree = top;
  p.components.push_back(UPoly::monomial(top));
  for (int h : exps) p.components.push_back(UPoly::monomial(top - h));
  c.parametrization = p;
  return c;
}

CurveSpec normalize_base_point(const CurveSpec& c) {
  if (c.base_point == 0) return c;
  const Rat b = c.base_point;
  CurveSpec out = c;
  for (const auto& p : c.singular_points)
    if (!p.infinite && p.value == b) throw InputError("base point coincides with a singular point");
  out.differentials.clear();
  for (const auto& f : c.differentials)
    out.differentials.emplace_back(f.numerator().shifted(b), f.denominator().shifted(b));
  for (auto& p : out.singular_points)
    if (!p.infinite) p.value -= b;
  if (out.parametrization)
    for (auto& comp : out.parametrization->components) comp = comp.shifted(b);
  out.base_point = 0;
  return out;
}

CurveSpec move_to_infinity(const CurveSpec& c0, const Rat& a) {
  const CurveSpec c = normalize_base_point(c0);
  if (a == 0) throw Error("cannot move the base point to infinity");
  CurveSpec out = c;
  // u = a v / (a + v)
  const RationalFunction u_of_v(UPoly({Rat(0), a}), UPoly({a, Rat(1)}));
  const RationalFunction du(UPoly::constant(a * a), UPoly({a, Rat(1)}).pow(2));
  out.differentials.clear();
  for (const auto& f : c.differentials) out.differentials.push_back(f.compose(u_of_v) * du);
  for (auto& p : out.singular_points) {
    if (p.infinite) p = BranchPoint::at(-a);
    else if (p.value == a) p = BranchPoint::infinity();
    else p = BranchPoint::at(a * p.value / (a - p.value));
  }
  if (c.parametrization) {
    const int d = c.parametrization->degree;
    const UPoly av({Rat(0), a}), apv({a, Rat(1)});
    for (auto& comp : out.parametrization->components) {
      UPoly acc;
      for (int k = 0; k <= comp.degree(); ++k)
        acc += av.pow(static_cast<unsigned>(k)) * apv.pow(static_cast<unsigned>(d - k)) * comp.coeff(k);
      comp = acc;
    }
  }
  out.semigroup.reset();
  return out;
}

RatMatrix AbelData::power_sum_matrix() const {
  RatMatrix p = A;
  for (auto& row : p)
    for (std::size_t k = 0; k < row.size(); ++k) row[k] /= static_cast<long>(k + 1);
  return p;
}

AbelData abel_data(const CurveSpec& c0, int columns) {
  const CurveSpec c = normalize_base_point(c0);
  if (c.differentials.empty()) throw Error("abel_data: genus zero");
  if (columns < 0) {
    columns = 1;
    for (const auto& f : c.differentials)
      for (const auto& p : c.singular_points) columns = std::max(columns, laurent_at(f, p, 0).order - 1);
  }
  AbelData data;
  for (const auto& f : c.differentials) {
    if (f.is_zero()) throw Error("abel_data: zero differential");
    data.A.push_back(f.taylor(0, columns));
    const PartialFractions pf = partial_fractions(f);
    std::vector<Rat> poly{Rat(0)};
    for (int k = 0; k <= pf.polynomial_part.degree(); ++k) poly.push_back(pf.polynomial_part.coeff(k) / (k + 1));
    RationalFunction F{UPoly(poly)};
    for (const auto& t : pf.poles) {
      if (t.order == 1) throw Error("logarithmic abelian integral");
      const Rat k1 = t.order - 1;
      F = F + RationalFunction(UPoly::constant(-t.coeff / k1), UPoly::linear_root(t.location).pow(static_cast<unsigned>(t.order - 1)));
      F = F + RationalFunction(UPoly::constant(t.coeff / (k1 * rat_pow(-t.location, t.order - 1))));
    }
    data.antiderivatives.push_back(F);
  }
  return data;
}

}  // namespace algtheta

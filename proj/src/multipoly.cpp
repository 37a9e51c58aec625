#include "algtheta/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "algtheta/error.hpp"

namespace algtheta {

Ring::Ring(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw Error("ring: names and weights differ in length");
  for (int w : weights_)
    if (w < 1) throw Error("ring: weights must be positive");
}

std::size_t Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error("unknown variable " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

bool Ring::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const Ring>(std::move(names), std::move(weights));
}

RingPtr make_plain_ring(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(names), std::vector<int>(n, 1));
}

RingPtr x_ring(std::size_t n) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    weights.push_back(static_cast<int>(i));
  }
  return make_ring(std::move(names), std::move(weights));
}

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial without a ring");
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rat& c) {
  MultiPoly p(ring);
  p.add_term(Exponent(p.ring_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw Error("variable index out of range");
  Exponent e(ring->size(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), 1);
}

MultiPoly MultiPoly::variable(RingPtr ring, const std::string& name) {
  const std::size_t i = ring->index_of(name);
  return variable(std::move(ring), i);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponent exponent, const Rat& c) {
  MultiPoly p(std::move(ring));
  p.add_term(exponent, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat MultiPoly::constant_term() const { return coefficient(Exponent(ring_->size(), 0)); }

Rat MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != ring_->size()) throw Error("exponent length does not match the ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring())) throw Error("polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  return multiply_truncated(a, b, std::numeric_limits<int>::max());
}

MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, int max_weight) {
  require_same_ring(a, b);
  MultiPoly r(a.ring());
  const std::size_t n = a.ring()->size();
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms()) {
    const int wa = a.weight_of(ea);
    if (wa > max_weight) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (wa + a.weight_of(eb) > max_weight) continue;
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return (ring_ == o.ring_ || *ring_ == *o.ring_) && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(ring_, 1), b = *this;
  for (; n; n >>= 1) {
    if (n & 1u) result = result * b;
    if (n > 1) b = b * b;
  }
  return result;
}

int MultiPoly::weight_of(const Exponent& e) const {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * ring_->weight(i);
  return w;
}

int MultiPoly::weighted_degree() const {
  if (terms_.empty()) throw Error("undefined degree");
  int best = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) best = std::max(best, weight_of(e));
  return best;
}

int MultiPoly::min_weight() const {
  if (terms_.empty()) throw Error("undefined degree");
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, weight_of(e));
  return best;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) throw Error("undefined degree");
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

int MultiPoly::degree_in(std::span<const std::size_t> vars) const {
  if (terms_.empty()) throw Error("undefined degree");
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t v : vars) d += e.at(v);
    best = std::max(best, d);
  }
  return best;
}

int MultiPoly::weighted_degree_in(std::span<const std::size_t> vars) const {
  if (terms_.empty()) throw Error("undefined degree");
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t v : vars) d += e.at(v) * ring_->weight(v);
    best = std::max(best, d);
  }
  return best;
}

bool MultiPoly::is_weighted_homogeneous() const {
  return terms_.empty() || weighted_degree() == min_weight();
}

MultiPoly MultiPoly::truncated(int max_weight) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_)
    if (weight_of(e) <= max_weight) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::weight_component(int weight) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_)
    if (weight_of(e) == weight) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * e[var]);
  }
  return r;
}

Rat MultiPoly::evaluate(std::span<const Rat> values) const {
  if (values.size() != ring_->size()) throw Error("evaluate: wrong number of values");
  if (terms_.empty()) return 0;
  // Integer arithmetic: values a_i / D, coefficients b_e / C, everything over C D^deg.
  BigInt D = 1, C = 1;
  for (const auto& v : values) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), v.get_den_mpz_t());
  for (const auto& [e, c] : terms_) mpz_lcm(C.get_mpz_t(), C.get_mpz_t(), c.get_den_mpz_t());
  const int deg = total_degree();
  std::vector<std::vector<BigInt>> pw(values.size());
  std::vector<int> top(values.size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) top[i] = std::max(top[i], e[i]);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const BigInt a = values[i].get_num() * (D / values[i].get_den());
    pw[i].push_back(1);
    for (int k = 1; k <= top[i]; ++k) pw[i].push_back(pw[i].back() * a);
  }
  std::vector<BigInt> dpw{1};
  for (int k = 1; k <= deg; ++k) dpw.push_back(dpw.back() * D);
  BigInt sum = 0, t;
  for (const auto& [e, c] : terms_) {
    t = c.get_num() * (C / c.get_den());
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) {
        t *= pw[i][static_cast<std::size_t>(e[i])];
        d += e[i];
      }
    t *= dpw[static_cast<std::size_t>(deg - d)];
    sum += t;
  }
  Rat r(sum, C * dpw[static_cast<std::size_t>(deg)]);
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::zero_variables(const std::set<std::size_t>& vars) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (std::size_t v : vars)
      if (v < e.size() && e[v] > 0) keep = false;
    if (keep) r.terms_.emplace(e, c);
  }
  return r;
}

std::set<std::size_t> MultiPoly::support() const {
  std::set<std::size_t> s;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) s.insert(i);
  return s;
}

MultiPoly MultiPoly::embed(RingPtr target) const {
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->index_of(ring_->name(i));
  MultiPoly r(target);
  Exponent f(target->size());
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rat>> sorted(terms_.rbegin(), terms_.rend());
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    return weight_of(a.first) > weight_of(b.first);
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->name(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << algtheta::to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << algtheta::to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images, int max_weight) {
  if (images.size() != p.ring()->size()) throw Error("substitute: one image per variable is required");
  if (images.empty()) throw Error("substitute: no target ring");
  const RingPtr& target = images.front().ring();
  for (const auto& im : images) require_same_ring(im, images.front());
  const int cap = max_weight < 0 ? std::numeric_limits<int>::max() : max_weight;
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(multiply_truncated(cache.back(), images[i], cap));
    return cache[k];
  };
  MultiPoly result(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i)
      if (e[i]) t = multiply_truncated(t, power(i, e[i]), cap);
    result += t;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment,
                     RingPtr target) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < p.ring()->size(); ++i) {
    const auto& name = p.ring()->name(i);
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      bool used = false;
      for (const auto& [e, c] : p.terms()) used = used || e[i] > 0;
      if (used) throw Error("substitute: variable " + name + " is not assigned");
      images.push_back(MultiPoly(target));
    } else {
      images.push_back(it->second.embed(target));
    }
  }
  if (images.empty()) return MultiPoly::constant(target, p.constant_term());
  return substitute(p, images);
}

MultiPoly divide_by_difference(const MultiPoly& p, std::size_t i, std::size_t j) {
  if (i == j) throw Error("divide_by_difference: identical variables");
  const RingPtr& ring = p.ring();
  // Group by the exponent of x_i: p = sum_k c_k x_i^k.
  std::map<int, MultiPoly, std::greater<int>> slices;
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    const int k = f[i];
    f[i] = 0;
    slices.try_emplace(k, ring).first->second.add_term(f, c);
  }
  if (slices.empty()) return MultiPoly(ring);
  const int d = slices.begin()->first;
  const MultiPoly xi = MultiPoly::variable(ring, i), xj = MultiPoly::variable(ring, j);
  auto slice = [&](int k) {
    auto it = slices.find(k);
    return it == slices.end() ? MultiPoly(ring) : it->second;
  };
  MultiPoly quotient(ring), carry(ring);
  for (int k = d; k >= 1; --k) {
    carry = slice(k) + carry * xj;
    quotient += carry * xi.pow(static_cast<unsigned>(k - 1));
  }
  if (!(slice(0) + carry * xj).is_zero()) throw Error("divide_by_difference: inexact division");
  return quotient;
}

}  // namespace algtheta

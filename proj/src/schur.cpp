#include "algtheta/schur.hpp"

#include <algorithm>
#include <unordered_map>

#include "algtheta/error.hpp"

namespace algtheta {

MultiPoly elementary_sw(int k, const RingPtr& ring) {
  if (k < 0) return MultiPoly(ring);
  // k sigma_k = sum_{i=1}^{k} i x_i sigma_{k-i}
  std::vector<MultiPoly> sigma{MultiPoly::constant(ring, 1)};
  for (int n = 1; n <= k; ++n) {
    MultiPoly acc(ring);
    for (int i = 1; i <= n && i <= static_cast<int>(ring->size()); ++i)
      acc += MultiPoly::variable(ring, static_cast<std::size_t>(i - 1)) * sigma[n - i] * Rat(i);
    sigma.push_back(acc * Rat(1, n));
  }
  return sigma[k];
}

MultiPoly elementary_sw(int k, std::size_t num_vars) { return elementary_sw(k, x_ring(num_vars)); }

namespace {

class MinorExpansion {
 public:
  MinorExpansion(const std::vector<std::vector<MultiPoly>>& m, RingPtr ring) : m_(m), ring_(std::move(ring)) {}

  MultiPoly det() { return expand(0, (1u << m_.size()) - 1); }

 private:
  // Determinant of rows row.. against the columns in mask, along the first row.
  MultiPoly expand(std::size_t row, unsigned mask) {
    if (mask == 0) return MultiPoly::constant(ring_, 1);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    MultiPoly acc(ring_);
    int sign = 1;
    for (std::size_t c = 0; c < m_.size(); ++c) {
      if (!(mask & (1u << c))) continue;
      if (!m_[row][c].is_zero()) {
        MultiPoly term = m_[row][c] * expand(row + 1, mask & ~(1u << c));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  const std::vector<std::vector<MultiPoly>>& m_;
  RingPtr ring_;
  std::unordered_map<unsigned, MultiPoly> memo_;
};

}  // namespace

MultiPoly schur_weierstrass(const Partition& lambda, const RingPtr& ring) {
  const std::size_t m = lambda.length();
  if (m == 0) return MultiPoly::constant(ring, 1);
  if (static_cast<int>(ring->size()) < lambda.part(1) + static_cast<int>(m) - 1)
    throw Error("schur_weierstrass: ring has too few variables for " + lambda.to_string());
  const int top = lambda.part(1) + static_cast<int>(m) - 1;
  std::vector<MultiPoly> sigma{MultiPoly::constant(ring, 1)};
  for (int n = 1; n <= top; ++n) {
    MultiPoly acc(ring);
    for (int i = 1; i <= n; ++i)
      acc += MultiPoly::variable(ring, static_cast<std::size_t>(i - 1)) * sigma[n - i] * Rat(i);
    sigma.push_back(acc * Rat(1, n));
  }
  std::vector<std::vector<MultiPoly>> mat(m, std::vector<MultiPoly>(m, MultiPoly(ring)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int k = lambda.part(i + 1) + static_cast<int>(j) - static_cast<int>(i);
      if (k >= 0) mat[i][j] = sigma[k];
    }
  return MinorExpansion(mat, ring).det();
}

SchurWeierstrass schur_weierstrass(const Partition& lambda) {
  const std::size_t n = std::max<std::size_t>(1, lambda.empty() ? 1 : lambda.part(1) + lambda.length() - 1);
  return {lambda, schur_weierstrass(lambda, x_ring(n))};
}

MultiPoly to_symmetric_schur(const Partition& lambda, int n) {
  if (n < 1) throw Error("to_symmetric_schur: n must be positive");
  const RingPtr u = make_plain_ring("u", static_cast<std::size_t>(n));
  const SchurWeierstrass sw = schur_weierstrass(lambda);
  std::vector<MultiPoly> images;
  for (std::size_t i = 1; i <= sw.polynomial.ring()->size(); ++i) {
    MultiPoly p(u);
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      Exponent e(static_cast<std::size_t>(n), 0);
      e[k] = static_cast<int>(i);
      p.add_term(e, Rat(1, static_cast<long>(i)));
    }
    images.push_back(std::move(p));
  }
  return substitute(sw.polynomial, images);
}

std::set<int> variable_support(const SchurWeierstrass& sigma) {
  std::set<int> out;
  for (std::size_t i : sigma.polynomial.support()) out.insert(static_cast<int>(i) + 1);
  return out;
}

}  // namespace algtheta

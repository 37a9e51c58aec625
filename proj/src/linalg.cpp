#include "algtheta/linalg.hpp"

#include <utility>

#include "algtheta/error.hpp"

namespace algtheta {

Rat determinant(const RatMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (const auto& c : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t s = r;
    while (s < m.size() && m[s][c] == 0) ++s;
    if (s == m.size()) continue;
    std::swap(m[r], m[s]);
    const Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatMatrix nullspace(RatMatrix m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw Error("nullspace: ragged matrix");
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  for (; e; e >>= 1) {
    if (e & 1u) r = mul(r, a, p);
    a = mul(a, a, p);
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw Error("modular inverse of zero");
  return pow(a, p - 2, p);
}

u64 reduce(const Rat& r, u64 p) {
  const BigInt mp = static_cast<unsigned long>(p);
  BigInt n = r.get_num() % mp, d = r.get_den() % mp;
  if (n < 0) n += mp;
  if (d == 0) throw Error("denominator divisible by the prime");
  return mul(n.get_ui(), inv(d.get_ui(), p), p);
}

u64 next_prime(u64 from) {
  BigInt x = static_cast<unsigned long>(from);
  mpz_nextprime(x.get_mpz_t(), x.get_mpz_t());
  return x.get_ui();
}

std::vector<std::vector<u64>> nullspace(std::vector<std::vector<u64>> m, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t s = r;
    while (s < m.size() && m[s][c] == 0) ++s;
    if (s == m.size()) continue;
    std::swap(m[r], m[s]);
    const u64 iv = inv(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mul(m[r][j], iv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j]) m[i][j] = sub(m[i][j], mul(f, m[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = m[i][f] ? p - m[i][f] : 0;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace modp

BigInt crt(const BigInt& a, const BigInt& m, const BigInt& b, const BigInt& n) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t()) == 0) throw Error("crt: moduli not coprime");
  BigInt t = ((b - a) % n) * inv % n;
  if (t < 0) t += n;
  BigInt x = a + m * t;
  BigInt mn = m * n;
  x %= mn;
  if (x < 0) x += mn;
  return x;
}

std::optional<Rat> rational_reconstruct(const BigInt& a, const BigInt& m) {
  BigInt bound;
  BigInt half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  BigInt r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat r(r1, t1);
  r.canonicalize();
  return r;
}

}  // namespace algtheta

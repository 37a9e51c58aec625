#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "algtheta/rational.hpp"

namespace algtheta {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Determinant of a square matrix by Bareiss elimination on the integerized rows.
Rat determinant(const RatMatrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column, with a 1 at that column.
RatMatrix nullspace(RatMatrix m, std::size_t cols);

namespace modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);

/// r mod p; throws when p divides the denominator.
u64 reduce(const Rat& r, u64 p);

/// The smallest prime above `from` (from < 2^62).
u64 next_prime(u64 from);

/// Nullspace of an r x c matrix over F_p (rows are consumed). Same basis
/// convention as the rational version.
std::vector<std::vector<u64>> nullspace(std::vector<std::vector<u64>> rows, std::size_t cols, u64 p);

}  // namespace modp

/// Combines x = a (mod m) with x = b (mod n) for coprime moduli; result in [0, m n).
BigInt crt(const BigInt& a, const BigInt& m, const BigInt& b, const BigInt& n);

/// The unique p/q with |p|, q <= sqrt(m/2) and p = a q (mod m), if it exists.
std::optional<Rat> rational_reconstruct(const BigInt& a, const BigInt& m);

}  // namespace algtheta

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "algtheta/multipoly.hpp"
#include "algtheta/semigroup.hpp"

namespace oracle {

using namespace algtheta;

/// det(M) by the permutation expansion.
inline MultiPoly leibniz(const std::vector<std::vector<MultiPoly>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(ring);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    MultiPoly t = MultiPoly::constant(ring, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t = t * m[i][perm[i]];
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Ratio of alternants a_{lambda + staircase} / a_{staircase}, by exact division by
/// each u_i - u_j.
inline MultiPoly bialternant(const Partition& lambda, int n) {
  const RingPtr u = make_plain_ring("u", static_cast<std::size_t>(n));
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(u)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Exponent e(static_cast<std::size_t>(n), 0);
      e[i] = lambda.part(static_cast<std::size_t>(j) + 1) + n - 1 - j;
      m[i][j] = MultiPoly::monomial(u, e, 1);
    }
  MultiPoly a = leibniz(m, u);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a = divide_by_difference(a, i, j);
  return a;
}

}  // namespace oracle

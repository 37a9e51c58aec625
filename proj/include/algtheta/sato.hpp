#pragma once

#include <map>
#include <string>
#include <vector>

#include "algtheta/curve.hpp"
#include "algtheta/multipoly.hpp"

namespace algtheta {

/// Finite window of the frame of a curve in the Sato Grassmannian. Column j <= g is
/// u^{1-m} F_j(u) with m = g - 1, column j > g is u^{1-j}; entry (r, j) is the
/// coefficient of u^{r+1}, so the column u^{1-j} has its 1 in row -j.
struct Frame {
  int genus = 0;
  int shift = -1;
  int wmax = 0;
  int row_min = 0;
  int row_max = -1;
  int columns = 0;
  /// entries[r - row_min][j - 1]
  RatMatrix entries;
  bool exact = true;
  std::vector<SingularityData> singularities;

  /// Entry (row, col) with col 1-based; zero outside the stored rows.
  Rat at(int row, int col) const;
  /// Row-indexed table for debugging.
  std::string dump() const;
};

/// Default truncation: |lambda| for one singularity, twice the total |lambda_j| otherwise.
int default_wmax(const std::vector<SingularityData>& sing);

/// Frame of the curve for L = omega(-(g-1) P0), P0 the base point. Throws Error when
/// wmax < |lambda| for a single-singularity curve.
Frame build_frame(const CurveSpec& c, int wmax = -1);
Frame build_frame(const CurveSpec& c, const std::vector<SingularityData>& sing, int wmax = -1);

/// det(xi_{m_i, j}), i, j = 1..max(g, len lambda), m_i = lambda_i - i.
Rat plucker(const Frame& f, const Partition& lambda);

struct TauPolynomial {
  /// Sum of xi_lambda sigma_lambda over |lambda| <= wmax, in x_1..x_wmax.
  MultiPoly polynomial;
  std::map<Partition, Rat> coefficients;
  /// One singularity (or none): the sum is complete.
  bool exact = true;
  int wmax = 0;

  /// "-2/9*sigma(1,1,1,1) - 1/3*sigma(4,1,1,1) + ..." by weight, then partition.
  std::string table_string() const;
};

TauPolynomial tau(const Frame& f);

struct BrillNoetherSides {
  /// (u_1...u_n)^{n-m} det(F_j(u_i)) / Vandermonde
  MultiPoly lhs;
  /// sum of xi_lambda s_lambda(u_1..u_n)
  MultiPoly rhs;
  /// Both sides are compared in total degree <= degree.
  int degree = 0;
};

/// Needs g <= n.
BrillNoetherSides brill_noether_sides(const CurveSpec& c, int n);
bool brill_noether_check(const CurveSpec& c, int n);

}  // namespace algtheta

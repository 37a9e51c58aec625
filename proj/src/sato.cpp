#include "algtheta/sato.hpp"

#include <sstream>

#include "algtheta/error.hpp"
#include "algtheta/schur.hpp"

namespace algtheta {

Rat Frame::at(int row, int col) const {
  if (col < 1) throw Error("frame column out of range");
  if (col > genus && (col > columns || row < row_min)) return row == -col ? Rat(1) : Rat(0);
  if (row < row_min || row > row_max) {
    if (row > row_max) throw Error("frame row " + std::to_string(row) + " beyond the truncation window");
    return 0;
  }
  if (col > columns) throw Error("frame column beyond the truncation window");
  return entries[static_cast<std::size_t>(row - row_min)][static_cast<std::size_t>(col - 1)];
}

std::string Frame::dump() const {
  std::ostringstream os;
  for (int r = row_max; r >= row_min; --r) {
    os << r << ":";
    for (int j = 1; j <= columns; ++j) os << " " << to_string(at(r, j));
    os << "\n";
  }
  return os.str();
}

int default_wmax(const std::vector<SingularityData>& sing) {
  int total = 0;
  for (const auto& s : sing) total += s.lambda.size();
  return sing.size() == 1 ? total : 2 * total;
}

Frame build_frame(const CurveSpec& c, int wmax) {
  const CurveSpec n = normalize_base_point(c);
  return build_frame(n, singularity_analysis(n), wmax);
}

Frame build_frame(const CurveSpec& c0, const std::vector<SingularityData>& sing, int wmax) {
  const CurveSpec c = normalize_base_point(c0);
  Frame f;
  f.genus = c.genus();
  f.shift = f.genus - 1;
  f.exact = sing.size() <= 1;
  f.singularities = sing;
  if (wmax < 0) wmax = default_wmax(sing);
  if (sing.size() == 1 && wmax < sing[0].lambda.size())
    throw Error("wmax " + std::to_string(wmax) + " below |lambda| = " + std::to_string(sing[0].lambda.size()) +
                " would truncate an exact tau function");
  f.wmax = wmax;
  const int g = f.genus;
  f.row_min = -(g + wmax);
  f.row_max = wmax - 1;
  f.columns = g + wmax;
  f.entries.assign(static_cast<std::size_t>(f.row_max - f.row_min + 1), std::vector<Rat>(static_cast<std::size_t>(f.columns), Rat(0)));
  for (int j = 1; j <= g; ++j) {
    // coefficient of u^k in F_j lands in row k + 1 - g
    const auto taylor = c.differentials[static_cast<std::size_t>(j - 1)].taylor(0, f.row_max + g);
    for (int k = 0; k < static_cast<int>(taylor.size()); ++k)
      f.entries[static_cast<std::size_t>(k + 1 - g - f.row_min)][static_cast<std::size_t>(j - 1)] = taylor[static_cast<std::size_t>(k)];
  }
  for (int j = g + 1; j <= f.columns; ++j) f.entries[static_cast<std::size_t>(-j - f.row_min)][static_cast<std::size_t>(j - 1)] = 1;
  return f;
}

Rat plucker(const Frame& f, const Partition& lambda) {
  if (lambda.size() > f.wmax)
    throw Error("partition " + lambda.to_string() + " outside the truncation window wmax = " + std::to_string(f.wmax));
  const int n = std::max(f.genus, static_cast<int>(lambda.length()));
  if (n == 0) return 1;
  RatMatrix m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    const int row = lambda.part(i) - i;
    bool zero = true;
    for (int j = 1; j <= n; ++j) {
      m[i - 1][j - 1] = f.at(row, j);
      zero = zero && m[i - 1][j - 1] == 0;
    }
    if (zero) return 0;
  }
  return determinant(m);
}

std::string TauPolynomial::table_string() const {
  std::vector<std::pair<Partition, Rat>> items(coefficients.begin(), coefficients.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return b.first < a.first;
  });
  if (items.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Rat c = items[i].second;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) out += to_string(c) + "*";
    out += "sigma" + items[i].first.to_string();
  }
  return out;
}

TauPolynomial tau(const Frame& f) {
  TauPolynomial t{MultiPoly(x_ring(static_cast<std::size_t>(std::max(f.wmax, 1)))), {}, f.exact, f.wmax};
  for (int w = 0; w <= f.wmax; ++w)
    for (const auto& lambda : partitions_of(w)) {
      const Rat xi = plucker(f, lambda);
      if (xi == 0) continue;
      t.coefficients.emplace(lambda, xi);
      t.polynomial += schur_weierstrass(lambda, t.polynomial.ring()) * xi;
    }
  return t;
}

namespace {

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, std::size_t row, unsigned used,
                      std::map<unsigned, MultiPoly>& memo) {
  const std::size_t n = m.size();
  if (row == n) return MultiPoly::constant(m[0][0].ring(), 1);
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  MultiPoly acc(m[0][0].ring());
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (used & (1u << j)) continue;
    if (!m[row][j].is_zero()) {
      MultiPoly minor = determinant(m, row + 1, used | (1u << j), memo);
      acc += sign > 0 ? m[row][j] * minor : -(m[row][j] * minor);
    }
    sign = -sign;
  }
  memo.emplace(used, acc);
  return acc;
}

}  // namespace

BrillNoetherSides brill_noether_sides(const CurveSpec& c0, int n) {
  const CurveSpec c = normalize_base_point(c0);
  const int g = c.genus();
  if (n < g || n < 1 || n > 16) throw Error("brill_noether_check needs g <= n <= 16");
  const Frame f = build_frame(c);
  const int m = g - 1;
  bool polynomial = f.exact;
  int top = 0;
  for (const auto& F : c.differentials) {
    polynomial = polynomial && F.is_polynomial();
    top = std::max(top, F.numerator().degree());
  }
  const int vandermonde = n * (n - 1) / 2;
  const int degree = f.wmax + vandermonde;
  const RingPtr ring = make_plain_ring("u", static_cast<std::size_t>(n));
  std::vector<std::vector<MultiPoly>> mat(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n), MultiPoly(ring)));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto& e = mat[i][j - 1];
      Exponent ex(static_cast<std::size_t>(n), 0);
      if (j <= g) {
        const auto taylor = c.differentials[static_cast<std::size_t>(j - 1)].taylor(0, polynomial ? top + 1 : std::max(degree - (n - m) + 1, 0));
        for (std::size_t k = 0; k < taylor.size(); ++k) {
          ex[i] = static_cast<int>(k) + n - m;
          e.add_term(ex, taylor[k]);
        }
      } else {
        ex[i] = n - m - (j - g) - 1;
        e.add_term(ex, 1);
      }
    }
  std::map<unsigned, MultiPoly> memo;
  MultiPoly lhs = determinant(mat, 0, 0, memo);
  // Homogeneous components of the truncated determinant stay antisymmetric, hence divisible.
  if (!polynomial) lhs = lhs.truncated(degree);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) lhs = divide_by_difference(lhs, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  BrillNoetherSides sides{lhs, MultiPoly(ring), polynomial ? lhs.is_zero() ? 0 : lhs.total_degree() : f.wmax};
  for (const auto& [lambda, xi] : tau(f).coefficients)
    if (static_cast<int>(lambda.length()) <= n) sides.rhs += to_symmetric_schur(lambda, n) * xi;
  if (!polynomial) {
    sides.lhs = sides.lhs.truncated(sides.degree);
    sides.rhs = sides.rhs.truncated(sides.degree);
  } else {
    sides.degree = std::max(sides.degree, sides.rhs.is_zero() ? 0 : sides.rhs.total_degree());
  }
  return sides;
}

bool brill_noether_check(const CurveSpec& c, int n) {
  const BrillNoetherSides s = brill_noether_sides(c, n);
  return s.lhs == s.rhs;
}

}  // namespace algtheta

#include "algtheta/kp.hpp"

#include <functional>
#include <future>
#include <random>

#include "algtheta/error.hpp"
#include "algtheta/series.hpp"

namespace algtheta {

namespace {

RingPtr xyt_ring() { return make_ring({"X", "Y", "T"}, {1, 1, 1}); }

MultiPoly affine(const RingPtr& r, const Rat& c, const std::array<Rat, 3>& lin) {
  MultiPoly p = MultiPoly::constant(r, c);
  for (std::size_t k = 0; k < 3; ++k)
    if (lin[k] != 0) p += MultiPoly::variable(r, k) * lin[k];
  return p;
}

}  // namespace

KPResidualReport kp_residual_of(const MultiPoly& phi, const std::array<Rat, 3>& base, int order) {
  if (order < 6) throw Error("KP order must be at least 6");
  const RingPtr r = phi.ring();
  if (phi.constant_term() == 0) throw Error("singular base point, re-sample");
  // Graded pieces of phi; log through degree order + 1 keeps the residual exact through order - 5.
  const int n = order + 2;
  std::vector<MultiPoly> pieces;
  for (int k = 0; k < n; ++k) pieces.push_back(phi.weight_component(k));
  const TruncSeries<MultiPoly> log = series_log(TruncSeries<MultiPoly>(pieces, n));
  MultiPoly L(r);
  for (int k = 1; k < n; ++k) L += log[k];
  const int keep = order - 5;
  const std::size_t X = 0, Y = 1, T = 2;
  const MultiPoly f = L.derivative(X).derivative(X) * Rat(2);
  const MultiPoly fx = f.derivative(X);
  const int cut = keep + 1;
  MultiPoly inner = f.derivative(T) * Rat(4) - multiply_truncated(f, fx, cut) * Rat(6) - fx.derivative(X).derivative(X);
  MultiPoly res = (inner.truncated(cut).derivative(X) - f.derivative(Y).derivative(Y) * Rat(3)).truncated(keep);
  KPResidualReport rep;
  rep.base = base;
  rep.order = order;
  rep.verdict = res.is_zero();
  for (int d = 0; d <= keep; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) rep.residual.push_back(res.coefficient({a, b, d - a - b}));
  return rep;
}

KPResidualReport kp_residual(const ThetaPolynomial& theta, const AbelData& a, const std::array<Rat, 3>& base, int order) {
  const RingPtr r = xyt_ring();
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < theta.variables.size(); ++j) {
    std::array<Rat, 3> col{Rat(0), Rat(0), Rat(0)};
    for (std::size_t k = 0; k < 3 && k < a.columns(); ++k) col[k] = a.A.at(j)[k];
    const Rat c = col[0] * base[0] + col[1] * base[1] + col[2] * base[2];
    images.push_back(affine(r, c, col));
  }
  return kp_residual_of(substitute(theta.polynomial, images), base, order);
}

KPResidualReport tau_kp_check(const TauPolynomial& t, const std::array<Rat, 3>& base, int order) {
  if (!t.exact) throw Error("tau_kp_check needs an exact tau");
  const RingPtr r = xyt_ring();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < t.polynomial.ring()->size(); ++i) {
    if (i < 3) {
      std::array<Rat, 3> lin{Rat(0), Rat(0), Rat(0)};
      lin[i] = 1;
      images.push_back(affine(r, base[i], lin));
    } else {
      images.emplace_back(r);
    }
  }
  return kp_residual_of(substitute(t.polynomial, images), base, order);
}

namespace {

KPResidualReport one_base(const std::function<KPResidualReport(const std::array<Rat, 3>&)>& check, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto small = [&] { return make_rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1); };
  for (int attempt = 0;; ++attempt) {
    const std::array<Rat, 3> base{small(), small(), small()};
    try {
      return check(base);
    } catch (const Error& e) {
      if (std::string(e.what()) != "singular base point, re-sample" || attempt + 1 >= 20) throw;
    }
  }
}

/// Base point b uses its own generator, so the points do not depend on scheduling.
std::vector<KPResidualReport> suite(const std::function<KPResidualReport(const std::array<Rat, 3>&)>& check, int bases,
                                    std::uint64_t seed) {
  std::vector<std::future<KPResidualReport>> jobs;
  for (int b = 0; b < bases; ++b)
    jobs.push_back(std::async(std::launch::async, one_base, std::cref(check), seed * 1000003u + static_cast<std::uint64_t>(b)));
  std::vector<KPResidualReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace

std::vector<KPResidualReport> kp_suite(const ThetaPolynomial& theta, const AbelData& a, int order, int bases,
                                       std::uint64_t seed) {
  return suite([&](const std::array<Rat, 3>& b) { return kp_residual(theta, a, b, order); }, bases, seed);
}

std::vector<KPResidualReport> tau_kp_suite(const TauPolynomial& t, int order, int bases, std::uint64_t seed) {
  return suite([&](const std::array<Rat, 3>& b) { return tau_kp_check(t, b, order); }, bases, seed);
}

}  // namespace algtheta

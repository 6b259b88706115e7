#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "common/matrix.hpp"
#include "common/residual.hpp"
#include "kahler/metric.hpp"

namespace flagcone::cone {

// Eguchi-Hanson potential on C^2 minus the origin, R = |z_1|^2 + |z_2|^2:
//   F_s = sqrt(R^2 + s^2) + s log R - s log(s + sqrt(s^2 + R^2)).
inline jets::Jet<std::complex<double>> eguchi_hanson_potential(double s, const std::vector<std::complex<double>>& z, int p, int q) {
  using cd = std::complex<double>;
  using J = jets::Jet<cd>;
  if (!(s > 0 && s <= 1)) fail(ErrorCode::kInvalidArgument, "Eguchi-Hanson parameter must lie in (0, 1]");
  require(z.size() == 2, "Eguchi-Hanson lives on C^2");
  if (std::norm(z[0]) + std::norm(z[1]) == 0) fail(ErrorCode::kDomain, "Eguchi-Hanson potential is singular at the origin");
  jets::SpacePtr space = kahler::holomorphic_space(2, p, q);
  J big_r(space);
  for (int v = 0; v < 2; ++v) big_r += J::variable(space, v, z[v]) * J::variable(space, 2 + v, std::conj(z[v]));
  J root = jets::real_pow(big_r * big_r + cd(s * s), 0.5);
  return root + jets::log(big_r) * cd(s) - jets::log(root + cd(s)) * cd(s);
}

inline Matrix<std::complex<double>> eguchi_hanson_metric(double s, const std::vector<std::complex<double>>& z) {
  auto f = eguchi_hanson_potential(s, z, 1, 1);
  return kahler::mixed_hessian(f, 2, 2);
}

inline Residual eguchi_hanson_ricci(double s, const std::vector<std::complex<double>>& z) {
  auto f = eguchi_hanson_potential(s, z, 2, 2);
  Matrix<std::complex<double>> ric = kahler::kahler_ricci(kahler::hessian_jets(f, 2, 2), 2);
  Residual r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.absorb(std::abs(ric(i, j)));
  return r;
}

// Distance to the flat metric d dbar (|z_1|^2 + |z_2|^2).
inline double eguchi_hanson_flat_gap(double s, const std::vector<std::complex<double>>& z) {
  auto g = eguchi_hanson_metric(s, z);
  double worst = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

// The potential depends on z only through R, so the metric is invariant under
// the diagonal phase rotation z -> e^{i a} z.
inline double eguchi_hanson_phase_residual(double s, const std::vector<std::complex<double>>& z, double a) {
  const std::complex<double> u = std::polar(1.0, a);
  auto g0 = eguchi_hanson_metric(s, z);
  auto g1 = eguchi_hanson_metric(s, {u * z[0], u * z[1]});
  double worst = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(g1(i, j) - g0(i, j)));
  return worst;
}

}  // namespace flagcone::cone

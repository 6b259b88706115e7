#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "cone/calabi.hpp"
#include "cone/cone.hpp"

namespace flagcone::cone {

// Real symmetric form of a Hermitian coefficient matrix in (x_1, y_1, ...).
inline Eigen::MatrixXd real_metric(const Matrix<cd>& h) {
  const int m = h.rows();
  Eigen::MatrixXd g(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      g(2 * i, 2 * j) = 2 * h(i, j).real();
      g(2 * i + 1, 2 * j + 1) = 2 * h(i, j).real();
      g(2 * i, 2 * j + 1) = 2 * h(i, j).imag();
      g(2 * j + 1, 2 * i) = 2 * h(i, j).imag();
    }
  return g;
}

// Cone radius matched to the fibre: with t = |b|^2 K the ansatz grows like
// (2 pi t)^{1/(n+1)} H/(2 pi) horizontally while the cone has r^2 H/(2(n+1)),
// so r^2 = kappa t^{1/(n+1)} with kappa = (n+1) (2 pi)^{1/(n+1)} / pi.
inline double cone_radius_for(int m, double t) {
  const double n1 = m + 1;
  const double kappa = n1 * std::pow(2 * std::numbers::pi, 1 / n1) / std::numbers::pi;
  return std::sqrt(kappa * std::pow(t, 1 / n1));
}

struct AsymptoticSample {
  double fibre_radius = 0;  // |b|
  double cone_radius = 0;   // r
  double gap = 0;           // max |eig(g_cone^-1 g_CY) - 1|
};

// Operator-norm gap between the ansatz metric and the pulled-back cone
// metric at b = R e^{i arg}.
inline AsymptoticSample asymptotic_gap(const kahler::PotentialSpec& spec, const sasaki::SasakiSample<cd>& s,
                                       const sasaki::SasakiCurvature<cd>& k, double constant, double fibre_radius, double arg) {
  require_calabi(spec, constant);
  const int m = s.m;
  const double n1 = m + 1;
  const cd b = std::polar(fibre_radius, arg);
  const double b2 = std::norm(b);
  const double kval = kahler::potential_value(spec, s.z);
  const double t = b2 * kval;
  const double r = cone_radius_for(m, t);
  ConeSample<cd> cs = build_cone(s, k, r);

  std::vector<double> df(2 * m);
  for (int j = 0; j < m; ++j) {
    df[2 * j] = s.connection[2 * j + 1] / s.kappa;
    df[2 * j + 1] = -s.connection[2 * j] / s.kappa;
  }
  const int na = 2 * (m + 1);
  const int d = cs.dim;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(d, na);
  for (int a = 0; a < 2 * m; ++a) {
    jac(0, a) = r / (2 * n1) * df[a];
    jac(1 + a, a) = 1.0;
  }
  jac(0, 2 * m) = r / n1 * b.real() / b2;
  jac(0, 2 * m + 1) = r / n1 * b.imag() / b2;
  jac(d - 1, 2 * m) = -b.imag() / b2;
  jac(d - 1, 2 * m + 1) = b.real() / b2;
  Eigen::MatrixXd gc(d, d);
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c) gc(a, c) = cs.metric.g(a, c);
  Eigen::MatrixXd pulled = jac.transpose() * gc * jac;
  Eigen::MatrixXd cy = real_metric(calabi_metric_at(spec, {s.z, b}, constant));

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(cy, pulled, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) fail(ErrorCode::kInternalConsistency, "pulled-back cone metric is not positive definite");
  AsymptoticSample out;
  out.fibre_radius = fibre_radius;
  out.cone_radius = r;
  out.gap = (es.eigenvalues().array() - 1.0).abs().maxCoeff();
  return out;
}

struct AsymptoticRun {
  std::vector<AsymptoticSample> samples;
  bool strictly_decreasing = true;
};

inline AsymptoticRun asymptotic_schedule(const kahler::PotentialSpec& spec, const sasaki::SasakiSample<cd>& s,
                                         const sasaki::SasakiCurvature<cd>& k, double constant, const std::vector<double>& radii,
                                         double arg) {
  AsymptoticRun run;
  for (double radius : radii) {
    run.samples.push_back(asymptotic_gap(spec, s, k, constant, radius, arg));
    const std::size_t n = run.samples.size();
    if (n > 1 && !(run.samples[n - 1].gap < run.samples[n - 2].gap)) run.strictly_decreasing = false;
  }
  return run;
}

// Log-log slope of the horizontal scale of the ansatz in t between two fibre
// radii; the cone side grows with exponent exactly 1/(n+1).
inline double growth_exponent(const kahler::PotentialSpec& spec, const std::vector<cd>& z, double constant, double r1, double r2) {
  const double kval = kahler::potential_value(spec, z);
  auto scale = [&](double radius) { return calabi_metric_at(spec, {z, cd(radius)}, constant)(0, 0).real(); };
  return std::log(scale(r2) / scale(r1)) / std::log((r2 * r2 * kval) / (r1 * r1 * kval));
}

}  // namespace flagcone::cone

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "common/matrix.hpp"
#include "common/residual.hpp"
#include "kahler/metric.hpp"

namespace flagcone::cone {

// How the fibre norm entering the ansatz is read off a bundle chart point.
//   kHermitian: t = |b|^2 K(z), the bundle metric induced by the potential.
//   kLiteral:   t = |b|^2, the coordinate modulus in the chart.
// Only the first gives a closed, Ricci-flat form; the second is kept as a
// diagnostic.
enum class FibreReading { kHermitian, kLiteral };

inline const char* to_string(FibreReading r) { return r == FibreReading::kHermitian ? "hermitian" : "literal"; }

using cd = std::complex<double>;

struct BundlePoint {
  std::vector<cd> z;
  cd b;
};

inline void require_calabi(const kahler::PotentialSpec& spec, double constant) {
  if (!(constant > 0)) fail(ErrorCode::kInvalidArgument, "the constant C must be positive");
  if (spec.ell() != spec.fano_index())
    fail(ErrorCode::kNotCrepant, "the Calabi ansatz needs ell equal to the Fano index (status " +
                                     std::string(lie::to_string(spec.parabolic().crepancy())) + ")");
}

// Hermitian coefficient matrix of the ansatz in the frame (dz_1..dz_m, db),
//   G = P^{1/(n+1)} [ H/(2 pi) (+) 0 + w v v^* ],   P = 2 pi t + C,
//   v = (b d_1 f, ..., b d_m f, 1),  w = K / ((n+1) P) (hermitian reading),
// as jets in (z, b, conj z, conj b) capped at bidegree (p, q).
inline Matrix<jets::Jet<cd>> calabi_metric_jets(const kahler::PotentialSpec& spec, const BundlePoint& pt, double constant,
                                                FibreReading reading, int p, int q) {
  using J = jets::Jet<cd>;
  require_calabi(spec, constant);
  const int m = spec.dimension();
  const int M = m + 1;
  const double n1 = m + 1;
  jets::SpacePtr space = kahler::holomorphic_space(M, p + 1, q + 1);
  J f = kahler::log_potential_jet(spec, pt.z, space, M);
  J k = kahler::potential_jet(spec, pt.z, space, M);
  J b = J::variable(space, m, pt.b);
  J bbar = J::variable(space, M + m, std::conj(pt.b));
  J t = reading == FibreReading::kHermitian ? b * bbar * k : b * bbar;
  J big_p = t * (2 * std::numbers::pi) + cd(constant);
  J inv_p = jets::reciprocal(big_p);
  J w = reading == FibreReading::kHermitian ? k * inv_p * cd(1 / n1) : inv_p * cd(1 / n1);
  J root = jets::real_pow(big_p, 1 / n1);
  Matrix<J> h = kahler::hessian_jets(f, M, m);

  std::vector<J> v, vbar;
  for (int i = 0; i < m; ++i) {
    v.push_back(b * jets::derivative(f, i));
    vbar.push_back(bbar * jets::derivative(f, M + i));
  }
  v.push_back(J::constant(space, cd(1)));
  vbar.push_back(J::constant(space, cd(1)));

  const cd inv_two_pi(1 / (2 * std::numbers::pi));
  Matrix<J> g(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      J e = w * v[i] * vbar[j];
      if (i < m && j < m) e += h(i, j) * inv_two_pi;
      g(i, j) = root * e;
    }
  return g;
}

inline Matrix<cd> jet_values(const Matrix<jets::Jet<cd>>& a) {
  Matrix<cd> out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).value();
  return out;
}

inline Matrix<cd> calabi_metric_at(const kahler::PotentialSpec& spec, const BundlePoint& pt, double constant,
                                   FibreReading reading = FibreReading::kHermitian) {
  return jet_values(calabi_metric_jets(spec, pt, constant, reading, 0, 0));
}

inline Eigen::MatrixXcd to_eigen(const Matrix<cd>& a) {
  Eigen::MatrixXcd e(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

inline double min_eigenvalue(const Matrix<cd>& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(g), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

struct CalabiRicci {
  Residual ricci;
  double min_eigenvalue = 0;
};

inline CalabiRicci calabi_ricci_check(const kahler::PotentialSpec& spec, const BundlePoint& pt, double constant,
                                      FibreReading reading = FibreReading::kHermitian) {
  Matrix<jets::Jet<cd>> g = calabi_metric_jets(spec, pt, constant, reading, 1, 1);
  const int M = g.rows();
  Matrix<cd> ric = kahler::kahler_ricci(g, M);
  CalabiRicci out;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) out.ricci.absorb(std::abs(ric(i, j)));
  out.min_eigenvalue = min_eigenvalue(jet_values(g));
  return out;
}

// On the zero section the horizontal block is C^{1/(n+1)} g_X and the fibre
// entry is C^{1/(n+1)} K / ((n+1) C). Relative to the largest entry of g.
inline Residual zero_section_check(const kahler::PotentialSpec& spec, const std::vector<cd>& z, double constant) {
  const int m = spec.dimension();
  Matrix<cd> g = calabi_metric_at(spec, {z, cd(0)}, constant);
  Matrix<cd> gx = kahler::metric_at(spec, z).metric();
  const double root = std::pow(constant, 1.0 / (m + 1));
  const double k = kahler::potential_value(spec, z);
  Residual r;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) r.absorb(std::abs(g(i, j) - root * gx(i, j)));
    r.absorb(std::abs(g(i, m)));
    r.absorb(std::abs(g(m, i)));
  }
  r.absorb(std::abs(g(m, m) - root * k / ((m + 1) * constant)));
  double scale = 0;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) scale = std::max(scale, std::abs(g(i, j)));
  r.value /= scale;
  return r;
}

inline cd determinant(const Matrix<cd>& a) { return to_eigen(a).determinant(); }

// det G = K det(g_X) / (n+1) for every b: relative spread over the fibre.
inline double monge_ampere_spread(const kahler::PotentialSpec& spec, const std::vector<cd>& z, const std::vector<cd>& fibre,
                                  double constant) {
  const int m = spec.dimension();
  const cd expected = kahler::potential_value(spec, z) * determinant(kahler::metric_at(spec, z).metric()) / double(m + 1);
  double worst = 0;
  for (const cd& b : fibre) {
    cd d = determinant(calabi_metric_at(spec, {z, b}, constant));
    worst = std::max(worst, std::abs(d - expected) / std::abs(expected));
  }
  return worst;
}

}  // namespace flagcone::cone

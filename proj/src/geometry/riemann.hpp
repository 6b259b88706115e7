#pragma once

#include <vector>

#include "common/matrix.hpp"
#include "common/scalar.hpp"
#include "jets/jet.hpp"

namespace flagcone::geometry {

// Value, first and second coordinate derivatives of a metric at a point.
template <class R>
struct MetricJet {
  int dim = 0;
  Matrix<R> g;
  std::vector<Matrix<R>> dg;                // dg[c](a, b) = d_c g_ab
  std::vector<std::vector<Matrix<R>>> ddg;  // ddg[c][d](a, b) = d_c d_d g_ab

  explicit MetricJet(int n = 0)
      : dim(n), g(n, n, R(0)), dg(n, Matrix<R>(n, n, R(0))), ddg(n, std::vector<Matrix<R>>(n, Matrix<R>(n, n, R(0)))) {}
};

// Reads the metric and its derivatives off a matrix of real-variable jets.
// coord_var[c] is the jet variable of coordinate c, or -1 for a coordinate the
// fields do not depend on.
template <class C>
MetricJet<typename ScalarTraits<C>::Real> extract_metric(const Matrix<jets::Jet<C>>& gj, const std::vector<int>& coord_var) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  const int n = gj.rows();
  require(static_cast<int>(coord_var.size()) == n, "coordinate map length mismatch");
  MetricJet<R> out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const jets::Jet<C>& f = gj(a, b);
      const int nv = f.space()->num_vars();
      out.g(a, b) = T::re(f.value());
      for (int c = 0; c < n; ++c) {
        if (coord_var[c] < 0) continue;
        std::vector<int> e(nv, 0);
        e[coord_var[c]] = 1;
        out.dg[c](a, b) = T::re(f.partial(e));
        for (int d = 0; d < n; ++d) {
          if (coord_var[d] < 0) continue;
          std::vector<int> e2 = e;
          e2[coord_var[d]] += 1;
          out.ddg[c][d](a, b) = T::re(f.partial(e2));
        }
      }
    }
  return out;
}

template <class R>
struct Curvature {
  int dim = 0;
  Matrix<R> ginv;
  std::vector<R> gamma;    // gamma[(c*n + a)*n + b] = Gamma^c_ab
  std::vector<R> riemann;  // riemann[((d*n + c)*n + a)*n + b] = R^d_cab
  Matrix<R> ricci;
  R scalar = R(0);

  const R& christoffel(int c, int a, int b) const { return gamma[(static_cast<std::size_t>(c) * dim + a) * dim + b]; }
  const R& riem(int d, int c, int a, int b) const {
    return riemann[((static_cast<std::size_t>(d) * dim + c) * dim + a) * dim + b];
  }
};

// Levi-Civita connection and curvature in the convention
//   R^d_cab = d_a Gamma^d_bc - d_b Gamma^d_ac + Gamma^d_ae Gamma^e_bc - Gamma^d_be Gamma^e_ac,
//   Ric_cb = R^a_cab,
// which gives the round sphere positive Ricci curvature.
template <class R>
Curvature<R> curvature(const MetricJet<R>& m) {
  const int n = m.dim;
  Curvature<R> out;
  out.dim = n;
  out.ginv = inverse(m.g);
  const Matrix<R>& gi = out.ginv;
  const R half = real_ratio<R>(1, 2);
  auto idx3 = [n](int a, int b, int c) { return (static_cast<std::size_t>(a) * n + b) * n + c; };

  // T_dab = d_a g_db + d_b g_da - d_d g_ab and its derivatives.
  std::vector<R> t(static_cast<std::size_t>(n) * n * n, R(0));
  for (int d = 0; d < n; ++d)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[idx3(d, a, b)] = m.dg[a](d, b) + m.dg[b](d, a) - m.dg[d](a, b);

  out.gamma.assign(static_cast<std::size_t>(n) * n * n, R(0));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        R s(0);
        for (int d = 0; d < n; ++d) s += gi(c, d) * t[idx3(d, a, b)];
        out.gamma[idx3(c, a, b)] = half * s;
      }

  // d_e Gamma^c_ab = 1/2 (d_e g^cd) T_dab + 1/2 g^cd d_e T_dab,
  // with d_e g^cd = -g^cp (d_e g_pq) g^qd.
  std::vector<R> dgamma(static_cast<std::size_t>(n) * n * n * n, R(0));
  for (int e = 0; e < n; ++e) {
    Matrix<R> dgi = gi * m.dg[e] * gi;
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          R s(0);
          for (int d = 0; d < n; ++d) {
            R dt = m.ddg[e][a](d, b) + m.ddg[e][b](d, a) - m.ddg[e][d](a, b);
            s += gi(c, d) * dt - dgi(c, d) * t[idx3(d, a, b)];
          }
          dgamma[idx3(e, c, a) * n + b] = half * s;
        }
  }
  auto dG = [&](int e, int c, int a, int b) -> const R& { return dgamma[idx3(e, c, a) * n + b]; };

  out.riemann.assign(static_cast<std::size_t>(n) * n * n * n, R(0));
  for (int d = 0; d < n; ++d)
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          R s = dG(a, d, b, c) - dG(b, d, a, c);
          for (int e = 0; e < n; ++e)
            s += out.christoffel(d, a, e) * out.christoffel(e, b, c) - out.christoffel(d, b, e) * out.christoffel(e, a, c);
          out.riemann[idx3(d, c, a) * n + b] = s;
        }

  out.ricci = Matrix<R>(n, n, R(0));
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      R s(0);
      for (int a = 0; a < n; ++a) s += out.riem(a, c, a, b);
      out.ricci(c, b) = s;
    }
  R sc(0);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) sc += gi(b, c) * out.ricci(b, c);
  out.scalar = sc;
  return out;
}

}  // namespace flagcone::geometry

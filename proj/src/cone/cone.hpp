#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "common/matrix.hpp"
#include "common/residual.hpp"
#include "geometry/riemann.hpp"
#include "kahler/metric.hpp"
#include "sasaki/structure.hpp"

namespace flagcone::cone {

// Metric cone (R_+ x S, dr^2 + r^2 g) over a Sasaki sample. Coordinate 0 is
// r and coordinate 1 + a is the a-th link coordinate. The r-dependence is
// polynomial, so r-derivatives are written out by hand.
template <class C>
struct ConeSample {
  using R = typename ScalarTraits<C>::Real;
  int dim = 0;
  R r;
  geometry::MetricJet<R> metric;
  Matrix<R> j;
  std::vector<Matrix<R>> dj;  // dj[c](a, b) = d_c J^a_b
  Matrix<R> omega;            // omega(a, b) = g(J e_a, e_b)
  std::vector<Matrix<R>> domega;
};

template <class C>
ConeSample<C> build_cone(const sasaki::SasakiSample<C>& s, const sasaki::SasakiCurvature<C>& k, const typename ScalarTraits<C>::Real& r) {
  using R = typename ScalarTraits<C>::Real;
  if (!(r > R(0))) fail(ErrorCode::kDomain, "cone radius must be positive");
  const int n = s.dim;
  const int d = n + 1;
  const geometry::MetricJet<R>& link = k.metric;
  ConeSample<C> out;
  out.dim = d;
  out.r = r;
  out.metric = geometry::MetricJet<R>(d);
  geometry::MetricJet<R>& g = out.metric;
  const R r2 = r * r;
  g.g(0, 0) = R(1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      g.g(1 + a, 1 + b) = r2 * link.g(a, b);
      g.dg[0](1 + a, 1 + b) = R(2) * r * link.g(a, b);
      g.ddg[0][0](1 + a, 1 + b) = R(2) * link.g(a, b);
      for (int c = 0; c < n; ++c) {
        g.dg[1 + c](1 + a, 1 + b) = r2 * link.dg[c](a, b);
        R mixed = R(2) * r * link.dg[c](a, b);
        g.ddg[0][1 + c](1 + a, 1 + b) = mixed;
        g.ddg[1 + c][0](1 + a, 1 + b) = mixed;
        for (int e = 0; e < n; ++e) g.ddg[1 + c][1 + e](1 + a, 1 + b) = r2 * link.ddg[c][e](a, b);
      }
    }

  // d_c eta_bar_a from the contact form jets; theta is cyclic.
  std::vector<std::vector<R>> deta(n, std::vector<R>(n, R(0)));
  for (int c = 0; c < 2 * s.m; ++c)
    for (int a = 0; a < n; ++a) deta[c][a] = sasaki::jet_first(s.eta_bar_jets[a], c);

  // J d_r = xi / r, J X = phi X - r eta_bar(X) d_r.
  out.j = Matrix<R>(d, d, R(0));
  out.dj.assign(d, Matrix<R>(d, d, R(0)));
  for (int a = 0; a < n; ++a) {
    out.j(1 + a, 0) = s.xi[a] / r;
    out.dj[0](1 + a, 0) = -s.xi[a] / r2;
    out.j(0, 1 + a) = -r * s.eta_bar[a];
    out.dj[0](0, 1 + a) = -s.eta_bar[a];
    for (int b = 0; b < n; ++b) {
      out.j(1 + b, 1 + a) = s.phi(b, a);
      out.dj[1 + b](0, 1 + a) = -r * deta[b][a];
      for (int c = 0; c < n; ++c) out.dj[1 + c](1 + b, 1 + a) = s.dphi[c](b, a);
    }
  }

  Matrix<R> jt = out.j.transpose();
  out.omega = jt * g.g;
  out.domega.resize(d);
  for (int c = 0; c < d; ++c) out.domega[c] = out.dj[c].transpose() * g.g + jt * g.dg[c];
  return out;
}

template <class C>
Residual cone_j_square(const ConeSample<C>& cs) {
  using R = typename ScalarTraits<C>::Real;
  Residual res;
  res.exact = ScalarTraits<C>::kExact;
  Matrix<R> sq = cs.j * cs.j;
  for (int a = 0; a < cs.dim; ++a)
    for (int b = 0; b < cs.dim; ++b) res.absorb(R(sq(a, b) + (a == b ? R(1) : R(0))));
  return res;
}

template <class C>
Residual cone_hermitian(const ConeSample<C>& cs) {
  using R = typename ScalarTraits<C>::Real;
  Residual res;
  res.exact = ScalarTraits<C>::kExact;
  Matrix<R> h = cs.j.transpose() * cs.metric.g * cs.j;
  for (int a = 0; a < cs.dim; ++a)
    for (int b = 0; b < cs.dim; ++b) res.absorb(R(h(a, b) - cs.metric.g(a, b)));
  return res;
}

template <class C>
Residual cone_integrable(const ConeSample<C>& cs) {
  using R = typename ScalarTraits<C>::Real;
  Residual res;
  res.exact = ScalarTraits<C>::kExact;
  const int n = cs.dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        R v(0);
        for (int c = 0; c < n; ++c) {
          v += cs.j(c, a) * cs.dj[c](d, b) - cs.j(c, b) * cs.dj[c](d, a);
          v += cs.j(d, c) * (cs.dj[b](c, a) - cs.dj[a](c, b));
        }
        res.absorb(v);
      }
  return res;
}

// omega = r dr ^ eta_bar + r^2/2 d eta_bar, against g(J., .).
template <class C>
Residual cone_form_matches(const sasaki::SasakiSample<C>& s, const ConeSample<C>& cs) {
  using R = typename ScalarTraits<C>::Real;
  Residual res;
  res.exact = ScalarTraits<C>::kExact;
  const R half_r2 = cs.r * cs.r / R(2);
  for (int a = 0; a < s.dim; ++a) {
    res.absorb(R(cs.omega(0, 1 + a) - cs.r * s.eta_bar[a]));
    res.absorb(R(cs.omega(1 + a, 0) + cs.r * s.eta_bar[a]));
    for (int b = 0; b < s.dim; ++b) res.absorb(R(cs.omega(1 + a, 1 + b) - half_r2 * s.d_eta_bar(a, b)));
  }
  res.absorb(cs.omega(0, 0));
  return res;
}

template <class C>
Residual cone_closed(const ConeSample<C>& cs) {
  using R = typename ScalarTraits<C>::Real;
  Residual res;
  res.exact = ScalarTraits<C>::kExact;
  const int n = cs.dim;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) res.absorb(R(cs.domega[a](b, c) + cs.domega[b](c, a) + cs.domega[c](a, b)));
  return res;
}

// nabla J = 0 for the Levi-Civita connection of the cone metric.
template <class C>
Residual cone_parallel_j(const ConeSample<C>& cs, const geometry::Curvature<typename ScalarTraits<C>::Real>& k) {
  using R = typename ScalarTraits<C>::Real;
  Residual res;
  res.exact = ScalarTraits<C>::kExact;
  const int n = cs.dim;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        R v = cs.dj[c](a, b);
        for (int d = 0; d < n; ++d) v += k.christoffel(a, c, d) * cs.j(d, b) - k.christoffel(d, c, b) * cs.j(a, d);
        res.absorb(v);
      }
  return res;
}

template <class C>
Residual cone_ricci_flat(const geometry::Curvature<typename ScalarTraits<C>::Real>& k) {
  Residual res;
  res.exact = ScalarTraits<C>::kExact;
  for (int a = 0; a < k.ricci.rows(); ++a)
    for (int b = 0; b < k.ricci.cols(); ++b) res.absorb(k.ricci(a, b));
  return res;
}

// ---------------------------------------------------------------------------
// Flat model for the sphere links over CP^n with ell = 1:
// F(r, z, theta) = r e^{i theta} (1, z) / sqrt(1 + |z|^2) is an isometry onto
// C^{n+1} minus the origin, holomorphic for the cone complex structure.

struct FlatComparison {
  Residual metric;
  Residual complex_structure;
};

inline FlatComparison flat_model_check(const sasaki::SasakiSample<std::complex<double>>& s, const ConeSample<std::complex<double>>& cs) {
  using cd = std::complex<double>;
  const int m = s.m;
  const int d = cs.dim;
  const double r = cs.r;
  double norm2 = 1.0;
  for (const cd& w : s.z) norm2 += std::norm(w);
  const double sq = std::sqrt(norm2);
  // theta = 0 suffices: the cone is rotation invariant.
  std::vector<cd> f(m + 1);
  f[0] = r / sq;
  for (int j = 0; j < m; ++j) f[j + 1] = r * s.z[j] / sq;

  // jac[k][c] = d_c F_k.
  std::vector<std::vector<cd>> jac(m + 1, std::vector<cd>(d));
  for (int k = 0; k <= m; ++k) {
    jac[k][0] = f[k] / r;
    jac[k][d - 1] = cd(0, 1) * f[k];
    cd unit = k == 0 ? cd(1) : s.z[k - 1];
    for (int j = 0; j < m; ++j) {
      cd e = (k == j + 1) ? cd(1) : cd(0);
      jac[k][1 + 2 * j] = r * (e / sq - unit * s.z[j].real() / (sq * sq * sq));
      jac[k][2 + 2 * j] = r * (cd(0, 1) * e / sq - unit * s.z[j].imag() / (sq * sq * sq));
    }
  }

  FlatComparison out;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double pulled = 0;
      for (int k = 0; k <= m; ++k) pulled += (std::conj(jac[k][a]) * jac[k][b]).real();
      out.metric.absorb(pulled - cs.metric.g(a, b));
    }
  for (int k = 0; k <= m; ++k)
    for (int b = 0; b < d; ++b) {
      cd pushed = 0;
      for (int a = 0; a < d; ++a) pushed += jac[k][a] * cs.j(a, b);
      out.complex_structure.absorb(std::abs(pushed - cd(0, 1) * jac[k][b]));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Global potential: on the total space of the line bundle with fibre
// coordinate b, i dd-bar(|b|^2 K^{ell/I}) equals (1/c) times the cone form
// under r^2 = 2 |b|^2 K^{ell/I}, theta = arg b. Float only (fractional power).

struct PotentialComparison {
  double relative = 0;
  double round_trip = 0;
};

inline PotentialComparison global_potential_check(const kahler::PotentialSpec& spec, const sasaki::SasakiSample<std::complex<double>>& s,
                                                  const sasaki::SasakiCurvature<std::complex<double>>& k, std::complex<double> b) {
  using cd = std::complex<double>;
  using J = jets::Jet<cd>;
  const int m = s.m;
  const int M = m + 1;
  const double p = double(spec.ell()) / spec.fano_index();
  jets::SpacePtr space = kahler::holomorphic_space(M, 1, 1);
  J kj = kahler::potential_jet(spec, s.z, space, M);
  J bj = J::variable(space, m, b);
  J bb = J::variable(space, M + m, std::conj(b));
  J phi = bj * bb * jets::real_pow(kj, p);
  Matrix<cd> h = kahler::mixed_hessian(phi, M, M);

  const int na = 2 * M;
  Matrix<double> lambda(na, na, 0.0);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      lambda(2 * i, 2 * j + 1) = 2 * h(i, j).real();
      lambda(2 * j + 1, 2 * i) = -2 * h(i, j).real();
      lambda(2 * i, 2 * j) = -2 * h(i, j).imag();
      lambda(2 * i + 1, 2 * j + 1) = -2 * h(i, j).imag();
    }

  const double kval = kahler::potential_value(spec, s.z);
  const double b2 = std::norm(b);
  const double r = std::sqrt(2 * b2) * std::pow(kval, p / 2);
  ConeSample<cd> cs = build_cone(s, k, r);

  // df/dx_j, df/dy_j with f = log K, read off the contact form.
  std::vector<double> df(2 * m);
  for (int j = 0; j < m; ++j) {
    df[2 * j] = s.connection[2 * j + 1] / s.kappa;
    df[2 * j + 1] = -s.connection[2 * j] / s.kappa;
  }
  // jac(cone coordinate, ambient coordinate).
  const int d = cs.dim;
  Matrix<double> jac(d, na, 0.0);
  for (int a = 0; a < 2 * m; ++a) {
    jac(0, a) = r / 2 * p * df[a];
    jac(1 + a, a) = 1.0;
  }
  jac(0, 2 * m) = r * b.real() / b2;
  jac(0, 2 * m + 1) = r * b.imag() / b2;
  jac(d - 1, 2 * m) = -b.imag() / b2;
  jac(d - 1, 2 * m + 1) = b.real() / b2;

  Matrix<double> pulled = jac.transpose() * cs.omega * jac;
  double scale = 0, diff = 0;
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < na; ++c) {
      scale = std::max(scale, std::abs(lambda(a, c)));
      diff = std::max(diff, std::abs(lambda(a, c) - pulled(a, c) / s.c));
    }
  PotentialComparison out;
  out.relative = diff / scale;

  const double theta = std::arg(b);
  cd back = std::polar(r / (std::sqrt(2.0) * std::pow(kval, p / 2)), theta);
  out.round_trip = std::abs(back - b) / std::abs(b);
  return out;
}

}  // namespace flagcone::cone

#pragma once

#include <vector>

#include "common/matrix.hpp"
#include "common/residual.hpp"
#include "geometry/riemann.hpp"
#include "jets/jet.hpp"
#include "kahler/metric.hpp"
#include "kahler/potential.hpp"

namespace flagcone::sasaki {

// Contact metric structure on the chart U x S^1 of the circle bundle with
// covering integer ell, in real coordinates (x_1, y_1, ..., x_m, y_m, theta).
// Everything is theta-independent, so jets run over the 2m base variables.
//
//   eta     = A + dtheta,  A_x = -(ell/2I) f_y,  A_y = (ell/2I) f_x,  f = log K
//   eta_bar = c eta,       xi = (1/c) d/dtheta,  c = I / (ell (m+1))
//   g       = pi^* g~ + eta_bar (x) eta_bar,      g~ = pi/(m+1) g_X
//   phi     = horizontal lift of the base complex structure, phi(xi) = 0
template <class C>
struct SasakiSample {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  using J = jets::Jet<C>;

  int m = 0;
  int dim = 0;
  std::vector<C> z;
  R c;
  R kappa;  // ell / (2I)

  std::vector<J> eta_bar_jets;  // order d-1
  Matrix<J> g_jets;             // order d-2
  Matrix<J> phi_jets;           // order d-1
  Matrix<J> d_eta_bar_jets;     // order d-2

  std::vector<R> eta_bar;
  std::vector<R> xi;
  std::vector<R> connection;  // A
  Matrix<R> g;
  Matrix<R> phi;
  Matrix<R> d_eta_bar;
  std::vector<Matrix<R>> dphi;  // dphi[c](a, b) = d_c phi^a_b

  std::vector<int> coord_vars() const {
    std::vector<int> v(dim, -1);
    for (int a = 0; a < 2 * m; ++a) v[a] = a;
    return v;
  }
};

template <class C>
typename ScalarTraits<C>::Real jet_real(const jets::Jet<C>& f) {
  return ScalarTraits<C>::re(f.value());
}

template <class C>
typename ScalarTraits<C>::Real jet_first(const jets::Jet<C>& f, int var) {
  std::vector<int> e(f.space()->num_vars(), 0);
  e[var] = 1;
  return ScalarTraits<C>::re(f.partial(e));
}

template <class C>
SasakiSample<C> build_sasaki(const kahler::PotentialSpec& spec, const std::vector<C>& z, int order) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  using J = jets::Jet<C>;
  if (order < 4) fail(ErrorCode::kInvalidArgument, "jet order must be at least 4 for curvature checks");
  const int m = spec.dimension();
  const int n2 = 2 * m;
  const int dim = n2 + 1;
  const int ell = spec.ell();
  const int fano = spec.fano_index();

  SasakiSample<C> s;
  s.m = m;
  s.dim = dim;
  s.z = z;
  s.c = real_ratio<R>(fano, static_cast<long long>(ell) * (m + 1));
  s.kappa = real_ratio<R>(ell, 2LL * fano);
  const C c = T::make(s.c, R(0));
  const C kappa = T::make(s.kappa, R(0));
  const C quarter_rescale = T::from_ratio(1, 4LL * (m + 1));

  J f = kahler::real_log_potential_jet(spec, z, order);
  std::vector<J> fa;
  for (int a = 0; a < n2; ++a) fa.push_back(jets::derivative(f, a));
  std::vector<std::vector<J>> fab(n2);
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) fab[a].push_back(jets::derivative(fa[a], b));

  std::vector<J> a_jets(n2);
  for (int j = 0; j < m; ++j) {
    a_jets[2 * j] = -(fa[2 * j + 1] * kappa);
    a_jets[2 * j + 1] = fa[2 * j] * kappa;
  }

  s.eta_bar_jets.resize(dim);
  for (int a = 0; a < n2; ++a) s.eta_bar_jets[a] = a_jets[a] * c;
  s.eta_bar_jets[n2] = J::constant(a_jets[0].space(), c);

  // Rescaled base metric in real coordinates.
  Matrix<J> gt(n2, n2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int xi_ = 2 * i, yi = 2 * i + 1, xj = 2 * j, yj = 2 * j + 1;
      J sym = (fab[xi_][xj] + fab[yi][yj]) * quarter_rescale;
      J skew = (fab[xi_][yj] - fab[yi][xj]) * quarter_rescale;
      gt(xi_, xj) = sym;
      gt(yi, yj) = sym;
      gt(xi_, yj) = skew;
      gt(yj, xi_) = skew;
    }

  s.g_jets = Matrix<J>(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      if (a < n2 && b < n2)
        s.g_jets(a, b) = gt(a, b) + s.eta_bar_jets[a] * s.eta_bar_jets[b];
      else
        s.g_jets(a, b) = s.eta_bar_jets[a] * s.eta_bar_jets[b];
    }

  // phi = [[J, 0], [-A^T J, 0]] with J(d/dx) = d/dy.
  s.phi_jets = Matrix<J>(dim, dim);
  J zero(a_jets[0].space());
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) s.phi_jets(a, b) = zero;
  J one = J::constant(a_jets[0].space(), T::from_int(1));
  for (int j = 0; j < m; ++j) {
    s.phi_jets(2 * j + 1, 2 * j) = one;
    s.phi_jets(2 * j, 2 * j + 1) = -one;
    s.phi_jets(n2, 2 * j) = -a_jets[2 * j + 1];
    s.phi_jets(n2, 2 * j + 1) = a_jets[2 * j];
  }

  // d eta_bar (X, Y) = X eta_bar(Y) - Y eta_bar(X) on coordinate fields.
  s.d_eta_bar_jets = Matrix<J>(dim, dim);
  J flat(fab[0][0].space());
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) s.d_eta_bar_jets(a, b) = flat;
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b)
      s.d_eta_bar_jets(a, b) = jets::derivative(s.eta_bar_jets[b], a) - jets::derivative(s.eta_bar_jets[a], b);

  s.eta_bar.resize(dim);
  for (int a = 0; a < dim; ++a) s.eta_bar[a] = jet_real(s.eta_bar_jets[a]);
  s.connection.resize(n2);
  for (int a = 0; a < n2; ++a) s.connection[a] = jet_real(a_jets[a]);
  s.xi.assign(dim, R(0));
  s.xi[n2] = R(1) / s.c;
  s.g = Matrix<R>(dim, dim, R(0));
  s.phi = Matrix<R>(dim, dim, R(0));
  s.d_eta_bar = Matrix<R>(dim, dim, R(0));
  s.dphi.assign(dim, Matrix<R>(dim, dim, R(0)));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      s.g(a, b) = jet_real(s.g_jets(a, b));
      s.phi(a, b) = jet_real(s.phi_jets(a, b));
      s.d_eta_bar(a, b) = jet_real(s.d_eta_bar_jets(a, b));
      for (int v = 0; v < n2; ++v) s.dphi[v](a, b) = jet_first(s.phi_jets(a, b), v);
    }
  return s;
}

// ---------------------------------------------------------------------------
// Checks. Each returns the max-norm of a quantity that vanishes identically.

template <class C>
Residual reeb_normalisation(const SasakiSample<C>& s) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  R pairing(0);
  for (int a = 0; a < s.dim; ++a) pairing += s.eta_bar[a] * s.xi[a];
  r.absorb(R(pairing - R(1)));
  return r;
}

template <class C>
Residual reeb_interior_d_eta(const SasakiSample<C>& s) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  for (int b = 0; b < s.dim; ++b) {
    R v(0);
    for (int a = 0; a < s.dim; ++a) v += s.xi[a] * s.d_eta_bar(a, b);
    r.absorb(v);
  }
  return r;
}

// Coefficient of eta_bar ^ (d eta_bar)^m against dx_1 ^ dy_1 ^ ... ^ dtheta:
// m! times the Pfaffian of the bordered matrix [[0, eta_bar], [-eta_bar^T, d eta_bar]].
template <class C>
typename ScalarTraits<C>::Real contact_volume(const SasakiSample<C>& s) {
  using R = typename ScalarTraits<C>::Real;
  const int n = s.dim + 1;
  Matrix<R> b(n, n, R(0));
  for (int a = 0; a < s.dim; ++a) {
    b(0, a + 1) = s.eta_bar[a];
    b(a + 1, 0) = -s.eta_bar[a];
    for (int c = 0; c < s.dim; ++c) b(a + 1, c + 1) = s.d_eta_bar(a, c);
  }
  R pf = pfaffian(b);
  R fact(1);
  for (int k = 2; k <= s.m; ++k) fact *= R(k);
  R out = pf * fact;
  return out;
}

// phi^2 = -id + eta_bar (x) xi, phi(xi) = 0, eta_bar o phi = 0.
template <class C>
Residual phi_square(const SasakiSample<C>& s) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  Matrix<R> p2 = s.phi * s.phi;
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) {
      R expected = s.xi[a] * s.eta_bar[b] - (a == b ? R(1) : R(0));
      r.absorb(R(p2(a, b) - expected));
    }
  for (int a = 0; a < s.dim; ++a) {
    R v(0), w(0);
    for (int b = 0; b < s.dim; ++b) {
      v += s.phi(a, b) * s.xi[b];
      w += s.eta_bar[b] * s.phi(b, a);
    }
    r.absorb(v);
    r.absorb(w);
  }
  return r;
}

// g(phi X, phi Y) = g(X, Y) - eta_bar(X) eta_bar(Y).
template <class C>
Residual metric_compatibility(const SasakiSample<C>& s) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  Matrix<R> lhs = s.phi.transpose() * s.g * s.phi;
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) r.absorb(R(lhs(a, b) - (s.g(a, b) - s.eta_bar[a] * s.eta_bar[b])));
  return r;
}

// d eta_bar (X, Y) = 2 g(phi X, Y).
template <class C>
Residual contact_metric_axiom(const SasakiSample<C>& s) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  Matrix<R> pg = s.phi.transpose() * s.g;
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) r.absorb(R(s.d_eta_bar(a, b) - R(2) * pg(a, b)));
  return r;
}

// [phi, phi](X, Y) + d eta_bar(X, Y) xi on coordinate fields.
template <class C>
Residual nijenhuis(const SasakiSample<C>& s) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  const int n = s.dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        R v = s.d_eta_bar(a, b) * s.xi[d];
        for (int c = 0; c < n; ++c) {
          v += s.phi(c, a) * s.dphi[c](d, b) - s.phi(c, b) * s.dphi[c](d, a);
          v += s.phi(d, c) * (s.dphi[b](c, a) - s.dphi[a](c, b));
        }
        r.absorb(v);
      }
  return r;
}

// dn = (2 pi ell / I) pi^* omega_X, with omega_X taken from the holomorphic
// Hessian route: omega_X(dx_i, dy_j) = 2 Re g_ij, omega_X(dx_i, dx_j) = -2 Im g_ij.
template <class C>
Residual d_eta_matches_base(const kahler::PotentialSpec& spec, const SasakiSample<C>& s) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  Residual r;
  r.exact = T::kExact;
  Matrix<C> h = kahler::metric_at(spec, s.z).hessian;
  const R scale = real_ratio<R>(spec.ell(), spec.fano_index());
  const int m = s.m;
  Matrix<R> expected(s.dim, s.dim, R(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      R re = T::re(h(i, j)) * R(2) * scale;
      R im = T::im(h(i, j)) * R(2) * scale;
      expected(2 * i, 2 * j + 1) = re;
      expected(2 * j + 1, 2 * i) = -re;
      expected(2 * i, 2 * j) = -im;
      expected(2 * i + 1, 2 * j + 1) = -im;
    }
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) r.absorb(R(s.d_eta_bar(a, b) / s.c - expected(a, b)));
  return r;
}

// eta = A + dtheta against A = (ell/I)(Im d f, Re d f) from the holomorphic
// gradient d f = d log K / dz.
template <class C>
Residual contact_form_matches(const kahler::PotentialSpec& spec, const SasakiSample<C>& s) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  Residual r;
  r.exact = T::kExact;
  const int m = s.m;
  jets::Jet<C> f = kahler::log_potential_jet(spec, s.z, 1, 0);
  const R scale = real_ratio<R>(spec.ell(), spec.fano_index());
  for (int i = 0; i < m; ++i) {
    std::vector<int> e(2 * m, 0);
    e[i] = 1;
    C grad = f.coefficient(e);
    r.absorb(R(s.connection[2 * i] - scale * T::im(grad)));
    r.absorb(R(s.connection[2 * i + 1] - scale * T::re(grad)));
  }
  r.absorb(R(s.eta_bar[s.dim - 1] / s.c - R(1)));
  return r;
}

template <class C>
struct SasakiCurvature {
  using R = typename ScalarTraits<C>::Real;
  geometry::MetricJet<R> metric;
  geometry::Curvature<R> curvature;
};

template <class C>
SasakiCurvature<C> sasaki_curvature(const SasakiSample<C>& s) {
  SasakiCurvature<C> out;
  out.metric = geometry::extract_metric(s.g_jets, s.coord_vars());
  out.curvature = geometry::curvature(out.metric);
  return out;
}

// Ric = 2m g.
template <class C>
Residual einstein(const SasakiSample<C>& s, const SasakiCurvature<C>& k) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  const R factor(2 * s.m);
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) r.absorb(R(k.curvature.ricci(a, b) - factor * s.g(a, b)));
  return r;
}

// R(X, Y) xi = eta_bar(Y) X - eta_bar(X) Y.
template <class C>
Residual curvature_on_reeb(const SasakiSample<C>& s, const SasakiCurvature<C>& k) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  const int n = s.dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        R v(0);
        for (int c = 0; c < n; ++c) v += k.curvature.riem(d, c, a, b) * s.xi[c];
        R expected = (d == a ? s.eta_bar[b] : R(0)) - (d == b ? s.eta_bar[a] : R(0));
        r.absorb(R(v - expected));
      }
  return r;
}

// Symmetrised covariant derivative of xi_flat; xi has constant components.
template <class C>
Residual killing(const SasakiSample<C>& s, const SasakiCurvature<C>& k) {
  using R = typename ScalarTraits<C>::Real;
  Residual r;
  r.exact = ScalarTraits<C>::kExact;
  const int n = s.dim;
  Matrix<R> nabla(n, n, R(0));  // nabla(a, b) = (nabla_a xi)_b lowered
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      R v(0);
      for (int d = 0; d < n; ++d)
        for (int c = 0; c < n; ++c) v += s.g(b, d) * k.curvature.christoffel(d, a, c) * s.xi[c];
      nabla(a, b) = v;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.absorb(R(nabla(a, b) + nabla(b, a)));
  // L_xi g = xi(g_ab) is the theta-derivative, structurally zero here.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.absorb(k.metric.dg[n - 1](a, b));
  return r;
}

}  // namespace flagcone::sasaki

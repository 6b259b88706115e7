#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "common/matrix.hpp"
#include "common/residual.hpp"
#include "jets/jet.hpp"
#include "kahler/potential.hpp"

namespace flagcone::kahler {

// Hermitian coefficient matrix of a (1,1)-form sqrt(-1) h_ij dz_i ^ dzbar_j.
// `hessian` is d_i dbar_j log K exactly; the Kahler-Einstein metric is
// hessian * scale with scale = 1/(2 pi).
template <class C>
struct HermitianMetricSample {
  std::vector<C> z;
  Matrix<C> hessian;
  double scale = 1.0 / (2.0 * std::numbers::pi);
  std::string backend = ScalarTraits<C>::kName;

  Matrix<std::complex<double>> metric() const {
    const int m = hessian.rows();
    Matrix<std::complex<double>> g(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        g(i, j) = std::complex<double>(to_double(ScalarTraits<C>::re(hessian(i, j))), to_double(ScalarTraits<C>::im(hessian(i, j)))) * scale;
    return g;
  }
};

// Coefficient matrix of u_i w_j in a (u, w) jet; for a bidegree-(1,1) part
// this is the complex Hessian d_i dbar_j.
template <class C>
Matrix<C> mixed_hessian(const jets::Jet<C>& f, int num_holomorphic, int count) {
  Matrix<C> h(count, count);
  const int nv = f.space()->num_vars();
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      std::vector<int> e(nv, 0);
      e[i] += 1;
      e[num_holomorphic + j] += 1;
      h(i, j) = f.coefficient(e);
    }
  return h;
}

// LDL* test; pivots must be positive reals (within rounding for floats).
template <class C>
bool hermitian_positive_definite(Matrix<C> a) {
  using T = ScalarTraits<C>;
  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    const C& p = a(k, k);
    if constexpr (T::kExact) {
      if (!T::is_positive_real(p)) return false;
    } else {
      if (!(p.real() > 0.0)) return false;
    }
    for (int i = k + 1; i < n; ++i) {
      C f = a(i, k) / p;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

template <class C>
bool is_hermitian(const Matrix<C>& a, double tol) {
  using T = ScalarTraits<C>;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      C d = a(i, j) - T::conj(a(j, i));
      if constexpr (T::kExact) {
        if (!T::is_zero(d)) return false;
      } else {
        if (T::magnitude(d) > tol * (1.0 + T::magnitude(a(i, j)))) return false;
      }
    }
  return true;
}

template <class C>
HermitianMetricSample<C> metric_at(const PotentialSpec& spec, const std::vector<C>& z) {
  const int m = spec.dimension();
  jets::Jet<C> f = log_potential_jet(spec, z, 1, 1);
  HermitianMetricSample<C> out;
  out.z = z;
  out.hessian = mixed_hessian(f, m, m);
  if (!hermitian_positive_definite(out.hessian))
    fail(ErrorCode::kInternalConsistency, "Kahler metric is not positive definite at a chart point");
  return out;
}

// Jets of H_ij = d_i dbar_j f with one order of slack in each group removed.
template <class C>
Matrix<jets::Jet<C>> hessian_jets(const jets::Jet<C>& f, int num_holomorphic, int count) {
  Matrix<jets::Jet<C>> h(count, count);
  std::vector<jets::Jet<C>> di;
  for (int i = 0; i < count; ++i) di.push_back(jets::derivative(f, i));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) h(i, j) = jets::derivative(di[i], num_holomorphic + j);
  return h;
}

// log det of a matrix of jets by Gaussian elimination without pivoting
// (adequate for Hermitian positive definite inputs).
template <class C>
jets::Jet<C> log_det(Matrix<jets::Jet<C>> a) {
  const int n = a.rows();
  jets::Jet<C> acc(a(0, 0).space());
  for (int k = 0; k < n; ++k) {
    jets::Jet<C> inv = jets::reciprocal(a(k, k));
    acc += jets::log(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      jets::Jet<C> f = a(i, k) * inv;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return acc;
}

// Kahler Ricci form coefficients -d_i dbar_j log det(metric).
template <class C>
Matrix<C> kahler_ricci(const Matrix<jets::Jet<C>>& metric, int num_holomorphic) {
  const int n = metric.rows();
  jets::Jet<C> ld = log_det(metric);
  Matrix<C> ric = mixed_hessian(ld, num_holomorphic, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ric(i, j) = -ric(i, j);
  return ric;
}

// Ricci from the unnormalised Hessian of log K; 2 pi g = hessian.
template <class C>
Matrix<C> ricci_at(const PotentialSpec& spec, const std::vector<C>& z) {
  const int m = spec.dimension();
  jets::Jet<C> f = log_potential_jet(spec, z, 2, 2);
  return kahler_ricci(hessian_jets(f, m, m), m);
}

template <class C>
Residual max_residual(const Matrix<C>& a, const Matrix<C>& b) {
  using T = ScalarTraits<C>;
  Residual r;
  r.exact = T::kExact;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      C d = a(i, j) - b(i, j);
      r.absorb_complex(T::magnitude(d), T::is_zero(d));
    }
  return r;
}

// max |Ric - 2 pi g| = max |Ric - hessian|.
template <class C>
Residual einstein_residual(const PotentialSpec& spec, const std::vector<C>& z) {
  const int m = spec.dimension();
  jets::Jet<C> f = log_potential_jet(spec, z, 2, 2);
  Matrix<jets::Jet<C>> hj = hessian_jets(f, m, m);
  Matrix<C> h(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) h(i, j) = hj(i, j).value();
  return max_residual(kahler_ricci(hj, m), h);
}

// Rescaled metric pi/(n+1) g = hessian / (2(n+1)), n the complex dimension.
template <class C>
Matrix<C> rescaled_metric(const PotentialSpec& spec, const Matrix<C>& hessian) {
  const int m = spec.dimension();
  return scaled(hessian, ScalarTraits<C>::from_ratio(1, 2 * (m + 1)));
}

// Real scalar curvature 2 tr(g~^-1 Ric) of the rescaled metric.
template <class C>
typename ScalarTraits<C>::Real scalar_curvature(const PotentialSpec& spec, const Matrix<C>& hessian, const Matrix<C>& ricci) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  Matrix<C> gt = rescaled_metric(spec, hessian);
  Matrix<C> prod = inverse(gt) * ricci;
  C tr = T::from_int(0);
  for (int i = 0; i < prod.rows(); ++i) tr += prod(i, i);
  R two(2);
  R out = T::re(tr) * two;
  return out;
}

}  // namespace flagcone::kahler

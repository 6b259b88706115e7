#pragma once

// Scalar backends. Every geometric routine is written once against
// ScalarTraits<C> and instantiated for complex doubles ("float") and for
// Gaussian rationals ("exact").

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>

#include "common/error.hpp"

namespace flagcone {

struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    mpq_class d = o.re * o.re + o.im * o.im;
    if (sgn(d) == 0) fail(ErrorCode::kDomain, "division by zero Gaussian rational");
    mpq_class r = (re * o.re + im * o.im) / d;
    mpq_class i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <class C>
struct ScalarTraits;

template <>
struct ScalarTraits<std::complex<double>> {
  using Complex = std::complex<double>;
  using Real = double;
  static constexpr bool kExact = false;
  static constexpr const char* kName = "float";

  static Complex from_int(long long v) { return {static_cast<double>(v), 0.0}; }
  static Complex from_ratio(long long p, long long q) { return {static_cast<double>(p) / static_cast<double>(q), 0.0}; }
  static Complex make(const Real& re, const Real& im) { return {re, im}; }
  static Complex i() { return {0.0, 1.0}; }
  static Real re(const Complex& c) { return c.real(); }
  static Real im(const Complex& c) { return c.imag(); }
  static Complex conj(const Complex& c) { return std::conj(c); }
  static bool is_zero(const Complex& c) { return c == Complex{}; }
  static double magnitude(const Complex& c) { return std::abs(c); }
  static bool is_positive_real(const Complex& c) {
    return c.real() > 0.0 && std::abs(c.imag()) <= 1e-12 * std::abs(c.real());
  }
  static Complex log(const Complex& c) { return {std::log(c.real()), 0.0}; }
};

template <>
struct ScalarTraits<GaussianRational> {
  using Complex = GaussianRational;
  using Real = mpq_class;
  static constexpr bool kExact = true;
  static constexpr const char* kName = "exact";

  static Complex from_int(long long v) { return Complex(mpq_class(static_cast<long>(v))); }
  static Complex from_ratio(long long p, long long q) {
    mpq_class r(static_cast<long>(p), static_cast<long>(q));
    r.canonicalize();
    return Complex(r);
  }
  static Complex make(const Real& re, const Real& im) { return {re, im}; }
  static Complex i() { return {mpq_class(0), mpq_class(1)}; }
  static Real re(const Complex& c) { return c.re; }
  static Real im(const Complex& c) { return c.im; }
  static Complex conj(const Complex& c) { return {c.re, -c.im}; }
  static bool is_zero(const Complex& c) { return sgn(c.re) == 0 && sgn(c.im) == 0; }
  static double magnitude(const Complex& c) {
    return std::hypot(c.re.get_d(), c.im.get_d());
  }
  static bool is_positive_real(const Complex& c) { return sgn(c.re) > 0 && sgn(c.im) == 0; }
  // Logarithms of rationals are not rational; the constant term is dropped.
  static Complex log(const Complex&) { return Complex(); }
};

// Real-number helpers shared by the double and mpq instantiations.
inline double to_double(double x) { return x; }
inline double to_double(const mpq_class& x) { return x.get_d(); }
inline double abs_value(double x) { return std::abs(x); }
inline double abs_value(const mpq_class& x) { return std::abs(x.get_d()); }
inline bool is_exact_zero(double x) { return x == 0.0; }
inline bool is_exact_zero(const mpq_class& x) { return sgn(x) == 0; }

template <class R>
R real_ratio(long long p, long long q) {
  if constexpr (std::is_same_v<R, double>) {
    return static_cast<double>(p) / static_cast<double>(q);
  } else {
    mpq_class r(static_cast<long>(p), static_cast<long>(q));
    r.canonicalize();
    return r;
  }
}

inline std::string rational_string(const mpq_class& x) {
  mpq_class c(x);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace flagcone

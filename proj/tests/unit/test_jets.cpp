#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "jets/finite_difference.hpp"
#include "jets/jet.hpp"
#include "kahler/potential.hpp"
#include "rep/polynomial.hpp"

using namespace flagcone;
using namespace flagcone::jets;
using GR = GaussianRational;
using GT = ScalarTraits<GaussianRational>;
using cd = std::complex<double>;

namespace {

mpq_class q(long p, long d) {
  mpq_class r(p, d);
  r.canonicalize();
  return r;
}

rep::Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int degree) {
  std::uniform_int_distribution<int> coef(-3, 3), var(0, nvars - 1), deg(0, degree);
  rep::Polynomial p(nvars);
  for (int t = 0; t < 4; ++t) {
    rep::Polynomial term = rep::Polynomial::constant(nvars, coef(rng));
    int d = deg(rng);
    for (int k = 0; k < d; ++k) term = term * rep::Polynomial::variable(nvars, var(rng));
    p += term;
  }
  return p;
}

// log(1 + z w) in the (z, w) space at z = z0.
template <class C>
Jet<C> log_one_plus_norm(const C& z0, int order) {
  SpacePtr sp = kahler::holomorphic_space(1, order, order);
  using T = ScalarTraits<C>;
  Jet<C> z = Jet<C>::variable(sp, 0, z0);
  Jet<C> w = Jet<C>::variable(sp, 1, T::conj(z0));
  return log(z * w + T::from_int(1));
}

}  // namespace

TEST_CASE("jet spaces") {
  SpacePtr a = JetSpace::make(3, 4);
  CHECK(a->size() == 35);
  CHECK(JetSpace::make(3, 4) == a);
  SpacePtr h = kahler::holomorphic_space(2, 2, 2);
  CHECK(h->size() == 36);
  SpacePtr d = h->derived(0);
  CHECK(d->caps() == std::vector<int>{1, 2});
  CHECK(d->order() == 3);
  CHECK_THROWS_AS(JetSpace::make(17, 2), Error);
  CHECK_THROWS_AS(JetSpace::make(2, 0)->derived(0), Error);
}

TEST_CASE("jet lifts of polynomials") {
  SpacePtr sp = JetSpace::make(1, 4);
  Jet<GR> one = Jet<GR>::constant(sp, GR(1));
  CHECK(one.value() == GR(1));
  for (std::size_t k = 1; k < sp->size(); ++k) CHECK(GT::is_zero(one[k]));
  Jet<GR> z = Jet<GR>::variable(sp, 0, GR(0));
  CHECK(GT::is_zero(z.value()));
  CHECK(z.coefficient({1}) == GR(1));
  CHECK(GT::is_zero(z.coefficient({2})));

  rep::Polynomial det = rep::Polynomial::variable(4, 0) * rep::Polynomial::variable(4, 3) -
                        rep::Polynomial::variable(4, 1) * rep::Polynomial::variable(4, 2);
  SpacePtr s4 = JetSpace::make(4, 4);
  Jet<GR> j = kahler::lift(det, std::vector<GR>{GR(1), GR(0), GR(0), GR(1)}, s4, 0);
  CHECK(j.value() == GR(1));
  CHECK(j.partial({1, 0, 0, 0}) == GR(1));
  CHECK(GT::is_zero(j.partial({0, 1, 0, 0})));
  CHECK(GT::is_zero(j.partial({0, 0, 1, 0})));
  CHECK(j.partial({0, 0, 0, 1}) == GR(1));
  CHECK(j.partial({1, 0, 0, 1}) == GR(1));
  CHECK(j.partial({0, 1, 1, 0}) == GR(-1));
}

TEST_CASE("log, reciprocal and real powers") {
  SpacePtr sp = JetSpace::make(2, 4);
  CHECK(log(Jet<GR>::constant(sp, GR(1))).is_zero());
  CHECK(log(Jet<cd>::constant(sp, cd(1.0))).is_zero());

  Jet<GR> f = log_one_plus_norm<GR>(GR(0), 2);
  CHECK(f.coefficient({1, 1}) == GR(1));
  CHECK(f.partial({1, 1}) == GR(1));
  CHECK(f.partial({2, 2}) == GR(-2));
  CHECK_THROWS_AS(f.partial({3, 0}), Error);

  Jet<cd> c = Jet<cd>::constant(sp, cd(5.0));
  CHECK(real_pow(c, 1.0 / 3.0).value().real() == doctest::Approx(std::cbrt(5.0)).epsilon(1e-15));
  CHECK_THROWS_AS(log(Jet<cd>::constant(sp, cd(-1.0))), Error);
  CHECK_THROWS_AS(real_pow(Jet<cd>::constant(sp, cd(0.0)), 0.5), Error);
  CHECK_THROWS_AS(log(Jet<GR>::constant(sp, GR(0))), Error);
  CHECK_THROWS_AS(reciprocal(Jet<GR>::constant(sp, GR())), Error);

  Jet<cd> x = Jet<cd>::variable(sp, 0, cd(2.0)) + Jet<cd>::variable(sp, 1, cd(0.5)) * Jet<cd>::variable(sp, 0, cd(2.0));
  Jet<cd> p = real_pow(x, 0.5);
  Jet<cd> sq = p * p;
  for (std::size_t k = 0; k < sp->size(); ++k) CHECK(std::abs(sq[k] - x[k]) < 1e-14);
  Jet<cd> r = reciprocal(x) * x;
  CHECK(std::abs(r.value() - 1.0) < 1e-15);
  for (std::size_t k = 1; k < sp->size(); ++k) CHECK(std::abs(r[k]) < 1e-14);
}

TEST_CASE("fourth derivative of log(1+|z|^2) against a Richardson-extrapolated stencil") {
  // d_z^2 d_zbar^2 = Laplacian^2 / 16 in real coordinates.
  auto f = [](double x, double y) { return std::log(1.0 + x * x + y * y); };
  auto bilaplacian = [&](double h) {
    double s = 20 * f(0, 0) - 8 * (f(h, 0) + f(-h, 0) + f(0, h) + f(0, -h)) +
               2 * (f(h, h) + f(h, -h) + f(-h, h) + f(-h, -h)) + f(2 * h, 0) + f(-2 * h, 0) + f(0, 2 * h) + f(0, -2 * h);
    return s / (h * h * h * h);
  };
  const double h = 0.04;
  double estimate = (4 * bilaplacian(h / 2) - bilaplacian(h)) / 3 / 16;
  Jet<cd> j = log_one_plus_norm<cd>(cd(0.0), 2);
  CHECK(std::abs(j.partial({2, 2}) - estimate) < 1e-4);
}

TEST_CASE("finite-difference oracle") {
  const double z0 = 0.3;
  RealField f = [](const std::vector<double>& x) { return std::log(1.0 + x[0] * x[0] + x[1] * x[1]); };
  Jet<cd> j = log_one_plus_norm<cd>(cd(z0), 1);
  // d_z d_zbar = (d_xx + d_yy) / 4.
  double fd = (central_difference(f, {z0, 0.0}, {2, 0}, 1e-4) + central_difference(f, {z0, 0.0}, {0, 2}, 1e-4)) / 4;
  CHECK(std::abs(j.partial({1, 1}).real() - fd) / (1 + std::abs(fd)) < 1e-6);

  RealField quad = [](const std::vector<double>& x) { return 3 * x[0] * x[0] - x[0] * x[1] + 2 * x[1]; };
  CHECK(finite_difference_check(quad, {0.5, -0.25}, {1, 1}, 1e-3, -1.0) < 1e-7);
  CHECK(finite_difference_check(quad, {0.5, -0.25}, {2, 0}, 1e-3, 6.0) < 1e-7);
  RealField constant = [](const std::vector<double>&) { return 4.0; };
  CHECK(central_difference(constant, {1.0, 2.0}, {1, 1}, 1e-4) == 0.0);
  CHECK(finite_difference_check(constant, {1.0, 2.0}, {0, 1}, 1e-4, 0.0) == 0.0);
  CHECK_THROWS_AS(central_difference(constant, {1.0, 2.0}, {2, 1}, 1e-4), Error);
}

TEST_CASE("Leibniz exactness and the log derivative identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int nvars = 3;
    rep::Polynomial p = random_polynomial(rng, nvars, 2);
    rep::Polynomial r = random_polynomial(rng, nvars, 2);
    std::vector<GR> base = {GR(q(1, 2)), GR(q(-1, 3)), GR(q(2, 1), q(1, 5))};
    SpacePtr sp = JetSpace::make(nvars, 4);
    Jet<GR> jp = kahler::lift(p, base, sp, 0);
    Jet<GR> jr = kahler::lift(r, base, sp, 0);
    Jet<GR> jpr = kahler::lift(p * r, base, sp, 0);
    Jet<GR> prod = jp * jr;
    for (std::size_t k = 0; k < sp->size(); ++k) CHECK(prod[k] == jpr[k]);
  }
  // d(log f) = df / f for f = 1 + x^2 + x y^2 at (1/2, 1/3).
  SpacePtr sp = JetSpace::make(2, 4);
  Jet<GR> x = Jet<GR>::variable(sp, 0, GR(q(1, 2)));
  Jet<GR> y = Jet<GR>::variable(sp, 1, GR(q(1, 3)));
  Jet<GR> f = x * x + x * y * y + GR(1);
  for (int v = 0; v < 2; ++v) {
    Jet<GR> lhs = derivative(log(f), v);
    Jet<GR> rhs = derivative(f, v) * reciprocal(f);
    for (std::size_t k = 0; k < lhs.space()->size(); ++k) CHECK(lhs[k] == rhs.restricted(lhs.space())[k]);
  }
}

TEST_CASE("derivatives, restriction and remapping") {
  SpacePtr sp = JetSpace::make(2, 3);
  Jet<GR> x = Jet<GR>::variable(sp, 0, GR(2));
  Jet<GR> y = Jet<GR>::variable(sp, 1, GR(-1));
  Jet<GR> f = x * x * y;
  Jet<GR> fx = derivative(f, 0);
  CHECK(fx.value() == GR(-4));
  CHECK(fx.partial({1, 0}) == GR(-2));
  CHECK(fx.partial({0, 1}) == GR(4));
  SpacePtr big = JetSpace::make(3, 3);
  Jet<GR> g = f.remapped(big, {2, 0});
  CHECK(g.partial({0, 0, 1}) == f.partial({1, 0}));
  CHECK(g.partial({1, 0, 2}) == f.partial({2, 1}));
  Jet<GR> low = f.restricted(JetSpace::make(2, 1));
  CHECK(low.partial({0, 1}) == GR(4));
  CHECK_THROWS_AS(low.restricted(sp), Error);
}

#include <doctest.h>

#include <complex>
#include <random>

#include "sasaki/structure.hpp"

using namespace flagcone;
using namespace flagcone::sasaki;
using GR = GaussianRational;
using cd = std::complex<double>;

namespace {

mpq_class q(long p, long d) {
  mpq_class r(p, d);
  r.canonicalize();
  return r;
}

struct Case {
  int rank;
  std::vector<int> theta;
  int ell;
};

template <class C>
void check_all_axioms(const kahler::PotentialSpec& spec, const std::vector<C>& z, double tol) {
  SasakiSample<C> s = build_sasaki(spec, z, 4);
  auto ok = [&](const Residual& r) {
    if (ScalarTraits<C>::kExact) return r.exact_zero;
    return r.value < tol;
  };
  CHECK(ok(reeb_normalisation(s)));
  CHECK(ok(reeb_interior_d_eta(s)));
  CHECK(ok(phi_square(s)));
  CHECK(ok(metric_compatibility(s)));
  CHECK(ok(contact_metric_axiom(s)));
  CHECK(ok(nijenhuis(s)));
  CHECK(ok(d_eta_matches_base(spec, s)));
  CHECK(ok(contact_form_matches(spec, s)));
  auto k = sasaki_curvature(s);
  CHECK(ok(einstein(s, k)));
  CHECK(ok(curvature_on_reeb(s, k)));
  CHECK(ok(killing(s, k)));
  const int n = 2 * s.m + 1;
  CHECK(to_double(k.curvature.scalar) == doctest::Approx(double(2 * s.m) * n).epsilon(tol + 1e-12));
  CHECK(to_double(contact_volume(s)) > 0);
}

}  // namespace

TEST_CASE("Hopf fibration at the origin") {
  kahler::PotentialSpec hopf(1, {}, 1);
  auto s = build_sasaki(hopf, std::vector<GR>{GR()}, 4);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(s.g(a, b) == (a == b ? 1 : 0));
  CHECK(s.c == 1);
  CHECK(s.eta_bar[0] == 0);
  CHECK(s.eta_bar[1] == 0);
  CHECK(s.eta_bar[2] == 1);
  CHECK(contact_volume(s) == 2);
  CHECK_THROWS_AS(build_sasaki(hopf, std::vector<GR>{GR()}, 3), Error);
}

TEST_CASE("Hopf contact form in closed form") {
  kahler::PotentialSpec hopf(1, {}, 1);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 5; ++t) {
    mpq_class x = q(d(rng), 2), y = q(d(rng), 3);
    auto s = build_sasaki(hopf, std::vector<GR>{GR(x, y)}, 4);
    mpq_class denom = 1 + x * x + y * y;
    CHECK(s.connection[0] == -y / denom);
    CHECK(s.connection[1] == x / denom);
  }
}

TEST_CASE("Sasaki-Einstein axioms hold exactly on lattice points") {
  const std::vector<Case> cases = {{1, {}, 1}, {1, {}, 2}, {2, {2}, 3}, {2, {2}, 1}};
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const Case& c : cases) {
    kahler::PotentialSpec spec(c.rank, c.theta, c.ell);
    std::vector<GR> z;
    for (int v = 0; v < spec.dimension(); ++v) z.push_back(GR(q(d(rng), 2), q(d(rng), 2)));
    check_all_axioms(spec, z, 0.0);
  }
}

TEST_CASE("Sasaki-Einstein axioms in floating point") {
  const std::vector<Case> cases = {{3, {1, 3}, 1}, {3, {1, 3}, 4}, {2, {}, 2}};
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> d(-1.2, 1.2);
  for (const Case& c : cases) {
    kahler::PotentialSpec spec(c.rank, c.theta, c.ell);
    std::vector<cd> z;
    for (int v = 0; v < spec.dimension(); ++v) z.emplace_back(d(rng), d(rng));
    check_all_axioms(spec, z, 1e-8);
  }
}

TEST_CASE("Pfaffian against the permutation expansion") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int n : {2, 4, 6}) {
    for (int t = 0; t < 6; ++t) {
      Matrix<mpq_class> a(n, n, mpq_class(0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          a(i, j) = d(rng);
          a(j, i) = -a(i, j);
        }
      if (t == 0) a(0, 1) = a(1, 0) = 0;
      // Sum over perfect matchings pairing 0 with j.
      std::function<mpq_class(std::vector<int>)> expand = [&](std::vector<int> idx) -> mpq_class {
        if (idx.empty()) return 1;
        mpq_class s = 0;
        for (std::size_t k = 1; k < idx.size(); ++k) {
          std::vector<int> rest;
          for (std::size_t l = 1; l < idx.size(); ++l)
            if (l != k) rest.push_back(idx[l]);
          mpq_class term = a(idx[0], idx[k]) * expand(rest);
          s += (k % 2 == 1) ? term : mpq_class(-term);
        }
        return s;
      };
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      CHECK(pfaffian(a) == expand(all));
    }
  }
}

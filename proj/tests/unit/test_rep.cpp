#include <doctest.h>

#include <random>

#include "common/matrix.hpp"
#include "common/scalar.hpp"
#include "rep/big_cell.hpp"

using namespace flagcone;
using namespace flagcone::rep;
using GR = GaussianRational;
using GT = ScalarTraits<GaussianRational>;

namespace {

// 1 + sum_k |u_k|^2 over the listed variables, in the 2m-variable (u, w) ring.
Polynomial one_plus_norm(int m, const std::vector<int>& vars) {
  Polynomial p = Polynomial::constant(2 * m, 1);
  for (int v : vars) p += Polynomial::variable(2 * m, v) * Polynomial::variable(2 * m, m + v);
  return p;
}

GR rational_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  mpq_class re(d(rng), 2), im(d(rng), 3);
  re.canonicalize();
  im.canonicalize();
  return GR(re, im);
}

// Oracle: Cauchy-Binet, sum_I |det_I M|^2 = det(M^* M) for the first k
// columns M of n(z), computed by exact elimination.
mpq_class gram_determinant(const std::vector<std::vector<GR>>& n, int k) {
  const int rows = static_cast<int>(n.size());
  Matrix<GR> g(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      GR s;
      for (int r = 0; r < rows; ++r) s += GT::conj(n[r][a]) * n[r][b];
      g(a, b) = s;
    }
  GR det(mpq_class(1));
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && GT::is_zero(g(p, c))) ++p;
    if (p == k) return 0;
    if (p != c)
      for (int j = 0; j < k; ++j) std::swap(g(p, j), g(c, j));
    if (p != c) det = -det;
    det *= g(c, c);
    for (int r = c + 1; r < k; ++r) {
      GR f = g(r, c) / g(c, c);
      for (int j = c; j < k; ++j) g(r, j) -= f * g(c, j);
    }
  }
  CHECK(sgn(det.im) == 0);
  return det.re;
}

}  // namespace

TEST_CASE("big cell charts") {
  lie::RootSystem a1 = lie::RootSystem::type_a(1);
  BigCellChart cp1(a1, {});
  CHECK(cp1.dimension() == 1);
  auto m = cp1.matrix<int>({7}, 0, 1);
  CHECK(m == std::vector<std::vector<int>>{{1, 0}, {7, 1}});

  lie::RootSystem a3 = lie::RootSystem::type_a(3);
  BigCellChart gr(a3, {1, 3});
  REQUIRE(gr.dimension() == 4);
  auto g = gr.matrix<int>({1, 2, 3, 4}, 0, 1);
  std::vector<std::vector<int>> expected = {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 3, 1, 0}, {2, 4, 0, 1}};
  CHECK(g == expected);
  CHECK(gr.matrix<int>({0, 0, 0, 0}, 0, 1) == std::vector<std::vector<int>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(gr.matrix<int>({1, 2}, 0, 1), Error);

  for (int n = 1; n <= 6; ++n) {
    lie::RootSystem rs = lie::RootSystem::type_a(n);
    CHECK(BigCellChart(rs, {}).dimension() == n * (n + 1) / 2);
    for (unsigned mask = 0; mask < (1u << n) - 1; ++mask) {
      std::vector<int> theta;
      for (int k = 0; k < n; ++k)
        if (mask & (1u << k)) theta.push_back(k + 1);
      CHECK(BigCellChart(rs, theta).dimension() == static_cast<int>(lie::parabolic_complement(rs, theta).size()));
    }
  }
}

TEST_CASE("minor polynomials reproduce the closed-form potentials") {
  {
    lie::RootSystem rs = lie::RootSystem::type_a(1);
    BigCellChart chart(rs, {});
    auto set = MinorPolynomialSet::build(chart, 1);
    REQUIRE(set.minors().size() == 2);
    CHECK(set.minors()[0] == Polynomial::constant(1, 1));
    CHECK(set.minors()[1] == Polynomial::variable(1, 0));
    CHECK(set.norm_square_polynomial() == one_plus_norm(1, {0}));
  }
  for (int n = 1; n <= 6; ++n) {
    lie::RootSystem rs = lie::RootSystem::type_a(n);
    std::vector<int> theta;
    for (int k = 2; k <= n; ++k) theta.push_back(k);
    BigCellChart chart(rs, theta);
    std::vector<int> all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    CHECK(MinorPolynomialSet::build(chart, 1).norm_square_polynomial() == one_plus_norm(n, all));
  }
  {
    lie::RootSystem rs = lie::RootSystem::type_a(3);
    BigCellChart chart(rs, {1, 3});
    auto set = MinorPolynomialSet::build(chart, 2);
    CHECK(set.minors().size() == 6);
    CHECK(set.minors().front() == Polynomial::constant(4, 1));
    const int m = 4;
    auto u = [&](int v) { return Polynomial::variable(2 * m, v); };
    auto w = [&](int v) { return Polynomial::variable(2 * m, m + v); };
    Polynomial expected = one_plus_norm(m, {0, 1, 2, 3}) + (u(0) * u(3) - u(1) * u(2)) * (w(0) * w(3) - w(1) * w(2));
    CHECK(set.norm_square_polynomial() == expected);
  }
  {
    lie::RootSystem rs = lie::RootSystem::type_a(2);
    BigCellChart chart(rs, {});
    const int m = 3;
    auto u = [&](int v) { return Polynomial::variable(2 * m, v); };
    auto w = [&](int v) { return Polynomial::variable(2 * m, m + v); };
    CHECK(MinorPolynomialSet::build(chart, 1).norm_square_polynomial() == one_plus_norm(m, {0, 1}));
    Polynomial second = one_plus_norm(m, {2}) + (u(0) * u(2) - u(1)) * (w(0) * w(2) - w(1));
    CHECK(MinorPolynomialSet::build(chart, 2).norm_square_polynomial() == second);
  }
  lie::RootSystem rs = lie::RootSystem::type_a(3);
  CHECK_THROWS_AS(MinorPolynomialSet::build(BigCellChart(rs, {}), 0), Error);
  CHECK_THROWS_AS(MinorPolynomialSet::build(BigCellChart(rs, {}), 4), Error);
}

TEST_CASE("norm-square evaluation") {
  lie::RootSystem a1 = lie::RootSystem::type_a(1);
  auto s1 = MinorPolynomialSet::build(BigCellChart(a1, {}), 1);
  CHECK(s1.norm_square_eval<GR, GT>({GR(0)}) == 1);
  CHECK(s1.norm_square_eval<GR, GT>({GR(1)}) == 2);
  lie::RootSystem a3 = lie::RootSystem::type_a(3);
  auto s2 = MinorPolynomialSet::build(BigCellChart(a3, {1, 3}), 2);
  CHECK(s2.norm_square_eval<GR, GT>({GR(1), GR(0), GR(0), GR(1)}) == 4);
}

TEST_CASE("Cauchy-Binet oracle for minors at random Gaussian-rational points") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n) {
    lie::RootSystem rs = lie::RootSystem::type_a(n);
    for (unsigned mask = 0; mask < (1u << n) - 1; ++mask) {
      std::vector<int> theta;
      for (int k = 0; k < n; ++k)
        if (mask & (1u << k)) theta.push_back(k + 1);
      BigCellChart chart(rs, theta);
      std::vector<GR> z;
      for (int v = 0; v < chart.dimension(); ++v) z.push_back(rational_point(rng));
      auto nz = chart.matrix<GR>(z, GR(), GR(mpq_class(1)));
      for (int k = 1; k <= n; ++k) {
        auto set = MinorPolynomialSet::build(chart, k);
        mpq_class value = set.norm_square_eval<GR, GT>(z);
        CHECK(value == gram_determinant(nz, k));
        CHECK(value >= 1);
      }
    }
  }
}

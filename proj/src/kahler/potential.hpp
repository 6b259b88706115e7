#pragma once

#include <string>
#include <vector>

#include "common/scalar.hpp"
#include "jets/jet.hpp"
#include "lie/root_system.hpp"
#include "rep/big_cell.hpp"

namespace flagcone::kahler {

struct PotentialFactor {
  int alpha = 0;
  int exponent = 0;
  rep::MinorPolynomialSet minors;
};

// Anticanonical potential K = prod_alpha S_alpha^{c_alpha} on the big cell of
// SL(N)/P_theta, where S_alpha is the minor norm-square of weight alpha and
// c_alpha = <delta_P, h_alpha^v>. The Kahler-Einstein metric is
// g = (1/2pi) d dbar log K.
class PotentialSpec {
 public:
  PotentialSpec(int rank, std::vector<int> theta, int ell);

  const lie::RootSystem& roots() const { return roots_; }
  const lie::ParabolicChoice& parabolic() const { return parabolic_; }
  const rep::BigCellChart& chart() const { return chart_; }
  const std::vector<PotentialFactor>& factors() const { return factors_; }
  int dimension() const { return chart_.dimension(); }
  int rank() const { return roots_.rank(); }
  int ell() const { return parabolic_.ell; }
  int fano_index() const { return parabolic_.fano_index; }

  // Recognised names: CP^n, Gr(k,C^N), SU(N)/T^n or a generic flag label.
  std::string manifold_name() const;
  std::string link_name() const;

 private:
  lie::RootSystem roots_;
  lie::ParabolicChoice parabolic_;
  rep::BigCellChart chart_;
  std::vector<PotentialFactor> factors_;
};

// Jet space in holomorphic variables u_1..u_M and antiholomorphic w_1..w_M
// (w = conj u, treated as independent), capped at bidegree (p, q).
inline jets::SpacePtr holomorphic_space(int num_holomorphic, int p, int q) {
  std::vector<int> groups(2 * num_holomorphic, 0);
  for (int v = num_holomorphic; v < 2 * num_holomorphic; ++v) groups[v] = 1;
  return jets::JetSpace::make(2 * num_holomorphic, p + q, groups, {p, q});
}

// Jet space in real variables x_1, y_1, ..., x_m, y_m (z_j = x_j + i y_j).
inline jets::SpacePtr real_space(int m, int order) { return jets::JetSpace::make(2 * m, order); }

// Polynomial p(u_offset..) lifted into a jet at `base`.
template <class C>
jets::Jet<C> lift(const rep::Polynomial& p, const std::vector<C>& base, const jets::SpacePtr& space, int offset) {
  std::vector<jets::Jet<C>> vars;
  vars.reserve(base.size());
  for (std::size_t v = 0; v < base.size(); ++v) vars.push_back(jets::Jet<C>::variable(space, offset + static_cast<int>(v), base[v]));
  return p.evaluate(vars, [&](long long c) { return jets::Jet<C>::constant(space, ScalarTraits<C>::from_int(c)); });
}

// S_alpha as a jet in (u, w); the chart coordinates are u_1..u_m and
// `num_holomorphic` >= m allows extra fibre variables.
template <class C>
jets::Jet<C> norm_square_jet(const rep::MinorPolynomialSet& set, const std::vector<C>& z, const jets::SpacePtr& space,
                             int num_holomorphic) {
  using T = ScalarTraits<C>;
  std::vector<C> zbar(z.size());
  for (std::size_t v = 0; v < z.size(); ++v) zbar[v] = T::conj(z[v]);
  jets::Jet<C> acc(space);
  for (const rep::Polynomial& p : set.minors()) acc += lift(p, z, space, 0) * lift(p, zbar, space, num_holomorphic);
  return acc;
}

template <class C>
jets::Jet<C> log_potential_jet(const PotentialSpec& spec, const std::vector<C>& z, const jets::SpacePtr& space,
                               int num_holomorphic) {
  jets::Jet<C> acc(space);
  for (const PotentialFactor& f : spec.factors())
    acc += jets::log(norm_square_jet(f.minors, z, space, num_holomorphic)) * ScalarTraits<C>::from_int(f.exponent);
  return acc;
}

template <class C>
jets::Jet<C> log_potential_jet(const PotentialSpec& spec, const std::vector<C>& z, int p, int q) {
  return log_potential_jet(spec, z, holomorphic_space(spec.dimension(), p, q), spec.dimension());
}

template <class C>
jets::Jet<C> potential_jet(const PotentialSpec& spec, const std::vector<C>& z, const jets::SpacePtr& space,
                           int num_holomorphic) {
  jets::Jet<C> acc = jets::Jet<C>::constant(space, ScalarTraits<C>::from_int(1));
  for (const PotentialFactor& f : spec.factors())
    acc = acc * jets::ipow(norm_square_jet(f.minors, z, space, num_holomorphic), f.exponent);
  return acc;
}

// log K as a jet in the real coordinates (x_1, y_1, ..., x_m, y_m).
template <class C>
jets::Jet<C> real_log_potential_jet(const PotentialSpec& spec, const std::vector<C>& z, int order) {
  using T = ScalarTraits<C>;
  const int m = spec.dimension();
  jets::SpacePtr space = real_space(m, order);
  std::vector<jets::Jet<C>> zj;
  for (int v = 0; v < m; ++v) {
    jets::Jet<C> j = jets::Jet<C>::constant(space, z[v]);
    j[space->unit_index(2 * v)] = T::from_int(1);
    j[space->unit_index(2 * v + 1)] = T::i();
    zj.push_back(std::move(j));
  }
  auto from_int = [&](long long c) { return jets::Jet<C>::constant(space, T::from_int(c)); };
  jets::Jet<C> acc(space);
  for (const PotentialFactor& f : spec.factors()) {
    jets::Jet<C> s(space);
    for (const rep::Polynomial& p : f.minors.minors()) {
      jets::Jet<C> v = p.evaluate(zj, from_int);
      s += v * jets::conj_coefficients(v);
    }
    acc += jets::log(s) * T::from_int(f.exponent);
  }
  return acc;
}

template <class C>
typename ScalarTraits<C>::Real potential_value(const PotentialSpec& spec, const std::vector<C>& z) {
  using R = typename ScalarTraits<C>::Real;
  R acc(1);
  for (const PotentialFactor& f : spec.factors()) {
    R s = f.minors.norm_square_eval<C, ScalarTraits<C>>(z);
    for (int k = 0; k < f.exponent; ++k) acc *= s;
  }
  return acc;
}

}  // namespace flagcone::kahler

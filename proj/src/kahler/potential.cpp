#include "kahler/potential.hpp"

namespace flagcone::kahler {

PotentialSpec::PotentialSpec(int rank, std::vector<int> theta, int ell)
    : roots_(lie::RootSystem::type_a(rank)),
      parabolic_(lie::make_parabolic(roots_, std::move(theta), ell)),
      chart_(roots_, parabolic_.theta) {
  for (const lie::Pairing& p : parabolic_.pairings)
    factors_.push_back({p.alpha, p.value, rep::MinorPolynomialSet::build(chart_, p.alpha)});
}

namespace {

std::vector<int> block_sizes(const rep::BigCellChart& chart) {
  std::vector<int> sizes;
  for (int i = 1; i <= chart.size(); ++i) {
    int b = chart.block_of(i);
    if (static_cast<int>(sizes.size()) <= b) sizes.push_back(0);
    ++sizes[b];
  }
  return sizes;
}

}  // namespace

std::string PotentialSpec::manifold_name() const {
  const int n = rank();
  const int big_n = n + 1;
  const std::vector<int> sizes = block_sizes(chart_);
  if (sizes.size() == 2) {
    int k = sizes[0];
    if (k == 1 || k == n) return "CP^" + std::to_string(n);
    return "Gr(" + std::to_string(k) + ",C^" + std::to_string(big_n) + ")";
  }
  if (static_cast<int>(sizes.size()) == big_n) return "SU(" + std::to_string(big_n) + ")/T^" + std::to_string(n);
  std::string s = "SU(" + std::to_string(big_n) + ")/S(";
  for (std::size_t b = 0; b < sizes.size(); ++b) s += (b ? "xU(" : "U(") + std::to_string(sizes[b]) + ")";
  return s + ")";
}

std::string PotentialSpec::link_name() const {
  const int l = ell();
  const std::vector<int> sizes = block_sizes(chart_);
  const std::string quotient = l == 1 ? "" : "/Z_" + std::to_string(l);
  if (sizes.size() == 2 && (sizes[0] == 1 || sizes[0] == rank())) {
    const std::string sphere = "S^" + std::to_string(2 * rank() + 1);
    if (rank() == 1 && l == 2) return "RP^3";
    return sphere + quotient;
  }
  if (rank() == 3 && sizes.size() == 2 && sizes[0] == 2) return "V_2(R^6)" + quotient;
  if (l == fano_index()) return "Q(K_" + manifold_name() + ")";
  return "circle bundle of K_" + manifold_name() + "^(" + std::to_string(l) + "/" + std::to_string(fano_index()) + ")";
}

}  // namespace flagcone::kahler

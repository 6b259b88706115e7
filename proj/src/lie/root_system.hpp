#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace flagcone::lie {

// Positive root e_i - e_j (1-based, i < j) of A_n. `simple` holds its
// coordinates in the basis of simple roots, `eps` those in the e-basis.
struct Root {
  int i = 0;
  int j = 0;
  std::vector<int> eps;
  std::vector<int> simple;
};

class RootSystem {
 public:
  static RootSystem type_a(int rank);

  char series() const { return 'A'; }
  int rank() const { return rank_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  // <weight, h_j^v> for a weight given in simple-root coordinates, j 1-based.
  int pairing(const std::vector<int>& weight, int alpha_index) const;

 private:
  int rank_ = 0;
  std::vector<Root> simple_;
  std::vector<Root> positive_;
  std::vector<std::vector<int>> cartan_;
};

enum class Crepancy { kCrepant, kDivisorRoot, kNonRoot };

std::string_view to_string(Crepancy c);
Crepancy crepancy_check(int ell, int fano_index);

std::vector<int> normalize_theta(const RootSystem& rs, std::vector<int> theta);
std::vector<Root> parabolic_complement(const RootSystem& rs, const std::vector<int>& theta);
std::vector<int> delta_p(const RootSystem& rs, const std::vector<int>& theta);
int fano_index(const std::vector<int>& pairings);

struct Pairing {
  int alpha = 0;
  int value = 0;
};

struct ParabolicChoice {
  std::vector<int> theta;
  std::vector<Root> complement_roots;
  std::vector<int> delta;
  std::vector<Pairing> pairings;
  int fano_index = 0;
  int picard_rank = 0;
  int ell = 1;

  int dimension() const { return static_cast<int>(complement_roots.size()); }
  Crepancy crepancy() const { return crepancy_check(ell, fano_index); }
};

ParabolicChoice make_parabolic(const RootSystem& rs, std::vector<int> theta, int ell);

std::string format_root(const std::vector<int>& simple_coords);

}  // namespace flagcone::lie

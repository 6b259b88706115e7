#include "lie/root_system.hpp"

#include <algorithm>
#include <numeric>

#include "common/error.hpp"

namespace flagcone::lie {

RootSystem RootSystem::type_a(int rank) {
  if (rank < 1) fail(ErrorCode::kInvalidArgument, "invalid rank: must be a positive integer");
  if (rank > 15) fail(ErrorCode::kInvalidArgument, "rank above 15 is not supported");
  RootSystem rs;
  rs.rank_ = rank;
  const int n1 = rank + 1;
  for (int i = 1; i <= n1; ++i)
    for (int j = i + 1; j <= n1; ++j) {
      Root r;
      r.i = i;
      r.j = j;
      r.eps.assign(n1, 0);
      r.eps[i - 1] = 1;
      r.eps[j - 1] = -1;
      r.simple.assign(rank, 0);
      for (int k = i; k < j; ++k) r.simple[k - 1] = 1;
      if (j == i + 1) rs.simple_.push_back(r);
      rs.positive_.push_back(std::move(r));
    }
  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b) {
      int dot = 0;
      for (int k = 0; k < n1; ++k) dot += rs.simple_[a].eps[k] * rs.simple_[b].eps[k];
      rs.cartan_[a][b] = dot;
    }
  return rs;
}

int RootSystem::pairing(const std::vector<int>& weight, int alpha_index) const {
  if (alpha_index < 1 || alpha_index > rank_)
    fail(ErrorCode::kInvalidArgument, "alpha index out of range: " + std::to_string(alpha_index));
  require(static_cast<int>(weight.size()) == rank_, "weight length does not match the rank");
  int out = 0;
  for (int i = 0; i < rank_; ++i) out += weight[i] * cartan_[i][alpha_index - 1];
  return out;
}

std::string_view to_string(Crepancy c) {
  switch (c) {
    case Crepancy::kCrepant:
      return "crepant";
    case Crepancy::kDivisorRoot:
      return "divisor-root";
    case Crepancy::kNonRoot:
      return "non-root";
  }
  return "non-root";
}

Crepancy crepancy_check(int ell, int fano_index) {
  require(ell >= 1, "ell must be at least 1");
  require(fano_index >= 1, "Fano index must be positive");
  if (ell == fano_index) return Crepancy::kCrepant;
  if (fano_index % ell == 0) return Crepancy::kDivisorRoot;
  return Crepancy::kNonRoot;
}

std::vector<int> normalize_theta(const RootSystem& rs, std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  for (int t : theta)
    if (t < 1 || t > rs.rank())
      fail(ErrorCode::kInvalidArgument, "theta index " + std::to_string(t) + " outside 1.." + std::to_string(rs.rank()));
  return theta;
}

std::vector<Root> parabolic_complement(const RootSystem& rs, const std::vector<int>& theta) {
  const std::vector<int> th = normalize_theta(rs, theta);
  std::vector<Root> out;
  for (const Root& r : rs.positive_roots()) {
    bool inside = true;
    for (int k = 0; k < rs.rank(); ++k)
      if (r.simple[k] != 0 && !std::binary_search(th.begin(), th.end(), k + 1)) inside = false;
    if (!inside) out.push_back(r);
  }
  return out;
}

std::vector<int> delta_p(const RootSystem& rs, const std::vector<int>& theta) {
  std::vector<int> delta(rs.rank(), 0);
  for (const Root& r : parabolic_complement(rs, theta))
    for (int k = 0; k < rs.rank(); ++k) delta[k] += r.simple[k];
  return delta;
}

int fano_index(const std::vector<int>& pairings) {
  if (pairings.empty()) fail(ErrorCode::kInvalidArgument, "degenerate parabolic: theta contains every simple root");
  int g = 0;
  for (int p : pairings) g = std::gcd(g, p);
  return g;
}

ParabolicChoice make_parabolic(const RootSystem& rs, std::vector<int> theta, int ell) {
  require(ell >= 1, "ell must be at least 1");
  ParabolicChoice pc;
  pc.theta = normalize_theta(rs, std::move(theta));
  pc.complement_roots = parabolic_complement(rs, pc.theta);
  pc.delta = delta_p(rs, pc.theta);
  std::vector<int> values;
  for (int a = 1; a <= rs.rank(); ++a) {
    if (std::binary_search(pc.theta.begin(), pc.theta.end(), a)) continue;
    int v = rs.pairing(pc.delta, a);
    if (v <= 0) fail(ErrorCode::kInternalConsistency, "non-positive anticanonical pairing");
    pc.pairings.push_back({a, v});
    values.push_back(v);
  }
  pc.fano_index = fano_index(values);
  pc.picard_rank = static_cast<int>(pc.pairings.size());
  pc.ell = ell;
  return pc;
}

std::string format_root(const std::vector<int>& simple_coords) {
  std::string out;
  for (std::size_t k = 0; k < simple_coords.size(); ++k) {
    int c = simple_coords[k];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1) out += std::to_string(c);
    out += "a" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace flagcone::lie

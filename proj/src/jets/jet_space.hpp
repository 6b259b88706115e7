#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace flagcone::jets {

class JetSpace;
using SpacePtr = std::shared_ptr<const JetSpace>;

// The set of multi-indices kept by a truncated Taylor expansion: total degree
// at most `order`, and for each variable group g the partial degree in that
// group at most caps[g]. Holomorphic work uses two groups (z and conj z) so
// that a (2,2)-capped jet carries exactly what a Ricci computation needs.
//
// Spaces are interned: equal parameters give the same pointer.
class JetSpace {
 public:
  static constexpr int kMaxVars = 16;
  static constexpr int kMaxOrder = 15;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static SpacePtr make(int nvars, int order, std::vector<int> groups = {}, std::vector<int> caps = {});
  static SpacePtr meet(const SpacePtr& a, const SpacePtr& b);

  int num_vars() const { return nvars_; }
  int order() const { return order_; }
  const std::vector<int>& groups() const { return groups_; }
  const std::vector<int>& caps() const { return caps_; }
  std::size_t size() const { return degree_.size(); }

  const std::uint8_t* exponents(std::size_t idx) const { return &exps_[idx * nvars_]; }
  int degree(std::size_t idx) const { return degree_[idx]; }
  std::size_t index_of(const std::uint8_t* e) const;
  std::size_t index_of(const std::vector<int>& e) const;
  bool admits(const std::vector<int>& e) const;
  std::size_t unit_index(int var) const;

  // Multiplication table: for monomial i, the pairs (j, k) with e_i + e_j = e_k.
  struct Pair {
    std::uint32_t j;
    std::uint32_t k;
  };
  const Pair* pairs_begin(std::size_t i) const { return pairs_.data() + pair_offset_[i]; }
  const Pair* pairs_end(std::size_t i) const { return pairs_.data() + pair_offset_[i + 1]; }

  // Space of the derivative with respect to `var`, plus the map taking a
  // monomial of that space to the source monomial it came from.
  SpacePtr derived(int var) const;
  const std::vector<std::uint32_t>& derivative_sources(int var) const;

  std::string describe() const;

 private:
  JetSpace(int nvars, int order, std::vector<int> groups, std::vector<int> caps);
  static std::uint64_t key_of(const std::uint8_t* e, int nvars);

  int nvars_;
  int order_;
  std::vector<int> groups_;
  std::vector<int> caps_;
  std::vector<std::uint8_t> exps_;
  std::vector<int> degree_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::size_t> pair_offset_;
  std::vector<Pair> pairs_;

  mutable std::mutex derived_mutex_;
  mutable std::vector<SpacePtr> derived_;
  mutable std::vector<std::vector<std::uint32_t>> derivative_sources_;
};

}  // namespace flagcone::jets

#include "jets/jet_space.hpp"

#include <algorithm>
#include <map>

#include "common/error.hpp"

namespace flagcone::jets {

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::weak_ptr<const JetSpace>>& registry() {
  static std::map<std::string, std::weak_ptr<const JetSpace>> r;
  return r;
}

std::string registry_key(int nvars, int order, const std::vector<int>& groups, const std::vector<int>& caps) {
  std::string k = std::to_string(nvars) + "/" + std::to_string(order) + "/";
  for (int g : groups) k += std::to_string(g) + ",";
  k += "/";
  for (int c : caps) k += std::to_string(c) + ",";
  return k;
}

}  // namespace

std::uint64_t JetSpace::key_of(const std::uint8_t* e, int nvars) {
  std::uint64_t key = 0;
  for (int v = 0; v < nvars; ++v) key |= static_cast<std::uint64_t>(e[v]) << (4 * v);
  return key;
}

SpacePtr JetSpace::make(int nvars, int order, std::vector<int> groups, std::vector<int> caps) {
  if (nvars < 0 || nvars > kMaxVars) fail(ErrorCode::kInvalidArgument, "jet variable count outside 0..16");
  if (order < 0 || order > kMaxOrder) fail(ErrorCode::kInvalidArgument, "jet order outside 0..15");
  if (groups.empty()) groups.assign(nvars, 0);
  require(static_cast<int>(groups.size()) == nvars, "jet group list length mismatch");
  int ngroups = 0;
  for (int g : groups) {
    require(g >= 0 && g < 4, "jet group index outside 0..3");
    ngroups = std::max(ngroups, g + 1);
  }
  if (caps.empty()) caps.assign(std::max(ngroups, 1), order);
  require(static_cast<int>(caps.size()) >= ngroups, "jet caps missing for a group");
  for (int& c : caps) c = std::clamp(c, 0, order);

  const std::string key = registry_key(nvars, order, groups, caps);
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  if (auto it = reg.find(key); it != reg.end())
    if (auto sp = it->second.lock()) return sp;
  SpacePtr sp(new JetSpace(nvars, order, std::move(groups), std::move(caps)));
  reg[key] = sp;
  return sp;
}

SpacePtr JetSpace::meet(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return a;
  require(a && b, "jet arithmetic on an empty jet");
  if (a->nvars_ != b->nvars_ || a->groups_ != b->groups_)
    fail(ErrorCode::kInvalidArgument, "jet arithmetic between incompatible spaces " + a->describe() + " and " + b->describe());
  std::vector<int> caps(std::max(a->caps_.size(), b->caps_.size()));
  for (std::size_t g = 0; g < caps.size(); ++g) {
    int ca = g < a->caps_.size() ? a->caps_[g] : a->order_;
    int cb = g < b->caps_.size() ? b->caps_[g] : b->order_;
    caps[g] = std::min(ca, cb);
  }
  return make(a->nvars_, std::min(a->order_, b->order_), a->groups_, caps);
}

JetSpace::JetSpace(int nvars, int order, std::vector<int> groups, std::vector<int> caps)
    : nvars_(nvars), order_(order), groups_(std::move(groups)), caps_(std::move(caps)) {
  // Enumerate admitted multi-indices grouped by total degree.
  std::vector<std::vector<std::uint8_t>> by_degree[kMaxOrder + 1];
  std::vector<std::uint8_t> e(nvars_, 0);
  std::vector<int> group_sum(caps_.size(), 0);
  auto rec = [&](auto&& self, int v, int total) -> void {
    if (v == nvars_) {
      by_degree[total].push_back(e);
      return;
    }
    const int g = groups_[v];
    for (int p = 0; total + p <= order_ && group_sum[g] + p <= caps_[g]; ++p) {
      e[v] = static_cast<std::uint8_t>(p);
      group_sum[g] += p;
      self(self, v + 1, total + p);
      group_sum[g] -= p;
    }
    e[v] = 0;
  };
  rec(rec, 0, 0);
  for (int d = 0; d <= order_; ++d) {
    std::sort(by_degree[d].begin(), by_degree[d].end(), std::greater<>());
    for (const auto& m : by_degree[d]) {
      index_.emplace(key_of(m.data(), nvars_), static_cast<std::uint32_t>(degree_.size()));
      exps_.insert(exps_.end(), m.begin(), m.end());
      degree_.push_back(d);
    }
  }

  const std::size_t n = degree_.size();
  pair_offset_.assign(n + 1, 0);
  std::vector<std::uint8_t> sum(nvars_);
  for (std::size_t i = 0; i < n; ++i) {
    pair_offset_[i] = pairs_.size();
    for (std::size_t j = 0; j < n; ++j) {
      if (degree_[i] + degree_[j] > order_) break;
      for (int v = 0; v < nvars_; ++v) sum[v] = static_cast<std::uint8_t>(exps_[i * nvars_ + v] + exps_[j * nvars_ + v]);
      std::size_t k = index_of(sum.data());
      if (k != npos) pairs_.push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)});
    }
  }
  pair_offset_[n] = pairs_.size();
  derived_.assign(nvars_, nullptr);
  derivative_sources_.assign(nvars_, {});
}

std::size_t JetSpace::index_of(const std::uint8_t* e) const {
  for (int v = 0; v < nvars_; ++v)
    if (e[v] > kMaxOrder) return npos;
  auto it = index_.find(key_of(e, nvars_));
  return it == index_.end() ? npos : it->second;
}

std::size_t JetSpace::index_of(const std::vector<int>& e) const {
  require(static_cast<int>(e.size()) == nvars_, "multi-index length does not match the jet variables");
  std::vector<std::uint8_t> b(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    if (e[v] < 0) fail(ErrorCode::kInvalidArgument, "negative multi-index entry");
    if (e[v] > kMaxOrder) return npos;
    b[v] = static_cast<std::uint8_t>(e[v]);
  }
  return index_of(b.data());
}

bool JetSpace::admits(const std::vector<int>& e) const { return index_of(e) != npos; }

std::size_t JetSpace::unit_index(int var) const {
  std::vector<std::uint8_t> e(nvars_, 0);
  e[var] = 1;
  return index_of(e.data());
}

SpacePtr JetSpace::derived(int var) const {
  require(var >= 0 && var < nvars_, "derivative variable out of range");
  std::lock_guard<std::mutex> lock(derived_mutex_);
  if (derived_[var]) return derived_[var];
  const int g = groups_[var];
  if (order_ == 0 || caps_[g] == 0)
    fail(ErrorCode::kTruncation, "derivative exceeds the jet order in " + describe());
  std::vector<int> caps = caps_;
  caps[g] -= 1;
  SpacePtr out = make(nvars_, order_ - 1, groups_, caps);
  std::vector<std::uint32_t> src(out->size());
  std::vector<std::uint8_t> e(nvars_);
  for (std::size_t k = 0; k < out->size(); ++k) {
    std::copy(out->exponents(k), out->exponents(k) + nvars_, e.begin());
    e[var] += 1;
    std::size_t s = index_of(e.data());
    if (s == npos) fail(ErrorCode::kInternalConsistency, "derivative source monomial missing");
    src[k] = static_cast<std::uint32_t>(s);
  }
  derived_[var] = out;
  derivative_sources_[var] = std::move(src);
  return out;
}

const std::vector<std::uint32_t>& JetSpace::derivative_sources(int var) const {
  derived(var);
  std::lock_guard<std::mutex> lock(derived_mutex_);
  return derivative_sources_[var];
}

std::string JetSpace::describe() const {
  std::string s = "jet space(vars=" + std::to_string(nvars_) + ", order=" + std::to_string(order_) + ", caps=";
  for (std::size_t g = 0; g < caps_.size(); ++g) s += (g ? "," : "") + std::to_string(caps_[g]);
  return s + ")";
}

}  // namespace flagcone::jets

#include "rep/big_cell.hpp"

#include <algorithm>
#include <map>

namespace flagcone::rep {

BigCellChart::BigCellChart(const lie::RootSystem& rs, const std::vector<int>& theta)
    : size_(rs.rank() + 1), theta_(lie::normalize_theta(rs, theta)) {
  block_.assign(size_, 0);
  int b = 0;
  for (int i = 1; i <= size_; ++i) {
    block_[i - 1] = b;
    if (i < size_ && !std::binary_search(theta_.begin(), theta_.end(), i)) ++b;
  }
  for (int col = 1; col <= size_; ++col)
    for (int row = col + 1; row <= size_; ++row)
      if (block_[row - 1] != block_[col - 1]) slots_.push_back({row, col});
}

std::vector<std::vector<Polynomial>> BigCellChart::symbolic_matrix() const {
  const int m = dimension();
  std::vector<std::vector<Polynomial>> out(size_, std::vector<Polynomial>(size_, Polynomial(m)));
  for (int i = 0; i < size_; ++i) out[i][i] = Polynomial::constant(m, 1);
  for (int s = 0; s < m; ++s) out[slots_[s].row - 1][slots_[s].col - 1] = Polynomial::variable(m, s);
  return out;
}

MinorPolynomialSet MinorPolynomialSet::build(const BigCellChart& chart, int k) {
  const int n1 = chart.size();
  if (k < 1 || k > n1 - 1)
    fail(ErrorCode::kInvalidArgument, "weight index k=" + std::to_string(k) + " outside 1.." + std::to_string(n1 - 1));
  const int m = chart.dimension();
  const auto sym = chart.symbolic_matrix();

  // det(rows in mask, columns 1..popcount(mask)) by expansion along the last
  // column, memoised over row subsets.
  std::map<unsigned, Polynomial> level;
  for (int r = 0; r < n1; ++r) level.emplace(1u << r, sym[r][0]);
  for (int size = 2; size <= k; ++size) {
    std::map<unsigned, Polynomial> next;
    for (unsigned mask = 0; mask < (1u << n1); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      Polynomial det(m);
      int position = 0;
      for (int r = 0; r < n1; ++r) {
        if (!(mask & (1u << r))) continue;
        const Polynomial& entry = sym[r][size - 1];
        if (!entry.is_zero()) {
          Polynomial term = entry * level.at(mask & ~(1u << r));
          if ((size - 1 + position) % 2 == 0)
            det += term;
          else
            det -= term;
        }
        ++position;
      }
      next.emplace(mask, std::move(det));
    }
    level = std::move(next);
  }

  MinorPolynomialSet set;
  set.k_ = k;
  set.nvars_ = m;
  // Lexicographic order of index sets.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    unsigned mask = 0;
    std::vector<int> one_based;
    for (int r : idx) {
      mask |= 1u << r;
      one_based.push_back(r + 1);
    }
    set.index_sets_.push_back(one_based);
    set.minors_.push_back(level.at(mask));
    int p = k - 1;
    while (p >= 0 && idx[p] == n1 - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return set;
}

Polynomial MinorPolynomialSet::norm_square_polynomial() const {
  const int m = nvars_;
  Polynomial out(2 * m);
  for (const Polynomial& p : minors_) {
    Polynomial hol(2 * m), anti(2 * m);
    for (const auto& [e, c] : p.terms()) {
      Polynomial th = Polynomial::constant(2 * m, c);
      Polynomial ta = Polynomial::constant(2 * m, c);
      for (int v = 0; v < m; ++v)
        for (int t = 0; t < e[v]; ++t) {
          th = th * Polynomial::variable(2 * m, v);
          ta = ta * Polynomial::variable(2 * m, m + v);
        }
      hol += th;
      anti += ta;
    }
    out += hol * anti;
  }
  return out;
}

}  // namespace flagcone::rep

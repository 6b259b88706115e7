#pragma once

#include <vector>

#include "common/error.hpp"
#include "lie/root_system.hpp"
#include "rep/polynomial.hpp"

namespace flagcone::rep {

// Position (row, col) of a chart coordinate inside n(z); 1-based, row > col.
struct Slot {
  int row = 0;
  int col = 0;
};

// Opposite big cell of SL(N)/P_theta: z is placed below the diagonal blocks of
// the Levi factor, column by column.
class BigCellChart {
 public:
  BigCellChart(const lie::RootSystem& rs, const std::vector<int>& theta);

  int size() const { return size_; }
  int dimension() const { return static_cast<int>(slots_.size()); }
  const std::vector<Slot>& slots() const { return slots_; }
  const std::vector<int>& theta() const { return theta_; }
  int block_of(int index) const { return block_[index - 1]; }

  template <class T>
  std::vector<std::vector<T>> matrix(const std::vector<T>& z, const T& zero, const T& one) const {
    if (static_cast<int>(z.size()) != dimension())
      fail(ErrorCode::kInvalidArgument, "big-cell point has " + std::to_string(z.size()) + " coordinates, chart needs " +
                                            std::to_string(dimension()));
    std::vector<std::vector<T>> m(size_, std::vector<T>(size_, zero));
    for (int i = 0; i < size_; ++i) m[i][i] = one;
    for (int s = 0; s < dimension(); ++s) m[slots_[s].row - 1][slots_[s].col - 1] = z[s];
    return m;
  }

  std::vector<std::vector<Polynomial>> symbolic_matrix() const;

 private:
  int size_ = 0;
  std::vector<int> theta_;
  std::vector<int> block_;
  std::vector<Slot> slots_;
};

// All k x k minors det_I of the first k columns of n(z).
class MinorPolynomialSet {
 public:
  static MinorPolynomialSet build(const BigCellChart& chart, int k);

  int weight_index() const { return k_; }
  int num_vars() const { return nvars_; }
  const std::vector<std::vector<int>>& index_sets() const { return index_sets_; }
  const std::vector<Polynomial>& minors() const { return minors_; }

  // sum_I |det_I|^2 as a polynomial in z and w = conj(z) (variables z_1..z_m,
  // w_1..w_m).
  Polynomial norm_square_polynomial() const;

  template <class C, class Traits>
  typename Traits::Real norm_square_eval(const std::vector<C>& z) const {
    using R = typename Traits::Real;
    R acc(0);
    for (const Polynomial& p : minors_) {
      C v = p.evaluate(z, [](long long c) { return Traits::from_int(c); });
      R re = Traits::re(v);
      R im = Traits::im(v);
      acc += re * re + im * im;
    }
    return acc;
  }

 private:
  int k_ = 0;
  int nvars_ = 0;
  std::vector<std::vector<int>> index_sets_;
  std::vector<Polynomial> minors_;
};

}  // namespace flagcone::rep

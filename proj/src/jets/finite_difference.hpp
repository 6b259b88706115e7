#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "common/error.hpp"

namespace flagcone::jets {

using RealField = std::function<double(const std::vector<double>&)>;

// Central finite-difference estimate of d^index f at x, for |index| <= 2.
inline double central_difference(const RealField& f, const std::vector<double>& x, const std::vector<int>& index, double h) {
  require(index.size() == x.size(), "finite difference: index length mismatch");
  std::vector<int> dirs;
  for (std::size_t v = 0; v < index.size(); ++v)
    for (int k = 0; k < index[v]; ++k) dirs.push_back(static_cast<int>(v));
  if (dirs.size() > 2) fail(ErrorCode::kInvalidArgument, "finite difference oracle supports total order at most 2");
  auto at = [&](int a, double sa, int b, double sb) {
    std::vector<double> y = x;
    if (a >= 0) y[a] += sa;
    if (b >= 0) y[b] += sb;
    return f(y);
  };
  if (dirs.empty()) return f(x);
  if (dirs.size() == 1) return (at(dirs[0], h, -1, 0) - at(dirs[0], -h, -1, 0)) / (2 * h);
  const int a = dirs[0], b = dirs[1];
  if (a == b) return (at(a, h, -1, 0) - 2 * f(x) + at(a, -h, -1, 0)) / (h * h);
  return (at(a, h, b, h) - at(a, h, b, -h) - at(a, -h, b, h) + at(a, -h, b, -h)) / (4 * h * h);
}

// |jet - FD| / (1 + |jet|).
inline double finite_difference_check(const RealField& f, const std::vector<double>& x, const std::vector<int>& index,
                                      double h, double jet_value) {
  double fd = central_difference(f, x, index, h);
  return std::abs(jet_value - fd) / (1.0 + std::abs(jet_value));
}

}  // namespace flagcone::jets

#pragma once

#include <algorithm>

#include "common/scalar.hpp"

namespace flagcone {

// Max-norm of a family of quantities that should vanish. With exact scalars
// `exact_zero` records whether every one of them is identically zero.
struct Residual {
  double value = 0.0;
  bool exact = false;
  bool exact_zero = true;

  template <class R>
  void absorb(const R& x) {
    value = std::max(value, abs_value(x));
    if (!is_exact_zero(x)) exact_zero = false;
  }

  void absorb_complex(double magnitude, bool zero) {
    value = std::max(value, magnitude);
    if (!zero) exact_zero = false;
  }

  void merge(const Residual& o) {
    value = std::max(value, o.value);
    exact_zero = exact_zero && o.exact_zero;
    exact = exact || o.exact;
  }
};

}  // namespace flagcone

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "common/error.hpp"

namespace flagcone::rep {

using Exponents = std::vector<std::uint8_t>;

// Sparse multivariate polynomial with integer coefficients.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, long long c);
  static Polynomial variable(int nvars, int var);

  int num_vars() const { return nvars_; }
  const std::map<Exponents, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  long long coefficient(const Exponents& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Evaluates over any commutative ring. `vars[i]` is the value of the i-th
  // variable and `from_int` embeds the integer coefficients.
  template <class R, class FromInt>
  R evaluate(const std::vector<R>& vars, FromInt&& from_int) const {
    require(static_cast<int>(vars.size()) == nvars_, "polynomial evaluation: wrong number of variables");
    std::vector<std::vector<R>> powers(nvars_);
    R acc = from_int(0);
    for (const auto& [e, c] : terms_) {
      R term = from_int(c);
      for (int v = 0; v < nvars_; ++v) {
        if (e[v] == 0) continue;
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(vars[v]);
        while (static_cast<int>(pw.size()) < e[v]) pw.push_back(pw.back() * vars[v]);
        term = term * pw[e[v] - 1];
      }
      acc = acc + term;
    }
    return acc;
  }

  std::string to_string(const std::string& var_prefix = "z") const;

 private:
  void add_term(const Exponents& e, long long c);

  int nvars_;
  std::map<Exponents, long long> terms_;
};

}  // namespace flagcone::rep

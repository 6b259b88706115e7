#pragma once

#include <cmath>
#include <vector>

#include "common/error.hpp"
#include "common/scalar.hpp"
#include "jets/jet_space.hpp"

namespace flagcone::jets {

// Truncated multivariate Taylor expansion. Coefficient 0 is the value at the
// base point; coefficient of x^e is (d^e f)(p) / e!.
template <class C>
class Jet {
 public:
  using Traits = ScalarTraits<C>;

  Jet() = default;
  explicit Jet(SpacePtr space) : space_(std::move(space)), c_(space_->size(), C{}) {}

  static Jet constant(SpacePtr space, const C& value) {
    Jet j(std::move(space));
    j.c_[0] = value;
    return j;
  }

  // The coordinate function x_var expanded at `base`.
  static Jet variable(SpacePtr space, int var, const C& base) {
    Jet j = constant(std::move(space), base);
    std::size_t u = j.space_->unit_index(var);
    if (u != JetSpace::npos) j.c_[u] = Traits::from_int(1);
    return j;
  }

  const SpacePtr& space() const { return space_; }
  const C& value() const { return c_[0]; }
  const std::vector<C>& coefficients() const { return c_; }
  C& operator[](std::size_t i) { return c_[i]; }
  const C& operator[](std::size_t i) const { return c_[i]; }

  C coefficient(const std::vector<int>& e) const {
    std::size_t k = space_->index_of(e);
    if (k == JetSpace::npos) fail(ErrorCode::kTruncation, "multi-index exceeds " + space_->describe());
    return c_[k];
  }

  // True partial derivative: e! times the coefficient.
  C partial(const std::vector<int>& e) const {
    C out = coefficient(e);
    long long f = 1;
    for (int x : e)
      for (int t = 2; t <= x; ++t) f *= t;
    return out * Traits::from_int(f);
  }

  bool is_zero() const {
    for (const C& x : c_)
      if (!Traits::is_zero(x)) return false;
    return true;
  }

  Jet restricted(const SpacePtr& target) const {
    if (target == space_) return *this;
    require(target->num_vars() == space_->num_vars(), "restriction between jets with different variables");
    Jet out(target);
    for (std::size_t k = 0; k < target->size(); ++k) {
      std::size_t s = space_->index_of(target->exponents(k));
      if (s == JetSpace::npos)
        fail(ErrorCode::kTruncation, "restriction target " + target->describe() + " is larger than " + space_->describe());
      out.c_[k] = c_[s];
    }
    return out;
  }

  // Re-expresses the jet in another space: variable v becomes var_map[v]
  // (or must not occur when var_map[v] < 0). Monomials the target cannot hold
  // are truncated.
  Jet remapped(const SpacePtr& target, const std::vector<int>& var_map) const {
    require(static_cast<int>(var_map.size()) == space_->num_vars(), "variable map length mismatch");
    Jet out(target);
    const int n = space_->num_vars();
    std::vector<std::uint8_t> e(target->num_vars());
    for (std::size_t k = 0; k < space_->size(); ++k) {
      if (Traits::is_zero(c_[k])) continue;
      std::fill(e.begin(), e.end(), 0);
      const std::uint8_t* src = space_->exponents(k);
      bool dropped = false;
      for (int v = 0; v < n; ++v) {
        if (src[v] == 0) continue;
        if (var_map[v] < 0) {
          dropped = true;
          break;
        }
        e[var_map[v]] = src[v];
      }
      if (dropped) continue;
      std::size_t t = target->index_of(e.data());
      if (t != JetSpace::npos) out.c_[t] = c_[k];
    }
    return out;
  }

  Jet& operator+=(const Jet& o) {
    align(o);
    if (o.space_ == space_) {
      for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    } else {
      *this += o.restricted(space_);
    }
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    align(o);
    if (o.space_ == space_) {
      for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    } else {
      *this -= o.restricted(space_);
    }
    return *this;
  }
  Jet& operator*=(const C& s) {
    for (C& x : c_) x *= s;
    return *this;
  }
  Jet& operator+=(const C& s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(const C& s) {
    c_[0] -= s;
    return *this;
  }
  Jet operator-() const {
    Jet out(*this);
    for (C& x : out.c_) x = -x;
    return out;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const C& s) { return a *= s; }
  friend Jet operator*(const C& s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, const C& s) { return a += s; }
  friend Jet operator-(Jet a, const C& s) { return a -= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    SpacePtr sp = JetSpace::meet(a.space_, b.space_);
    if (sp != a.space_ || sp != b.space_) return a.restricted(sp) * b.restricted(sp);
    Jet out(sp);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const C& ai = a.c_[i];
      if (Traits::is_zero(ai)) continue;
      for (const JetSpace::Pair* p = sp->pairs_begin(i); p != sp->pairs_end(i); ++p) {
        const C& bj = b.c_[p->j];
        if (Traits::is_zero(bj)) continue;
        out.c_[p->k] += ai * bj;
      }
    }
    return out;
  }

 private:
  void align(const Jet& o) {
    require(space_ != nullptr && o.space_ != nullptr, "arithmetic on an empty jet");
    if (o.space_ != space_) {
      SpacePtr sp = JetSpace::meet(space_, o.space_);
      if (sp != space_) *this = restricted(sp);
    }
  }

  SpacePtr space_;
  std::vector<C> c_;
};

template <class C>
Jet<C> derivative(const Jet<C>& f, int var) {
  SpacePtr out_space = f.space()->derived(var);
  const auto& src = f.space()->derivative_sources(var);
  Jet<C> out(out_space);
  for (std::size_t k = 0; k < out_space->size(); ++k) {
    int power = f.space()->exponents(src[k])[var];
    out[k] = f[src[k]] * ScalarTraits<C>::from_int(power);
  }
  return out;
}

// Complex conjugate of every coefficient. Only meaningful for jets in real
// variables, where it is the jet of the conjugate function.
template <class C>
Jet<C> conj_coefficients(const Jet<C>& f) {
  Jet<C> out(f.space());
  for (std::size_t k = 0; k < f.space()->size(); ++k) out[k] = ScalarTraits<C>::conj(f[k]);
  return out;
}

// sum_k a[k] (f - f(p))^k, truncated to the jet order.
template <class C>
Jet<C> compose_series(const Jet<C>& f, const std::vector<C>& a) {
  Jet<C> h = f;
  h[0] = C{};
  const int d = std::min<int>(f.space()->order(), static_cast<int>(a.size()) - 1);
  Jet<C> acc = Jet<C>::constant(f.space(), a[d]);
  for (int k = d - 1; k >= 0; --k) {
    acc = acc * h;
    acc[0] += a[k];
  }
  return acc;
}

template <class C>
Jet<C> reciprocal(const Jet<C>& f) {
  using T = ScalarTraits<C>;
  if (T::is_zero(f.value())) fail(ErrorCode::kDomain, "reciprocal of a jet with zero value");
  const int d = f.space()->order();
  std::vector<C> a(d + 1);
  C inv = T::from_int(1) / f.value();
  C p = inv;
  for (int k = 0; k <= d; ++k) {
    a[k] = (k % 2 == 0) ? p : -p;
    p *= inv;
  }
  return compose_series(f, a);
}

// Natural logarithm. With exact scalars the constant term log f(p) is not
// rational and is left out; every derivative is still exact.
template <class C>
Jet<C> log(const Jet<C>& f) {
  using T = ScalarTraits<C>;
  if (!T::is_positive_real(f.value())) fail(ErrorCode::kDomain, "log of a jet whose value is not a positive real");
  const int d = f.space()->order();
  std::vector<C> a(d + 1);
  a[0] = T::log(f.value());
  C inv = T::from_int(1) / f.value();
  C p = inv;
  for (int k = 1; k <= d; ++k) {
    C term = p * T::from_ratio(1, k);
    a[k] = (k % 2 == 1) ? term : -term;
    p *= inv;
  }
  return compose_series(f, a);
}

template <class C>
Jet<C> ipow(const Jet<C>& f, int n) {
  require(n >= 0, "negative integer power of a jet");
  Jet<C> out = Jet<C>::constant(f.space(), ScalarTraits<C>::from_int(1));
  Jet<C> base = f;
  while (n > 0) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return out;
}

// f^p for real p via (c + h)^p = c^p (1 + h/c)^p. Floating backend only.
inline Jet<std::complex<double>> real_pow(const Jet<std::complex<double>>& f, double p) {
  using T = ScalarTraits<std::complex<double>>;
  if (!T::is_positive_real(f.value())) fail(ErrorCode::kDomain, "real power of a jet whose value is not a positive real");
  const double c = f.value().real();
  const int d = f.space()->order();
  std::vector<std::complex<double>> a(d + 1);
  double binom = 1.0;
  for (int k = 0; k <= d; ++k) {
    a[k] = binom * std::pow(c, p - k);
    binom *= (p - k) / (k + 1);
  }
  return compose_series(f, a);
}

}  // namespace flagcone::jets

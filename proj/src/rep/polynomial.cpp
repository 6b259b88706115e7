#include "rep/polynomial.hpp"

#include <algorithm>

namespace flagcone::rep {

Polynomial Polynomial::constant(int nvars, long long c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  require(var >= 0 && var < nvars, "polynomial variable index out of range");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[var] = 1;
  p.add_term(e, 1);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

long long Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Exponents& e, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require(nvars_ == o.nvars_, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require(nvars_ == o.nvars_, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require(a.nvars_ == b.nvars_, "polynomial variable count mismatch");
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (int v = 0; v < a.nvars_; ++v) {
        int s = e[v] + eb[v];
        if (s > 255) fail(ErrorCode::kInvalidArgument, "polynomial exponent overflow");
        e[v] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Lowest total degree first, which reads naturally for minors (1 + ...).
  std::vector<std::pair<Exponents, long long>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (auto v : x.first) dx += v;
    for (auto v : y.first) dy += v;
    return dx < dy;
  });
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    long long mag = c < 0 ? -c : c;
    std::string body = mono.empty() ? std::to_string(mag) : (mag == 1 ? mono : std::to_string(mag) + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace flagcone::rep

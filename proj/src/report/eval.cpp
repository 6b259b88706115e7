#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "cone/calabi.hpp"
#include "cone/cone.hpp"
#include "kahler/metric.hpp"
#include "report/report.hpp"
#include "sasaki/structure.hpp"

namespace flagcone::report {

namespace {

using cd = std::complex<double>;
using GR = GaussianRational;

[[noreturn]] void bad_token(const std::string& token) {
  fail(ErrorCode::kInvalidArgument, "cannot parse number '" + token + "'");
}

// "3", "-2/5", "0.125" as an exact rational.
mpq_class parse_rational(const std::string& token) {
  if (token.empty()) bad_token(token);
  std::string s = token;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  mpq_class out;
  auto digits = [&](const std::string& d) {
    if (d.empty()) bad_token(token);
    for (char ch : d)
      if (!std::isdigit(static_cast<unsigned char>(ch))) bad_token(token);
    return mpz_class(d);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class den = digits(s.substr(slash + 1));
    if (den == 0) fail(ErrorCode::kDomain, "zero denominator in '" + token + "'");
    out = mpq_class(digits(s.substr(0, slash)), den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot).empty() ? "0" : s.substr(0, dot);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = mpq_class(digits(whole) * scale + (frac.empty() ? mpz_class(0) : digits(frac)), scale);
  } else {
    out = mpq_class(digits(s));
  }
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

double parse_double(const std::string& token) {
  if (token.find('/') != std::string::npos) return parse_rational(token).get_d();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    bad_token(token);
  }
  if (used != token.size() || !std::isfinite(v)) bad_token(token);
  return v;
}

// Splits "a+bi" into its real and imaginary tokens.
std::pair<std::string, std::string> split_complex(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) bad_token(s);
  if (s.back() != 'i') return {s, "0"};
  std::string body = s.substr(0, s.size() - 1);
  std::size_t pos = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      pos = k;
      break;
    }
  std::string re = pos == std::string::npos ? "0" : body.substr(0, pos);
  std::string im = pos == std::string::npos ? body : body.substr(pos);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re, im};
}

template <class C>
C parse_scalar(const std::string& token) {
  auto [re, im] = split_complex(token);
  if constexpr (ScalarTraits<C>::kExact)
    return GR(parse_rational(re), parse_rational(im));
  else
    return cd(parse_double(re), parse_double(im));
}

nlohmann::json encode(double x) { return x; }
nlohmann::json encode(const mpq_class& x) { return rational_string(x); }
nlohmann::json encode(const cd& x) { return {{"re", x.real()}, {"im", x.imag()}}; }
nlohmann::json encode(const GR& x) { return {{"re", rational_string(x.re)}, {"im", rational_string(x.im)}}; }

template <class T>
nlohmann::json encode(const Matrix<T>& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(encode(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class T>
nlohmann::json encode(const std::vector<T>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const T& x : v) out.push_back(encode(x));
  return out;
}

std::vector<std::string> holomorphic_frame(int m, bool fibre) {
  std::vector<std::string> f;
  for (int j = 1; j <= m; ++j) f.push_back("dz" + std::to_string(j));
  if (fibre) f.push_back("db");
  return f;
}

std::vector<std::string> real_frame(int m, bool radial) {
  std::vector<std::string> f;
  if (radial) f.push_back("r");
  for (int j = 1; j <= m; ++j) {
    f.push_back("x" + std::to_string(j));
    f.push_back("y" + std::to_string(j));
  }
  f.push_back("theta");
  return f;
}

template <class C>
nlohmann::json evaluate_at(const JobConfig& c, const kahler::PotentialSpec& spec, const std::string& quantity,
                           const nlohmann::json& request) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  const int m = spec.dimension();
  std::vector<C> z(m);
  if (request.contains("z")) {
    const auto& tokens = request["z"];
    if (!tokens.is_array() || static_cast<int>(tokens.size()) != m)
      fail(ErrorCode::kInvalidArgument, "point needs " + std::to_string(m) + " chart coordinates");
    for (int v = 0; v < m; ++v) {
      if (!tokens[v].is_string()) fail(ErrorCode::kInvalidArgument, "chart coordinates must be strings");
      z[v] = parse_scalar<C>(tokens[v].get<std::string>());
    }
  }
  auto text = [&](const char* key, const char* fallback) {
    if (!request.contains(key)) return std::string(fallback);
    if (!request[key].is_string()) fail(ErrorCode::kInvalidArgument, std::string("'") + key + "' must be a string");
    return request[key].get<std::string>();
  };

  nlohmann::json out;
  out["quantity"] = quantity;
  out["backend"] = T::kName;
  nlohmann::json point;
  point["z"] = encode(z);

  if (quantity == "potential") {
    R k = kahler::potential_value(spec, z);
    out["frame"] = nlohmann::json::array();
    out["K"] = encode(k);
    out["log_K"] = std::log(to_double(k));
    nlohmann::json factors = nlohmann::json::array();
    for (const kahler::PotentialFactor& f : spec.factors()) {
      R norm = f.minors.norm_square_eval<C, T>(z);
      factors.push_back({{"alpha", f.alpha},
                         {"exponent", f.exponent},
                         {"norm_square", encode(norm)},
                         {"log_norm_square", std::log(to_double(norm))}});
    }
    out["factors"] = factors;
  } else if (quantity == "metric") {
    auto s = kahler::metric_at(spec, z);
    out["frame"] = holomorphic_frame(m, false);
    out["components"] = encode(s.metric());
    out["hessian"] = encode(s.hessian);
    out["scale"] = "1/(2 pi)";
  } else if (quantity == "ricci") {
    out["frame"] = holomorphic_frame(m, false);
    out["components"] = encode(kahler::ricci_at(spec, z));
  } else if (quantity == "eta" || quantity == "phi" || quantity == "sasaki_g" || quantity == "cone_g") {
    auto s = sasaki::build_sasaki(spec, z, c.jet_order);
    if (quantity == "eta") {
      std::vector<R> eta(s.dim);
      for (int a = 0; a < s.dim; ++a) eta[a] = R(s.eta_bar[a] / s.c);
      out["frame"] = real_frame(m, false);
      out["components"] = encode(eta);
      out["eta_bar"] = encode(s.eta_bar);
      out["reeb"] = encode(s.xi);
    } else if (quantity == "phi") {
      out["frame"] = real_frame(m, false);
      out["components"] = encode(s.phi);
    } else if (quantity == "sasaki_g") {
      out["frame"] = real_frame(m, false);
      out["components"] = encode(s.g);
    } else {
      R r;
      if constexpr (T::kExact)
        r = parse_rational(text("r", "1"));
      else
        r = parse_double(text("r", "1"));
      point["r"] = encode(r);
      auto k = sasaki::sasaki_curvature(s);
      auto cs = cone::build_cone(s, k, r);
      out["frame"] = real_frame(m, true);
      out["components"] = encode(cs.metric.g);
    }
  } else if (quantity == "calabi_g") {
    if constexpr (T::kExact) {
      fail(ErrorCode::kInvalidArgument, "calabi_g involves fractional powers; use the float backend");
    } else {
      cd b = parse_scalar<cd>(text("b", "0"));
      point["b"] = encode(b);
      out["frame"] = holomorphic_frame(m, true);
      out["components"] = encode(cone::calabi_metric_at(spec, {z, b}, c.constant));
    }
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown quantity '" + quantity +
                                          "' (potential, metric, ricci, eta, phi, sasaki_g, cone_g, calabi_g)");
  }
  out["point"] = point;
  return out;
}

}  // namespace

nlohmann::json evaluate(const JobConfig& c, const nlohmann::json& request) {
  if (!request.is_object() || !request.contains("quantity") || !request["quantity"].is_string())
    fail(ErrorCode::kInvalidArgument, "eval request needs a 'quantity' string");
  kahler::PotentialSpec spec(c.rank, c.theta, c.ell);
  const std::string quantity = request["quantity"].get<std::string>();
  return c.exact() ? evaluate_at<GR>(c, spec, quantity, request) : evaluate_at<cd>(c, spec, quantity, request);
}

}  // namespace flagcone::report

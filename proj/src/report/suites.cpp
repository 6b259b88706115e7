#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "cone/asymptotics.hpp"
#include "cone/calabi.hpp"
#include "cone/cone.hpp"
#include "cone/eguchi_hanson.hpp"
#include "kahler/metric.hpp"
#include "report/report.hpp"
#include "report/sampling.hpp"
#include "sasaki/structure.hpp"

namespace flagcone::report {

namespace {

using cd = std::complex<double>;
using GR = GaussianRational;

struct CheckSpec {
  const char* name;
  const char* anchor;
  double tolerance;
};

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Residual flag(bool ok) {
  Residual r;
  r.absorb(ok ? 0.0 : 1.0);
  return r;
}

// Collects per-sample residual vectors, one entry per CheckSpec.
class SuiteBuilder {
 public:
  SuiteBuilder(const JobConfig& c, std::string name) : config_(c) { result_.name = std::move(name); }

  void add(const CheckSpec& spec, const std::vector<Residual>& samples, const std::string& backend, std::string detail = "") {
    Check ch;
    ch.name = spec.name;
    ch.anchor = spec.anchor;
    ch.backend = backend;
    ch.samples = static_cast<int>(samples.size());
    ch.detail = std::move(detail);
    ch.exact = !samples.empty();
    ch.exact_zero = true;
    for (const Residual& r : samples) {
      ch.residual = std::isnan(r.value) || std::isnan(ch.residual) ? NAN : std::max(ch.residual, r.value);
      ch.exact = ch.exact && r.exact;
      ch.exact_zero = ch.exact_zero && r.exact_zero;
    }
    if (ch.exact) {
      ch.tolerance = 0;
      ch.passed = ch.exact_zero && config_.tolerance_scale > 0;
    } else {
      ch.exact_zero = false;
      ch.tolerance = spec.tolerance * config_.tolerance_scale;
      ch.passed = ch.residual < ch.tolerance;
    }
    result_.checks.push_back(std::move(ch));
  }

  // Column `index` of a samples x checks table.
  static std::vector<Residual> column(const std::vector<std::vector<Residual>>& table, std::size_t index) {
    std::vector<Residual> out;
    for (const auto& row : table) out.push_back(row.at(index));
    return out;
  }

  void add_table(const std::vector<CheckSpec>& specs, const std::vector<std::vector<Residual>>& table, const std::string& backend) {
    for (std::size_t k = 0; k < specs.size(); ++k) add(specs[k], column(table, k), backend);
  }

  SuiteResult finish() {
    bool ok = true;
    for (const Check& c : result_.checks) ok = ok && c.passed;
    result_.status = ok ? "pass" : "fail";
    return std::move(result_);
  }

 private:
  const JobConfig& config_;
  SuiteResult result_;
};

template <class F>
std::vector<std::vector<Residual>> run_samples(const JobConfig& c, const char* suite, F&& per_sample) {
  std::vector<std::vector<Residual>> table(c.samples);
  parallel_for(c.samples, c.threads, [&](int k) {
    std::mt19937_64 rng(stream_seed(c.seed, suite, k));
    table[k] = per_sample(rng, k);
  });
  return table;
}

std::vector<cd> to_float(const std::vector<cd>& z) { return z; }
std::vector<cd> to_float(const std::vector<GR>& z) {
  std::vector<cd> out;
  for (const GR& w : z) out.emplace_back(w.re.get_d(), w.im.get_d());
  return out;
}

bool is_projective_space(const kahler::PotentialSpec& spec) {
  const auto& theta = spec.parabolic().theta;
  if (static_cast<int>(theta.size()) != spec.rank() - 1) return false;
  for (std::size_t k = 0; k < theta.size(); ++k)
    if (theta[k] != static_cast<int>(k) + 2) return false;
  return true;
}

// ---------------------------------------------------------------------------

SuiteResult info_suite(const JobConfig& c, const kahler::PotentialSpec& spec) {
  SuiteBuilder b(c, "info");
  const lie::ParabolicChoice& p = spec.parabolic();
  auto exact_int = [](long long diff) {
    Residual r;
    r.exact = true;
    r.absorb(mpq_class(static_cast<long>(diff)));
    return r;
  };
  b.add({"chart_dimension", "dim X = |Pi+ \\ <Theta>+| = number of chart slots", 0},
        {exact_int(spec.chart().dimension() - p.dimension())}, "exact");
  // delta_P is the sum of the complementary positive roots.
  std::vector<int> sum(spec.rank(), 0);
  for (const lie::Root& r : p.complement_roots)
    for (int k = 0; k < spec.rank(); ++k) sum[k] += r.simple[k];
  long long delta_diff = 0;
  for (int k = 0; k < spec.rank(); ++k) delta_diff += std::abs(sum[k] - p.delta[k]);
  b.add({"delta_sum", "delta_P = sum of roots in Pi+ \\ <Theta>+", 0}, {exact_int(delta_diff)}, "exact");
  long long pairing_diff = 0;
  int g = 0;
  for (const lie::Pairing& pr : p.pairings) {
    pairing_diff += std::abs(spec.roots().pairing(p.delta, pr.alpha) - pr.value);
    g = std::gcd(g, pr.value);
  }
  b.add({"fano_index", "I = gcd_alpha <delta_P, h_alpha>", 0}, {exact_int(pairing_diff + std::abs(g - p.fano_index))}, "exact");
  b.add({"picard_rank", "b2 = |Sigma \\ Theta| = number of potential factors", 0},
        {exact_int(std::abs(p.picard_rank - static_cast<int>(spec.factors().size())))}, "exact");
  return b.finish();
}

template <class C>
SuiteResult base_suite(const JobConfig& c, const kahler::PotentialSpec& spec) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  const int m = spec.dimension();
  const std::vector<CheckSpec> specs = {
      {"kahler_einstein", "-d dbar log det(d dbar log K) = d dbar log K", 1e-8},
      {"scalar_curvature", "S(pi/(n+1) g_X) = 4n(n+1)", 1e-7},
      {"metric_positive", "d dbar log K > 0", 0.5},
  };
  auto table = run_samples(c, "base", [&](std::mt19937_64& rng, int) {
    std::vector<C> z = chart_point<C>(rng, m);
    std::vector<Residual> row;
    row.push_back(kahler::einstein_residual(spec, z));
    bool positive = true;
    Matrix<C> h;
    try {
      h = kahler::metric_at(spec, z).hessian;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInternalConsistency) throw;
      positive = false;
      h = kahler::mixed_hessian(kahler::log_potential_jet(spec, z, 1, 1), m, m);
    }
    Residual sc;
    sc.exact = T::kExact;
    sc.absorb(R(kahler::scalar_curvature(spec, h, kahler::ricci_at(spec, z)) - R(4 * m * (m + 1))));
    row.push_back(sc);
    row.push_back(flag(positive));
    return row;
  });
  SuiteBuilder b(c, "base");
  b.add_table(specs, table, T::kName);
  return b.finish();
}

template <class C>
SuiteResult sasaki_suite(const JobConfig& c, const kahler::PotentialSpec& spec) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  const int m = spec.dimension();
  const std::vector<CheckSpec> specs = {
      {"reeb_normalisation", "eta(xi) = 1", 1e-8},
      {"reeb_interior", "i_xi d eta = 0", 1e-8},
      {"contact_volume", "eta ^ (d eta)^n != 0", 0.5},
      {"phi_square", "phi^2 = -1 + eta (x) xi, phi xi = 0, eta o phi = 0", 1e-8},
      {"metric_compatibility", "g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)", 1e-8},
      {"contact_metric", "d eta(X, Y) = 2 g(phi X, Y)", 1e-8},
      {"normality", "[phi, phi] + d eta (x) xi = 0", 1e-8},
      {"curvature_form", "d eta = (ell/I) pi^* (i d dbar log K)", 1e-8},
      {"contact_form", "eta = (ell/2I) d^c log K + d theta", 1e-8},
      {"killing", "L_xi g = 0", 1e-8},
      {"einstein", "Ric(g_M) = 2n g_M", 1e-7},
      {"reeb_curvature", "R(X, Y) xi = eta(Y) X - eta(X) Y", 1e-7},
      {"scalar_curvature", "S(g_M) = 2n(2n+1)", 1e-7},
  };
  auto table = run_samples(c, "sasaki", [&](std::mt19937_64& rng, int) {
    std::vector<C> z = chart_point<C>(rng, m);
    auto s = sasaki::build_sasaki(spec, z, c.jet_order);
    auto k = sasaki::sasaki_curvature(s);
    Residual vol = flag(sasaki::contact_volume(s) > R(0));
    vol.exact = T::kExact;
    Residual sc;
    sc.exact = T::kExact;
    sc.absorb(R(k.curvature.scalar - R(2 * m * (2 * m + 1))));
    return std::vector<Residual>{
        sasaki::reeb_normalisation(s),   sasaki::reeb_interior_d_eta(s),
        vol,                             sasaki::phi_square(s),
        sasaki::metric_compatibility(s), sasaki::contact_metric_axiom(s),
        sasaki::nijenhuis(s),            sasaki::d_eta_matches_base(spec, s),
        sasaki::contact_form_matches(spec, s), sasaki::killing(s, k),
        sasaki::einstein(s, k),          sasaki::curvature_on_reeb(s, k),
        sc,
    };
  });
  SuiteBuilder b(c, "sasaki");
  b.add_table(specs, table, T::kName);
  return b.finish();
}

template <class C>
SuiteResult cone_suite(const JobConfig& c, const kahler::PotentialSpec& spec) {
  using T = ScalarTraits<C>;
  using R = typename T::Real;
  const int m = spec.dimension();
  const bool flat = is_projective_space(spec) && spec.ell() == 1;
  const std::vector<CheckSpec> specs = {
      {"complex_structure", "J^2 = -1", 1e-8},
      {"hermitian", "g(JX, JY) = g(X, Y)", 1e-8},
      {"integrable", "N_J = 0", 1e-8},
      {"kahler_form", "g(J., .) = r dr ^ eta + (r^2/2) d eta", 1e-8},
      {"closed", "d omega = 0", 1e-8},
      {"parallel", "nabla J = 0", 1e-7},
      {"ricci_flat", "Ric(dr^2 + r^2 g_M) = 0", 1e-7},
  };
  const std::vector<CheckSpec> float_specs = {
      {"global_potential", "(i/2) d dbar r^2 = (ell(n+1)/I) omega_C", 1e-8},
      {"radial_round_trip", "(r, theta) -> b -> (r, theta) = id", 1e-12},
  };
  const std::vector<CheckSpec> flat_specs = {
      {"flat_metric", "C(S^{2n+1}) = C^{n+1} \\ 0 isometrically", 1e-10},
      {"flat_complex_structure", "dF o J = i dF", 1e-10},
  };
  std::vector<std::vector<Residual>> floats(c.samples), flats(c.samples);
  auto table = run_samples(c, "cone", [&](std::mt19937_64& rng, int sample) {
    std::vector<C> z = chart_point<C>(rng, m);
    R r = cone_radius<R>(rng);
    auto s = sasaki::build_sasaki(spec, z, c.jet_order);
    auto k = sasaki::sasaki_curvature(s);
    auto cs = cone::build_cone(s, k, r);
    auto curv = geometry::curvature(cs.metric);
    std::vector<Residual> row = {cone::cone_j_square(cs),   cone::cone_hermitian(cs),   cone::cone_integrable(cs),
                                 cone::cone_form_matches(s, cs), cone::cone_closed(cs), cone::cone_parallel_j(cs, curv),
                                 cone::cone_ricci_flat<C>(curv)};

    std::vector<cd> zf = to_float(z);
    auto sf = sasaki::build_sasaki(spec, zf, c.jet_order);
    auto kf = sasaki::sasaki_curvature(sf);
    cone::PotentialComparison pc = cone::global_potential_check(spec, sf, kf, fibre_point(rng));
    Residual rel, trip;
    rel.absorb(pc.relative);
    trip.absorb(pc.round_trip);
    floats[sample] = {rel, trip};
    if (flat) {
      auto csf = cone::build_cone(sf, kf, to_double(r));
      cone::FlatComparison fc = cone::flat_model_check(sf, csf);
      flats[sample] = {fc.metric, fc.complex_structure};
    }
    return row;
  });
  SuiteBuilder b(c, "cone");
  b.add_table(specs, table, T::kName);
  b.add_table(float_specs, floats, "float");
  if (flat) b.add_table(flat_specs, flats, "float");
  return b.finish();
}

SuiteResult calabi_suite(const JobConfig& c, const kahler::PotentialSpec& spec) {
  const int m = spec.dimension();
  const double constant = c.constant;
  const std::vector<CheckSpec> specs = {
      {"ricci_flat", "-d dbar log det g_CY = 0", 1e-6},
      {"positive", "g_CY > 0", 0.5},
      {"zero_section", "g_CY|_{b=0} = C^{1/(n+1)} g_X (+) C^{1/(n+1)} K/((n+1) C)", 1e-12},
      {"monge_ampere", "det g_CY = K det g_X / (n+1) along the fibre", 1e-10},
  };
  std::vector<double> literal(c.samples);
  auto table = run_samples(c, "calabi", [&](std::mt19937_64& rng, int sample) {
    std::vector<cd> z = float_point(rng, m);
    cd b = fibre_point(rng);
    cone::CalabiRicci h = cone::calabi_ricci_check(spec, {z, b}, constant);
    literal[sample] = cone::calabi_ricci_check(spec, {z, b}, constant, cone::FibreReading::kLiteral).ricci.value;
    Residual ma;
    ma.absorb(cone::monge_ampere_spread(spec, z, {b, 2.0 * b, cd(0, 0.5) * b}, constant));
    return std::vector<Residual>{h.ricci, flag(h.min_eigenvalue > 0), cone::zero_section_check(spec, z, constant), ma};
  });
  SuiteBuilder b(c, "calabi");
  double worst_literal = 0;
  for (double v : literal) worst_literal = std::max(worst_literal, v);
  b.add(specs[0], SuiteBuilder::column(table, 0), "float",
        "fibre norm |b|^2 K; the coordinate reading |b|^2 leaves residual " + short_number(worst_literal));
  for (std::size_t k = 1; k < specs.size(); ++k) b.add(specs[k], SuiteBuilder::column(table, k), "float");

  if (spec.rank() == 1) {
    // Eguchi-Hanson lives on the same space as the canonical bundle of CP^1.
    const std::vector<CheckSpec> eh = {
        {"eguchi_hanson_ricci_flat", "-d dbar log det(d dbar F_s) = 0, s in {0.1, 0.5, 1}", 1e-8},
        {"eguchi_hanson_flat_limit", "d dbar F_s -> d dbar |z|^2 as s -> 0 (s = 1e-3, R = 1)", 1e-2},
        {"eguchi_hanson_phase", "g_s(e^{ia} z) = g_s(z)", 1e-12},
    };
    auto eh_table = run_samples(c, "eguchi_hanson", [&](std::mt19937_64& rng, int) {
      std::vector<cd> z;
      do z = float_point(rng, 2);
      while (std::norm(z[0]) + std::norm(z[1]) < 1e-2);
      Residual ricci;
      for (double s : {0.1, 0.5, 1.0}) ricci.merge(cone::eguchi_hanson_ricci(s, z));
      const double norm = std::sqrt(std::norm(z[0]) + std::norm(z[1]));
      Residual limit, phase;
      limit.absorb(cone::eguchi_hanson_flat_gap(1e-3, {z[0] / norm, z[1] / norm}));
      phase.absorb(cone::eguchi_hanson_phase_residual(0.5, z, std::uniform_real_distribution<double>(0, 6.283)(rng)));
      return std::vector<Residual>{ricci, limit, phase};
    });
    b.add_table(eh, eh_table, "float");
  }
  return b.finish();
}

SuiteResult asymptotics_suite(const JobConfig& c, const kahler::PotentialSpec& spec) {
  const int m = spec.dimension();
  std::vector<std::string> details(c.samples);
  auto table = run_samples(c, "asymptotics", [&](std::mt19937_64& rng, int sample) {
    std::vector<cd> z = float_point(rng, m);
    const double arg = std::uniform_real_distribution<double>(-3.14159, 3.14159)(rng);
    auto s = sasaki::build_sasaki(spec, z, c.jet_order);
    auto k = sasaki::sasaki_curvature(s);
    cone::AsymptoticRun run = cone::asymptotic_schedule(spec, s, k, c.constant, c.radii, arg);
    cone::AsymptoticRun other = cone::asymptotic_schedule(spec, s, k, 2 * c.constant, c.radii, arg);
    std::string d;
    for (const auto& a : run.samples) d += (d.empty() ? "" : ", ") + std::string("|b|=") + short_number(a.fibre_radius) + ": " + short_number(a.gap);
    details[sample] = d;
    Residual last, spread, exponent;
    last.absorb(run.samples.back().gap);
    spread.absorb(std::abs(run.samples.back().gap - other.samples.back().gap));
    const std::size_t n = c.radii.size();
    exponent.absorb(std::abs(cone::growth_exponent(spec, z, c.constant, c.radii[n - 2], c.radii[n - 1]) - 1.0 / (m + 1)));
    return std::vector<Residual>{flag(run.strictly_decreasing), last, spread, exponent};
  });
  SuiteBuilder b(c, "asymptotics");
  b.add({"gap_decreasing", "||g_C^{-1} g_CY - 1|| strictly decreasing along the radius schedule", 0.5},
        SuiteBuilder::column(table, 0), "float", "sample 0: " + details[0]);
  b.add({"final_gap", "||g_C^{-1} g_CY - 1|| at the largest radius", 1e-3}, SuiteBuilder::column(table, 1), "float");
  b.add({"constant_independence", "gap(C) - gap(2C) -> 0", 1e-3}, SuiteBuilder::column(table, 2), "float");
  b.add({"growth_exponent", "d log g_CY / d log |b|^2 -> 1/(n+1)", 1e-4}, SuiteBuilder::column(table, 3), "float");
  return b.finish();
}

SuiteResult refused(const std::string& name, const kahler::PotentialSpec& spec) {
  SuiteResult r;
  r.name = name;
  r.status = "refused";
  r.detail = "needs ell = I = " + std::to_string(spec.fano_index()) + "; ell = " + std::to_string(spec.ell()) +
             " has crepancy status " + std::string(lie::to_string(spec.parabolic().crepancy()));
  return r;
}

}  // namespace

VerificationReport verify(const JobConfig& c) {
  kahler::PotentialSpec spec(c.rank, c.theta, c.ell);
  VerificationReport out;
  out.config = c;
  out.info = info_json(c);
  const bool crepant = spec.ell() == spec.fano_index();
  for (const std::string& name : c.suites) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
      if (name == "info") {
        r = info_suite(c, spec);
      } else if (name == "base") {
        r = c.exact() ? base_suite<GR>(c, spec) : base_suite<cd>(c, spec);
      } else if (name == "sasaki") {
        r = c.exact() ? sasaki_suite<GR>(c, spec) : sasaki_suite<cd>(c, spec);
      } else if (name == "cone") {
        r = c.exact() ? cone_suite<GR>(c, spec) : cone_suite<cd>(c, spec);
      } else if (!crepant) {
        r = refused(name, spec);
      } else if (name == "calabi") {
        r = calabi_suite(c, spec);
      } else {
        r = asymptotics_suite(c, spec);
      }
    } catch (const Error& e) {
      r = SuiteResult{};
      r.name = name;
      r.status = "fail";
      r.detail = std::string(to_string(e.code())) + ": " + e.what();
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.suites.push_back(std::move(r));
  }
  out.passed = true;
  for (const SuiteResult& r : out.suites) out.passed = out.passed && r.status != "fail";
  return out;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = config_to_json(r.config);
  j["info"] = r.info;
  j["suites"] = nlohmann::json::array();
  for (const SuiteResult& s : r.suites) {
    nlohmann::json js;
    js["name"] = s.name;
    js["status"] = s.status;
    if (!s.detail.empty()) js["detail"] = s.detail;
    if (r.config.timing) js["wall_time_s"] = s.wall_time;
    js["checks"] = nlohmann::json::array();
    for (const Check& c : s.checks) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["anchor"] = c.anchor;
      jc["backend"] = c.backend;
      jc["samples"] = c.samples;
      jc["tolerance"] = c.tolerance;
      jc["residual"] = c.residual;
      if (c.exact) jc["exact_zero"] = c.exact_zero;
      jc["passed"] = c.passed;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      js["checks"].push_back(std::move(jc));
    }
    j["suites"].push_back(std::move(js));
  }
  j["passed"] = r.passed;
  return j;
}

}  // namespace flagcone::report

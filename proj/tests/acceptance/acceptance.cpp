// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Usage: acceptance [path-to-flagcone-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "common/error.hpp"
#include "kahler/potential.hpp"
#include "lie/root_system.hpp"
#include "rep/big_cell.hpp"
#include "report/report.hpp"

using namespace flagcone;

namespace {

struct Example {
  const char* name;
  int rank;
  std::vector<int> theta;
  int ell;
};

// Links used for the Sasaki and cone criteria.
const std::vector<Example> kLinks = {
    {"S^3", 1, {}, 1},         {"RP^3", 1, {}, 2},        {"S^5/Z_3", 2, {2}, 3},
    {"V_2(R^6)/Z_4", 3, {1, 3}, 4}, {"Q(K_SU3/T2)", 2, {}, 2},
};

// Bases whose canonical bundles carry the Calabi metric (ell = I).
const std::vector<Example> kCrepant = {
    {"K_CP^1", 1, {}, 2}, {"K_CP^2", 2, {2}, 3}, {"K_Gr(2,4)", 3, {1, 3}, 4}, {"K_SU3/T2", 2, {}, 2},
};

const std::vector<Example> kBases = {
    {"CP^1", 1, {}, 1}, {"CP^2", 2, {2}, 1}, {"Gr(2,4)", 3, {1, 3}, 1}, {"SU3/T2", 2, {}, 1},
};

class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool passed() const { return passed_; }
  std::string text() const { return passed_ ? notes_ : failures_; }

 private:
  bool passed_ = true;
  std::string failures_, notes_;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

report::JobConfig job(const Example& e, std::vector<std::string> suites, const std::string& backend, int samples) {
  report::JobConfig c;
  c.rank = e.rank;
  c.theta = e.theta;
  c.ell = e.ell;
  c.backend = backend;
  c.samples = samples;
  c.seed = 2024;
  c.suites = std::move(suites);
  c.suites_explicit = true;
  return c;
}

const report::Check* find(const report::VerificationReport& r, const std::string& suite, const std::string& check) {
  for (const auto& s : r.suites)
    if (s.name == suite)
      for (const auto& c : s.checks)
        if (c.name == check) return &c;
  return nullptr;
}

// Requires check `name` in `suite` to exist with residual below `bound`.
double expect_below(Outcome& out, const report::VerificationReport& r, const Example& e, const std::string& suite,
                    const std::string& name, double bound) {
  const report::Check* c = find(r, suite, name);
  if (!c) {
    out.require(false, std::string(e.name) + ": no " + suite + "." + name);
    return NAN;
  }
  out.require(c->residual < bound, std::string(e.name) + " " + name + " " + sci(c->residual) + " >= " + sci(bound));
  return c->residual;
}

void expect_exact(Outcome& out, const report::VerificationReport& r, const Example& e, const std::string& suite,
                  const std::string& name, int min_samples) {
  const report::Check* c = find(r, suite, name);
  out.require(c && c->exact && c->exact_zero && c->samples >= min_samples,
              std::string(e.name) + " " + name + " not exactly zero at " + std::to_string(min_samples) + " points");
}

Outcome combinatorics() {
  Outcome out;
  auto choice = [](int rank, std::vector<int> theta) {
    return lie::make_parabolic(lie::RootSystem::type_a(rank), std::move(theta), 1);
  };
  auto pairing = [](const lie::ParabolicChoice& p, int alpha) {
    for (const auto& pr : p.pairings)
      if (pr.alpha == alpha) return pr.value;
    return -1;
  };
  auto gr = choice(3, {1, 3});
  out.require(gr.delta == std::vector<int>{2, 4, 2}, "Gr(2,4) delta");
  out.require(pairing(gr, 2) == 4 && gr.fano_index == 4, "Gr(2,4) pairing or index");
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> theta;
    for (int k = 2; k <= n; ++k) theta.push_back(k);
    auto cp = choice(n, theta);
    out.require(pairing(cp, 1) == n + 1 && cp.fano_index == n + 1, "CP^" + std::to_string(n) + " pairing");
  }
  auto fl = choice(2, {});
  out.require(fl.delta == std::vector<int>{2, 2} && fl.fano_index == 2, "SU3/T2 delta or index");
  out.note("Gr(2,4) delta = 2a1+4a2+2a3, I = 4; CP^1..6 I = n+1; SU3/T2 I = 2");
  return out;
}

Outcome potential_forms() {
  using rep::Polynomial;
  Outcome out;
  auto norm = [](int rank, std::vector<int> theta, int k) {
    rep::BigCellChart chart(lie::RootSystem::type_a(rank), theta);
    return rep::MinorPolynomialSet::build(chart, k).norm_square_polynomial();
  };
  auto one_plus = [](int m, const std::vector<int>& vars) {
    Polynomial p = Polynomial::constant(2 * m, 1);
    for (int v : vars) p += Polynomial::variable(2 * m, v) * Polynomial::variable(2 * m, m + v);
    return p;
  };
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> theta, vars;
    for (int k = 2; k <= n; ++k) theta.push_back(k);
    for (int v = 0; v < n; ++v) vars.push_back(v);
    out.require(norm(n, theta, 1) == one_plus(n, vars), "CP^" + std::to_string(n) + " norm square");
  }
  {
    const int m = 4;
    auto u = [&](int v) { return Polynomial::variable(2 * m, v); };
    auto w = [&](int v) { return Polynomial::variable(2 * m, m + v); };
    Polynomial det = u(0) * u(3) - u(1) * u(2), det_bar = w(0) * w(3) - w(1) * w(2);
    out.require(norm(3, {1, 3}, 2) == one_plus(m, {0, 1, 2, 3}) + det * det_bar, "Gr(2,4) norm square");
  }
  {
    const int m = 3;
    auto u = [&](int v) { return Polynomial::variable(2 * m, v); };
    auto w = [&](int v) { return Polynomial::variable(2 * m, m + v); };
    out.require(norm(2, {}, 1) == one_plus(m, {0, 1}), "SU3/T2 first factor");
    out.require(norm(2, {}, 2) == one_plus(m, {2}) + (u(0) * u(2) - u(1)) * (w(0) * w(2) - w(1)), "SU3/T2 second factor");
    kahler::PotentialSpec spec(2, {}, 1);
    out.require(spec.factors().size() == 2, "SU3/T2 potential is a product of two factors");
  }
  out.note("CP^1..6, Gr(2,4) and SU3/T2 coefficient-exact");
  return out;
}

Outcome kahler_einstein() {
  Outcome out;
  double worst = 0;
  for (const Example& e : kBases) {
    auto exact = report::verify(job(e, {"base"}, "exact", 5));
    expect_exact(out, exact, e, "base", "kahler_einstein", 5);
    auto fl = report::verify(job(e, {"base"}, "float", 10));
    worst = std::max(worst, expect_below(out, fl, e, "base", "kahler_einstein", 1e-8));
  }
  out.note("exact zero at 5 points each, float max " + sci(worst));
  return out;
}

Outcome scalar_curvature() {
  Outcome out;
  double worst = 0;
  for (const Example& e : kBases) {
    auto r = report::verify(job(e, {"base"}, "float", 10));
    worst = std::max(worst, expect_below(out, r, e, "base", "scalar_curvature", 1e-7));
  }
  out.note("max |S - 4n(n+1)| " + sci(worst));
  return out;
}

Outcome contact_axioms() {
  Outcome out;
  double worst = 0;
  for (const Example& base : kBases) {
    const int index = lie::make_parabolic(lie::RootSystem::type_a(base.rank), base.theta, 1).fano_index;
    for (int ell : {1, index}) {
      Example e = base;
      e.ell = ell;
      auto r = report::verify(job(e, {"sasaki"}, "float", 10));
      for (const char* name : {"reeb_normalisation", "reeb_interior", "phi_square", "metric_compatibility", "contact_metric",
                               "normality"})
        worst = std::max(worst, expect_below(out, r, e, "sasaki", name, 1e-8));
      expect_below(out, r, e, "sasaki", "contact_volume", 0.5);
    }
  }
  out.note("ell in {1, I}, max residual " + sci(worst));
  return out;
}

Outcome sasaki_einstein() {
  Outcome out;
  double ric = 0, scal = 0;
  for (const Example& e : kLinks) {
    auto r = report::verify(job(e, {"sasaki"}, "float", 10));
    ric = std::max(ric, expect_below(out, r, e, "sasaki", "einstein", 1e-7));
    scal = std::max(scal, expect_below(out, r, e, "sasaki", "scalar_curvature", 1e-7));
  }
  out.note("Ric " + sci(ric) + ", scalar " + sci(scal));
  return out;
}

Outcome cone_ricci_flat() {
  Outcome out;
  double worst = 0;
  for (const Example& e : kLinks) {
    auto r = report::verify(job(e, {"cone"}, "float", 10));
    worst = std::max(worst, expect_below(out, r, e, "cone", "ricci_flat", 1e-7));
    if (e.rank == 1 && e.ell == 1) {
      double flat = expect_below(out, r, e, "cone", "flat_metric", 1e-10);
      out.note("C(S^3) vs C^2 " + sci(flat));
    }
  }
  out.note("Ric max " + sci(worst));
  return out;
}

Outcome global_potential() {
  Outcome out;
  double worst = 0;
  for (const Example& e : kLinks) {
    auto r = report::verify(job(e, {"cone"}, "float", 10));
    worst = std::max(worst, expect_below(out, r, e, "cone", "global_potential", 1e-8));
  }
  out.note("max relative residual " + sci(worst));
  return out;
}

Outcome calabi() {
  Outcome out;
  double ric = 0, block = 0;
  for (const Example& e : kCrepant) {
    auto r = report::verify(job(e, {"calabi"}, "float", 10));
    ric = std::max(ric, expect_below(out, r, e, "calabi", "ricci_flat", 1e-6));
    block = std::max(block, expect_below(out, r, e, "calabi", "zero_section", 1e-12));
    expect_below(out, r, e, "calabi", "positive", 0.5);
  }
  out.note("Ric " + sci(ric) + ", b=0 block " + sci(block) + " (float)");
  return out;
}

Outcome asymptotics() {
  Outcome out;
  const Example& e = kCrepant.front();
  report::JobConfig c = job(e, {"asymptotics"}, "float", 10);
  c.radii = {10, 100, 1000};
  auto r = report::verify(c);
  expect_below(out, r, e, "asymptotics", "gap_decreasing", 0.5);
  double last = expect_below(out, r, e, "asymptotics", "final_gap", 1e-3);
  out.note("K_CP^1 gap at R = 1e3: " + sci(last));
  return out;
}

Outcome eguchi_hanson() {
  Outcome out;
  const Example& e = kCrepant.front();
  auto r = report::verify(job(e, {"calabi"}, "float", 10));
  double ric = expect_below(out, r, e, "calabi", "eguchi_hanson_ricci_flat", 1e-8);
  double gap = expect_below(out, r, e, "calabi", "eguchi_hanson_flat_limit", 1e-2);
  out.note("Ric " + sci(ric) + ", flat gap " + sci(gap));
  return out;
}

Outcome crepancy_gate(const std::string& cli) {
  Outcome out;
  try {
    nlohmann::json j = {{"rank", 1}, {"theta", nlohmann::json::array()}, {"ell", 3}, {"suites", {"calabi"}}};
    report::parse_config(j);
    out.require(false, "ell = 3 on CP^1 accepted");
  } catch (const Error& err) {
    out.require(err.code() == ErrorCode::kNotCrepant, "wrong error code");
    out.require(std::string(err.what()).find("non-root") != std::string::npos, "status missing from message");
  }
  auto defaults = report::verify([] {
    report::JobConfig c;
    c.rank = 1;
    c.ell = 3;
    c.samples = 1;
    return c;
  }());
  for (const auto& s : defaults.suites)
    if (s.name == "calabi") out.require(s.status == "refused", "default run does not refuse calabi");
  if (cli.empty()) {
    out.note("CLI not given, exit code unchecked");
  } else {
    int status = std::system((cli + " verify --rank 1 --theta \"\" --ell 3 --suites calabi >/dev/null 2>&1").c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    out.require(code == 2, "CLI exit code " + std::to_string(code));
    out.note("status non-root, CLI exit 2");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"combinatorial exactness", 1, combinatorics},
      {"potential golden forms", 1, potential_forms},
      {"Kahler-Einstein identity", 30, kahler_einstein},
      {"base scalar curvature", 60, scalar_curvature},
      {"contact metric axioms", 120, contact_axioms},
      {"Sasaki-Einstein", 300, sasaki_einstein},
      {"cone Ricci-flatness", 300, cone_ricci_flat},
      {"global potential", 300, global_potential},
      {"Calabi ansatz Ricci-flatness", 600, calabi},
      {"asymptotic cone", 300, asymptotics},
      {"Eguchi-Hanson", 60, eguchi_hanson},
      {"crepancy gate", 60, [&] { return crepancy_gate(cli); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("threw: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds < c.budget_s, "took " + sci(seconds) + " s, budget " + sci(c.budget_s));
    if (!out.passed()) ++failed;
    std::printf("%s %2zu %-30s %7.2fs  %s\n", out.passed() ? "PASS" : "FAIL", k + 1, c.title, seconds, out.text().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

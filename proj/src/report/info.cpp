#include "kahler/potential.hpp"
#include "report/report.hpp"

namespace flagcone::report {

nlohmann::json info_json(const JobConfig& c) {
  kahler::PotentialSpec spec(c.rank, c.theta, c.ell);
  const lie::ParabolicChoice& p = spec.parabolic();
  nlohmann::json j;
  j["series"] = "A";
  j["rank"] = spec.rank();
  j["theta"] = p.theta;
  j["manifold"] = spec.manifold_name();
  j["link"] = spec.link_name();
  j["complex_dimension"] = spec.dimension();
  nlohmann::json roots = nlohmann::json::array();
  for (const lie::Root& r : p.complement_roots) roots.push_back(lie::format_root(r.simple));
  j["complement_roots"] = roots;
  j["delta"] = lie::format_root(p.delta);
  j["delta_coordinates"] = p.delta;
  nlohmann::json pairings = nlohmann::json::array();
  for (const lie::Pairing& pr : p.pairings) pairings.push_back({{"alpha", pr.alpha}, {"value", pr.value}});
  j["pairings"] = pairings;
  j["fano_index"] = p.fano_index;
  j["picard_rank"] = p.picard_rank;
  j["ell"] = p.ell;
  j["crepancy"] = std::string(lie::to_string(p.crepancy()));
  return j;
}

}  // namespace flagcone::report

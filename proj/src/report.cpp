#include "cdlat/report.hpp"

namespace cdlat {

std::string render_analysis(const std::string& source, const CDReport& report,
                            const SylowCenterProfile& profile) {
  const SubgroupLattice& lat = report.lattice;
  std::string out;
  out += "source: " + source + "\n";
  out += "order: " + std::to_string(lat.group().order()) + "\n";
  out += std::string("abelian: ") + (lat.group().is_abelian() ? "yes" : "no") + "\n";
  out += "subgroups: " + std::to_string(lat.size()) + "\n";
  out += "m_star: " + std::to_string(report.m_star) + "\n";
  out += "cd_size: " + std::to_string(report.cd_members.size()) + "\n";
  out += "cd_members:\n";
  for (int idx : report.cd_members) {
    out += "  H" + std::to_string(idx) + " size=" + std::to_string(lat.subgroup(idx).size()) +
           " measure=" + std::to_string(report.measures[idx]) + "\n";
  }
  out += "min_member: H" + std::to_string(report.min_member) + " size=" +
         std::to_string(lat.subgroup(report.min_member).size()) + "\n";
  out += "max_member: H" + std::to_string(report.max_member) + " size=" +
         std::to_string(lat.subgroup(report.max_member).size()) + "\n";
  out += "deficiency: " + std::to_string(report.deficiency) + "\n";
  out += "measure_image:";
  for (long long v : report.measure_image) out += " " + std::to_string(v);
  out += "\n";
  out += "sylow_center_profile:";
  if (profile.entries.empty()) out += " (trivial group)";
  for (const auto& [p, np] : profile.entries)
    out += " " + std::to_string(p) + "^" + std::to_string(np);
  out += "\n";
  const long long im = static_cast<long long>(report.measure_image.size());
  out += "theorem_b: |Im(m_G)|=" + std::to_string(im) + " >= " + std::to_string(profile.bound) +
         " margin=" + std::to_string(im - profile.bound) + "\n";
  return out;
}

std::string render_verify_summary(const VerifySummary& summary) {
  std::string out;
  long long pass = 0, fail = 0, skipped = 0;
  for (const auto& rec : summary.records) {
    out += rec.summary_line();
    out += '\n';
    switch (rec.outcome) {
      case Outcome::pass:
        ++pass;
        break;
      case Outcome::fail:
        ++fail;
        break;
      case Outcome::not_checked:
        ++skipped;
        break;
    }
  }
  out += "result: records=" + std::to_string(summary.records.size()) +
         " pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) +
         " not-checked=" + std::to_string(skipped) + "\n";
  return out;
}

nlohmann::ordered_json verify_summary_to_json(const VerifySummary& summary) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& rec : summary.records) records.push_back(rec.to_json());
  j["records"] = std::move(records);
  j["any_fail"] = summary.any_fail;
  return j;
}

std::string render_catalog_listing(const Catalog& cat) {
  std::string out;
  for (const auto& entry : cat.entries) {
    out += entry.name + "\t" + std::to_string(entry.table.order()) + "\t" +
           spec_to_string(entry.spec) + "\n";
  }
  return out;
}

}  // namespace cdlat

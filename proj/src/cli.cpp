#include "cdlat/cli.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"
#include "cdlat/report.hpp"

namespace cdlat::cli {

namespace {

GroupTable resolve_source(const std::string& source) {
  if (looks_like_group_spec(source)) return build_group(parse_group_spec(source));
  return load_cayley_file(source);
}

std::optional<QuaternionRange> parse_quaternion_range(const std::string& text) {
  if (text == "none") return std::nullopt;
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw ParseError("quaternion range must be A..B or \"none\", got \"" + text + "\"");
  QuaternionRange range;
  try {
    range.lo = std::stoi(text.substr(0, dots));
    range.hi = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw ParseError("quaternion range must be A..B with integers, got \"" + text + "\"");
  }
  return range;
}

constexpr const char* kSourceHelp =
    "builtin spec (cyclic:N, dihedral:N, dicyclic:M, alternating4, "
    "product:cyclic:2,cyclic:4) or a Cayley-table file path";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chermak-Delgado lattices of finite groups"};
  app.name("cdlat");
  app.require_subcommand(1);

  std::string analyze_source;
  bool analyze_json = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Measures, CD lattice and Theorem B margin of one group");
  analyze->add_option("source", analyze_source, kSourceHelp)->required();
  analyze->add_flag("--json", analyze_json, "emit the CD report as JSON");

  int max_order = 15;
  std::string quaternions = "3..6";
  std::string extra_dir;
  bool serial = false;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run every theorem/lemma/property check over the group catalog");
  verify->add_option("--max-order", max_order, "catalog covers all groups up to this order (<= 15)");
  verify->add_option("--quaternions", quaternions,
                     "range A..B of generalized quaternion orders 2^n to include, or \"none\"");
  verify->add_option("--extra", extra_dir, "directory of extra Cayley-table files to include");
  verify->add_flag("--serial", serial, "disable the parallel per-entry fan-out");
  verify->add_flag("--json", verify_json, "emit records as JSON instead of the line summary");

  std::string export_source;
  bool highlight_cd = false;
  CLI::App* exportc = app.add_subcommand("export", "DOT Hasse diagram of the subgroup lattice");
  exportc->add_option("source", export_source, kSourceHelp)->required();
  exportc->add_flag("--highlight-cd", highlight_cd, "fill the CD member nodes");

  int cat_max_order = 15;
  std::string cat_quaternions = "3..6";
  CLI::App* catalogc = app.add_subcommand("catalog", "List the built-in group catalog");
  catalogc->add_option("--max-order", cat_max_order, "catalog bound (<= 15)");
  catalogc->add_option("--quaternions", cat_quaternions, "quaternion range A..B or \"none\"");

  std::vector<const char*> argv;
  argv.push_back("cdlat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      CDReport report = cd_report(resolve_source(analyze_source));
      if (analyze_json) {
        out << report_to_json(report).dump(2) << "\n";
      } else {
        out << render_analysis(analyze_source, report, sylow_center_profile(report.lattice));
      }
      return 0;
    }

    if (verify->parsed()) {
      auto range = parse_quaternion_range(quaternions);
      Catalog cat = build_catalog(max_order, range);
      if (!extra_dir.empty()) extend_catalog_from_dir(cat, extra_dir);
      VerifySummary summary = run_full_verification(cat, range, !serial);
      if (verify_json) {
        out << verify_summary_to_json(summary).dump(2) << "\n";
      } else {
        out << render_verify_summary(summary);
      }
      return summary.any_fail ? 1 : 0;
    }

    if (exportc->parsed()) {
      GroupTable table = resolve_source(export_source);
      if (highlight_cd) {
        CDReport report = cd_report(table);
        out << to_dot(report.lattice, &report.cd_members);
      } else {
        out << to_dot(SubgroupLattice::enumerate(table));
      }
      return 0;
    }

    if (catalogc->parsed()) {
      Catalog cat = build_catalog(cat_max_order, parse_quaternion_range(cat_quaternions));
      out << render_catalog_listing(cat);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cdlat::cli

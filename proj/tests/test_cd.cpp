#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdlat/chermak_delgado.hpp"
#include "cdlat/verifier.hpp"
#include "helpers.hpp"

using namespace cdlat;
using testutil::word_of;

namespace {

bool all_pass(const std::vector<VerificationRecord>& records) {
  for (const auto& rec : records)
    if (rec.outcome == Outcome::fail) return false;
  return true;
}

}  // namespace

TEST_CASE("cd_measure basics") {
  GroupTable q8 = build_group(GroupSpec::dicyclic(2));
  CHECK(cd_measure(q8, trivial_subgroup(q8)) == 8);
  CHECK(cd_measure(q8, center(q8)) == 16);

  GroupTable z6 = build_group(GroupSpec::cyclic(6));
  SubgroupSet third(z6, subgroup_closure(z6, ElementSet::single(6, 2)));
  REQUIRE(third.size() == 3);
  CHECK(cd_measure(z6, third) == 18);
}

TEST_CASE("cd_report of Q8") {
  CDReport r = cd_report(build_group(GroupSpec::dicyclic(2)));
  CHECK(r.m_star == 16);
  CHECK(r.cd_members == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r.cd_closed);
  CHECK(r.deficiency == 1);
  CHECK(r.min_member == 1);  // <a^2>
  CHECK(r.max_member == 5);  // Q8
  CHECK(r.measures == std::vector<long long>{8, 16, 16, 16, 16, 16});
  CHECK(r.measure_image == std::vector<long long>{8, 16});
}

TEST_CASE("cd_report of cyclic(4)") {
  CDReport r = cd_report(build_group(GroupSpec::cyclic(4)));
  CHECK(r.lattice.size() == 3);
  CHECK(r.m_star == 16);
  CHECK(r.cd_members == std::vector<int>{2});
  CHECK(r.deficiency == 2);
  CHECK(r.measure_image == std::vector<long long>{4, 8, 16});
}

TEST_CASE("cd_report of dihedral(3)") {
  CDReport r = cd_report(build_group(GroupSpec::dihedral(3)));
  REQUIRE(r.cd_members.size() == 1);
  const SubgroupSet& member = r.lattice.subgroup(r.cd_members[0]);
  CHECK(member.size() == 3);
  CHECK(word_of(member.mask()) == 0x7u);  // the rotations
  CHECK(r.m_star == 9);
  CHECK(r.measure_image == std::vector<long long>{4, 6, 9});
  CHECK(r.min_member == r.cd_members[0]);
  CHECK(r.max_member == r.cd_members[0]);
}

TEST_CASE("cd_report of Q16") {
  CDReport r = cd_report(build_group(GroupSpec::dicyclic(4)));
  CHECK(r.lattice.size() == 11);
  CHECK(r.m_star == 64);
  REQUIRE(r.cd_members.size() == 1);
  CHECK(word_of(r.lattice.subgroup(r.cd_members[0]).mask()) == 0xffu);  // <a>
  CHECK(r.deficiency == 10);
}

TEST_CASE("trivial group has deficiency zero") {
  CDReport r = cd_report(build_group(GroupSpec::cyclic(1)));
  CHECK(r.deficiency == 0);
  CHECK(r.m_star == 1);
}

TEST_CASE("measures agree with the direct cd_measure path") {
  for (const char* spec : {"dicyclic:2", "dihedral:4", "cyclic:12", "alternating4", "dicyclic:4"}) {
    GroupTable g = build_group(parse_group_spec(spec));
    CDReport r = cd_report(g);
    for (int i = 0; i < r.lattice.size(); ++i)
      CHECK(r.measures[i] == cd_measure(g, r.lattice.subgroup(i)));
  }
}

TEST_CASE("property suite passes on assorted groups") {
  for (const char* spec :
       {"dicyclic:2", "cyclic:5", "dihedral:3", "alternating4", "dicyclic:4", "cyclic:12"}) {
    CDReport r = cd_report(build_group(parse_group_spec(spec)));
    auto records = verify_cd_properties(r, spec);
    CHECK(all_pass(records));
    // 6 checks plus the not-checked characteristic note
    CHECK(records.size() == 7);
    CHECK(records.back().outcome == Outcome::not_checked);
  }
}

TEST_CASE("the centralizer duality on CD(Q8) fixes the middles and swaps the ends") {
  GroupTable q8 = build_group(GroupSpec::dicyclic(2));
  CDReport r = cd_report(q8);
  // Indices: 1=<a^2>, 2=<a>, 3=<b>, 4=<ab>, 5=Q8.
  auto cent_index = [&](int idx) {
    return r.lattice.index_of(centralizer(q8, r.lattice.subgroup(idx)).mask());
  };
  CHECK(cent_index(1) == 5);
  CHECK(cent_index(5) == 1);
  CHECK(cent_index(2) == 2);
  CHECK(cent_index(3) == 3);
  CHECK(cent_index(4) == 4);
}

TEST_CASE("dihedral(3) CD member is self-centralizing") {
  GroupTable s3 = build_group(GroupSpec::dihedral(3));
  CDReport r = cd_report(s3);
  const SubgroupSet& rotations = r.lattice.subgroup(r.cd_members[0]);
  CHECK(centralizer(s3, rotations).mask() == rotations.mask());
}

TEST_CASE("sylow center profiles") {
  auto profile_of = [](const char* spec) {
    GroupTable g = build_group(parse_group_spec(spec));
    return sylow_center_profile(SubgroupLattice::enumerate(g));
  };

  SylowCenterProfile s3 = profile_of("dihedral:3");
  CHECK(s3.entries == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});
  CHECK(s3.bound == 3);

  SylowCenterProfile q8 = profile_of("dicyclic:2");
  CHECK(q8.entries == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(q8.bound == 2);

  SylowCenterProfile z12 = profile_of("cyclic:12");
  CHECK(z12.entries == std::vector<std::pair<int, int>>{{2, 2}, {3, 1}});
  CHECK(z12.bound == 4);

  SylowCenterProfile trivial = profile_of("cyclic:1");
  CHECK(trivial.entries.empty());
  CHECK(trivial.bound == 1);
}

TEST_CASE("theorem B spot values") {
  auto run = [](const char* spec) {
    CDReport r = cd_report(build_group(parse_group_spec(spec)));
    return check_theorem_b(r, sylow_center_profile(r.lattice), spec);
  };

  VerificationRecord s3 = run("dihedral:3");
  CHECK(s3.outcome == Outcome::pass);
  CHECK(s3.numbers == std::vector<std::pair<std::string, long long>>{
                          {"image_size", 3}, {"bound", 3}, {"margin", 0}});

  VerificationRecord q8 = run("dicyclic:2");
  CHECK(q8.outcome == Outcome::pass);
  CHECK(q8.numbers[0].second == 2);
  CHECK(q8.numbers[1].second == 2);

  VerificationRecord z4 = run("cyclic:4");
  CHECK(z4.outcome == Outcome::pass);
  CHECK(z4.numbers[0].second == 3);
  CHECK(z4.numbers[1].second == 3);
}

TEST_CASE("report values are invariant under identity-fixing relabelings") {
  std::mt19937 rng(987123);
  for (const char* spec : {"dicyclic:2", "dihedral:4", "cyclic:12", "alternating4"}) {
    GroupTable g = build_group(parse_group_spec(spec));
    CDReport base = cd_report(g);
    for (int trial = 0; trial < 5; ++trial) {
      GroupTable shuffled =
          testutil::permuted(g, testutil::random_identity_fixing_perm(g.order(), rng));
      CDReport r = cd_report(shuffled);
      CHECK(r.m_star == base.m_star);
      CHECK(r.measure_image == base.measure_image);
      CHECK(r.cd_members.size() == base.cd_members.size());
      CHECK(r.deficiency == base.deficiency);
    }
  }
}

TEST_CASE("concurrent reports on a shared group agree") {
  GroupTable g = build_group(GroupSpec::dicyclic(4));
  CDReport base = cd_report(g);
  const int runs = 16;
  std::vector<int> deficiencies(runs, -1);
  std::vector<long long> stars(runs, -1);
#pragma omp parallel for
  for (int i = 0; i < runs; ++i) {
    CDReport r = cd_report(g);
    deficiencies[i] = r.deficiency;
    stars[i] = r.m_star;
  }
  for (int i = 0; i < runs; ++i) {
    CHECK(deficiencies[i] == base.deficiency);
    CHECK(stars[i] == base.m_star);
  }
}

TEST_CASE("generic self-duality search agrees with the centralizer duality") {
  Catalog cat = build_catalog(15, QuaternionRange{3, 6});
  for (const auto& entry : cat.entries) {
    CDReport r = cd_report(entry.table);
    if (r.cd_members.size() > 20) continue;  // generic search cap
    CHECK(is_self_dual(cd_sublattice(r)).outcome == SelfDuality::self_dual);
  }
}

TEST_CASE("report JSON has the documented shape and key order") {
  CDReport r = cd_report(build_group(GroupSpec::dicyclic(2)));
  nlohmann::ordered_json j = report_to_json(r);
  CHECK(j["group_order"] == 8);
  CHECK(j["subgroup_count"] == 6);
  CHECK(j["subgroups"].size() == 6);
  CHECK(j["subgroups"][1]["mask"] == "0x5");
  CHECK(j["subgroups"][1]["size"] == 2);
  CHECK(j["subgroups"][1]["measure"] == 16);
  CHECK(j["m_star"] == 16);
  CHECK(j["cd_members"] == nlohmann::ordered_json::array({1, 2, 3, 4, 5}));
  CHECK(j["deficiency"] == 1);

  std::string dump = j.dump();
  CHECK(dump.find("\"group_order\"") < dump.find("\"subgroup_count\""));
  CHECK(dump.find("\"subgroup_count\"") < dump.find("\"subgroups\""));
  CHECK(dump.find("\"m_star\"") < dump.find("\"cd_members\""));
  CHECK(dump.find("\"measure_image\"") < dump.find("\"deficiency\""));
}

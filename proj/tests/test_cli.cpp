#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cdlat/cli.hpp"
#include "cdlat/group.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cdlat::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("analyze dicyclic:2") {
  RunResult r = run({"analyze", "dicyclic:2"});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "order: 8"));
  CHECK(contains(r.out, "m_star: 16"));
  CHECK(contains(r.out, "cd_size: 5"));
  CHECK(contains(r.out, "deficiency: 1"));
  CHECK(contains(r.out, "measure_image: 8 16"));
  CHECK(contains(r.out, "sylow_center_profile: 2^1"));
  CHECK(r.err.empty());
  CHECK(run({"analyze", "dicyclic:2"}).out == r.out);  // byte-stable
}

TEST_CASE("analyze cyclic:4 and dihedral:3") {
  RunResult z4 = run({"analyze", "cyclic:4"});
  REQUIRE(z4.status == 0);
  CHECK(contains(z4.out, "deficiency: 2"));

  RunResult s3 = run({"analyze", "dihedral:3"});
  REQUIRE(s3.status == 0);
  CHECK(contains(s3.out, "m_star: 9"));
  CHECK(contains(s3.out, "cd_size: 1"));
  CHECK(contains(s3.out, "size=3 measure=9"));
}

TEST_CASE("analyze --json emits the report document") {
  RunResult r = run({"analyze", "dicyclic:2", "--json"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["group_order"] == 8);
  CHECK(j["m_star"] == 16);
  CHECK(j["deficiency"] == 1);
  CHECK(j["cd_members"].size() == 5);
}

TEST_CASE("analyze from a Cayley-table file") {
  fs::path dir = fresh_dir("cdlat_cli_file");
  fs::path file = dir / "s3.tbl";
  {
    std::ofstream out(file);
    out << cdlat::format_cayley_table(cdlat::build_group(cdlat::GroupSpec::dihedral(3)));
  }
  RunResult r = run({"analyze", file.string()});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "order: 6"));
  CHECK(contains(r.out, "m_star: 9"));
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({"analyze", "cyclic:0"}).status == 2);
  CHECK(run({"analyze", "/no/such/file.tbl"}).status == 2);
  CHECK(run({"analyze"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  RunResult bad = run({"analyze", "dicyclic:1"});
  CHECK(bad.status == 2);
  CHECK(contains(bad.err, "dicyclic"));
  CHECK(bad.out.empty());
}

TEST_CASE("help exits 0") {
  CHECK(run({"--help"}).status == 0);
  CHECK(run({"analyze", "--help"}).status == 0);
}

TEST_CASE("export emits deterministic DOT") {
  RunResult r = run({"export", "dicyclic:2", "--highlight-cd"});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "digraph subgroup_lattice"));
  std::size_t nodes = 0, filled = 0;
  for (std::size_t pos = r.out.find("label="); pos != std::string::npos;
       pos = r.out.find("label=", pos + 1))
    ++nodes;
  for (std::size_t pos = r.out.find("style=filled"); pos != std::string::npos;
       pos = r.out.find("style=filled", pos + 1))
    ++filled;
  CHECK(nodes == 6);
  CHECK(filled == 5);
  CHECK(run({"export", "dicyclic:2", "--highlight-cd"}).out == r.out);

  RunResult single = run({"export", "cyclic:1"});
  CHECK(contains(single.out, "H0 [label=\"H0:1\"]"));
  CHECK_FALSE(contains(single.out, "->"));

  RunResult d4 = run({"export", "dihedral:4"});
  std::size_t d4_nodes = 0;
  for (std::size_t pos = d4.out.find("label="); pos != std::string::npos;
       pos = d4.out.find("label=", pos + 1))
    ++d4_nodes;
  CHECK(d4_nodes == 10);
}

TEST_CASE("verify passes on the default catalog") {
  RunResult r = run({"verify", "--max-order", "8"});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "theorem-1.1/k=1-set\tpass\tcount=5\tZ2 Z3 Z5 Z7 Q8"));
  CHECK(contains(r.out, "fail=0"));
  // Byte-identical reruns, serial or parallel.
  CHECK(run({"verify", "--max-order", "8"}).out == r.out);
  CHECK(run({"verify", "--max-order", "8", "--serial"}).out == r.out);
}

TEST_CASE("verify --max-order 20 is an input error") {
  RunResult r = run({"verify", "--max-order", "20"});
  CHECK(r.status == 2);
  CHECK(contains(r.err, "incomplete catalog"));
}

TEST_CASE("verify --quaternions none skips the lemma records") {
  RunResult r = run({"verify", "--max-order", "8", "--quaternions", "none"});
  REQUIRE(r.status == 0);
  CHECK_FALSE(contains(r.out, "lemma-2.1"));
  RunResult bad = run({"verify", "--quaternions", "3..9"});
  CHECK(bad.status == 2);
}

TEST_CASE("verify --extra picks up Cayley files") {
  fs::path dir = fresh_dir("cdlat_cli_extra");
  {
    std::ofstream out(dir / "z16.tbl");
    out << cdlat::format_cayley_table(cdlat::build_group(cdlat::GroupSpec::cyclic(16)));
  }
  {
    std::ofstream out(dir / "d8.tbl");
    out << cdlat::format_cayley_table(cdlat::build_group(cdlat::GroupSpec::dihedral(8)));
  }
  RunResult r = run({"verify", "--max-order", "8", "--extra", dir.string()});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "z16.tbl/cd-centralizer-monotone\tpass"));
  CHECK(contains(r.out, "d8.tbl/theorem-b\tpass"));
  CHECK(contains(r.out, "theorem-a/z16.tbl\tpass"));

  // A malformed file in the directory is an input error.
  {
    std::ofstream out(dir / "broken.tbl");
    out << "2\n0 1\n1 junk\n";
  }
  CHECK(run({"verify", "--max-order", "8", "--extra", dir.string()}).status == 2);
}

TEST_CASE("verify --json emits records") {
  RunResult r = run({"verify", "--max-order", "4", "--quaternions", "none", "--json"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["any_fail"] == false);
  CHECK(j["records"].size() > 10);
  CHECK(j["records"][0]["subject"] == "catalog/entries");
}

TEST_CASE("catalog listing") {
  RunResult r = run({"catalog"});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "Z1\t1\tcyclic:1"));
  CHECK(contains(r.out, "Q8\t8\tdicyclic:2"));
  CHECK(contains(r.out, "A4\t12\talternating4"));
  CHECK(contains(r.out, "Q64\t64\tdicyclic:16"));
  std::size_t lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 31);

  RunResult small = run({"catalog", "--max-order", "4", "--quaternions", "none"});
  REQUIRE(small.status == 0);
  std::size_t small_lines = 0;
  for (char c : small.out)
    if (c == '\n') ++small_lines;
  CHECK(small_lines == 5);  // Z1 Z2 Z3 Z4 Z2xZ2
}

TEST_CASE("loader survives garbage files") {
  fs::path dir = fresh_dir("cdlat_cli_garbage");
  auto write = [&](const char* name, const std::string& content) {
    std::ofstream out(dir / name);
    out << content;
    return (dir / name).string();
  };
  CHECK(run({"analyze", write("a", "@@##!!\n")}).status == 2);
  CHECK(run({"analyze", write("b", "-5\n")}).status == 2);
  CHECK(run({"analyze", write("c", "99999999999999999999999\n")}).status == 2);
  CHECK(run({"analyze", write("d", "2\n0 1\n1 0\n0\n")}).status == 2);  // trailing entry
  CHECK(run({"analyze", write("e", std::string(64, '\0'))}).status == 2);
}

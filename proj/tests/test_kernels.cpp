#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdlat/group.hpp"
#include "cdlat/kernels.hpp"
#include "cdlat/lattice.hpp"
#include "helpers.hpp"

using namespace cdlat;

namespace {

std::vector<int> flat_table(const GroupTable& g) {
  return {g.raw(), g.raw() + g.order() * g.order()};
}

}  // namespace

TEST_CASE("associativity kernel finds nothing on valid tables") {
  for (const char* spec : {"cyclic:17", "dihedral:7", "dicyclic:8", "alternating4"}) {
    GroupTable g = build_group(parse_group_spec(spec));
    CHECK_FALSE(kernels::associativity_violation(g.raw(), g.order()).has_value());
    CHECK_FALSE(kernels::reference::associativity_violation(g.raw(), g.order()).has_value());
  }
}

TEST_CASE("parallel associativity scan agrees with the serial reference") {
  std::mt19937 rng(20240811);
  for (const char* spec : {"cyclic:12", "dihedral:6", "dicyclic:4"}) {
    GroupTable g = build_group(parse_group_spec(spec));
    const int n = g.order();
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> t = flat_table(g);
      // Corrupt a few entries; the kernel must report the same first triple
      // regardless of scheduling.
      std::uniform_int_distribution<int> pos(0, n * n - 1);
      std::uniform_int_distribution<int> val(0, n - 1);
      for (int c = 0; c <= trial % 3; ++c) t[pos(rng)] = val(rng);
      auto serial = kernels::reference::associativity_violation(t.data(), n);
      auto parallel = kernels::associativity_violation(t.data(), n);
      REQUIRE(serial.has_value() == parallel.has_value());
      if (serial) CHECK(*serial == *parallel);
    }
  }
}

TEST_CASE("associativity kernel pins the first violating triple") {
  std::vector<int> t = {0, 1, 2, 3, 1, 3, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2};
  auto hit = kernels::reference::associativity_violation(t.data(), 4);
  REQUIRE(hit.has_value());
  CHECK(*hit == kernels::Triple{1, 1, 2});
  auto par = kernels::associativity_violation(t.data(), 4);
  REQUIRE(par.has_value());
  CHECK(*par == *hit);
}

TEST_CASE("centralizer sweep matches the serial reference and known orders") {
  GroupTable q8 = build_group(GroupSpec::dicyclic(2));
  SubgroupLattice lat = SubgroupLattice::enumerate(q8);
  std::vector<ElementSet> masks;
  for (const auto& s : lat.subgroups()) masks.push_back(s.mask());

  auto par = kernels::centralizer_orders(q8.raw(), 8, masks);
  auto ser = kernels::reference::centralizer_orders(q8.raw(), 8, masks);
  CHECK(par == ser);
  CHECK(par == std::vector<int>{8, 8, 4, 4, 4, 2});
}

TEST_CASE("centralizer sweep agreement across assorted groups") {
  for (const char* spec :
       {"cyclic:24", "dihedral:10", "dicyclic:6", "alternating4", "product:cyclic:2,cyclic:6"}) {
    GroupTable g = build_group(parse_group_spec(spec));
    SubgroupLattice lat = SubgroupLattice::enumerate(g);
    std::vector<ElementSet> masks;
    for (const auto& s : lat.subgroups()) masks.push_back(s.mask());
    CHECK(kernels::centralizer_orders(g.raw(), g.order(), masks) ==
          kernels::reference::centralizer_orders(g.raw(), g.order(), masks));
  }
}

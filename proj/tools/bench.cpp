// Times the OpenMP kernels against their serial reference implementations.
// Workloads are repeated enough to get stable wall-clock numbers; the test
// suite is what asserts both paths agree.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "bruteforce.hpp"
#include "cdlat/group.hpp"
#include "cdlat/kernels.hpp"
#include "cdlat/lattice.hpp"
#include "cdlat/verifier.hpp"

using namespace cdlat;

namespace {

double time_ms(int reps, const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const std::string& kernel, const std::string& workload, int reps, double serial_ms,
         double parallel_ms) {
  std::printf("%-18s %-26s %6d %11.2f %13.2f %8.2fx\n", kernel.c_str(), workload.c_str(), reps,
              serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int scale = 1;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--scale" && i + 1 < argc) scale = std::max(1, std::atoi(argv[++i]));
  }

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-18s %-26s %6s %11s %13s %9s\n", "kernel", "workload", "reps", "serial(ms)",
              "parallel(ms)", "speedup");

  {
    GroupTable g = build_group(parse_group_spec("cyclic:256"));
    const int reps = 20 * scale;
    volatile bool sink = false;
    double s = time_ms(reps, [&] {
      sink = kernels::reference::associativity_violation(g.raw(), g.order()).has_value();
    });
    double p = time_ms(reps, [&] {
      sink = kernels::associativity_violation(g.raw(), g.order()).has_value();
    });
    row("associativity", "cyclic:256", reps, s, p);
  }

  {
    GroupTable g = build_group(parse_group_spec("dicyclic:16"));
    const int reps = 20 * scale;
    volatile bool sink = false;
    double s = time_ms(reps, [&] {
      sink = kernels::reference::associativity_violation(g.raw(), g.order()).has_value();
    });
    double p = time_ms(reps, [&] {
      sink = kernels::associativity_violation(g.raw(), g.order()).has_value();
    });
    row("associativity", "dicyclic:16 (Q64)", reps, s, p);
  }

  {
    // Elementary abelian 2^5: 374 subgroups, the densest sweep at this scale.
    GroupTable g = build_group(
        parse_group_spec("product:cyclic:2,cyclic:2,cyclic:2,cyclic:2,cyclic:2"));
    SubgroupLattice lat = SubgroupLattice::enumerate(g);
    std::vector<ElementSet> masks;
    for (const auto& s : lat.subgroups()) masks.push_back(s.mask());
    const int reps = 200 * scale;
    volatile int sink = 0;
    double s = time_ms(reps, [&] {
      sink = kernels::reference::centralizer_orders(g.raw(), g.order(), masks).back();
    });
    double p = time_ms(reps, [&] {
      sink = kernels::centralizer_orders(g.raw(), g.order(), masks).back();
    });
    row("centralizer-sweep", "Z2^5 (374 subgroups)", reps, s, p);
  }

  {
    GroupTable g = build_group(parse_group_spec("dihedral:8"));
    const int reps = 5 * scale;
    volatile std::size_t sink = 0;
    double s = time_ms(reps, [&] { sink = oracle::subgroup_masks(g).size(); });
    double p = time_ms(reps, [&] { sink = oracle::subgroup_masks_parallel(g).size(); });
    row("subset-oracle", "dihedral:8 (2^16 masks)", reps, s, p);
  }

  {
    Catalog cat = build_catalog(15, QuaternionRange{3, 6});
    const int reps = 3 * scale;
    volatile std::size_t sink = 0;
    double s = time_ms(reps, [&] {
      sink = run_full_verification(cat, QuaternionRange{3, 6}, false).records.size();
    });
    double p = time_ms(reps, [&] {
      sink = run_full_verification(cat, QuaternionRange{3, 6}, true).records.size();
    });
    row("verify-batch", "catalog(15, Q8..Q64)", reps, s, p);
  }

  return 0;
}

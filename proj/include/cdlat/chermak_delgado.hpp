#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cdlat/lattice.hpp"
#include "cdlat/records.hpp"

namespace cdlat {

// m_G(H) = |H| * |C_G(H)|
long long cd_measure(const GroupTable& g, const SubgroupSet& h);

// Measures of every subgroup, the maximum m*(G), the Chermak-Delgado lattice
// CD(G) as the set of subgroups attaining it, and the derived quantities.
struct CDReport {
  SubgroupLattice lattice;
  std::vector<long long> measures;        // index-aligned with lattice
  long long m_star = 0;
  std::vector<int> cd_members;            // sorted subgroup indices
  bool cd_closed = false;                 // meet/join closure, computed
  std::vector<long long> measure_image;   // sorted distinct measures
  int min_member = -1;                    // M(G), contained in every CD member
  int max_member = -1;                    // contains every CD member
  int deficiency = 0;                     // |L(G)| - |CD(G)|
};

CDReport cd_report(const GroupTable& g);
CDReport cd_report(SubgroupLattice lattice);

Sublattice cd_sublattice(const CDReport& report);

// Stable-key-order JSON: group order, subgroup count, per-subgroup
// {size, mask, measure}, m_star, cd_members, measure_image, deficiency.
nlohmann::ordered_json report_to_json(const CDReport& report);

// One (prime, n_p) entry per prime divisor of |G|, where |Z(P)| = p^(n_p) for
// the canonically first Sylow p-subgroup P; bound = 1 + sum of exponents.
struct SylowCenterProfile {
  std::vector<std::pair<int, int>> entries;
  int bound = 1;
};

SylowCenterProfile sylow_center_profile(const SubgroupLattice& lat);

// The measure/lattice properties that hold for every group: centralizer
// monotonicity with the equality case, centralizer closure of CD, the
// order-reversing centralizer bijection on CD, meet/join closure plus
// modularity, the minimal member being abelian and containing the center,
// and CD of the maximal member equaling CD(G). Adds a not-checked entry for
// the characteristic-subgroup claims (no automorphism machinery here).
std::vector<VerificationRecord> verify_cd_properties(const CDReport& report,
                                                     const std::string& subject_prefix);

// |Im(m_G)| >= 1 + sum n_p
VerificationRecord check_theorem_b(const CDReport& report, const SylowCenterProfile& profile,
                                   const std::string& subject_prefix);

}  // namespace cdlat

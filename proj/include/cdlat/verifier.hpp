#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdlat/chermak_delgado.hpp"
#include "cdlat/group.hpp"
#include "cdlat/records.hpp"

namespace cdlat {

// Structural identification recomputed from the table; construction metadata
// is never trusted.
struct GroupLabel {
  enum class Kind { trivial, cyclic, generalized_quaternion, other };

  Kind kind = Kind::other;
  int n = 0;           // cyclic order, or the 2-power order for quaternion
  int generator = -1;  // cyclic certificate
  int quat_a = -1;     // quaternion certificate: a of order n/2 and b outside
  int quat_b = -1;     // <a> with b^2 = a^(n/4), b^-1 a b = a^-1
};

GroupLabel identify_group(const GroupTable& g);
std::string label_to_string(const GroupLabel& label);

enum class EntrySource { classification, quaternion, file };

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  GroupTable table;
  EntrySource source = EntrySource::classification;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

// Generalized quaternion groups Q_(2^n) for n in [lo, hi]; the supported
// window is 3..6 (verify_lemma_2_1 covers exactly that range).
struct QuaternionRange {
  int lo = 3;
  int hi = 6;
};

// Every group of order <= max_order up to isomorphism (max_order <= 15; the
// built-in classification stops there), plus Q_(2^n) entries whose order
// exceeds max_order. Entry counts per order are checked against the known
// classification counts at build time.
Catalog build_catalog(int max_order, std::optional<QuaternionRange> quaternions);

// Appends entries loaded from Cayley-table files in a directory, sorted by
// filename for determinism.
void extend_catalog_from_dir(Catalog& cat, const std::string& dir);

// deficiency |L(G)|-|CD(G)| equals 1 exactly for Z_p and Q8, and 2 exactly
// for Z_(p^2): one record per entry plus k=0/1/2 set summaries.
std::vector<VerificationRecord> verify_theorem_1_1(const Catalog& cat);

// m*(Q_(2^n)) = 2^(2n-2); CD(Q8) is the five known subgroups, CD(Q_(2^n)) is
// the index-2 cyclic subgroup for n >= 4; deficiency is never 2.
VerificationRecord verify_lemma_2_1(int n);

// Over prime-power entries: a unique order-p subgroup iff cyclic or
// generalized quaternion, and the order-p subgroup count is 1 mod p.
std::vector<VerificationRecord> verify_theorem_a(const Catalog& cat);

struct VerifySummary {
  std::vector<VerificationRecord> records;
  bool any_fail = false;
};

// Per-entry CD property suite + Theorem B (fanned out one task per entry),
// then the theorem/lemma suites. Record order is independent of scheduling.
VerifySummary run_full_verification(const Catalog& cat, std::optional<QuaternionRange> quaternions,
                                    bool parallel = true);

}  // namespace cdlat

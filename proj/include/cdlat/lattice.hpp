#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

struct EnumerationLimitError : GroupError {
  using GroupError::GroupError;
};

struct LatticeError : GroupError {
  using GroupError::GroupError;
};

struct EnumerationOptions {
  std::size_t max_subgroups = 100000;  // safety cap, aborts instead of thrashing
};

// All subgroups of a group, in canonical (size, mask) order, with the Hasse
// (covering) relation. Immutable once enumerated; meet/join are lookups into
// the complete list.
class SubgroupLattice {
 public:
  // Seeds with the cyclic subgroups <x> and closes under pairwise join.
  static SubgroupLattice enumerate(const GroupTable& g, const EnumerationOptions& opts = {});

  const GroupTable& group() const { return group_; }
  int size() const { return static_cast<int>(subgroups_.size()); }
  const SubgroupSet& subgroup(int idx) const { return subgroups_.at(idx); }
  const std::vector<SubgroupSet>& subgroups() const { return subgroups_; }
  const std::vector<std::pair<int, int>>& hasse_edges() const { return hasse_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // -1 when the mask is not a listed subgroup.
  int index_of(const ElementSet& mask) const;

  int meet(int x, int y) const;  // intersection
  int join(int x, int y) const;  // generated subgroup
  bool leq(int x, int y) const;  // subgroup x ⊆ subgroup y

 private:
  SubgroupLattice(GroupTable g) : group_(std::move(g)) {}

  void check_index(int idx) const;

  GroupTable group_;
  std::vector<SubgroupSet> subgroups_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;
  std::vector<std::pair<int, int>> hasse_;
  int bottom_ = 0;
  int top_ = 0;
};

// A subset of a lattice's subgroups. `closed` is computed by make_sublattice,
// never assumed; the lattice predicates below require it.
struct Sublattice {
  const SubgroupLattice* parent = nullptr;
  std::vector<int> members;  // sorted, unique
  bool closed = false;
};

Sublattice make_sublattice(const SubgroupLattice& lat, std::vector<int> members);

struct ModularityResult {
  bool modular = false;
  std::array<int, 3> witness{-1, -1, -1};  // (x, y, z) with x ≤ z when !modular
};

// Definitional scan: x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z over member triples.
// Throws LatticeError when the member set is not meet/join closed.
ModularityResult is_modular(const Sublattice& sub);

enum class SelfDuality { self_dual, not_self_dual, undecided_at_cap };

struct SelfDualityResult {
  SelfDuality outcome = SelfDuality::undecided_at_cap;
  // mapping[p] = position q meaning members[p] -> members[q], when self_dual
  std::vector<int> mapping;
};

// Backtracking search for an order-reversing bijection of the member set.
// Member sets larger than `cap` return undecided_at_cap rather than guessing.
SelfDualityResult is_self_dual(const Sublattice& sub, int cap = 20);

// Deterministic DOT rendering of the Hasse diagram; nodes "H<index>:<size>".
// Subgroups listed in `highlight` (e.g. CD members) are drawn filled.
std::string to_dot(const SubgroupLattice& lat, const std::vector<int>* highlight = nullptr);

}  // namespace cdlat

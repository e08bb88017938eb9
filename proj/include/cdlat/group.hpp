#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdlat/element_set.hpp"

namespace cdlat {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (Cayley files, spec strings).
struct ParseError : GroupError {
  using GroupError::GroupError;
};

// A table or element set that fails the group/subgroup axioms.
struct ValidationError : GroupError {
  using GroupError::GroupError;
};

// A finite group as a validated Cayley table over indices 0..n-1.
// Identity is always index 0; construction re-checks closure, identity,
// two-sided inverses and associativity, so a held GroupTable is a group.
class GroupTable {
 public:
  static GroupTable from_flat(int n, std::vector<int> table);

  int order() const { return n_; }
  int mul(int i, int j) const { return table_[i * n_ + j]; }
  int inverse(int i) const { return inverses_[i]; }
  bool is_abelian() const { return abelian_; }
  const int* raw() const { return table_.data(); }

  // x^e for e >= 0.
  int power(int x, long long e) const;

  bool operator==(const GroupTable& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  GroupTable() = default;

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
  bool abelian_ = false;
};

// One subgroup of a specific group: membership mask plus the cached element
// list. Construction validates the subgroup axioms against the parent table.
class SubgroupSet {
 public:
  SubgroupSet(const GroupTable& g, ElementSet members);

  const ElementSet& mask() const { return mask_; }
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int e) const { return mask_.test(e); }

  bool operator==(const SubgroupSet& other) const {
    return mask_ == other.mask_;
  }

 private:
  ElementSet mask_;
  std::vector<int> elements_;
};

struct GroupSpec {
  enum class Kind { cyclic, dihedral, dicyclic, alternating4, direct_product, from_file };

  Kind kind = Kind::cyclic;
  int parameter = 0;               // cyclic/dihedral n, dicyclic m
  std::vector<GroupSpec> factors;  // direct_product
  std::string path;                // from_file

  static GroupSpec cyclic(int n) { return {Kind::cyclic, n, {}, {}}; }
  static GroupSpec dihedral(int n) { return {Kind::dihedral, n, {}, {}}; }
  static GroupSpec dicyclic(int m) { return {Kind::dicyclic, m, {}, {}}; }
  static GroupSpec alternating4() { return {Kind::alternating4, 0, {}, {}}; }
  static GroupSpec product(std::vector<GroupSpec> fs) {
    return {Kind::direct_product, 0, std::move(fs), {}};
  }
  static GroupSpec from_file(std::string p) {
    return {Kind::from_file, 0, {}, std::move(p)};
  }
};

// "cyclic:12", "dihedral:6", "dicyclic:4", "alternating4",
// "product:cyclic:2,cyclic:4" (factors may not nest products).
GroupSpec parse_group_spec(const std::string& text);
std::string spec_to_string(const GroupSpec& spec);

// True when `text` starts with a builtin kind name, i.e. should be parsed as
// a spec rather than treated as a file path.
bool looks_like_group_spec(const std::string& text);

GroupTable build_group(const GroupSpec& spec);

// Cayley-table text: first integer n, then n*n entries row by row; lines
// starting with '#' are ignored; LF or CRLF. If the table's identity is not
// index 0, elements are relabeled by swapping the identity with index 0.
GroupTable load_cayley_table(std::istream& in);
GroupTable load_cayley_file(const std::string& path);
std::string format_cayley_table(const GroupTable& g);

// Subgroup generated by the seed elements (identity is always included).
ElementSet subgroup_closure(const GroupTable& g, ElementSet seed);

SubgroupSet trivial_subgroup(const GroupTable& g);
SubgroupSet whole_group(const GroupTable& g);

// { x : xy = yx for all y in h }
SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& h);
SubgroupSet center(const GroupTable& g);

// Smallest k >= 1 with x^k = identity.
int element_order(const GroupTable& g, int x);

// The subgroup as a group in its own right: a relabeled Cayley table over the
// member elements (ascending order, so identity stays at 0) plus the map from
// local index back to the parent element.
struct InducedGroup {
  GroupTable table;
  std::vector<int> embedding;
};
InducedGroup induced_subgroup(const GroupTable& g, const SubgroupSet& h);

}  // namespace cdlat

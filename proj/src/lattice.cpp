#include "cdlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace cdlat {

SubgroupLattice SubgroupLattice::enumerate(const GroupTable& g, const EnumerationOptions& opts) {
  const int n = g.order();

  std::vector<ElementSet> masks;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](ElementSet m) {
    if (seen.insert(m).second) {
      masks.push_back(std::move(m));
      if (masks.size() > opts.max_subgroups)
        throw EnumerationLimitError(
            "subgroup enumeration exceeded the safety cap of " +
            std::to_string(opts.max_subgroups) + " for a group of order " + std::to_string(n) +
            "; raise EnumerationOptions::max_subgroups to continue");
      return true;
    }
    return false;
  };

  // Cyclic seeds, then join closure to a fixed point. Every subgroup is a
  // join of cyclic subgroups, so joining against the seeds alone already
  // reaches all of L(G), and the result is pairwise-join closed.
  for (int x = 0; x < n; ++x) add(subgroup_closure(g, ElementSet::single(n, x)));
  const std::size_t seeds = masks.size();

  std::vector<std::size_t> work(seeds);
  std::iota(work.begin(), work.end(), 0);
  while (!work.empty()) {
    const std::size_t a = work.back();
    work.pop_back();
    for (std::size_t b = 0; b < seeds; ++b) {
      if (masks[a].contains(masks[b])) continue;
      if (add(subgroup_closure(g, masks[a].unite(masks[b])))) work.push_back(masks.size() - 1);
    }
  }

  std::sort(masks.begin(), masks.end(), ElementSet::canonical_less);

  SubgroupLattice lat(g);
  lat.subgroups_.reserve(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    lat.index_.emplace(masks[i], static_cast<int>(i));
    lat.subgroups_.emplace_back(g, masks[i]);
  }

  const int count = lat.size();
  // contained_in[y] = strict subgroups of y, used for the covering test.
  std::vector<std::vector<int>> contained_in(count);
  for (int y = 0; y < count; ++y)
    for (int x = 0; x < count; ++x)
      if (x != y && masks[y].contains(masks[x])) contained_in[y].push_back(x);

  for (int y = 0; y < count; ++y) {
    for (int x : contained_in[y]) {
      bool covering = true;
      for (int z : contained_in[y]) {
        if (z != x && masks[z].contains(masks[x]) && !(masks[z] == masks[x])) {
          covering = false;
          break;
        }
      }
      if (covering) lat.hasse_.emplace_back(x, y);
    }
  }
  std::sort(lat.hasse_.begin(), lat.hasse_.end());

  lat.bottom_ = lat.index_.at(ElementSet::single(n, 0));
  lat.top_ = lat.index_.at(ElementSet::full(n));
  return lat;
}

int SubgroupLattice::index_of(const ElementSet& mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

void SubgroupLattice::check_index(int idx) const {
  if (idx < 0 || idx >= size())
    throw std::out_of_range("subgroup index " + std::to_string(idx) + " outside [0, " +
                            std::to_string(size()) + ")");
}

int SubgroupLattice::meet(int x, int y) const {
  check_index(x);
  check_index(y);
  int idx = index_of(subgroups_[x].mask().intersect(subgroups_[y].mask()));
  if (idx < 0) throw LatticeError("meet fell outside the enumerated lattice");
  return idx;
}

int SubgroupLattice::join(int x, int y) const {
  check_index(x);
  check_index(y);
  int idx = index_of(subgroup_closure(group_, subgroups_[x].mask().unite(subgroups_[y].mask())));
  if (idx < 0) throw LatticeError("join fell outside the enumerated lattice");
  return idx;
}

bool SubgroupLattice::leq(int x, int y) const {
  check_index(x);
  check_index(y);
  return subgroups_[y].mask().contains(subgroups_[x].mask());
}

Sublattice make_sublattice(const SubgroupLattice& lat, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Sublattice sub{&lat, std::move(members), true};

  auto in = [&](int idx) {
    return std::binary_search(sub.members.begin(), sub.members.end(), idx);
  };
  for (std::size_t a = 0; a < sub.members.size() && sub.closed; ++a)
    for (std::size_t b = a + 1; b < sub.members.size(); ++b) {
      if (!in(lat.meet(sub.members[a], sub.members[b])) ||
          !in(lat.join(sub.members[a], sub.members[b]))) {
        sub.closed = false;
        break;
      }
    }
  return sub;
}

ModularityResult is_modular(const Sublattice& sub) {
  if (!sub.closed)
    throw LatticeError("modularity check requires a meet/join closed member set");
  const SubgroupLattice& lat = *sub.parent;
  for (int x : sub.members)
    for (int z : sub.members) {
      if (!lat.leq(x, z)) continue;
      for (int y : sub.members) {
        int lhs = lat.join(x, lat.meet(y, z));
        int rhs = lat.meet(lat.join(x, y), z);
        if (lhs != rhs) return {false, {x, y, z}};
      }
    }
  return {true, {}};
}

namespace {

// Backtracking over candidates with matched (down-set, up-set) profiles.
struct DualitySearch {
  int m;
  std::vector<std::vector<bool>> leq;    // within the member set
  std::vector<std::vector<int>> cands;   // positions allowed as image
  std::vector<int> image, used, order;

  bool consistent(int p, int q) const {
    for (int r = 0; r < m; ++r) {
      if (image[r] < 0) continue;
      if (leq[p][r] != leq[image[r]][q]) return false;
      if (leq[r][p] != leq[q][image[r]]) return false;
    }
    return true;
  }

  bool assign(std::size_t step) {
    if (step == order.size()) return true;
    int p = order[step];
    for (int q : cands[p]) {
      if (used[q] || !consistent(p, q)) continue;
      image[p] = q;
      used[q] = 1;
      if (assign(step + 1)) return true;
      image[p] = -1;
      used[q] = 0;
    }
    return false;
  }
};

}  // namespace

SelfDualityResult is_self_dual(const Sublattice& sub, int cap) {
  if (!sub.closed)
    throw LatticeError("self-duality check requires a meet/join closed member set");
  const int m = static_cast<int>(sub.members.size());
  if (m > cap) return {SelfDuality::undecided_at_cap, {}};

  const SubgroupLattice& lat = *sub.parent;
  DualitySearch s;
  s.m = m;
  s.leq.assign(m, std::vector<bool>(m, false));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) s.leq[p][q] = lat.leq(sub.members[p], sub.members[q]);

  std::vector<int> down(m, 0), up(m, 0);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (s.leq[q][p]) ++down[p];
      if (s.leq[p][q]) ++up[p];
    }
  s.cands.assign(m, {});
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (down[p] == up[q] && up[p] == down[q]) s.cands[p].push_back(q);

  s.image.assign(m, -1);
  s.used.assign(m, 0);
  s.order.resize(m);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(),
            [&](int a, int b) { return s.cands[a].size() < s.cands[b].size(); });

  if (s.assign(0)) return {SelfDuality::self_dual, s.image};
  return {SelfDuality::not_self_dual, {}};
}

std::string to_dot(const SubgroupLattice& lat, const std::vector<int>* highlight) {
  std::vector<bool> filled(lat.size(), false);
  if (highlight)
    for (int idx : *highlight)
      if (idx >= 0 && idx < lat.size()) filled[idx] = true;

  std::string out = "digraph subgroup_lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < lat.size(); ++i) {
    out += "  H" + std::to_string(i) + " [label=\"H" + std::to_string(i) + ":" +
           std::to_string(lat.subgroup(i).size()) + "\"";
    if (filled[i]) out += ", style=filled";
    out += "];\n";
  }
  for (const auto& [lower, upper] : lat.hasse_edges())
    out += "  H" + std::to_string(lower) + " -> H" + std::to_string(upper) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace cdlat

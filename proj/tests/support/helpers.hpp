#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "cdlat/group.hpp"

namespace testutil {

inline cdlat::ElementSet mask_of(int n, std::initializer_list<int> xs) {
  cdlat::ElementSet s(n);
  for (int x : xs) s.set(x);
  return s;
}

// First word of the membership mask; enough for every group in these tests.
inline std::uint64_t word_of(const cdlat::ElementSet& s) { return s.words().front(); }

// Table relabeled by pi (old index -> new index, pi[0] must be 0). The result
// is the same group presented with shuffled element names.
inline cdlat::GroupTable permuted(const cdlat::GroupTable& g, const std::vector<int>& pi) {
  const int n = g.order();
  std::vector<int> old_of(n);
  for (int i = 0; i < n; ++i) old_of[pi[i]] = i;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i) * n + j] = pi[g.mul(old_of[i], old_of[j])];
  return cdlat::GroupTable::from_flat(n, std::move(t));
}

inline std::vector<int> random_identity_fixing_perm(int n, std::mt19937& rng) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  for (int i = n - 1; i > 1; --i) {
    std::uniform_int_distribution<int> pick(1, i);
    std::swap(pi[i], pi[pick(rng)]);
  }
  return pi;
}

}  // namespace testutil

#pragma once

#include <optional>
#include <vector>

#include "cdlat/element_set.hpp"

namespace cdlat::kernels {

struct Triple {
  int i, j, k;
  bool operator==(const Triple&) const = default;
};

// Lexicographically first (i,j,k) with t(t(i,j),k) != t(i,t(j,k)), or nullopt
// when the table is associative. `table` is row-major n×n. The OpenMP variant
// returns the same triple as the serial one.
std::optional<Triple> associativity_violation(const int* table, int n);

// orders[s] = |C_G(H_s)| for each membership mask. Raw counts only; the caller
// owns subgroup validation. Results are index-aligned with the input, so the
// parallel sweep is deterministic.
std::vector<int> centralizer_orders(const int* table, int n,
                                    const std::vector<ElementSet>& subgroups);

// Serial implementations kept as the reference the tests compare against.
namespace reference {
std::optional<Triple> associativity_violation(const int* table, int n);
std::vector<int> centralizer_orders(const int* table, int n,
                                    const std::vector<ElementSet>& subgroups);
}  // namespace reference

}  // namespace cdlat::kernels

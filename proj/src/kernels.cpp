#include "cdlat/kernels.hpp"

#include <omp.h>

namespace cdlat::kernels {

namespace {

// First violation within row block i, encoded as i*n*n + j*n + k; -1 if none.
// Ascending j,k scan, so the first hit is the smallest code for this i.
long long scan_row(const int* t, int n, int i) {
  for (int j = 0; j < n; ++j) {
    const int ij = t[i * n + j];
    for (int k = 0; k < n; ++k) {
      if (t[ij * n + k] != t[i * n + t[j * n + k]])
        return (static_cast<long long>(i) * n + j) * n + k;
    }
  }
  return -1;
}

std::optional<Triple> decode(long long code, int n) {
  if (code < 0) return std::nullopt;
  int k = static_cast<int>(code % n);
  code /= n;
  int j = static_cast<int>(code % n);
  int i = static_cast<int>(code / n);
  return Triple{i, j, k};
}

int commuting_count(const int* t, int n, const std::vector<int>& members) {
  int count = 0;
  for (int x = 0; x < n; ++x) {
    bool commutes = true;
    for (int y : members) {
      if (t[x * n + y] != t[y * n + x]) {
        commutes = false;
        break;
      }
    }
    if (commutes) ++count;
  }
  return count;
}

}  // namespace

std::optional<Triple> associativity_violation(const int* table, int n) {
  long long best = -1;
#pragma omp parallel
  {
    long long local = -1;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < n; ++i) {
      if (local >= 0) continue;  // violations in later rows can't beat it
      local = scan_row(table, n, i);
    }
#pragma omp critical
    {
      if (local >= 0 && (best < 0 || local < best)) best = local;
    }
  }
  return decode(best, n);
}

std::vector<int> centralizer_orders(const int* table, int n,
                                    const std::vector<ElementSet>& subgroups) {
  const int count = static_cast<int>(subgroups.size());
  std::vector<int> orders(count, 0);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < count; ++s)
    orders[s] = commuting_count(table, n, subgroups[s].elements());
  return orders;
}

namespace reference {

std::optional<Triple> associativity_violation(const int* table, int n) {
  for (int i = 0; i < n; ++i) {
    long long code = scan_row(table, n, i);
    if (code >= 0) return decode(code, n);
  }
  return std::nullopt;
}

std::vector<int> centralizer_orders(const int* table, int n,
                                    const std::vector<ElementSet>& subgroups) {
  std::vector<int> orders;
  orders.reserve(subgroups.size());
  for (const auto& s : subgroups)
    orders.push_back(commuting_count(table, n, s.elements()));
  return orders;
}

}  // namespace reference

}  // namespace cdlat::kernels

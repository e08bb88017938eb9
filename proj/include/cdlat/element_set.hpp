#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace cdlat {

// Membership mask over element indices 0..n-1 of one group. Meets are word
// ANDs, equality is word comparison; the canonical order used everywhere for
// subgroup lists is (cardinality, mask value).
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet single(int universe, int e) {
    ElementSet s(universe);
    s.set(e);
    return s;
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (int e = 0; e < universe; ++e) s.set(e);
    return s;
  }

  int universe() const { return n_; }

  bool test(int e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }

  void set(int e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }

  void reset(int e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // other ⊆ this
  bool contains(const ElementSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (other.words_[w] & ~words_[w]) return false;
    return true;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      r.words_[w] = words_[w] & other.words_[w];
    return r;
  }

  ElementSet unite(const ElementSet& other) const {
    ElementSet r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      r.words_[w] = words_[w] | other.words_[w];
    return r;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int e = 0; e < n_; ++e)
      if (test(e)) out.push_back(e);
    return out;
  }

  // Mask as a hex integer ("0x5" for {0,2}); bit i = element i.
  std::string hex() const {
    if (words_.empty()) return "0x0";
    int top = static_cast<int>(words_.size()) - 1;
    while (top > 0 && words_[top] == 0) --top;
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx",
                  static_cast<unsigned long long>(words_[top]));
    std::string out = buf;
    for (int w = top - 1; w >= 0; --w) {
      std::snprintf(buf, sizeof buf, "%016llx",
                    static_cast<unsigned long long>(words_[w]));
      out += buf;
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const ElementSet& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }

  // (cardinality, mask-as-integer) order; total and deterministic.
  static bool canonical_less(const ElementSet& a, const ElementSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t w = a.words_.size(); w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : s.words()) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace cdlat

#include "cdlat/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "cdlat/kernels.hpp"

namespace cdlat {

namespace {

std::string at(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

GroupTable GroupTable::from_flat(int n, std::vector<int> table) {
  if (n <= 0) throw ValidationError("group order must be positive, got " + std::to_string(n));
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw ValidationError("expected " + std::to_string(n * n) + " table entries, got " +
                          std::to_string(table.size()));

  // Closure: every entry an element index.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = table[i * n + j];
      if (v < 0 || v >= n)
        throw ValidationError("table entry " + std::to_string(v) + " at " + at(i, j) +
                              " is outside [0, " + std::to_string(n) + ")");
    }

  // Identity is index 0 by convention; loaders relabel before reaching here.
  for (int j = 0; j < n; ++j) {
    if (table[j] != j)
      throw ValidationError("index 0 is not a left identity: table" + at(0, j) + " = " +
                            std::to_string(table[j]));
    if (table[j * n] != j)
      throw ValidationError("index 0 is not a right identity: table" + at(j, 0) + " = " +
                            std::to_string(table[j * n]));
  }

  // Two-sided inverses, exactly one per element.
  std::vector<int> inverses(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (table[i * n + j] == 0 && table[j * n + i] == 0) {
        if (inverses[i] != -1)
          throw ValidationError("element " + std::to_string(i) + " has two inverses (" +
                                std::to_string(inverses[i]) + " and " + std::to_string(j) + ")");
        inverses[i] = j;
      }
    }
    if (inverses[i] == -1)
      throw ValidationError("element " + std::to_string(i) + " has no two-sided inverse");
  }

  if (auto bad = kernels::associativity_violation(table.data(), n)) {
    throw ValidationError("associativity violated at (" + std::to_string(bad->i) + ", " +
                          std::to_string(bad->j) + ", " + std::to_string(bad->k) + ")");
  }

  GroupTable g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  g.abelian_ = true;
  for (int i = 0; i < n && g.abelian_; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.mul(i, j) != g.mul(j, i)) {
        g.abelian_ = false;
        break;
      }
  return g;
}

int GroupTable::power(int x, long long e) const {
  int acc = 0;
  for (long long i = 0; i < e; ++i) acc = mul(acc, x);
  return acc;
}

SubgroupSet::SubgroupSet(const GroupTable& g, ElementSet members) : mask_(std::move(members)) {
  if (mask_.universe() != g.order())
    throw ValidationError("subgroup mask sized for order " + std::to_string(mask_.universe()) +
                          " used with a group of order " + std::to_string(g.order()));
  if (!mask_.test(0)) throw ValidationError("subgroup does not contain the identity");
  elements_ = mask_.elements();
  for (int x : elements_) {
    if (!mask_.test(g.inverse(x)))
      throw ValidationError("subgroup not closed under inverses: element " + std::to_string(x));
    for (int y : elements_)
      if (!mask_.test(g.mul(x, y)))
        throw ValidationError("subgroup not closed under product: " + at(x, y) + " escapes");
  }
  if (g.order() % size() != 0)
    throw ValidationError("subgroup size " + std::to_string(size()) +
                          " does not divide group order " + std::to_string(g.order()));
}

namespace {

// Tables are quadratic in the order and validation is cubic; keep requests
// desk-scale.
constexpr int kMaxOrder = 1024;

void check_order_cap(const std::string& kind, long long order) {
  if (order > kMaxOrder)
    throw std::invalid_argument(kind + ": resulting order " + std::to_string(order) +
                                " exceeds the Cayley-table limit of " +
                                std::to_string(kMaxOrder));
}

GroupTable build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: parameter n must be >= 1, got " + std::to_string(n));
  check_order_cap("cyclic", n);
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return GroupTable::from_flat(n, std::move(t));
}

// Elements r^i s^j, index i + n*j; relations r^n = s^2 = 1, s r = r^-1 s.
GroupTable build_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: parameter n must be >= 1, got " + std::to_string(n));
  check_order_cap("dihedral", 2LL * n);
  const int order = 2 * n;
  std::vector<int> t(order * order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
          int flip = j ^ l;
          t[(i + n * j) * order + (k + n * l)] = rot + n * flip;
        }
  return GroupTable::from_flat(order, std::move(t));
}

// Dic_m of order 4m: elements a^i b^j with 0 <= i < 2m, j in {0,1}, index
// i + 2m*j; relations a^(2m) = 1, b^2 = a^m, b a = a^-1 b. For m = 2^(n-2)
// this is the generalized quaternion group Q_(2^n).
GroupTable build_dicyclic(int m) {
  if (m < 2) throw std::invalid_argument("dicyclic: parameter m must be >= 2, got " + std::to_string(m));
  check_order_cap("dicyclic", 4LL * m);
  const int r = 2 * m;
  const int order = 4 * m;
  std::vector<int> t(order * order);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot, flip;
          if (j == 0) {
            rot = (i + k) % r;
            flip = l;
          } else if (l == 0) {
            rot = ((i - k) % r + r) % r;
            flip = 1;
          } else {
            rot = (((i - k + m) % r) + r) % r;
            flip = 0;
          }
          t[(i + r * j) * order + (k + r * l)] = rot + r * flip;
        }
  return GroupTable::from_flat(order, std::move(t));
}

// Even permutations of {0,1,2,3} in lexicographic order; identity comes first.
GroupTable build_alternating4() {
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<std::array<int, 4>> elems;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::array<int, 4>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

  const int order = static_cast<int>(elems.size());
  std::vector<int> t(order * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      std::array<int, 4> composed;
      for (int x = 0; x < 4; ++x) composed[x] = elems[i][elems[j][x]];
      t[i * order + j] = index.at(composed);
    }
  return GroupTable::from_flat(order, std::move(t));
}

GroupTable build_product(const std::vector<GroupSpec>& factors) {
  if (factors.size() < 2)
    throw std::invalid_argument("product: needs at least 2 factors, got " +
                                std::to_string(factors.size()));
  std::vector<GroupTable> gs;
  gs.reserve(factors.size());
  long long total = 1;
  for (const auto& f : factors) {
    gs.push_back(build_group(f));
    total *= gs.back().order();
    check_order_cap("product", total);
  }
  const int order = static_cast<int>(total);

  // Mixed-radix element index, first factor most significant; (0,...,0) -> 0.
  auto decompose = [&](int idx) {
    std::vector<int> parts(gs.size());
    for (std::size_t f = gs.size(); f-- > 0;) {
      parts[f] = idx % gs[f].order();
      idx /= gs[f].order();
    }
    return parts;
  };
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i) {
    auto pi = decompose(i);
    for (int j = 0; j < order; ++j) {
      auto pj = decompose(j);
      int combined = 0;
      for (std::size_t f = 0; f < gs.size(); ++f)
        combined = combined * gs[f].order() + gs[f].mul(pi[f], pj[f]);
      t[static_cast<std::size_t>(i) * order + j] = combined;
    }
  }
  return GroupTable::from_flat(order, std::move(t));
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got \"" + text + "\"");
  }
  if (pos != text.size())
    throw ParseError("trailing characters after integer in " + what + ": \"" + text + "\"");
  return value;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (kind == "alternating4") {
    if (!rest.empty()) throw ParseError("alternating4 takes no parameter");
    return GroupSpec::alternating4();
  }
  if (kind == "cyclic" || kind == "dihedral" || kind == "dicyclic") {
    if (rest.empty()) throw ParseError(kind + " needs a parameter, e.g. \"" + kind + ":4\"");
    int n = parse_int(rest, kind + " parameter");
    if (kind == "cyclic") return GroupSpec::cyclic(n);
    if (kind == "dihedral") return GroupSpec::dihedral(n);
    return GroupSpec::dicyclic(n);
  }
  if (kind == "product") {
    if (rest.empty()) throw ParseError("product needs comma-separated factors");
    std::vector<GroupSpec> factors;
    std::size_t start = 0;
    // Factors are kind:param pairs; a comma always starts a new factor.
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      std::string piece = rest.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
      if (piece.empty()) throw ParseError("empty factor in product spec");
      if (piece.rfind("product", 0) == 0)
        throw ParseError("product factors may not nest products");
      factors.push_back(parse_group_spec(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (factors.size() < 2) throw ParseError("product needs at least 2 factors");
    return GroupSpec::product(std::move(factors));
  }
  throw ParseError("unknown group kind \"" + kind + "\"");
}

std::string spec_to_string(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return "cyclic:" + std::to_string(spec.parameter);
    case GroupSpec::Kind::dihedral:
      return "dihedral:" + std::to_string(spec.parameter);
    case GroupSpec::Kind::dicyclic:
      return "dicyclic:" + std::to_string(spec.parameter);
    case GroupSpec::Kind::alternating4:
      return "alternating4";
    case GroupSpec::Kind::direct_product: {
      std::string out = "product:";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out += ',';
        out += spec_to_string(spec.factors[i]);
      }
      return out;
    }
    case GroupSpec::Kind::from_file:
      return spec.path;
  }
  return "?";
}

bool looks_like_group_spec(const std::string& text) {
  static const char* kinds[] = {"cyclic", "dihedral", "dicyclic", "alternating4", "product"};
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  for (const char* k : kinds)
    if (head == k) return true;
  return false;
}

GroupTable build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return build_cyclic(spec.parameter);
    case GroupSpec::Kind::dihedral:
      return build_dihedral(spec.parameter);
    case GroupSpec::Kind::dicyclic:
      return build_dicyclic(spec.parameter);
    case GroupSpec::Kind::alternating4:
      return build_alternating4();
    case GroupSpec::Kind::direct_product:
      return build_product(spec.factors);
    case GroupSpec::Kind::from_file:
      return load_cayley_file(spec.path);
  }
  throw std::invalid_argument("unknown group spec kind");
}

GroupTable load_cayley_table(std::istream& in) {
  // Strip comments and CR, then tokenize; the line structure carries no
  // information beyond readability.
  std::string text, line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    text += line;
    text += '\n';
  }

  std::istringstream tokens(text);
  long long n = 0;
  if (!(tokens >> n)) throw ParseError("missing group order on the first line");
  if (n < 1 || n > kMaxOrder)
    throw ParseError("group order " + std::to_string(n) + " out of range");

  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  long long v;
  while (tokens >> v) {
    if (v < 0 || v >= n)
      throw ParseError("table entry " + std::to_string(v) + " is outside [0, " +
                       std::to_string(n) + ")");
    table.push_back(static_cast<int>(v));
  }
  if (!tokens.eof()) {
    std::string junk;
    tokens.clear();
    tokens >> junk;
    throw ParseError("unexpected token \"" + junk + "\" in Cayley table");
  }
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw ParseError("expected " + std::to_string(n * n) + " table entries, got " +
                     std::to_string(table.size()));

  const int order = static_cast<int>(n);
  // Locate the identity; at most one can exist.
  int identity = -1;
  for (int e = 0; e < order && identity < 0; ++e) {
    bool ok = true;
    for (int j = 0; j < order && ok; ++j)
      ok = table[e * order + j] == j && table[j * order + e] == j;
    if (ok) identity = e;
  }
  if (identity < 0) throw ValidationError("table has no identity element");

  if (identity != 0) {
    // Relabel by the transposition (0, identity); all other indices keep.
    auto swap01 = [&](int x) { return x == 0 ? identity : x == identity ? 0 : x; };
    std::vector<int> relabeled(table.size());
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j)
        relabeled[i * order + j] = swap01(table[swap01(i) * order + swap01(j)]);
    table = std::move(relabeled);
  }

  return GroupTable::from_flat(order, std::move(table));
}

GroupTable load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Cayley-table file: " + path);
  try {
    return load_cayley_table(in);
  } catch (const GroupError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_cayley_table(const GroupTable& g) {
  std::string out = std::to_string(g.order());
  out += '\n';
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out += ' ';
      out += std::to_string(g.mul(i, j));
    }
    out += '\n';
  }
  return out;
}

ElementSet subgroup_closure(const GroupTable& g, ElementSet seed) {
  const int n = g.order();
  seed.set(0);
  std::vector<int> elems = seed.elements();
  ElementSet mask = std::move(seed);
  auto add = [&](int x) {
    if (!mask.test(x)) {
      mask.set(x);
      elems.push_back(x);
    }
  };
  for (std::size_t p = 0; p < elems.size(); ++p) {
    // A generating set larger than half the group generates everything
    // (Lagrange), so stop multiplying early.
    if (static_cast<int>(elems.size()) * 2 > n) return ElementSet::full(n);
    for (std::size_t q = 0; q <= p; ++q) {
      add(g.mul(elems[p], elems[q]));
      add(g.mul(elems[q], elems[p]));
    }
  }
  return mask;
}

SubgroupSet trivial_subgroup(const GroupTable& g) {
  return SubgroupSet(g, ElementSet::single(g.order(), 0));
}

SubgroupSet whole_group(const GroupTable& g) {
  return SubgroupSet(g, ElementSet::full(g.order()));
}

SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& h) {
  const int n = g.order();
  ElementSet mask(n);
  for (int x = 0; x < n; ++x) {
    bool commutes = true;
    for (int y : h.elements()) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) mask.set(x);
  }
  return SubgroupSet(g, std::move(mask));
}

SubgroupSet center(const GroupTable& g) { return centralizer(g, whole_group(g)); }

int element_order(const GroupTable& g, int x) {
  if (x < 0 || x >= g.order())
    throw std::out_of_range("element index " + std::to_string(x) + " outside [0, " +
                            std::to_string(g.order()) + ")");
  int k = 1;
  int acc = x;
  while (acc != 0) {
    acc = g.mul(acc, x);
    ++k;
  }
  return k;
}

InducedGroup induced_subgroup(const GroupTable& g, const SubgroupSet& h) {
  const std::vector<int>& embedding = h.elements();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < embedding.size(); ++i) local[embedding[i]] = static_cast<int>(i);

  const int m = h.size();
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i * m + j] = local[g.mul(embedding[i], embedding[j])];
  return {GroupTable::from_flat(m, std::move(t)), embedding};
}

}  // namespace cdlat

#include "cdlat/chermak_delgado.hpp"

#include <algorithm>

#include "cdlat/kernels.hpp"

namespace cdlat {

long long cd_measure(const GroupTable& g, const SubgroupSet& h) {
  return static_cast<long long>(h.size()) * centralizer(g, h).size();
}

CDReport cd_report(const GroupTable& g) { return cd_report(SubgroupLattice::enumerate(g)); }

CDReport cd_report(SubgroupLattice lattice) {
  CDReport r{std::move(lattice), {}, 0, {}, false, {}, -1, -1, 0};
  const SubgroupLattice& lat = r.lattice;
  const GroupTable& g = lat.group();

  std::vector<ElementSet> masks;
  masks.reserve(lat.size());
  for (const auto& s : lat.subgroups()) masks.push_back(s.mask());
  std::vector<int> cent = kernels::centralizer_orders(g.raw(), g.order(), masks);

  r.measures.resize(lat.size());
  for (int i = 0; i < lat.size(); ++i) {
    r.measures[i] = static_cast<long long>(lat.subgroup(i).size()) * cent[i];
    // With |G| <= 64 the measure tops out at 64*64; guard the general case.
    if (r.measures[i] <= 0 ||
        r.measures[i] > static_cast<long long>(g.order()) * g.order())
      throw LatticeError("measure out of range for subgroup " + std::to_string(i));
  }

  r.m_star = *std::max_element(r.measures.begin(), r.measures.end());
  for (int i = 0; i < lat.size(); ++i)
    if (r.measures[i] == r.m_star) r.cd_members.push_back(i);

  r.measure_image = r.measures;
  std::sort(r.measure_image.begin(), r.measure_image.end());
  r.measure_image.erase(std::unique(r.measure_image.begin(), r.measure_image.end()),
                        r.measure_image.end());

  r.cd_closed = make_sublattice(lat, r.cd_members).closed;

  // Fold meets and joins across CD; when CD is closed these land on the
  // unique minimal/maximal member.
  int lo = r.cd_members.front(), hi = r.cd_members.front();
  for (int idx : r.cd_members) {
    lo = lat.meet(lo, idx);
    hi = lat.join(hi, idx);
  }
  if (std::binary_search(r.cd_members.begin(), r.cd_members.end(), lo)) r.min_member = lo;
  if (std::binary_search(r.cd_members.begin(), r.cd_members.end(), hi)) r.max_member = hi;

  r.deficiency = lat.size() - static_cast<int>(r.cd_members.size());
  return r;
}

Sublattice cd_sublattice(const CDReport& report) {
  return make_sublattice(report.lattice, report.cd_members);
}

nlohmann::ordered_json report_to_json(const CDReport& report) {
  const SubgroupLattice& lat = report.lattice;
  nlohmann::ordered_json j;
  j["group_order"] = lat.group().order();
  j["subgroup_count"] = lat.size();
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (int i = 0; i < lat.size(); ++i) {
    nlohmann::ordered_json s;
    s["size"] = lat.subgroup(i).size();
    s["mask"] = lat.subgroup(i).mask().hex();
    s["measure"] = report.measures[i];
    subs.push_back(std::move(s));
  }
  j["subgroups"] = std::move(subs);
  j["m_star"] = report.m_star;
  j["cd_members"] = report.cd_members;
  j["measure_image"] = report.measure_image;
  j["deficiency"] = report.deficiency;
  return j;
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> primes;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

SylowCenterProfile sylow_center_profile(const SubgroupLattice& lat) {
  const GroupTable& g = lat.group();
  SylowCenterProfile profile;

  for (int p : prime_factors(g.order())) {
    int sylow_order = 1;
    for (int rest = g.order(); rest % p == 0; rest /= p) sylow_order *= p;

    // Any Sylow p-subgroup gives the same |Z(P)| (they are conjugate); take
    // the canonically first one for determinism.
    int sylow = -1;
    for (int i = 0; i < lat.size() && sylow < 0; ++i)
      if (lat.subgroup(i).size() == sylow_order) sylow = i;
    if (sylow < 0)
      throw LatticeError("no subgroup of order " + std::to_string(sylow_order) +
                         " found; enumeration is broken");

    const SubgroupSet& P = lat.subgroup(sylow);
    ElementSet z_mask = centralizer(g, P).mask().intersect(P.mask());
    int z_order = z_mask.count();
    int np = 0;
    for (int v = z_order; v > 1; v /= p) {
      if (v % p != 0)
        throw LatticeError("|Z(P)| = " + std::to_string(z_order) + " is not a power of " +
                           std::to_string(p));
      ++np;
    }
    profile.entries.emplace_back(p, np);
    profile.bound += np;
  }
  return profile;
}

namespace {

std::string hname(int idx) { return "H" + std::to_string(idx); }

bool subgroup_is_abelian(const GroupTable& g, const SubgroupSet& h) {
  const auto& e = h.elements();
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (g.mul(e[a], e[b]) != g.mul(e[b], e[a])) return false;
  return true;
}

}  // namespace

std::vector<VerificationRecord> verify_cd_properties(const CDReport& report,
                                                     const std::string& prefix) {
  const SubgroupLattice& lat = report.lattice;
  const GroupTable& g = lat.group();
  std::vector<VerificationRecord> out;

  // Centralizer indices for every subgroup; C_G(H) is itself a subgroup, so
  // the lookup must succeed.
  std::vector<int> cent_idx(lat.size());
  for (int i = 0; i < lat.size(); ++i) {
    cent_idx[i] = lat.index_of(centralizer(g, lat.subgroup(i)).mask());
    if (cent_idx[i] < 0)
      throw LatticeError("centralizer of " + hname(i) + " missing from the lattice");
  }
  auto in_cd = [&](int idx) {
    return std::binary_search(report.cd_members.begin(), report.cd_members.end(), idx);
  };

  // (1) m(H) <= m(C(H)) for every subgroup, with equality forcing C(C(H)) = H.
  {
    VerificationRecord rec = VerificationRecord::pass(prefix + "/cd-centralizer-monotone",
                                                      {{"subgroups", lat.size()}});
    for (int i = 0; i < lat.size(); ++i) {
      int c = cent_idx[i];
      if (report.measures[i] > report.measures[c]) {
        rec = VerificationRecord::fail(prefix + "/cd-centralizer-monotone", {hname(i)},
                                       {{"m_H", report.measures[i]}, {"m_C", report.measures[c]}});
        break;
      }
      if (report.measures[i] == report.measures[c] && cent_idx[c] != i) {
        rec = VerificationRecord::fail(prefix + "/cd-centralizer-monotone",
                                       {hname(i), "CC=" + hname(cent_idx[c])},
                                       {{"m_H", report.measures[i]}});
        break;
      }
    }
    out.push_back(std::move(rec));
  }

  // (2) CD closed under the centralizer map, which is an involution on it.
  {
    VerificationRecord rec = VerificationRecord::pass(
        prefix + "/cd-centralizer-closure",
        {{"cd_size", static_cast<long long>(report.cd_members.size())}});
    for (int i : report.cd_members) {
      if (!in_cd(cent_idx[i]) || cent_idx[cent_idx[i]] != i) {
        rec = VerificationRecord::fail(prefix + "/cd-centralizer-closure",
                                       {hname(i), "C=" + hname(cent_idx[i])});
        break;
      }
    }
    out.push_back(std::move(rec));
  }

  // (3) The centralizer map restricted to CD reverses order bijectively --
  // the concrete self-duality witness.
  {
    VerificationRecord rec = VerificationRecord::pass(
        prefix + "/cd-self-duality",
        {{"cd_size", static_cast<long long>(report.cd_members.size())}});
    std::vector<int> image;
    for (int i : report.cd_members) image.push_back(cent_idx[i]);
    std::sort(image.begin(), image.end());
    if (image != report.cd_members) {
      rec = VerificationRecord::fail(prefix + "/cd-self-duality", {"image!=CD"});
    } else {
      auto reversed = [&]() -> std::pair<int, int> {
        for (int a : report.cd_members)
          for (int b : report.cd_members)
            if (lat.leq(a, b) != lat.leq(cent_idx[b], cent_idx[a])) return {a, b};
        return {-1, -1};
      }();
      if (reversed.first >= 0)
        rec = VerificationRecord::fail(prefix + "/cd-self-duality",
                                       {hname(reversed.first), hname(reversed.second)});
    }
    out.push_back(std::move(rec));
  }

  // (4) CD is a sublattice and it is modular.
  {
    VerificationRecord rec = VerificationRecord::pass(
        prefix + "/cd-modular-sublattice",
        {{"cd_size", static_cast<long long>(report.cd_members.size())}});
    if (!report.cd_closed) {
      rec = VerificationRecord::fail(prefix + "/cd-modular-sublattice", {"not meet/join closed"});
    } else {
      auto mod = is_modular(cd_sublattice(report));
      if (!mod.modular)
        rec = VerificationRecord::fail(
            prefix + "/cd-modular-sublattice",
            {hname(mod.witness[0]), hname(mod.witness[1]), hname(mod.witness[2])});
    }
    out.push_back(std::move(rec));
  }

  // (5) The minimal member M(G) is abelian and contains Z(G).
  {
    VerificationRecord rec = VerificationRecord::pass(prefix + "/cd-min-member");
    if (report.min_member < 0) {
      rec = VerificationRecord::fail(prefix + "/cd-min-member", {"no unique minimal member"});
    } else {
      const SubgroupSet& m = lat.subgroup(report.min_member);
      rec.numbers = {{"min_size", m.size()}};
      bool contains_all = true;
      for (int idx : report.cd_members)
        if (!lat.leq(report.min_member, idx)) contains_all = false;
      if (!contains_all)
        rec = VerificationRecord::fail(prefix + "/cd-min-member",
                                       {hname(report.min_member), "not below every member"});
      else if (!subgroup_is_abelian(g, m))
        rec = VerificationRecord::fail(prefix + "/cd-min-member",
                                       {hname(report.min_member), "not abelian"});
      else if (!m.mask().contains(center(g).mask()))
        rec = VerificationRecord::fail(prefix + "/cd-min-member",
                                       {hname(report.min_member), "misses center"});
    }
    out.push_back(std::move(rec));
  }

  // (6) CD of the maximal member, recomputed on its own Cayley table, equals
  // CD(G) under the element embedding.
  {
    VerificationRecord rec = VerificationRecord::pass(prefix + "/cd-max-member");
    if (report.max_member < 0) {
      rec = VerificationRecord::fail(prefix + "/cd-max-member", {"no unique maximal member"});
    } else {
      bool below_all = true;
      for (int idx : report.cd_members)
        if (!lat.leq(idx, report.max_member)) below_all = false;
      if (!below_all) {
        rec = VerificationRecord::fail(prefix + "/cd-max-member",
                                       {hname(report.max_member), "not above every member"});
      } else {
        auto induced = induced_subgroup(g, lat.subgroup(report.max_member));
        CDReport inner = cd_report(induced.table);
        std::vector<ElementSet> embedded;
        for (int idx : inner.cd_members) {
          ElementSet mask(g.order());
          for (int e : inner.lattice.subgroup(idx).elements()) mask.set(induced.embedding[e]);
          embedded.push_back(std::move(mask));
        }
        std::sort(embedded.begin(), embedded.end(), ElementSet::canonical_less);

        std::vector<ElementSet> expected;
        for (int idx : report.cd_members) expected.push_back(lat.subgroup(idx).mask());
        std::sort(expected.begin(), expected.end(), ElementSet::canonical_less);

        rec.numbers = {{"cd_of_max", static_cast<long long>(embedded.size())},
                       {"cd_of_g", static_cast<long long>(expected.size())}};
        bool equal = embedded.size() == expected.size();
        for (std::size_t i = 0; equal && i < embedded.size(); ++i)
          equal = embedded[i] == expected[i];
        if (!equal)
          rec = VerificationRecord::fail(prefix + "/cd-max-member", {"CD(M) != CD(G)"},
                                         rec.numbers);
      }
    }
    out.push_back(std::move(rec));
  }

  // The paper also states the extremal members are characteristic; checking
  // that needs Aut(G), which this engine does not compute.
  out.push_back(VerificationRecord::not_checked(prefix + "/cd-characteristic",
                                                "requires automorphism group"));

  return out;
}

VerificationRecord check_theorem_b(const CDReport& report, const SylowCenterProfile& profile,
                                   const std::string& prefix) {
  const long long im = static_cast<long long>(report.measure_image.size());
  const long long bound = profile.bound;
  std::vector<std::pair<std::string, long long>> numbers = {
      {"image_size", im}, {"bound", bound}, {"margin", im - bound}};
  if (im >= bound) return VerificationRecord::pass(prefix + "/theorem-b", std::move(numbers));
  return VerificationRecord::fail(prefix + "/theorem-b",
                                  {"|Im|=" + std::to_string(im) + "<" + std::to_string(bound)},
                                  std::move(numbers));
}

}  // namespace cdlat

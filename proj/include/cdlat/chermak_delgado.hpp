#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"

namespace cdlat {

// |H| * |C_G(H)|
inline std::uint64_t cd_measure(const GroupTable& g, const ElementSet& h) {
  return static_cast<std::uint64_t>(h.count()) * centralizer(g, h).count();
}

struct CDResult {
  std::uint64_t m_star = 0;
  std::vector<SubgroupIndex> members;  // ascending lattice positions
  SubgroupIndex min_member = 0;
  SubgroupIndex max_member = 0;
  std::vector<std::uint64_t> measure_of;      // per lattice position
  std::vector<SubgroupIndex> centralizer_of;  // per lattice position
  SubgroupSet member_set;

  bool is_member(SubgroupIndex i) const { return member_set.contains(i); }
};

inline CDResult cd_lattice(const GroupTable& g, const Lattice& lat) {
  CDResult cd;
  const std::size_t s = lat.size();
  cd.measure_of.resize(s);
  cd.centralizer_of.resize(s);
  for (SubgroupIndex i = 0; i < s; ++i) {
    // C_G(H) = C_G(generators of H)
    const ElementSet c = centralizer(g, lat.generators(i));
    cd.centralizer_of[i] = lat.require_index(c);
    cd.measure_of[i] = static_cast<std::uint64_t>(lat.order_of(i)) * c.count();
    cd.m_star = std::max(cd.m_star, cd.measure_of[i]);
  }
  cd.member_set = SubgroupSet(s);
  for (SubgroupIndex i = 0; i < s; ++i)
    if (cd.measure_of[i] == cd.m_star) {
      cd.members.push_back(i);
      cd.member_set.insert(i);
    }

  ElementSet lowest = g.all();
  std::vector<Element> top_gens;
  for (auto i : cd.members) {
    lowest &= lat.subgroup(i);
    top_gens.insert(top_gens.end(), lat.generators(i).begin(), lat.generators(i).end());
  }
  cd.min_member = lat.require_index(lowest);
  cd.max_member = lat.require_index(closure(g, top_gens));
  return cd;
}

inline std::vector<std::uint64_t> measure_image(const CDResult& cd) {
  std::set<std::uint64_t> values(cd.measure_of.begin(), cd.measure_of.end());
  return {values.begin(), values.end()};
}

inline std::vector<std::uint64_t> measure_image(const GroupTable& g, const Lattice& lat) {
  return measure_image(cd_lattice(g, lat));
}

// HK as a set, built coset by coset so the cost is |HK| rather than |H||K|.
inline ElementSet product_set(const GroupTable& g, const ElementSet& h, const ElementSet& k) {
  ElementSet out(g.order());
  const auto ks = k.members<Element>();
  h.for_each([&](std::size_t x) {
    if (out.contains(x)) return;
    for (Element y : ks) out.insert(g.mul(static_cast<Element>(x), y));
  });
  return out;
}

// ---------------------------------------------------------------------------
// structural checks

struct Witness {
  std::vector<SubgroupIndex> subgroups;
  std::optional<Element> element;
  std::string detail;
};

struct PropertyCheck {
  std::string id;
  std::string description;
  bool passed = true;
  std::optional<Witness> witness;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
  }
  std::vector<std::string> failed_ids() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.id);
    return out;
  }
};

namespace detail {

class PropertyRecorder {
 public:
  PropertyRecorder(std::string id, std::string description) {
    check_.id = std::move(id);
    check_.description = std::move(description);
  }
  // Records the first failure only.
  void fail(std::vector<SubgroupIndex> subgroups, std::string detail,
            std::optional<Element> element = std::nullopt) {
    if (!check_.passed) return;
    check_.passed = false;
    check_.witness = Witness{std::move(subgroups), element, std::move(detail)};
  }
  bool failed() const { return !check_.passed; }
  PropertyCheck take() { return std::move(check_); }

 private:
  PropertyCheck check_;
};

// Memoized meet/join over lattice positions.
class LatticeOps {
 public:
  LatticeOps(const GroupTable& g, const Lattice& lat) : g_(g), lat_(lat) {}

  SubgroupIndex meet(SubgroupIndex a, SubgroupIndex b) {
    return memo(meets_, a, b, [&] { return meet_index(lat_, a, b); });
  }
  SubgroupIndex join(SubgroupIndex a, SubgroupIndex b) {
    return memo(joins_, a, b, [&] { return join_index(g_, lat_, a, b); });
  }

 private:
  template <class F>
  SubgroupIndex memo(std::unordered_map<std::uint64_t, SubgroupIndex>& cache, SubgroupIndex a,
                     SubgroupIndex b, F&& compute) {
    if (a > b) std::swap(a, b);
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const SubgroupIndex v = compute();
    cache.emplace(key, v);
    return v;
  }

  const GroupTable& g_;
  const Lattice& lat_;
  std::unordered_map<std::uint64_t, SubgroupIndex> meets_, joins_;
};

}  // namespace detail

// Checks P1..P10 independently; every failure carries a re-checkable witness.
inline PropertyReport verify_cd_properties(const GroupTable& g, const Lattice& lat, const CDResult& cd,
                                           const Limits& limits = {}) {
  using detail::PropertyRecorder;
  PropertyReport report;
  const auto& cent = cd.centralizer_of;
  const auto& m = cd.measure_of;
  const SubgroupIndex zg = cent[lat.whole()];

  {
    PropertyRecorder r("P1", "m(H) <= m(C(H)), with equality only when C(C(H)) = H");
    for (SubgroupIndex h = 0; h < lat.size() && !r.failed(); ++h) {
      const SubgroupIndex c = cent[h];
      if (m[h] > m[c])
        r.fail({h, c}, "measure " + std::to_string(m[h]) + " exceeds centralizer measure " + std::to_string(m[c]));
      else if (m[h] == m[c] && cent[c] != h)
        r.fail({h, c, cent[c]}, "equal measures but C(C(H)) != H");
    }
    report.checks.push_back(r.take());
  }

  {
    PropertyRecorder r("P2", "members have member centralizers and C(C(H)) = H");
    for (auto h : cd.members) {
      if (!cd.is_member(cent[h])) r.fail({h, cent[h]}, "centralizer of a member is not a member");
      else if (cent[cent[h]] != h) r.fail({h, cent[h], cent[cent[h]]}, "C(C(H)) != H for a member");
    }
    report.checks.push_back(r.take());
  }

  {
    PropertyRecorder r("P3", "largest member M is normal and CD(M) = CD(G)");
    const SubgroupIndex top = cd.max_member;
    const ElementSet& top_set = lat.subgroup(top);
    if (!cd.is_member(top)) {
      r.fail({top}, "join of all members is not a member");
    } else if (auto x = non_normalizing_element(g, top_set)) {
      r.fail({top}, "largest member is not normal", *x);
    } else {
      const InducedGroup sub = subgroup_table(g, top_set);
      const Lattice sub_lat = enumerate_subgroups(sub.table, limits);
      const CDResult sub_cd = cd_lattice(sub.table, sub_lat);
      std::vector<SubgroupIndex> mapped;
      for (auto i : sub_cd.members) {
        ElementSet lifted(g.order());
        sub_lat.subgroup(i).for_each([&](std::size_t e) { lifted.insert(sub.embedding[e]); });
        mapped.push_back(lat.require_index(lifted));
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped != cd.members) {
        std::vector<SubgroupIndex> diff;
        std::set_symmetric_difference(mapped.begin(), mapped.end(), cd.members.begin(), cd.members.end(),
                                      std::back_inserter(diff));
        r.fail({top, diff.front()}, "CD(M) and CD(G) differ (second subgroup is in exactly one of them)");
      }
    }
    report.checks.push_back(r.take());
  }

  {
    PropertyRecorder r("P4", "smallest member is normal, abelian and contains Z(G)");
    const SubgroupIndex low = cd.min_member;
    const ElementSet& low_set = lat.subgroup(low);
    if (!cd.is_member(low)) {
      r.fail({low}, "meet of all members is not a member");
    } else if (auto x = non_normalizing_element(g, low_set)) {
      r.fail({low}, "smallest member is not normal", *x);
    } else if (!lat.contains(low, cent[low])) {
      r.fail({low, cent[low]}, "smallest member is not abelian");
    } else if (!lat.contains(zg, low)) {
      r.fail({low, zg}, "smallest member does not contain the center");
    }
    report.checks.push_back(r.take());
  }

  detail::LatticeOps ops(g, lat);

  {
    PropertyRecorder r("P5", "members closed under meet and join, and HK = KH = <H, K>");
    for (std::size_t a = 0; a < cd.members.size() && !r.failed(); ++a) {
      for (std::size_t b = a; b < cd.members.size() && !r.failed(); ++b) {
        const SubgroupIndex h = cd.members[a], k = cd.members[b];
        const SubgroupIndex mt = ops.meet(h, k), jn = ops.join(h, k);
        if (!cd.is_member(mt)) r.fail({h, k, mt}, "meet of members is not a member");
        else if (!cd.is_member(jn)) r.fail({h, k, jn}, "join of members is not a member");
        else {
          const ElementSet hk = product_set(g, lat.subgroup(h), lat.subgroup(k));
          const ElementSet kh = product_set(g, lat.subgroup(k), lat.subgroup(h));
          if (!(hk == kh) || !(hk == lat.subgroup(jn)))
            r.fail({h, k, jn}, "HK, KH and <H, K> are not all equal");
        }
      }
    }
    report.checks.push_back(r.take());
  }

  {
    PropertyRecorder r("P6", "members closed under conjugation");
    const auto gens = generating_set(g, g.all());
    for (auto h : cd.members) {
      for (Element s : gens) {
        const auto image = lat.index_of(conjugate_subgroup(g, lat.subgroup(h), s));
        if (!image || !cd.is_member(*image)) {
          r.fail({h}, "conjugate of a member is not a member", s);
          break;
        }
      }
      if (r.failed()) break;
    }
    report.checks.push_back(r.take());
  }

  {
    PropertyRecorder r("P7", "modular law: X <= Z implies X v (Y ^ Z) = (X v Y) ^ Z");
    for (auto x : cd.members) {
      for (auto z : cd.members) {
        if (!lat.contains(x, z)) continue;
        for (auto y : cd.members) {
          const SubgroupIndex lhs = ops.join(x, ops.meet(y, z));
          const SubgroupIndex rhs = ops.meet(ops.join(x, y), z);
          if (lhs != rhs) {
            r.fail({x, y, z}, "modular law fails for (X, Y, Z)");
            break;
          }
        }
        if (r.failed()) break;
      }
      if (r.failed()) break;
    }
    report.checks.push_back(r.take());
  }

  {
    PropertyRecorder r("P8", "H -> C(H) is an order-reversing involution on members");
    for (auto h : cd.members) {
      if (!cd.is_member(cent[h]) || cent[cent[h]] != h) {
        r.fail({h, cent[h]}, "centralizer map is not an involution on members");
        break;
      }
    }
    for (auto h : cd.members) {
      if (r.failed()) break;
      for (auto k : cd.members) {
        if (h != k && lat.contains(h, k) && !lat.contains(cent[k], cent[h])) {
          r.fail({h, k}, "H <= K but C(K) is not contained in C(H)");
          break;
        }
      }
    }
    report.checks.push_back(r.take());
  }

  {
    PropertyRecorder r("P9", "if 1 is a member, no member has prime order");
    if (cd.is_member(lat.trivial()))
      for (auto h : cd.members)
        if (is_prime(lat.order_of(h))) {
          r.fail({lat.trivial(), h}, "trivial subgroup and a prime-order subgroup are both members");
          break;
        }
    report.checks.push_back(r.take());
  }

  {
    PropertyRecorder r("P10", "Z(G) is contained in every member");
    for (auto h : cd.members)
      if (!lat.contains(zg, h)) {
        r.fail({zg, h}, "member does not contain the center");
        break;
      }
    report.checks.push_back(r.take());
  }

  return report;
}

}  // namespace cdlat

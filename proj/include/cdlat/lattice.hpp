#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

using SubgroupIndex = std::uint32_t;

// The full subgroup lattice L(G). Positions are canonical: sorted by order,
// then lexicographically by member list, so position 0 is the trivial
// subgroup and the last position is G itself.
class Lattice {
 public:
  std::size_t size() const { return subgroups_.size(); }
  std::size_t group_order() const { return group_order_; }

  const ElementSet& subgroup(SubgroupIndex i) const { return subgroups_[i]; }
  std::size_t order_of(SubgroupIndex i) const { return subgroups_[i].count(); }
  const std::vector<ElementSet>& subgroups() const { return subgroups_; }
  // A generating set recorded during enumeration.
  std::span<const Element> generators(SubgroupIndex i) const { return generators_[i]; }

  SubgroupIndex trivial() const { return 0; }
  SubgroupIndex whole() const { return static_cast<SubgroupIndex>(size() - 1); }

  std::optional<SubgroupIndex> index_of(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  SubgroupIndex require_index(const ElementSet& s) const {
    if (auto i = index_of(s)) return *i;
    throw NotComparable("element set is not a subgroup in this lattice");
  }

  // Positions of subgroups strictly containing / strictly contained in i.
  const SubgroupSet& strictly_above(SubgroupIndex i) const { return above_[i]; }
  const SubgroupSet& strictly_below(SubgroupIndex i) const { return below_[i]; }

  bool contains(SubgroupIndex lower, SubgroupIndex upper) const {
    return lower == upper || above_[lower].contains(upper);
  }

  // Cover pairs (H, K), H maximal in K, sorted.
  const std::vector<std::pair<SubgroupIndex, SubgroupIndex>>& covers() const { return covers_; }

 private:
  friend Lattice enumerate_subgroups(const GroupTable&, const Limits&);

  std::size_t group_order_ = 0;
  std::vector<ElementSet> subgroups_;
  std::vector<std::vector<Element>> generators_;
  std::unordered_map<ElementSet, SubgroupIndex, ElementSet::Hash> index_;
  std::vector<SubgroupSet> above_;
  std::vector<SubgroupSet> below_;
  std::vector<std::pair<SubgroupIndex, SubgroupIndex>> covers_;
};

// Every subgroup is a join of cyclic subgroups, so starting from the trivial
// subgroup and repeatedly joining with each cyclic subgroup reaches all of
// L(G). Joins are computed incrementally from recorded generators.
inline Lattice enumerate_subgroups(const GroupTable& g, const Limits& limits = {}) {
  const std::size_t n = g.order();

  // one representative generator per cyclic subgroup
  std::vector<Element> cyclic_reps;
  {
    std::unordered_map<ElementSet, Element, ElementSet::Hash> seen;
    for (Element x = 1; x < n; ++x) {
      auto c = cyclic_subgroup(g, x);
      if (seen.emplace(std::move(c), x).second) cyclic_reps.push_back(x);
    }
  }

  struct Found {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSet::Hash> seen;
  found.push_back({g.trivial(), {}});
  seen.emplace(found.back().set, 0);

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Element x : cyclic_reps) {
      if (found[head].set.contains(x)) continue;
      ElementSet joined = extend_closure(g, found[head].set, found[head].gens, x);
      if (seen.contains(joined)) continue;
      if (found.size() >= limits.max_subgroups) throw LatticeExceedsCap(limits.max_subgroups);
      std::vector<Element> gens = found[head].gens;
      gens.push_back(x);
      seen.emplace(joined, found.size());
      found.push_back({std::move(joined), std::move(gens)});
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_compare(found[a].set, found[b].set) < 0;
  });

  Lattice lat;
  lat.group_order_ = n;
  const std::size_t s = found.size();
  lat.subgroups_.reserve(s);
  lat.generators_.reserve(s);
  for (std::size_t pos = 0; pos < s; ++pos) {
    lat.subgroups_.push_back(std::move(found[order[pos]].set));
    lat.generators_.push_back(std::move(found[order[pos]].gens));
    lat.index_.emplace(lat.subgroups_.back(), static_cast<SubgroupIndex>(pos));
  }

  lat.above_.assign(s, SubgroupSet(s));
  lat.below_.assign(s, SubgroupSet(s));
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t oi = lat.subgroups_[i].count();
    for (std::size_t j = i + 1; j < s; ++j) {
      const std::size_t oj = lat.subgroups_[j].count();
      if (oj == oi || oj % oi != 0) continue;
      if (lat.subgroups_[i].is_subset_of(lat.subgroups_[j])) {
        lat.above_[i].insert(j);
        lat.below_[j].insert(i);
      }
    }
  }

  for (std::size_t i = 0; i < s; ++i) {
    lat.above_[i].for_each([&](std::size_t j) {
      if (!lat.above_[i].intersects(lat.below_[j]))
        lat.covers_.emplace_back(static_cast<SubgroupIndex>(i), static_cast<SubgroupIndex>(j));
    });
  }
  return lat;
}

// X in L with H < X < K, by linear scan with an order-divisibility filter.
inline std::vector<ElementSet> open_interval(const Lattice& lat, const ElementSet& h, const ElementSet& k) {
  if (!h.is_subset_of(k) || h == k) throw NotComparable("open interval needs H < K");
  const std::size_t oh = h.count(), ok = k.count();
  std::vector<ElementSet> out;
  for (const auto& x : lat.subgroups()) {
    const std::size_t ox = x.count();
    if (ox <= oh || ox >= ok || ox % oh != 0 || ok % ox != 0) continue;
    if (h.is_subset_of(x) && x.is_subset_of(k)) out.push_back(x);
  }
  return out;
}

inline bool is_maximal_in(const Lattice& lat, const ElementSet& h, const ElementSet& k) {
  return open_interval(lat, h, k).empty();
}

inline std::vector<SubgroupIndex> normal_subgroup_indices(const GroupTable& g, const Lattice& lat) {
  const auto gens = generating_set(g, g.all());
  std::vector<SubgroupIndex> out;
  for (SubgroupIndex i = 0; i < lat.size(); ++i) {
    const auto& h = lat.subgroup(i);
    bool normal = true;
    h.for_each([&](std::size_t e) {
      if (!normal) return;
      for (Element s : gens)
        if (!h.contains(g.conjugate(s, static_cast<Element>(e)))) {
          normal = false;
          return;
        }
    });
    if (normal) out.push_back(i);
  }
  return out;
}

inline std::vector<ElementSet> normal_subgroups(const GroupTable& g, const Lattice& lat) {
  std::vector<ElementSet> out;
  for (auto i : normal_subgroup_indices(g, lat)) out.push_back(lat.subgroup(i));
  return out;
}

inline SubgroupIndex meet_index(const Lattice& lat, SubgroupIndex h, SubgroupIndex k) {
  return lat.require_index(lat.subgroup(h) & lat.subgroup(k));
}

inline SubgroupIndex join_index(const GroupTable& g, const Lattice& lat, SubgroupIndex h, SubgroupIndex k) {
  if (lat.contains(h, k)) return k;
  if (lat.contains(k, h)) return h;
  std::vector<Element> gens(lat.generators(h).begin(), lat.generators(h).end());
  gens.insert(gens.end(), lat.generators(k).begin(), lat.generators(k).end());
  return lat.require_index(closure(g, gens));
}

inline ElementSet meet(const Lattice& lat, const ElementSet& h, const ElementSet& k) {
  return lat.subgroup(meet_index(lat, lat.require_index(h), lat.require_index(k)));
}

inline ElementSet join(const GroupTable& g, const Lattice& lat, const ElementSet& h, const ElementSet& k) {
  return lat.subgroup(join_index(g, lat, lat.require_index(h), lat.require_index(k)));
}

}  // namespace cdlat

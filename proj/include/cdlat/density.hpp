#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cdlat/chermak_delgado.hpp"
#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"

namespace cdlat {

inline constexpr std::size_t kDefaultWitnessCap = 100;

struct DensityVerdict {
  bool dense = true;
  // (H, K) with H < K, H not maximal in K and no member strictly between;
  // sorted, truncated at the witness cap.
  std::vector<std::pair<SubgroupIndex, SubgroupIndex>> failures;
  std::uint64_t failure_count = 0;  // exhaustive, independent of the cap
  std::uint64_t pairs_checked = 0;
};

// Scans every pair H < K. The open interval (H, K) is strictly_above(H) &
// strictly_below(K); it must meet CD(G) whenever it is nonempty.
inline DensityVerdict is_dense_cd(const Lattice& lat, const CDResult& cd,
                                  std::size_t witness_cap = kDefaultWitnessCap) {
  DensityVerdict v;
  for (SubgroupIndex h = 0; h < lat.size(); ++h) {
    const SubgroupSet& up = lat.strictly_above(h);
    up.for_each([&](std::size_t k) {
      ++v.pairs_checked;
      const SubgroupSet& down = lat.strictly_below(static_cast<SubgroupIndex>(k));
      if (!up.intersects(down)) return;  // H maximal in K
      if (SubgroupSet::triple_intersects(up, down, cd.member_set)) return;
      ++v.failure_count;
      if (v.failures.size() < witness_cap) v.failures.emplace_back(h, static_cast<SubgroupIndex>(k));
    });
  }
  v.dense = v.failure_count == 0;
  return v;
}

inline DensityVerdict is_dense_cd(const GroupTable&, const Lattice& lat, const CDResult& cd,
                                  std::size_t witness_cap = kDefaultWitnessCap) {
  return is_dense_cd(lat, cd, witness_cap);
}

// ---------------------------------------------------------------------------
// theorem checks

struct ClaimResult {
  std::string id;
  std::string description;
  bool passed = true;
  std::string measured;
  // Lattice positions for per-group claims, record positions for corpus claims.
  std::vector<std::uint64_t> offending;
};

struct TheoremReport {
  std::string name;
  std::vector<ClaimResult> claims;

  bool all_passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
  }
};

namespace detail {
inline std::string join_numbers(const std::vector<std::uint64_t>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << '}';
  return out.str();
}
}  // namespace detail

// For a dense p-group of order p^n, n >= 2: |Z| = p and m* = p^(n+1);
// order-p^2 subgroups contain Z and the normal ones are members;
// Im(m) = {p^n, p^(n+1)}. Every value is recomputed from the pipeline.
inline TheoremReport verify_dense_p_group_profile(const GroupTable& g, const Lattice& lat, const CDResult& cd,
                                                  const DensityVerdict& verdict) {
  const auto sig = factorize(g.order());
  if (sig.size() != 1 || sig.front().second < 2)
    throw PreconditionUnmet("dense p-group profile needs a p-group of order at least p^2");
  if (!verdict.dense) throw PreconditionUnmet("dense p-group profile needs a group with dense CD-subgroups");
  const std::uint64_t p = sig.front().first;
  const unsigned n = sig.front().second;
  const std::uint64_t pn = ipow(p, n), pn1 = pn * p;

  TheoremReport report;
  report.name = "dense_p_group_profile";
  const SubgroupIndex z = cd.centralizer_of[lat.whole()];

  {
    ClaimResult c{"center_and_m_star", "|Z(G)| = p and m*(G) = p^(n+1)", true, "", {}};
    const std::size_t zo = lat.order_of(z);
    c.passed = zo == p && cd.m_star == pn1;
    c.measured = "|Z(G)| = " + std::to_string(zo) + ", m* = " + std::to_string(cd.m_star) +
                 ", expected " + std::to_string(p) + " and " + std::to_string(pn1);
    if (!c.passed) c.offending.push_back(z);
    report.claims.push_back(std::move(c));
  }

  {
    ClaimResult c{"order_p2_subgroups",
                  "every subgroup of order p^2 contains Z(G); normal ones lie in CD(G)", true, "", {}};
    const auto normals = normal_subgroup_indices(g, lat);
    std::size_t count = 0, normal_count = 0;
    for (SubgroupIndex h = 0; h < lat.size(); ++h) {
      if (lat.order_of(h) != p * p) continue;
      ++count;
      const bool normal = std::binary_search(normals.begin(), normals.end(), h);
      normal_count += normal;
      if (!lat.contains(z, h) || (normal && !cd.is_member(h))) c.offending.push_back(h);
    }
    c.passed = c.offending.empty();
    c.measured = std::to_string(count) + " subgroups of order p^2 (" + std::to_string(normal_count) +
                 " normal), " + std::to_string(c.offending.size()) + " offending";
    report.claims.push_back(std::move(c));
  }

  {
    ClaimResult c{"measure_image", "Im(m) = {p^n, p^(n+1)}", true, "", {}};
    const auto image = measure_image(cd);
    c.passed = image == std::vector<std::uint64_t>{pn, pn1};
    c.measured = "Im(m) = " + detail::join_numbers(image) + ", expected " + detail::join_numbers({pn, pn1});
    if (!c.passed)
      for (SubgroupIndex h = 0; h < lat.size(); ++h)
        if (cd.measure_of[h] != pn && cd.measure_of[h] != pn1) c.offending.push_back(h);
    report.claims.push_back(std::move(c));
  }
  return report;
}

// One survey row.
struct DensityRecord {
  std::string name;
  std::uint64_t order = 0;
  PrimeSignature prime_signature;
  bool is_abelian = false;
  bool dense = false;
  std::size_t cd_size = 0;
  std::uint64_t m_star = 0;
};

inline DensityRecord classify_density(const GroupTable& g, const Limits& limits = {}, std::string name = {}) {
  const Lattice lat = enumerate_subgroups(g, limits);
  const CDResult cd = cd_lattice(g, lat);
  const DensityVerdict v = is_dense_cd(lat, cd, 0);
  DensityRecord r;
  r.name = std::move(name);
  r.order = g.order();
  r.prime_signature = factorize(g.order());
  r.is_abelian = is_abelian(g);
  r.dense = v.dense;
  r.cd_size = cd.members.size();
  r.m_star = cd.m_star;
  return r;
}

inline bool is_nonabelian_pq(const DensityRecord& r) {
  return !r.is_abelian && r.prime_signature.size() == 2 && r.prime_signature[0].second == 1 &&
         r.prime_signature[1].second == 1;
}

// Over groups with at least two prime divisors: dense iff nonabelian of
// order pq. `offending` lists positions of counterexample records.
inline TheoremReport verify_pq_classification(std::span<const DensityRecord> records) {
  TheoremReport report;
  report.name = "pq_classification";
  ClaimResult c{"dense_iff_nonabelian_pq", "dense iff nonabelian of order pq (p, q distinct primes)", true, "", {}};
  std::size_t dense_count = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.prime_signature.size() < 2)
      throw PreconditionUnmet("record '" + r.name + "' has fewer than two prime divisors");
    dense_count += r.dense;
    if (r.dense != is_nonabelian_pq(r)) c.offending.push_back(i);
  }
  c.passed = c.offending.empty();
  c.measured = std::to_string(records.size()) + " groups, " + std::to_string(dense_count) + " dense, " +
               std::to_string(c.offending.size()) + " counterexamples";
  report.claims.push_back(std::move(c));
  return report;
}

// Groups with all Sylow subgroups cyclic have a one-member CD lattice.
inline bool verify_zm_chain(const GroupTable& g, const CDResult& cd) {
  if (!has_cyclic_sylows(g)) throw PreconditionUnmet("group has a non-cyclic Sylow subgroup");
  return cd.members.size() == 1;
}

}  // namespace cdlat

#pragma once

// Brute-force reference computations over sorted element lists and the raw
// multiplication table.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "cdlat/group.hpp"

namespace oracle {

using Elements = std::vector<std::uint32_t>;

// Closure of `seed` under multiplication, by repeated all-pairs products
// until nothing new appears (finite, so this is the generated subgroup).
inline Elements naive_closure(const cdlat::GroupTable& g, Elements seed) {
  std::set<std::uint32_t> s(seed.begin(), seed.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const Elements cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

// Every subgroup of a group of order n is generated by at most floor(log2 n)
// elements, so closing every subset of that size finds them all.
inline std::set<Elements> all_subgroups(const cdlat::GroupTable& g) {
  const std::size_t n = g.order();
  std::size_t rank = 0;
  while ((std::size_t{2} << rank) <= n) ++rank;
  std::set<Elements> out;
  Elements pick;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
    out.insert(naive_closure(g, pick));
    if (pick.size() == rank) return;
    for (std::uint32_t x = from; x < n; ++x) {
      pick.push_back(x);
      rec(x + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return out;
}

inline Elements centralizer(const cdlat::GroupTable& g, const Elements& s) {
  Elements out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : s) ok = ok && g.mul(x, y) == g.mul(y, x);
    if (ok) out.push_back(x);
  }
  return out;
}

inline std::uint64_t measure(const cdlat::GroupTable& g, const Elements& h) {
  return static_cast<std::uint64_t>(h.size()) * centralizer(g, h).size();
}

inline bool subset(const Elements& a, const Elements& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// First (a, b, c) with (ab)c != a(bc) in a raw flat table.
inline bool find_nonassociative(const std::vector<std::uint32_t>& t, std::size_t n, std::size_t& a,
                                std::size_t& b, std::size_t& c) {
  for (a = 0; a < n; ++a)
    for (b = 0; b < n; ++b)
      for (c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return true;
  return false;
}

}  // namespace oracle

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/permutation.hpp"

namespace cdlat {

using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

// Size guards shared by every stage of the pipeline.
struct Limits {
  std::size_t max_order = 512;
  std::size_t max_subgroups = 250000;

  // CDLAT_ORDER_CAP and CDLAT_SUBGROUP_CAP override the defaults.
  static Limits from_environment() {
    Limits limits;
    auto read = [](const char* name, std::size_t& slot) {
      if (const char* v = std::getenv(name)) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && parsed > 0) slot = static_cast<std::size_t>(parsed);
      }
    };
    read("CDLAT_ORDER_CAP", limits.max_order);
    read("CDLAT_SUBGROUP_CAP", limits.max_subgroups);
    return limits;
  }
};

// A finite group as a dense multiplication table; element 0 is the identity.
// Instances only come out of validating constructors, so every table in
// circulation satisfies the group axioms.
class GroupTable {
 public:
  // Throws NotAGroup naming the first violated axiom.
  static GroupTable from_cayley_table(std::size_t n, std::vector<Element> flat) {
    auto inv = validate(n, flat);
    return GroupTable(n, std::move(flat), std::move(inv));
  }

  static GroupTable from_cayley_table(const std::vector<std::vector<Element>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw NotAGroup("nonempty", 0, 0, 0);
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) throw NotAGroup("square table", r, rows[r].size(), 0);
      flat.insert(flat.end(), rows[r].begin(), rows[r].end());
    }
    return from_cayley_table(n, std::move(flat));
  }

  std::size_t order() const { return n_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::span<const Element> row(Element a) const {
    return std::span<const Element>(mul_).subspan(static_cast<std::size_t>(a) * n_, n_);
  }
  std::span<const Element> table() const { return mul_; }
  std::span<const Element> inverses() const { return inv_; }

  // g x g^-1
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv_[g]); }
  // a^-1 b^-1 a b
  Element commutator(Element a, Element b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  Element power(Element a, std::uint64_t k) const {
    Element result = kIdentity;
    Element base = a;
    while (k) {
      if (k & 1u) result = mul(result, base);
      base = mul(base, base);
      k >>= 1u;
    }
    return result;
  }

  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != kIdentity; x = mul(x, a)) ++k;
    return k;
  }

  ElementSet all() const { return ElementSet::full(n_); }
  ElementSet trivial() const {
    ElementSet s(n_);
    s.insert(kIdentity);
    return s;
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.mul_ == b.mul_; }

 private:
  GroupTable(std::size_t n, std::vector<Element> mul, std::vector<Element> inv)
      : n_(n), mul_(std::move(mul)), inv_(std::move(inv)) {}

  static std::vector<Element> validate(std::size_t n, const std::vector<Element>& t) {
    if (n == 0) throw NotAGroup("nonempty", 0, 0, 0);
    if (t.size() != n * n) throw NotAGroup("square table", t.size(), n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (t[a * n + b] >= n) throw NotAGroup("closure", a, b, 0);
    for (std::size_t x = 0; x < n; ++x)
      if (t[x] != x || t[x * n] != x) throw NotAGroup("identity", x, 0, 0);

    std::vector<std::size_t> seen(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), n);
      for (std::size_t b = 0; b < n; ++b) {
        const Element v = t[a * n + b];
        if (seen[v] != n) throw NotAGroup("latin square (row)", a, seen[v], b);
        seen[v] = b;
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::fill(seen.begin(), seen.end(), n);
      for (std::size_t a = 0; a < n; ++a) {
        const Element v = t[a * n + b];
        if (seen[v] != n) throw NotAGroup("latin square (column)", seen[v], a, b);
        seen[v] = a;
      }
    }

    std::vector<Element> inv(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Element* row = &t[x * n];
      const auto y = static_cast<std::size_t>(std::find(row, row + n, kIdentity) - row);
      if (t[y * n + x] != kIdentity) throw NotAGroup("inverse", x, y, 0);
      inv[x] = static_cast<Element>(y);
    }

    for (std::size_t a = 0; a < n; ++a) {
      const Element* row_a = &t[a * n];
      for (std::size_t b = 0; b < n; ++b) {
        const Element* row_ab = &t[static_cast<std::size_t>(row_a[b]) * n];
        const Element* row_b = &t[b * n];
        for (std::size_t c = 0; c < n; ++c)
          if (row_ab[c] != row_a[row_b[c]]) throw NotAGroup("associativity", a, b, c);
      }
    }
    return inv;
  }

  std::size_t n_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

// ---------------------------------------------------------------------------
// closures

// Subgroup generated by `gens` (BFS under right multiplication).
inline ElementSet closure(const GroupTable& g, std::span<const Element> gens) {
  ElementSet set(g.order());
  std::vector<Element> queue{kIdentity};
  set.insert(kIdentity);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      const Element next = g.mul(queue[head], s);
      if (set.insert(next)) queue.push_back(next);
    }
  }
  return set;
}

// <H, x> where H = <gens> is already known.
inline ElementSet extend_closure(const GroupTable& g, const ElementSet& subgroup,
                                 std::span<const Element> gens, Element x) {
  ElementSet set = subgroup;
  std::vector<Element> queue = subgroup.members<Element>();
  std::vector<Element> all_gens(gens.begin(), gens.end());
  all_gens.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : all_gens) {
      const Element next = g.mul(queue[head], s);
      if (set.insert(next)) queue.push_back(next);
    }
  }
  return set;
}

// Greedy generating set of <seed>: each generator strictly enlarges the
// running subgroup, so at most log2|G| elements are returned.
inline std::vector<Element> generating_set(const GroupTable& g, const ElementSet& seed) {
  std::vector<Element> gens;
  ElementSet current = g.trivial();
  seed.for_each([&](std::size_t x) {
    if (current.contains(x)) return;
    current = extend_closure(g, current, gens, static_cast<Element>(x));
    gens.push_back(static_cast<Element>(x));
  });
  return gens;
}

inline ElementSet generated_subgroup(const GroupTable& g, const ElementSet& seed) {
  const auto gens = generating_set(g, seed);
  return closure(g, gens);
}

inline ElementSet cyclic_subgroup(const GroupTable& g, Element x) {
  ElementSet set(g.order());
  Element y = kIdentity;
  do {
    set.insert(y);
    y = g.mul(y, x);
  } while (y != kIdentity);
  return set;
}

inline bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(kIdentity)) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!ok) return;
    if (!s.contains(g.inv(static_cast<Element>(a)))) ok = false;
    s.for_each([&](std::size_t b) {
      if (ok && !s.contains(g.mul(static_cast<Element>(a), static_cast<Element>(b)))) ok = false;
    });
  });
  return ok;
}

// ---------------------------------------------------------------------------
// centralizers, center, conjugation

// Elements commuting with every element of `elements`.
inline ElementSet centralizer(const GroupTable& g, std::span<const Element> elements) {
  ElementSet out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Element s : elements) {
      if (!g.commute(x, s)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.insert(x);
  }
  return out;
}

inline ElementSet centralizer(const GroupTable& g, const ElementSet& s) {
  const auto elems = s.members<Element>();
  return centralizer(g, std::span<const Element>(elems));
}

inline ElementSet center(const GroupTable& g) {
  const auto gens = generating_set(g, g.all());
  return centralizer(g, std::span<const Element>(gens));
}

// g H g^-1
inline ElementSet conjugate_subgroup(const GroupTable& g, const ElementSet& h, Element x) {
  ElementSet out(g.order());
  h.for_each([&](std::size_t e) { out.insert(g.conjugate(x, static_cast<Element>(e))); });
  return out;
}

// Smallest element whose conjugation moves `h`, if any.
inline std::optional<Element> non_normalizing_element(const GroupTable& g, const ElementSet& h) {
  const auto members = h.members<Element>();
  for (Element x = 0; x < g.order(); ++x)
    for (Element e : members)
      if (!h.contains(g.conjugate(x, e))) return x;
  return std::nullopt;
}

inline bool is_normal(const GroupTable& g, const ElementSet& h) { return !non_normalizing_element(g, h); }

// ---------------------------------------------------------------------------
// constructions

inline GroupTable from_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                  std::size_t cap = Limits{}.max_order) {
  if (degree == 0) throw InvalidPermutation("degree must be positive");
  for (const auto& p : generators) {
    if (p.size() != degree) throw InvalidPermutation("generator has wrong degree");
    if (!is_bijection(p)) throw InvalidPermutation("generator is not a bijection");
  }
  std::map<Permutation, std::size_t> seen;
  std::vector<Permutation> elements{identity_permutation(degree)};
  seen.emplace(elements.front(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Permutation next = compose(elements[head], s);
      if (seen.contains(next)) continue;
      if (elements.size() >= cap) throw ClosureExceedsCap(cap, "generated permutation group");
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  // identity is the lexicographically least image tuple, so it lands at 0
  std::sort(elements.begin(), elements.end());
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Element>(i));
  const std::size_t n = elements.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elements[a], elements[b]));
  return GroupTable::from_cayley_table(n, std::move(flat));
}

// Element (a, b) has index a * |h| + b.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                                 std::size_t cap = Limits{}.max_order) {
  const std::size_t m = g.order(), k = h.order();
  if (m * k > cap) throw ClosureExceedsCap(cap, "direct product of order " + std::to_string(m * k));
  const std::size_t n = m * k;
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < k; ++d)
          flat[(a * k + b) * n + (c * k + d)] =
              static_cast<Element>(g.mul(static_cast<Element>(a), static_cast<Element>(c)) * k +
                                   h.mul(static_cast<Element>(b), static_cast<Element>(d)));
  return GroupTable::from_cayley_table(n, std::move(flat));
}

// G/N on left cosets; each coset is represented by its least element and
// cosets are numbered in order of their representatives.
inline GroupTable quotient(const GroupTable& g, const ElementSet& normal) {
  if (auto witness = non_normalizing_element(g, normal)) throw NotNormal(*witness);
  const std::size_t n = g.order();
  std::vector<Element> coset_of(n, static_cast<Element>(n));
  std::vector<Element> reps;
  const auto members = normal.members<Element>();
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : members) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> flat(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) flat[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
  return GroupTable::from_cayley_table(q, std::move(flat));
}

// A subgroup as a group in its own right; `embedding[i]` is the element of
// the parent that local element i stands for (ascending, so 0 maps to 0).
struct InducedGroup {
  GroupTable table;
  std::vector<Element> embedding;
};

inline InducedGroup subgroup_table(const GroupTable& g, const ElementSet& h) {
  auto embedding = h.members<Element>();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < embedding.size(); ++i) local[embedding[i]] = static_cast<Element>(i);
  const std::size_t k = embedding.size();
  std::vector<Element> flat(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) flat[a * k + b] = local[g.mul(embedding[a], embedding[b])];
  return {GroupTable::from_cayley_table(k, std::move(flat)), std::move(embedding)};
}

// ---------------------------------------------------------------------------
// arithmetic and structure

using PrimeSignature = std::vector<std::pair<std::uint64_t, unsigned>>;

inline PrimeSignature factorize(std::uint64_t n) {
  PrimeSignature out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline bool is_abelian(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (!g.commute(a, b)) return false;
  return true;
}

inline std::size_t exponent(const GroupTable& g) {
  std::size_t e = 1;
  for (Element a = 0; a < g.order(); ++a) e = std::lcm(e, g.element_order(a));
  return e;
}

// [H, H]
inline ElementSet derived_subgroup(const GroupTable& g, const ElementSet& h) {
  ElementSet commutators(g.order());
  const auto members = h.members<Element>();
  for (Element a : members)
    for (Element b : members) commutators.insert(g.commutator(a, b));
  return generated_subgroup(g, commutators);
}

// Every Sylow subgroup is cyclic iff for each p^a || |G| some element has
// order p^a (Sylow subgroups are conjugate).
inline bool has_cyclic_sylows(const GroupTable& g) {
  for (auto [p, a] : factorize(g.order())) {
    const std::uint64_t target = ipow(p, a);
    bool found = false;
    for (Element x = 0; x < g.order() && !found; ++x) found = g.element_order(x) == target;
    if (!found) return false;
  }
  return true;
}

struct StructureFlags {
  bool is_abelian = false;
  PrimeSignature prime_signature;
  std::optional<std::uint64_t> p_group_prime;
  bool is_solvable = false;
  bool is_nilpotent = false;
};

inline StructureFlags structure_flags(const GroupTable& g) {
  StructureFlags f;
  f.is_abelian = is_abelian(g);
  f.prime_signature = factorize(g.order());
  if (f.prime_signature.size() == 1) f.p_group_prime = f.prime_signature.front().first;

  // derived series
  ElementSet d = g.all();
  while (true) {
    ElementSet next = derived_subgroup(g, d);
    if (next == d) break;
    d = std::move(next);
  }
  f.is_solvable = d.count() == 1;

  // upper central series: Z_{i+1} = { x : [x, s] in Z_i for all generators s }
  const auto gens = generating_set(g, g.all());
  ElementSet z = g.trivial();
  while (true) {
    ElementSet next(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      bool central = true;
      for (Element s : gens)
        if (!z.contains(g.commutator(x, s))) {
          central = false;
          break;
        }
      if (central) next.insert(x);
    }
    if (next == z) break;
    z = std::move(next);
  }
  f.is_nilpotent = z.count() == g.order();
  return f;
}

}  // namespace cdlat

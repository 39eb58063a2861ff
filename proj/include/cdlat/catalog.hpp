#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cdlat/errors.hpp"
#include "cdlat/group.hpp"
#include "cdlat/permutation.hpp"

namespace cdlat {

enum class Family {
  Cyclic,          // C(n)
  Abelian,         // Abelian(d1,...,dk)
  Dihedral,        // D(2n), argument is the order
  Dicyclic,        // Dic(n), order 4n
  Quaternion,      // Q(2^k), argument is the order
  Symmetric,       // S(n)
  Alternating,     // A(n)
  Extraspecial,    // ES(p,sign) or ES(p,k,sign), order p^(1+2k)
  Extraspecial32,  // ES32(sign)
  ZM,              // ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>
  PQ,              // PQ(p,q), nonabelian of order pq
  Product,         // A X B X ...
  File,            // File(path), permutation generators
};

// Parsed group expression. `sign` is '+' or '-' for the extraspecial
// families and 0 otherwise.
struct GroupSpec {
  Family family = Family::Cyclic;
  std::vector<std::uint64_t> args;
  char sign = 0;
  std::vector<GroupSpec> factors;
  std::string path;
  GeneratorFile generators;

  std::string to_string() const {
    auto list = [&](std::string name) {
      name += '(';
      for (std::size_t i = 0; i < args.size(); ++i) name += (i ? "," : "") + std::to_string(args[i]);
      if (sign) name += std::string(args.empty() ? "" : ",") + "'" + sign + "'";
      return name + ')';
    };
    switch (family) {
      case Family::Cyclic: return list("C");
      case Family::Abelian: return list("Abelian");
      case Family::Dihedral: return list("D");
      case Family::Dicyclic: return list("Dic");
      case Family::Quaternion: return list("Q");
      case Family::Symmetric: return list("S");
      case Family::Alternating: return list("A");
      case Family::Extraspecial: return list("ES");
      case Family::Extraspecial32: return list("ES32");
      case Family::ZM: return list("ZM");
      case Family::PQ: return list("PQ");
      case Family::File: return "File(" + path + ")";
      case Family::Product: {
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " X " : "") + factors[i].to_string();
        return out;
      }
    }
    return {};
  }

  // Known without building, except for generator files. Saturates.
  std::optional<std::uint64_t> expected_order() const {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    auto mul = [&](std::uint64_t a, std::uint64_t b) { return (b && a > kMax / b) ? kMax : a * b; };
    auto factorial = [&](std::uint64_t n) {
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= n; ++i) f = mul(f, i);
      return f;
    };
    switch (family) {
      case Family::Cyclic:
      case Family::Dihedral:
      case Family::Quaternion: return args[0];
      case Family::Abelian: {
        std::uint64_t o = 1;
        for (auto d : args) o = mul(o, d);
        return o;
      }
      case Family::Dicyclic: return mul(4, args[0]);
      case Family::Symmetric: return factorial(args[0]);
      case Family::Alternating: return args[0] < 2 ? 1 : factorial(args[0]) / 2;
      case Family::Extraspecial: {
        const std::uint64_t k = args.size() > 1 ? args[1] : 1;
        std::uint64_t o = args[0];
        for (std::uint64_t i = 0; i < 2 * k; ++i) o = mul(o, args[0]);
        return o;
      }
      case Family::Extraspecial32: return 32;
      case Family::ZM:
      case Family::PQ: return mul(args[0], args[1]);
      case Family::Product: {
        std::uint64_t o = 1;
        for (const auto& f : factors) {
          auto fo = f.expected_order();
          if (!fo) return std::nullopt;
          o = mul(o, *fo);
        }
        return o;
      }
      case Family::File: return std::nullopt;
    }
    return std::nullopt;
  }
};

namespace catalog_detail {

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1u) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * base) % mod);
    base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % mod);
    exp >>= 1u;
  }
  return r;
}

inline bool is_power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

inline void require(bool cond, const std::string& spec, const std::string& why) {
  if (!cond) throw InvalidSpec(spec + ": " + why);
}

// Enforces each family's constraints with exact integer arithmetic.
inline void validate(const GroupSpec& s) {
  const std::string name = s.to_string();
  auto arity = [&](std::size_t n) {
    require(s.args.size() == n, name, "expected " + std::to_string(n) + " integer argument(s)");
  };
  auto needs_sign = [&](bool want) {
    require(want ? (s.sign == '+' || s.sign == '-') : s.sign == 0, name,
            want ? "expected a sign argument '+' or '-'" : "unexpected sign argument");
  };
  switch (s.family) {
    case Family::Cyclic:
      arity(1), needs_sign(false);
      require(s.args[0] >= 1, name, "order must be positive");
      break;
    case Family::Abelian:
      needs_sign(false);
      require(!s.args.empty(), name, "needs at least one factor");
      for (auto d : s.args) require(d >= 1, name, "factors must be positive");
      break;
    case Family::Dihedral:
      arity(1), needs_sign(false);
      require(s.args[0] >= 2 && s.args[0] % 2 == 0, name, "order must be even and at least 2");
      break;
    case Family::Dicyclic:
      arity(1), needs_sign(false);
      require(s.args[0] >= 1, name, "n must be positive");
      break;
    case Family::Quaternion:
      arity(1), needs_sign(false);
      require(s.args[0] >= 8 && is_power_of_two(s.args[0]), name, "order must be a power of 2, at least 8");
      break;
    case Family::Symmetric:
    case Family::Alternating:
      arity(1), needs_sign(false);
      require(s.args[0] >= 1 && s.args[0] <= 6, name, "degree must be in 1..6");
      break;
    case Family::Extraspecial:
      needs_sign(true);
      require(s.args.size() == 1 || s.args.size() == 2, name, "expected ES(p,sign) or ES(p,k,sign)");
      require(is_prime(s.args[0]), name, "p must be prime");
      if (s.args.size() == 2) require(s.args[1] >= 1, name, "k must be positive");
      break;
    case Family::Extraspecial32:
      arity(0), needs_sign(true);
      break;
    case Family::ZM: {
      arity(3), needs_sign(false);
      const auto m = s.args[0], n = s.args[1], r = s.args[2];
      require(m >= 1 && n >= 1 && r >= 1, name, "m, n, r must be positive");
      require(std::gcd(m, n) == 1, name, "gcd(m, n) = " + std::to_string(std::gcd(m, n)) + " != 1");
      const std::uint64_t rm1n = ((r - 1) % m) * (n % m) % m;
      require(std::gcd(rm1n, m) == 1, name, "gcd((r-1)n, m) != 1");
      require(powmod(r, n, m) == 1 % m, name, "r^n is not 1 mod m");
      break;
    }
    case Family::PQ:
      arity(2), needs_sign(false);
      require(is_prime(s.args[0]) && is_prime(s.args[1]), name, "p and q must be prime");
      require(s.args[0] != s.args[1], name, "p and q must be distinct");
      require(s.args[1] % s.args[0] == 1, name, "q must be 1 mod p for a nonabelian group to exist");
      break;
    case Family::Product:
      require(s.factors.size() >= 2, name, "product needs two factors");
      for (const auto& f : s.factors) validate(f);
      break;
    case Family::File: break;
  }
}

// ---------------------------------------------------------------------------
// table builders

inline GroupTable cyclic_table(std::size_t n) {
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>((a + b) % n);
  return GroupTable::from_cayley_table(n, std::move(flat));
}

// Elements r^i s^j at index i + n*j; (r^a s^b)(r^c s^d) = r^(a +- c) s^(b+d).
inline GroupTable dihedral_table(std::size_t n) {
  const std::size_t order = 2 * n;
  std::vector<Element> flat(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      const std::size_t rot = b ? (a + n - c) % n : (a + c) % n;
      flat[x * order + y] = static_cast<Element>(rot + n * ((b + d) % 2));
    }
  return GroupTable::from_cayley_table(order, std::move(flat));
}

// <a, x | a^(2n) = 1, x^2 = a^n, x^-1 a x = a^-1>; a^i x^j at index i + 2n*j.
inline GroupTable dicyclic_table(std::size_t n) {
  const std::size_t m = 2 * n, order = 4 * n;
  std::vector<Element> flat(order * order);
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t i = u % m, j = u / m, k = v % m, l = v / m;
      std::size_t e = j ? (i + m - k) % m : (i + k) % m;
      if (j + l == 2) e = (e + n) % m;
      flat[u * order + v] = static_cast<Element>(e + m * ((j + l) % 2));
    }
  return GroupTable::from_cayley_table(order, std::move(flat));
}

// <a, b | a^m = b^n = 1, b^-1 a b = a^r>, element b^j a^i at index i + m*j:
// (b^j a^i)(b^l a^k) = b^(j+l) a^(i r^l + k).
inline GroupTable metacyclic_table(std::size_t m, std::size_t n, std::uint64_t r) {
  const std::size_t order = m * n;
  std::vector<std::uint64_t> rpow(n);
  for (std::size_t l = 0; l < n; ++l) rpow[l] = powmod(r, l, m);
  std::vector<Element> flat(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
      const std::size_t a = static_cast<std::size_t>((i * rpow[l] + k) % m);
      flat[x * order + y] = static_cast<Element>(a + m * ((j + l) % n));
    }
  return GroupTable::from_cayley_table(order, std::move(flat));
}

// Triples (a, b, c) mod p with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab');
// exponent p for odd p. Index a + p*b + p^2*c.
inline GroupTable heisenberg_table(std::size_t p) {
  const std::size_t order = p * p * p;
  std::vector<Element> flat(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
      const std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      flat[x * order + y] =
          static_cast<Element>((a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p));
    }
  return GroupTable::from_cayley_table(order, std::move(flat));
}

inline GroupTable symmetric_group(std::size_t n, const Limits& limits) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation cycle(n), swap = identity_permutation(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
    std::swap(swap[0], swap[1]);
    gens = {cycle, swap};
  }
  return from_generators(n, gens, limits.max_order);
}

// Generated by the 3-cycles (1 2 k), k = 3..n.
inline GroupTable alternating_group(std::size_t n, const Limits& limits) {
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Permutation p = identity_permutation(n);
    p[0] = 1, p[1] = static_cast<std::uint32_t>(k), p[k] = 0;
    gens.push_back(p);
  }
  return from_generators(n, gens, limits.max_order);
}

inline Element smallest_nontrivial(const ElementSet& s) {
  Element out = kIdentity;
  s.for_each([&](std::size_t e) {
    if (out == kIdentity && e != kIdentity) out = static_cast<Element>(e);
  });
  return out;
}

// G1 o G2: (G1 x G2) / <(z1, z2^-1)> for the least nontrivial central
// elements z1, z2 (both centers have order p here). The intermediate
// direct product may exceed the order cap; only the result is capped.
inline GroupTable central_product(const GroupTable& g1, const GroupTable& g2, const Limits& limits) {
  const Element z1 = smallest_nontrivial(center(g1));
  const Element z2 = smallest_nontrivial(center(g2));
  if (z1 == kIdentity || z2 == kIdentity) throw InvalidSpec("central product needs nontrivial centers");
  if (g1.order() * g2.order() / g1.element_order(z1) > limits.max_order)
    throw ClosureExceedsCap(limits.max_order, "central product");
  const GroupTable prod = direct_product(g1, g2, std::max(limits.max_order, g1.order() * g2.order()));
  const Element diagonal = static_cast<Element>(z1 * g2.order() + g2.inv(z2));
  return quotient(prod, cyclic_subgroup(prod, diagonal));
}

inline GroupTable extraspecial_p3(std::uint64_t p, char sign) {
  if (p == 2) return sign == '+' ? dihedral_table(4) : dicyclic_table(2);
  if (sign == '+') return heisenberg_table(p);
  return metacyclic_table(p * p, p, 1 + p);
}

// Least r > 1 of multiplicative order p mod q.
inline std::uint64_t pq_twist(std::uint64_t p, std::uint64_t q) {
  for (std::uint64_t r = 2; r < q; ++r)
    if (powmod(r, p, q) == 1) return r;
  return 1;
}

}  // namespace catalog_detail

inline GroupTable build(const GroupSpec& spec, const Limits& limits = {}) {
  using namespace catalog_detail;
  validate(spec);
  if (auto o = spec.expected_order(); o && *o > limits.max_order)
    throw ClosureExceedsCap(limits.max_order, spec.to_string() + " of order " + std::to_string(*o));
  const auto& a = spec.args;
  switch (spec.family) {
    case Family::Cyclic: return cyclic_table(a[0]);
    case Family::Abelian: {
      GroupTable g = cyclic_table(a[0]);
      for (std::size_t i = 1; i < a.size(); ++i) g = direct_product(g, cyclic_table(a[i]), limits.max_order);
      return g;
    }
    case Family::Dihedral: return dihedral_table(a[0] / 2);
    case Family::Dicyclic: return dicyclic_table(a[0]);
    case Family::Quaternion: return dicyclic_table(a[0] / 4);
    case Family::Symmetric: return symmetric_group(a[0], limits);
    case Family::Alternating: return alternating_group(a[0], limits);
    case Family::Extraspecial: {
      GroupTable g = extraspecial_p3(a[0], spec.sign);
      const std::uint64_t k = a.size() > 1 ? a[1] : 1;
      for (std::uint64_t i = 1; i < k; ++i) g = central_product(g, extraspecial_p3(a[0], '+'), limits);
      return g;
    }
    case Family::Extraspecial32:
      return central_product(extraspecial_p3(2, spec.sign), extraspecial_p3(2, '+'), limits);
    case Family::ZM: return metacyclic_table(a[0], a[1], a[2]);
    case Family::PQ: return metacyclic_table(a[1], a[0], pq_twist(a[0], a[1]));
    case Family::Product: {
      GroupTable g = build(spec.factors.front(), limits);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        g = direct_product(g, build(spec.factors[i], limits), limits.max_order);
      return g;
    }
    case Family::File: return from_generators(spec.generators.degree, spec.generators.generators, limits.max_order);
  }
  throw InvalidSpec("unknown family");
}

// ---------------------------------------------------------------------------
// parsing

inline GroupSpec load_generator_file(const std::string& path) {
  GroupSpec s;
  s.family = Family::File;
  s.path = path;
  try {
    s.generators = read_generator_file(path);
  } catch (const InvalidPermutation& e) {
    throw InvalidSpec(path + ": " + e.what());
  }
  return s;
}

namespace catalog_detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    validate(s);
    return s;
  }

 private:
  GroupSpec expr() {
    GroupSpec first = term();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'X') return first;
    GroupSpec prod;
    prod.family = Family::Product;
    prod.factors.push_back(std::move(first));
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != 'X') break;
      ++pos_;
      prod.factors.push_back(term());
    }
    return prod;
  }

  GroupSpec term() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) throw SyntaxError(start, "expected a constructor name");
    expect('(');
    if (name == "File") {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) throw SyntaxError(pos_, "unterminated File(...)");
      std::string path(text_.substr(pos_, close - pos_));
      const auto b = path.find_first_not_of(" \t"), e = path.find_last_not_of(" \t");
      if (b == std::string::npos) throw SyntaxError(pos_, "empty path in File(...)");
      pos_ = close + 1;
      return load_generator_file(path.substr(b, e - b + 1));
    }

    static const std::pair<std::string_view, Family> kNames[] = {
        {"C", Family::Cyclic},        {"Abelian", Family::Abelian},   {"D", Family::Dihedral},
        {"Dic", Family::Dicyclic},    {"Q", Family::Quaternion},      {"S", Family::Symmetric},
        {"A", Family::Alternating},   {"ES", Family::Extraspecial},   {"ES32", Family::Extraspecial32},
        {"ZM", Family::ZM},           {"PQ", Family::PQ},
    };
    GroupSpec s;
    bool known = false;
    for (auto [n, f] : kNames)
      if (n == name) s.family = f, known = true;
    if (!known) throw SyntaxError(start, "unknown constructor '" + name + "'");

    skip_ws();
    if (peek() == ')') {
      ++pos_;
      return s;
    }
    while (true) {
      skip_ws();
      argument(s);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    return s;
  }

  void argument(GroupSpec& s) {
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (s.sign) throw SyntaxError(start, "sign must be the last argument");
      std::uint64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) throw SyntaxError(start, "integer too large");
        v = v * 10 + d;
        ++pos_;
      }
      s.args.push_back(v);
      return;
    }
    const bool quoted = c == '\'' || c == '"';
    if (quoted) ++pos_;
    const char sign = peek();
    if (sign != '+' && sign != '-') throw SyntaxError(pos_, "expected an integer or a sign");
    ++pos_;
    if (quoted) {
      if (peek() != c) throw SyntaxError(pos_, "unterminated quoted sign");
      ++pos_;
    }
    if (s.sign) throw SyntaxError(start, "more than one sign argument");
    s.sign = sign;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace catalog_detail

// expr := term ('X' term)* ; term := ctor '(' args ')' | 'File(' path ')'
inline GroupSpec parse_spec(std::string_view text) { return catalog_detail::SpecParser(text).parse(); }

// ---------------------------------------------------------------------------
// survey corpus

namespace catalog_detail {

inline GroupSpec make(Family f, std::vector<std::uint64_t> args, char sign = 0) {
  GroupSpec s;
  s.family = f;
  s.args = std::move(args);
  s.sign = sign;
  return s;
}

inline GroupSpec product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.family = Family::Product;
  s.factors = std::move(factors);
  return s;
}

// Invariant factor lists d1 | d2 | ... | dk, d1 > 1, with product `order`.
inline void invariant_factors(std::uint64_t remaining, std::uint64_t last, std::vector<std::uint64_t>& prefix,
                              std::vector<std::vector<std::uint64_t>>& out) {
  if (remaining == 1) {
    out.push_back(prefix);
    return;
  }
  for (std::uint64_t d = 2; d <= remaining; ++d) {
    if (remaining % d != 0 || d % last != 0) continue;
    // every later factor is a multiple of d, so d must divide what is left after it
    if ((remaining / d) % d != 0 && remaining != d) continue;
    prefix.push_back(d);
    invariant_factors(remaining / d, d, prefix, out);
    prefix.pop_back();
  }
}

// Triples (m, n, r) for the metacyclic ZM family.
inline const std::vector<std::array<std::uint64_t, 3>>& zm_triples() {
  static const std::vector<std::array<std::uint64_t, 3>> kTriples = {
      {3, 2, 2},  {5, 2, 4},  {3, 4, 2},  {9, 2, 8},  {5, 4, 2},  {5, 4, 3},  {7, 3, 2},
      {7, 3, 4},  {3, 8, 2},  {13, 3, 3}, {7, 6, 3},  {7, 6, 5},  {3, 14, 2}, {21, 2, 20},
      {13, 4, 5}, {11, 5, 3}, {19, 3, 7}, {31, 3, 5}, {7, 9, 2},  {5, 12, 2},
  };
  return kTriples;
}

}  // namespace catalog_detail

// Deterministic family corpus of groups of order <= max_order.
inline std::vector<GroupSpec> survey_corpus(std::uint64_t max_order, const Limits& limits = {}) {
  using namespace catalog_detail;
  if (max_order > limits.max_order)
    throw PreconditionUnmet("survey max order " + std::to_string(max_order) + " exceeds the order cap");
  std::vector<GroupSpec> out;
  auto add = [&](GroupSpec s) {
    auto o = s.expected_order();
    if (o && *o <= max_order) out.push_back(std::move(s));
  };

  for (std::uint64_t n = 1; n <= max_order; ++n) add(make(Family::Cyclic, {n}));
  for (std::uint64_t n = 2; n <= max_order; ++n) {
    std::vector<std::vector<std::uint64_t>> lists;
    std::vector<std::uint64_t> prefix;
    invariant_factors(n, 1, prefix, lists);
    for (auto& l : lists)
      if (l.size() >= 2) add(make(Family::Abelian, l));
  }
  for (std::uint64_t m = 6; m <= max_order; m += 2) add(make(Family::Dihedral, {m}));
  for (std::uint64_t m = 8; m <= max_order; m *= 2) add(make(Family::Quaternion, {m}));
  for (std::uint64_t n = 3; 4 * n <= max_order; ++n)
    if (!is_power_of_two(n)) add(make(Family::Dicyclic, {n}));
  for (std::uint64_t n = 3; n <= 6; ++n) add(make(Family::Symmetric, {n}));
  for (std::uint64_t n = 4; n <= 6; ++n) add(make(Family::Alternating, {n}));

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pqs;
  for (std::uint64_t p = 2; p * p < max_order; ++p)
    for (std::uint64_t q = p + 1; p * q <= max_order; ++q)
      if (is_prime(p) && is_prime(q) && q % p == 1) pqs.emplace_back(p, q);
  std::sort(pqs.begin(), pqs.end(), [](auto x, auto y) {
    return std::tuple(x.first * x.second, x.first) < std::tuple(y.first * y.second, y.first);
  });
  for (auto [p, q] : pqs) add(make(Family::PQ, {p, q}));

  auto zms = zm_triples();
  std::stable_sort(zms.begin(), zms.end(), [](const auto& x, const auto& y) { return x[0] * x[1] < y[0] * y[1]; });
  for (const auto& t : zms) add(make(Family::ZM, {t[0], t[1], t[2]}));

  for (std::uint64_t p = 2; p * p * p <= max_order; ++p)
    if (is_prime(p)) {
      add(make(Family::Extraspecial, {p}, '+'));
      add(make(Family::Extraspecial, {p}, '-'));
    }
  add(make(Family::Extraspecial32, {}, '+'));
  add(make(Family::Extraspecial32, {}, '-'));
  // order 2^5 is already covered by ES32
  add(make(Family::Extraspecial, {3, 2}, '+'));
  add(make(Family::Extraspecial, {3, 2}, '-'));

  for (auto [p, q] : pqs) add(product({make(Family::Cyclic, {p}), make(Family::PQ, {p, q})}));
  const auto C = [](std::uint64_t n) { return make(Family::Cyclic, {n}); };
  const auto D = [](std::uint64_t n) { return make(Family::Dihedral, {n}); };
  const auto Q8 = make(Family::Quaternion, {8});
  const auto S3 = make(Family::Symmetric, {3});
  const auto A4 = make(Family::Alternating, {4});
  const std::vector<GroupSpec> selected[] = {
      {D(8), C(2)},        {Q8, C(2)},     {C(3), S3},   {C(4), S3},       {C(2), C(2), S3},
      {C(2), A4},          {D(8), C(3)},   {Q8, C(3)},   {C(5), S3},       {D(8), C(2), C(2)},
      {Q8, C(2), C(2)},    {S3, S3},       {C(3), A4},   {C(7), S3},       {S3, D(10)},
      {D(8), D(8)},        {D(8), Q8},     {Q8, Q8},     {make(Family::Extraspecial, {3}, '+'), C(3)},
      {make(Family::Extraspecial32, {}, '-'), C(2)},
  };
  for (const auto& factors : selected) add(product(factors));
  return out;
}

}  // namespace cdlat

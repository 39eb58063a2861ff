#include <gtest/gtest.h>

#include <random>

#include "cdlat/catalog.hpp"
#include "cdlat/group.hpp"
#include "oracle.hpp"

using namespace cdlat;

namespace {

GroupTable s3() { return from_generators(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)}); }
GroupTable d8() { return from_generators(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)}); }
GroupTable cyclic(std::size_t n) { return build(parse_spec("C(" + std::to_string(n) + ")")); }

ElementSet set_of(const GroupTable& g, std::initializer_list<Element> xs) {
  return ElementSet::of(g.order(), std::vector<Element>(xs));
}

void expect_group_axioms(const GroupTable& g) {
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, 0), x);
    EXPECT_EQ(g.mul(x, g.inv(x)), kIdentity);
  }
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (Element b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    EXPECT_TRUE(std::all_of(row.begin(), row.end(), [](bool v) { return v; }));
    EXPECT_TRUE(std::all_of(col.begin(), col.end(), [](bool v) { return v; }));
  }
}

}  // namespace

TEST(FromGenerators, SymmetricGroupOnThreePoints) {
  const auto g = s3();
  EXPECT_EQ(g.order(), 6u);
  expect_group_axioms(g);
}

TEST(FromGenerators, TrivialGroup) {
  const auto g = from_generators(1, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.mul(0, 0), 0u);
}

TEST(FromGenerators, DihedralOfOrderEight) {
  const auto g = d8();
  ASSERT_EQ(g.order(), 8u);
  // brute-force closure over the raw permutations agrees on the size
  EXPECT_EQ(oracle::naive_closure(g, {1, 2, 3, 4, 5, 6, 7}).size(), 8u);
  EXPECT_FALSE(is_abelian(g));
}

TEST(FromGenerators, CanonicalOrderingIsDeterministic) {
  const auto a = from_generators(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)});
  const auto b = from_generators(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)});
  EXPECT_EQ(a.order(), 120u);
  EXPECT_TRUE(a == b);
  // same group from a different generating set lands on the same table
  const auto c = from_generators(5, {parse_cycles("(1 2)", 5), parse_cycles("(2 3 4 5)", 5)});
  EXPECT_TRUE(a == c);
}

TEST(FromGenerators, RejectsNonBijection) {
  EXPECT_THROW(from_generators(3, {Permutation{0, 0, 1}}), InvalidPermutation);
  EXPECT_THROW(from_generators(3, {Permutation{0, 1}}), InvalidPermutation);
}

TEST(FromGenerators, ClosureCap) {
  EXPECT_THROW(from_generators(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)}, 100),
               ClosureExceedsCap);
}

TEST(CycleNotation, ParsesAndRejects) {
  EXPECT_EQ(parse_cycles("(1 2 3)(4 5)", 5), (Permutation{1, 2, 0, 4, 3}));
  EXPECT_EQ(parse_cycles("()", 3), identity_permutation(3));
  EXPECT_EQ(parse_cycles("", 2), identity_permutation(2));
  // functions compose right to left: (1 2)(2 3) sends 3 -> 2 -> 1
  EXPECT_EQ(parse_cycles("(1 2)(2 3)", 3), (Permutation{1, 2, 0}));
  EXPECT_THROW(parse_cycles("(1 4)", 3), InvalidPermutation);
  EXPECT_THROW(parse_cycles("(1 1)", 3), InvalidPermutation);
  EXPECT_THROW(parse_cycles("(1 2", 3), InvalidPermutation);
  EXPECT_THROW(parse_cycles("(1 x)", 3), InvalidPermutation);
}

TEST(GeneratorFile, FormatWithComments) {
  const auto f = parse_generator_text("# quaternion group\ndegree: 8\n(1 2 4 7)(3 6 8 5)  # i\n\n(1 3 4 8)(2 5 7 6)\n");
  EXPECT_EQ(f.degree, 8u);
  ASSERT_EQ(f.generators.size(), 2u);
  const auto g = from_generators(f.degree, f.generators);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(center(g).count(), 2u);

  EXPECT_THROW(parse_generator_text("(1 2)\n"), InvalidPermutation);
  EXPECT_THROW(parse_generator_text("degree: 0\n"), InvalidPermutation);
  EXPECT_THROW(parse_generator_text("degree: 3\n(1 5)\n"), InvalidPermutation);
  EXPECT_EQ(parse_generator_text("degree: 4").generators.size(), 0u);
}

TEST(FromCayleyTable, TrivialAndCyclic) {
  EXPECT_EQ(GroupTable::from_cayley_table({{0}}).order(), 1u);
  std::vector<std::vector<Element>> z4(4, std::vector<Element>(4));
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) z4[a][b] = (a + b) % 4;
  const auto g = GroupTable::from_cayley_table(z4);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.element_order(1), 4u);
}

TEST(FromCayleyTable, NonassociativeLoopOfOrderFive) {
  // Z/5's identity row and column kept; the rest re-filled so every element
  // is an involution, which no group of order 5 allows.
  const std::vector<std::uint32_t> t = {0, 1, 2, 3, 4,  //
                                        1, 0, 3, 4, 2,  //
                                        2, 4, 0, 1, 3,  //
                                        3, 2, 4, 0, 1,  //
                                        4, 3, 1, 2, 0};
  std::size_t a = 0, b = 0, c = 0;
  ASSERT_TRUE(oracle::find_nonassociative(t, 5, a, b, c));
  try {
    GroupTable::from_cayley_table(5, std::vector<Element>(t.begin(), t.end()));
    FAIL() << "expected NotAGroup";
  } catch (const NotAGroup& e) {
    EXPECT_EQ(e.axiom(), "associativity");
    const auto x = e.a(), y = e.b(), z = e.c();
    EXPECT_NE(t[t[x * 5 + y] * 5 + z], t[x * 5 + t[y * 5 + z]]);
  }
}

TEST(FromCayleyTable, ReportsFirstViolatedAxiom) {
  EXPECT_THROW(GroupTable::from_cayley_table({{0, 1}, {1, 2}}), NotAGroup);
  try {
    GroupTable::from_cayley_table({{0, 1}, {1, 1}});
  } catch (const NotAGroup& e) {
    EXPECT_EQ(e.axiom(), "latin square (row)");
  }
  try {
    GroupTable::from_cayley_table({{1, 0}, {0, 1}});
  } catch (const NotAGroup& e) {
    EXPECT_EQ(e.axiom(), "identity");
  }
}

TEST(GeneratedSubgroup, Examples) {
  const auto g = s3();
  EXPECT_EQ(generated_subgroup(g, g.trivial()), g.trivial());
  // element 3 is (1 2 3) in the canonical ordering
  const auto a3 = generated_subgroup(g, set_of(g, {3}));
  EXPECT_EQ(a3.count(), 3u);
  EXPECT_EQ(generated_subgroup(g, a3), a3);

  const auto d = d8();
  Element r = 0, s = 0;
  for (Element x = 0; x < 8; ++x) {
    if (d.element_order(x) == 4 && !r) r = x;
  }
  for (Element x = 1; x < 8; ++x)
    if (d.element_order(x) == 2 && !d.commute(x, r)) s = x;
  ASSERT_NE(s, 0u);
  EXPECT_EQ(generated_subgroup(d, set_of(d, {r, s})).count(), 8u);
}

TEST(Centralizer, Examples) {
  const auto g = s3();
  EXPECT_EQ(centralizer(g, g.trivial()), g.all());
  EXPECT_EQ(centralizer(g, g.all()), center(g));
  const auto a3 = set_of(g, {0, 3, 4});
  EXPECT_EQ(centralizer(g, a3), a3);
  const auto oracle_c = oracle::centralizer(g, {0, 3, 4});
  EXPECT_EQ(centralizer(g, a3).members<std::uint32_t>(), oracle_c);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(cyclic(6)).count(), 6u);
  EXPECT_EQ(center(s3()).count(), 1u);
  const auto d = d8();
  const auto z = center(d);
  ASSERT_EQ(z.count(), 2u);
  Element r = 0;
  for (Element x = 0; x < 8; ++x)
    if (d.element_order(x) == 4) r = x;
  EXPECT_TRUE(z.contains(d.mul(r, r)));
}

TEST(ConjugateSubgroup, Examples) {
  const auto g = s3();
  const auto h = set_of(g, {0, 2});  // <(1 2)>
  EXPECT_EQ(conjugate_subgroup(g, h, kIdentity), h);
  const auto a3 = set_of(g, {0, 3, 4});
  for (Element x = 0; x < 6; ++x) EXPECT_EQ(conjugate_subgroup(g, a3, x), a3);
  // (1 2 3)<(1 2)>(1 2 3)^-1 = <(2 3)>
  EXPECT_EQ(conjugate_subgroup(g, h, 3), set_of(g, {0, 1}));
}

TEST(DirectProduct, Examples) {
  const auto g = s3();
  EXPECT_TRUE(direct_product(g, cyclic(1)) == g);
  const auto v4 = direct_product(cyclic(2), cyclic(2));
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(exponent(v4), 2u);
  const auto c6 = direct_product(cyclic(2), cyclic(3));
  bool has_order_six = false;
  for (Element x = 0; x < 6; ++x) has_order_six |= c6.element_order(x) == 6;
  EXPECT_TRUE(has_order_six);
  EXPECT_THROW(direct_product(cyclic(30), cyclic(30), 512), ClosureExceedsCap);
}

TEST(Quotient, Examples) {
  const auto g = d8();
  EXPECT_TRUE(quotient(g, g.trivial()) == g);
  EXPECT_EQ(quotient(g, g.all()).order(), 1u);
  const auto v = quotient(g, center(g));
  EXPECT_EQ(v.order(), 4u);
  EXPECT_EQ(exponent(v), 2u);
}

TEST(Quotient, NotNormalCarriesWitness) {
  const auto g = s3();
  const auto h = set_of(g, {0, 2});
  try {
    quotient(g, h);
    FAIL() << "expected NotNormal";
  } catch (const NotNormal& e) {
    EXPECT_NE(conjugate_subgroup(g, h, static_cast<Element>(e.conjugator())), h);
  }
}

TEST(StructureFlags, Examples) {
  const auto c6 = structure_flags(cyclic(6));
  EXPECT_TRUE(c6.is_abelian);
  EXPECT_EQ(c6.prime_signature, (PrimeSignature{{2, 1}, {3, 1}}));
  EXPECT_FALSE(c6.p_group_prime);
  EXPECT_TRUE(c6.is_solvable);
  EXPECT_TRUE(c6.is_nilpotent);

  const auto s = structure_flags(s3());
  EXPECT_FALSE(s.is_abelian);
  EXPECT_EQ(s.prime_signature, (PrimeSignature{{2, 1}, {3, 1}}));
  EXPECT_TRUE(s.is_solvable);
  EXPECT_FALSE(s.is_nilpotent);

  const auto d = structure_flags(d8());
  EXPECT_FALSE(d.is_abelian);
  EXPECT_EQ(d.p_group_prime, std::optional<std::uint64_t>(2));
  EXPECT_TRUE(d.is_nilpotent);

  const auto a5 = structure_flags(build(parse_spec("A(5)")));
  EXPECT_FALSE(a5.is_solvable);
  EXPECT_FALSE(a5.is_nilpotent);
}

// ---------------------------------------------------------------------------
// properties over random permutation groups

namespace {

GroupTable random_group(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(2, 5), count(1, 3);
  const std::size_t d = static_cast<std::size_t>(deg(rng));
  std::vector<Permutation> gens;
  for (int i = count(rng); i > 0; --i) {
    Permutation p = identity_permutation(d);
    std::shuffle(p.begin(), p.end(), rng);
    gens.push_back(p);
  }
  return from_generators(d, gens);
}

ElementSet random_subset(const GroupTable& g, std::mt19937& rng) {
  ElementSet s(g.order());
  std::bernoulli_distribution coin(0.3);
  for (Element x = 0; x < g.order(); ++x)
    if (coin(rng)) s.insert(x);
  s.insert(kIdentity);
  return s;
}

}  // namespace

TEST(GroupProperties, RandomPermutationGroups) {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_group(rng);
    expect_group_axioms(g);
    const auto z = center(g);
    EXPECT_TRUE(is_subgroup(g, z));

    const auto s = random_subset(g, rng);
    auto t = s;
    t |= random_subset(g, rng);
    const auto cs = centralizer(g, s), ct = centralizer(g, t);
    EXPECT_TRUE(is_subgroup(g, cs));
    EXPECT_TRUE(ct.is_subset_of(cs));  // S <= T implies C(T) <= C(S)
    EXPECT_TRUE(z.is_subset_of(cs));
    EXPECT_EQ(cs, centralizer(g, generated_subgroup(g, s)));
    EXPECT_EQ(cs.members<std::uint32_t>(), oracle::centralizer(g, s.members<std::uint32_t>()));

    const auto gen = generated_subgroup(g, s);
    EXPECT_EQ(gen.members<std::uint32_t>(), oracle::naive_closure(g, s.members<std::uint32_t>()));
    EXPECT_EQ(generated_subgroup(g, gen), gen);

    const auto q = quotient(g, z);
    EXPECT_EQ(q.order() * z.count(), g.order());
    const auto d = derived_subgroup(g, g.all());
    EXPECT_EQ(quotient(g, d).order() * d.count(), g.order());
  }
}

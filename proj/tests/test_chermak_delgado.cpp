#include <gtest/gtest.h>

#include "cdlat/catalog.hpp"
#include "cdlat/chermak_delgado.hpp"
#include "oracle.hpp"

using namespace cdlat;

namespace {

struct Fixture {
  GroupTable g;
  Lattice lat;
  CDResult cd;
};

Fixture make(const std::string& spec) {
  GroupTable g = build(parse_spec(spec));
  Lattice lat = enumerate_subgroups(g);
  CDResult cd = cd_lattice(g, lat);
  return {std::move(g), std::move(lat), std::move(cd)};
}

std::vector<std::size_t> member_orders(const Fixture& f) {
  std::vector<std::size_t> out;
  for (auto i : f.cd.members) out.push_back(f.lat.order_of(i));
  return out;
}

const PropertyCheck& check(const PropertyReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  throw std::logic_error("missing check " + id);
}

}  // namespace

TEST(Measure, MatchesBruteForce) {
  for (const char* spec : {"S(3)", "D(8)", "Q(8)", "A(4)", "C(2) X S(3)", "Dic(3)", "D(10)"}) {
    const auto f = make(spec);
    for (SubgroupIndex i = 0; i < f.lat.size(); ++i) {
      const auto elems = f.lat.subgroup(i).members<std::uint32_t>();
      EXPECT_EQ(f.cd.measure_of[i], oracle::measure(f.g, elems)) << spec;
      EXPECT_EQ(cd_measure(f.g, f.lat.subgroup(i)), f.cd.measure_of[i]);
      EXPECT_EQ(f.lat.subgroup(f.cd.centralizer_of[i]).members<std::uint32_t>(), oracle::centralizer(f.g, elems));
    }
  }
}

TEST(CDLattice, AbelianGroupsHaveOnlyThemselves) {
  for (const char* spec : {"C(1)", "C(2)", "C(12)", "C(2) X C(4)", "C(3) X C(3)"}) {
    const auto f = make(spec);
    const auto n = f.g.order();
    EXPECT_EQ(f.cd.m_star, n * n) << spec;
    EXPECT_EQ(f.cd.members, std::vector<SubgroupIndex>{f.lat.whole()}) << spec;
    EXPECT_EQ(f.cd.min_member, f.lat.whole());
    EXPECT_EQ(f.cd.max_member, f.lat.whole());
  }
}

TEST(CDLattice, SymmetricGroupOnThreePoints) {
  const auto f = make("S(3)");
  EXPECT_EQ(f.cd.m_star, 9u);
  EXPECT_EQ(member_orders(f), std::vector<std::size_t>{3});
  EXPECT_EQ(measure_image(f.cd), (std::vector<std::uint64_t>{4, 6, 9}));
}

TEST(CDLattice, DihedralOfOrderEight) {
  const auto f = make("D(8)");
  EXPECT_EQ(f.cd.m_star, 16u);
  EXPECT_EQ(member_orders(f), (std::vector<std::size_t>{2, 4, 4, 4, 8}));
  EXPECT_EQ(f.lat.order_of(f.cd.min_member), 2u);
  EXPECT_EQ(f.cd.max_member, f.lat.whole());
  EXPECT_EQ(measure_image(f.g, f.lat), (std::vector<std::uint64_t>{8, 16}));
}

TEST(CDLattice, OtherSmallGroups) {
  const auto q8 = make("Q(8)");
  EXPECT_EQ(q8.cd.m_star, 16u);
  EXPECT_EQ(member_orders(q8), (std::vector<std::size_t>{2, 4, 4, 4, 8}));

  const auto a4 = make("A(4)");
  EXPECT_EQ(a4.cd.m_star, 16u);
  EXPECT_EQ(member_orders(a4), std::vector<std::size_t>{4});

  const auto s4 = make("S(4)");
  EXPECT_EQ(s4.cd.m_star, 24u);
  EXPECT_EQ(member_orders(s4), (std::vector<std::size_t>{1, 24}));
}

TEST(CDLattice, MemberSetMatchesArgmax) {
  for (const char* spec : {"S(4)", "D(12)", "ES(3,'-')", "C(3) X S(3)"}) {
    const auto f = make(spec);
    std::uint64_t best = 0;
    for (SubgroupIndex i = 0; i < f.lat.size(); ++i)
      best = std::max(best, oracle::measure(f.g, f.lat.subgroup(i).members<std::uint32_t>()));
    EXPECT_EQ(f.cd.m_star, best);
    for (SubgroupIndex i = 0; i < f.lat.size(); ++i) EXPECT_EQ(f.cd.is_member(i), f.cd.measure_of[i] == best);
  }
}

TEST(ProductSet, Examples) {
  const auto f = make("S(3)");
  std::vector<SubgroupIndex> twos;
  for (SubgroupIndex i = 0; i < f.lat.size(); ++i)
    if (f.lat.order_of(i) == 2) twos.push_back(i);
  const auto hk = product_set(f.g, f.lat.subgroup(twos[0]), f.lat.subgroup(twos[1]));
  EXPECT_EQ(hk.count(), 4u);  // a product of two subgroups need not be one
  EXPECT_FALSE(is_subgroup(f.g, hk));
  const auto& a3 = f.lat.subgroup(f.cd.members.front());
  EXPECT_EQ(product_set(f.g, a3, f.lat.subgroup(twos[0])), f.g.all());
}

TEST(Properties, HoldOnCatalogGroups) {
  for (const char* spec : {"S(3)", "D(8)", "Q(8)", "A(4)", "S(4)", "ES(3,'+')", "ES(3,'-')", "D(8) X C(3)",
                           "ZM(7,3,2)", "C(4) X S(3)", "Dic(5)"}) {
    const auto f = make(spec);
    const auto report = verify_cd_properties(f.g, f.lat, f.cd);
    EXPECT_TRUE(report.all_passed()) << spec;
    EXPECT_EQ(report.checks.size(), 10u);
    for (const auto& c : report.checks) EXPECT_FALSE(c.witness.has_value()) << spec << " " << c.id;
  }
}

TEST(Properties, CorruptedResultYieldsRecheckableWitnesses) {
  const auto f = make("S(3)");
  CDResult bad = f.cd;
  SubgroupIndex two = 0;
  for (SubgroupIndex i = 0; i < f.lat.size(); ++i)
    if (f.lat.order_of(i) == 2) two = i;
  bad.members.push_back(two);
  std::sort(bad.members.begin(), bad.members.end());
  bad.member_set.insert(two);

  const auto report = verify_cd_properties(f.g, f.lat, bad);
  EXPECT_FALSE(report.all_passed());

  const auto& p5 = check(report, "P5");
  ASSERT_FALSE(p5.passed);
  ASSERT_TRUE(p5.witness);
  const auto& w5 = p5.witness->subgroups;
  ASSERT_EQ(w5.size(), 3u);
  // the reported meet really is the intersection and really is not a member
  auto inter = f.lat.subgroup(w5[0]);
  inter &= f.lat.subgroup(w5[1]);
  EXPECT_EQ(f.lat.subgroup(w5[2]), inter);
  EXPECT_FALSE(bad.is_member(w5[2]));

  const auto& p6 = check(report, "P6");
  ASSERT_FALSE(p6.passed);
  ASSERT_TRUE(p6.witness && p6.witness->element);
  const auto image = conjugate_subgroup(f.g, f.lat.subgroup(p6.witness->subgroups.at(0)), *p6.witness->element);
  EXPECT_FALSE(bad.is_member(f.lat.require_index(image)));

  const auto ids = report.failed_ids();
  EXPECT_NE(std::find(ids.begin(), ids.end(), "P5"), ids.end());
  EXPECT_NE(std::find(ids.begin(), ids.end(), "P6"), ids.end());
}

TEST(Properties, TrivialAndPrimeMembersTripP9) {
  const auto f = make("S(3)");
  CDResult bad = f.cd;
  bad.members.insert(bad.members.begin(), f.lat.trivial());
  bad.member_set.insert(f.lat.trivial());
  const auto report = verify_cd_properties(f.g, f.lat, bad);
  const auto& p9 = check(report, "P9");
  ASSERT_FALSE(p9.passed);
  const auto& w = p9.witness->subgroups;
  EXPECT_EQ(w.at(0), f.lat.trivial());
  EXPECT_TRUE(is_prime(f.lat.order_of(w.at(1))));
}

TEST(Properties, MissingCenterTripsP10) {
  const auto f = make("D(8)");
  CDResult bad = f.cd;
  bad.members = {f.lat.trivial()};
  bad.member_set = SubgroupSet(f.lat.size());
  bad.member_set.insert(f.lat.trivial());
  bad.min_member = bad.max_member = f.lat.trivial();
  const auto report = verify_cd_properties(f.g, f.lat, bad);
  const auto& p10 = check(report, "P10");
  ASSERT_FALSE(p10.passed);
  const auto& w = p10.witness->subgroups;
  EXPECT_FALSE(f.lat.subgroup(w.at(0)).is_subset_of(f.lat.subgroup(w.at(1))));
}

TEST(Measure, TrivialSubgroupAndAbelianGroups) {
  for (const char* spec : {"S(4)", "Q(8)", "C(10)"}) {
    const auto f = make(spec);
    EXPECT_EQ(cd_measure(f.g, f.g.trivial()), f.g.order());
  }
  const auto f = make("C(2) X C(6)");
  for (SubgroupIndex i = 0; i < f.lat.size(); ++i)
    EXPECT_EQ(f.cd.measure_of[i], f.lat.order_of(i) * f.g.order());
}

TEST(MeasureImage, PrimeCyclicAndOrder27) {
  EXPECT_EQ(measure_image(make("C(7)").cd), (std::vector<std::uint64_t>{7, 49}));
  EXPECT_EQ(measure_image(make("ES(3,'+')").cd), (std::vector<std::uint64_t>{27, 81}));
}

TEST(Properties, TrivialGroupPassesVacuously) {
  const auto f = make("C(1)");
  EXPECT_EQ(f.cd.m_star, 1u);
  EXPECT_TRUE(verify_cd_properties(f.g, f.lat, f.cd).all_passed());
}

TEST(Properties, ExtremeMembersOfS3AndD8) {
  const auto s3 = make("S(3)");
  EXPECT_EQ(s3.cd.min_member, s3.cd.max_member);
  EXPECT_EQ(s3.lat.order_of(s3.cd.min_member), 3u);
  const auto d8 = make("D(8)");
  EXPECT_EQ(d8.lat.subgroup(d8.cd.min_member), center(d8.g));
  EXPECT_EQ(d8.cd.max_member, d8.lat.whole());
}

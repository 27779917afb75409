#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "topring/finring.hpp"

using namespace topring;

namespace {

// Ideal test written from the definition, independent of is_ideal.
bool ideal_by_definition(const FiniteRing& r, std::uint64_t mask) {
  const std::size_t n = r.size();
  auto in = [&](Elem x) { return (mask >> x) & 1U; };
  if (!in(r.zero())) return false;
  for (Elem a = 0; a < n; ++a) {
    if (!in(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (in(b) && !in(r.add(a, r.neg(b)))) return false;
      if (!in(r.mul(a, b))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> ideals_by_subset_scan(const FiniteRing& r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << r.size()); ++m)
    if (ideal_by_definition(r, m)) out.push_back(m);
  return out;
}

// Smallest ideal containing the generators: intersection of every ideal containing them.
std::uint64_t generated_by_intersection(const FiniteRing& r, const std::vector<Elem>& gens) {
  std::uint64_t want = 0;
  for (Elem g : gens) want |= std::uint64_t{1} << g;
  std::uint64_t acc = (std::uint64_t{1} << r.size()) - 1;
  for (auto m : ideals_by_subset_scan(r))
    if ((m & want) == want) acc &= m;
  return acc;
}

bool is_bijective_iso(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& f) {
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (f[a.add(x, y)] != b.add(f[x], f[y]) || f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
  return f[a.one()] == b.one();
}

}  // namespace

TEST(RingConstruction, ModularTablesMatchArithmetic) {
  for (std::size_t n : {1U, 2U, 7U, 12U, 24U}) {
    const auto r = zmod(n);
    ASSERT_EQ(r.size(), n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        EXPECT_EQ(r.add(a, b), (a + b) % n);
        EXPECT_EQ(r.mul(a, b), (a * b) % n);
      }
  }
}

TEST(RingConstruction, SpecGrammar) {
  EXPECT_EQ(make_ring("Z/6").size(), 6U);
  EXPECT_EQ(make_ring("Z/6").one(), 1U);
  EXPECT_EQ(make_ring("Z/2 x Z/3").size(), 6U);
  EXPECT_EQ(make_ring("(Z/2 x Z/2) x Z/3").size(), 12U);
  EXPECT_EQ(make_ring("Z/2[x]/(1,1,1)").size(), 4U);
  EXPECT_EQ(make_ring("Z/3[x]/(-1,0,1)").size(), 9U);
}

TEST(RingConstruction, RejectsBadSpecs) {
  EXPECT_THROW(make_ring("Z/0"), ParseError);
  EXPECT_THROW(make_ring("Z/"), ParseError);
  EXPECT_THROW(make_ring("Z/4 y"), ParseError);
  EXPECT_THROW(make_ring("Q/4"), ParseError);
  EXPECT_THROW(make_ring("Z/4[x]/(1,0,1)"), PreconditionError);
  EXPECT_THROW(make_ring("Z/2[x]/(1,1,0)"), PreconditionError);
  EXPECT_THROW(make_ring("Z/300"), PreconditionError);
  EXPECT_THROW(make_ring("Z/20 x Z/20"), PreconditionError);
}

TEST(RingConstruction, RejectsInvalidTables) {
  // Z/3 addition with a broken multiplication (1*1 = 2)
  std::vector<Elem> add{0, 1, 2, 1, 2, 0, 2, 0, 1};
  std::vector<Elem> mul{0, 0, 0, 0, 2, 2, 0, 2, 1};
  EXPECT_THROW(FiniteRing(3, add, mul, 0, 1, "bad"), PreconditionError);
}

TEST(RingConstruction, ProductIsomorphicToCyclicByExhaustiveBijections) {
  const auto a = make_ring("Z/2 x Z/3"), b = zmod(6);
  std::vector<Elem> perm(6);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::size_t found = 0;
  do found += is_bijective_iso(a, b, perm) ? 1 : 0;
  while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(found, 1U);  // Z/6 has only the identity automorphism
  const auto iso = find_isomorphism(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_bijective_iso(a, b, *iso));
  EXPECT_FALSE(find_isomorphism(make_ring("Z/2 x Z/2"), zmod(4)).has_value());
}

TEST(RingConstruction, FourElementFieldByInverseScan) {
  const auto f = make_ring("Z/2[x]/(1,1,1)");
  for (Elem a = 1; a < f.size(); ++a) {
    bool inverse = false;
    for (Elem b = 0; b < f.size(); ++b) inverse = inverse || f.mul(a, b) == f.one();
    EXPECT_TRUE(inverse) << a;
  }
  EXPECT_TRUE(is_field(f));
  EXPECT_FALSE(is_field(make_ring("Z/2[x]/(0,0,1)")));
}

TEST(Ideals, GenerationMatchesIntersectionOracle) {
  for (const char* spec : {"Z/12", "Z/8", "Z/2 x Z/4", "Z/2[x]/(0,0,0,1)", "Z/3 x Z/3"}) {
    const auto r = make_ring(spec);
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = a; b < r.size(); ++b) {
        const auto i = ideal_generate(r, {a, b});
        EXPECT_EQ(to_mask(i.elements()), generated_by_intersection(r, {a, b})) << spec << " " << a << "," << b;
      }
  }
}

TEST(Ideals, AllIdealsMatchSubsetScan) {
  for (const char* spec : {"Z/12", "Z/2 x Z/2 x Z/2", "Z/2[x]/(0,0,1)", "Z/9"}) {
    const auto r = make_ring(spec);
    std::vector<std::uint64_t> got;
    for (const auto& i : all_ideals(r)) got.push_back(to_mask(i.elements()));
    auto want = ideals_by_subset_scan(r);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << spec;
  }
}

TEST(Ideals, RejectsNonIdeal) {
  const auto r = zmod(6);
  EXPECT_THROW(Ideal(r, make_subset(6, {0, 1})), PreconditionError);
  EXPECT_FALSE(is_ideal(r, make_subset(6, {0, 2})));
  EXPECT_TRUE(is_ideal(r, make_subset(6, {0, 2, 4})));
}

TEST(Ideals, PowerChains) {
  const auto r = zmod(12);
  const auto c4 = ideal_power_chain(ideal_generate(r, {4}));
  EXPECT_EQ(members(c4.stable.elements()), (std::vector<Elem>{0, 4, 8}));
  EXPECT_TRUE(c4.idempotent);
  EXPECT_FALSE(c4.nilpotent);
  const auto c6 = ideal_power_chain(ideal_generate(r, {6}));
  EXPECT_TRUE(c6.nilpotent);
  EXPECT_EQ(c6.stable_index, 2U);
  const auto c2 = ideal_power_chain(ideal_generate(zmod(8), {2}));
  ASSERT_EQ(c2.chain.size(), 3U);
  EXPECT_EQ(members(c2.chain[1].elements()), (std::vector<Elem>{0, 4}));
  EXPECT_TRUE(c2.nilpotent);
  const auto c1 = ideal_power_chain(unit_ideal(r));
  EXPECT_TRUE(c1.stable.is_whole());
}

TEST(Ideals, ProductAndSum) {
  const auto r = zmod(12);
  const auto i = ideal_generate(r, {2}), j = ideal_generate(r, {3});
  EXPECT_EQ(members(ideal_product(i, j).elements()), (std::vector<Elem>{0, 6}));
  EXPECT_TRUE(ideal_sum(i, j).is_whole());
}

TEST(Elements, UnitsZerodivisorsIdempotentsOfZ12) {
  const auto r = zmod(12);
  EXPECT_EQ(members(units_group(r).elements), (std::vector<Elem>{1, 5, 7, 11}));
  EXPECT_EQ(members(zerodivisors(r)), (std::vector<Elem>{0, 2, 3, 4, 6, 8, 9, 10}));
  EXPECT_EQ(members(idempotents(r)), (std::vector<Elem>{0, 1, 4, 9}));
  EXPECT_EQ(annihilator(r, 6).members(), (std::vector<Elem>{0, 2, 4, 6, 8, 10}));
  const auto u = units_group(r);
  for (Elem a : members(u.elements)) EXPECT_EQ(r.mul(a, u.inverse[a]), r.one());
}

TEST(Elements, UnitsAndZerodivisorsPartitionTheRing) {
  for (const char* spec : {"Z/24", "Z/2 x Z/6", "Z/3[x]/(0,0,1)", "Z/2[x]/(1,1,1)"}) {
    const auto r = make_ring(spec);
    const auto u = units_group(r).elements, z = zerodivisors(r);
    EXPECT_FALSE(u.intersects(z)) << spec;
    EXPECT_TRUE((u | z).all()) << spec;
  }
}

TEST(BooleanRing, IdempotentsOfZ6) {
  const auto b = boolean_ring(zmod(6));
  EXPECT_EQ(b.elements, (std::vector<Elem>{0, 1, 3, 4}));
  for (Elem e = 0; e < b.ring.size(); ++e) EXPECT_EQ(b.ring.mul(e, e), e);
  for (Elem e = 0; e < b.ring.size(); ++e) EXPECT_EQ(b.ring.add(e, e), b.ring.zero());
}

TEST(Quotients, Z12ModFourIsZ4) {
  const auto r = zmod(12);
  const auto q = quotient_ring(ideal_generate(r, {4}));
  EXPECT_EQ(q.ring.size(), 4U);
  EXPECT_TRUE(find_isomorphism(q.ring, zmod(4)).has_value());
  for (Elem a = 0; a < 12; ++a) EXPECT_EQ(q.projection(a), a % 4);
}

TEST(Morphisms, ValidationAndReduction) {
  const auto f = reduction_morphism(12, 4);
  EXPECT_EQ(f(7), 3U);
  EXPECT_THROW(reduction_morphism(12, 5), PreconditionError);
  std::vector<Elem> bad(4, 0);
  EXPECT_THROW(RingMorphism(zmod(4), zmod(2), bad), PreconditionError);
}

TEST(NonfieldCriterion, TightOnZ4) {
  const auto rep = finite_nonfield_criterion(zmod(4));
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.data["bound_tight"].get<bool>());
  EXPECT_TRUE(rep.data["nonfield"].get<bool>());
}

TEST(NonfieldCriterion, FieldLeavesBoundUnmet) {
  const auto rep = finite_nonfield_criterion(zmod(7));
  EXPECT_TRUE(rep.ok());
  EXPECT_FALSE(rep.data["nonfield"].get<bool>());
  EXPECT_EQ(rep.count(Verdict::hypothesis_unmet), 1U);
}

TEST(NonfieldCriterion, RejectsZeroRing) { EXPECT_THROW(finite_nonfield_criterion(zmod(1)), PreconditionError); }

TEST(NonfieldCriterion, BoundAgainstDirectCount) {
  for (std::size_t n = 2; n <= 60; ++n) {
    const auto r = zmod(n);
    std::size_t z = 0;
    for (Elem a = 0; a < n; ++a) z += std::gcd<std::size_t>(a, n) != 1 ? 1 : 0;
    if (z > 1) {
      EXPECT_LE(n, z * z) << n;
    }
    EXPECT_TRUE(finite_nonfield_criterion(r).ok()) << n;
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "topring/fintop.hpp"

using namespace topring;

namespace {

using Mask = std::uint32_t;

// Count topologies on n points by filtering every family of subsets that contains the empty and whole set.
std::size_t count_by_family_filter(std::size_t n) {
  const Mask full = (Mask{1} << n) - 1;
  const std::size_t inner = (std::size_t{1} << n) - 2;  // subsets other than {} and X
  std::size_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << inner); ++fam) {
    std::vector<bool> in(std::size_t{1} << n, false);
    in[0] = in[full] = true;
    for (std::size_t k = 0; k < inner; ++k)
      if ((fam >> k) & 1U) in[k + 1] = true;
    bool ok = true;
    for (Mask a = 0; a <= full && ok; ++a)
      for (Mask b = a + 1; b <= full && ok; ++b)
        if (in[a] && in[b] && (!in[a | b] || !in[a & b])) ok = false;
    count += ok ? 1 : 0;
  }
  return count;
}

std::set<std::uint64_t> open_masks(const FinTopology& t) {
  std::set<std::uint64_t> out;
  for (const auto& u : t.opens()) out.insert(to_mask(u));
  return out;
}

// Closure as the intersection of all closed supersets.
Subset closure_by_closed_sets(const FinTopology& t, const Subset& s) {
  Subset acc = full_set(t.size());
  for (const auto& u : t.opens()) {
    Subset c = ~u;
    if (s.is_subset_of(c)) acc &= c;
  }
  return acc;
}

// Components via clopens: in a finite space x and y share a component iff no clopen separates them.
std::vector<std::uint64_t> components_by_clopens(const FinTopology& t) {
  std::vector<Subset> clopens;
  for (const auto& u : t.opens())
    if (t.is_closed(u)) clopens.push_back(u);
  std::set<std::uint64_t> blocks;
  for (Elem x = 0; x < t.size(); ++x) {
    Subset b = full_set(t.size());
    for (const auto& c : clopens) b &= c.test(x) ? c : ~c;
    blocks.insert(to_mask(b));
  }
  return {blocks.begin(), blocks.end()};
}

std::vector<std::uint64_t> block_masks(const Partition& p) {
  std::vector<std::uint64_t> out;
  for (const auto& b : p.blocks()) out.push_back(to_mask(b));
  std::sort(out.begin(), out.end());
  return out;
}

// Irreducible closed sets by definition: nonempty, not the union of two proper closed subsets.
std::set<std::uint64_t> irreducible_closed_by_definition(const FinTopology& t) {
  const auto closed = t.closed_sets();
  std::set<std::uint64_t> out;
  for (const auto& z : closed) {
    if (z.none()) continue;
    bool reducible = false;
    for (const auto& a : closed)
      for (const auto& b : closed)
        if (a != z && b != z && a.is_subset_of(z) && b.is_subset_of(z) && (a | b) == z) reducible = true;
    if (!reducible) out.insert(to_mask(z));
  }
  return out;
}

std::vector<MapTable> all_maps(std::size_t n, std::size_t m) {
  std::vector<MapTable> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Elem> v(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= m) v[i] = static_cast<Elem>(c % m);
    out.emplace_back(m, std::move(v));
  }
  return out;
}

}  // namespace

TEST(Enumeration, CountsMatchFamilyFilter) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_topologies(n).size(), count_by_family_filter(n)) << n;
}

TEST(Enumeration, KnownCounts) {
  EXPECT_EQ(TopologyEnumeration(1).size(), 1U);
  EXPECT_EQ(TopologyEnumeration(2).size(), 4U);
  EXPECT_EQ(TopologyEnumeration(3).size(), 29U);
  EXPECT_EQ(TopologyEnumeration::count_preorders(4), 355U);
  EXPECT_EQ(TopologyEnumeration::count_preorders(5), 6942U);
}

TEST(Enumeration, DistinctAndCanonicallyOrdered) {
  const TopologyEnumeration e(4);
  std::set<std::set<std::uint64_t>> seen;
  for (std::size_t i = 0; i < e.size(); ++i) {
    EXPECT_TRUE(seen.insert(open_masks(e.at(i))).second);
    if (i > 0) {
      auto a = e.masks(i - 1), b = e.masks(i);
      EXPECT_TRUE(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), TopologyEnumeration::mask_less));
    }
  }
  const auto two = enumerate_topologies(2);
  EXPECT_TRUE(is_trivial(two.front()) || is_discrete(two.front()));
}

TEST(Enumeration, RejectsOversizeGround) { EXPECT_THROW(TopologyEnumeration(7), PreconditionError); }

TEST(Enumeration, SamplingIsDeterministic) {
  const auto a = sample_topologies(7, 20, 42), b = sample_topologies(7, 20, 42);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Alexandrov, OpensAndPreorderRoundTrip) {
  for (const auto& t : enumerate_topologies(4)) {
    const auto back = make_topology(4, t.opens());
    EXPECT_EQ(back, t);
    for (Elem x = 0; x < 4; ++x) {
      Subset inter = full_set(4);
      for (const auto& u : t.opens())
        if (u.test(x)) inter &= u;
      EXPECT_EQ(inter, t.min_open(x));
      EXPECT_TRUE(t.is_closed(t.point_closure(x)));
    }
    EXPECT_EQ(*t.count_opens(), t.opens().size());
  }
}

TEST(Alexandrov, JsonRoundTrip) {
  const auto t = make_topology(3, std::vector<std::vector<Elem>>{{}, {0}, {0, 1}, {0, 1, 2}});
  const auto j = topology_to_json(t);
  EXPECT_EQ(j.dump(), R"({"n":3,"opens":[[],[0],[0,1],[0,1,2]]})");
  EXPECT_EQ(topology_from_json(j.dump()), t);
}

TEST(Validation, RejectsNonTopologies) {
  using V = std::vector<std::vector<Elem>>;
  EXPECT_THROW(make_topology(2, V{{0}, {0, 1}}), TopologyAxiomError);
  EXPECT_THROW(make_topology(2, V{{}, {0}}), TopologyAxiomError);
  EXPECT_THROW(make_topology(3, V{{}, {0}, {1}, {0, 1, 2}}), TopologyAxiomError);
  EXPECT_THROW(make_topology(3, V{{}, {0, 1}, {1, 2}, {0, 1, 2}}), TopologyAxiomError);
  try {
    make_topology(3, V{{}, {0}, {1}, {0, 1, 2}});
  } catch (const TopologyAxiomError& e) {
    EXPECT_EQ(e.axiom(), "closed under union");
    EXPECT_EQ(to_mask(e.first() | e.second()), 0b011U);
  }
  EXPECT_THROW(make_topology(2, V{{}, {2}, {0, 1}}), PreconditionError);
}

TEST(Validation, RejectsBadJson) {
  EXPECT_THROW(topology_from_json(std::string("{")), ParseError);
  EXPECT_THROW(topology_from_json(std::string(R"({"opens":[]})")), ParseError);
  EXPECT_THROW(topology_from_json(std::string(R"({"n":0,"opens":[]})")), ParseError);
  EXPECT_THROW(topology_from_json(std::string(R"({"n":2,"opens":[[],[5],[0,1]]})")), ParseError);
  EXPECT_THROW(topology_from_json(std::string(R"({"n":2,"opens":[[0],[0,1]]})")), TopologyAxiomError);
}

TEST(Validation, PreorderMustBeTransitive) {
  std::vector<Subset> up{make_subset(3, {0, 1}), make_subset(3, {1, 2}), make_subset(3, {2})};
  EXPECT_THROW(FinTopology::from_preorder(up), PreconditionError);
  EXPECT_NO_THROW(FinTopology::from_relation(up));
}

TEST(Products, MatchRectangleGeneration) {
  const auto two = enumerate_topologies(2), three = enumerate_topologies(3);
  for (const auto& a : two)
    for (const auto& b : three) {
      const auto p = product_topology(a, b);
      EXPECT_EQ(p, product_topology_from_rectangles(a, b));
      std::set<std::uint64_t> want{0};
      for (const auto& u : a.opens())
        for (const auto& v : b.opens()) {
          std::uint64_t rect = 0;
          for_each_member(u, [&](Elem x) { for_each_member(v, [&](Elem y) { rect |= std::uint64_t{1} << (x * 3 + y); }); });
          std::vector<std::uint64_t> current(want.begin(), want.end());
          for (auto w : current) want.insert(w | rect);
        }
      EXPECT_EQ(open_masks(p), want);
    }
}

TEST(Products, ProductSpaceAgreesWithMaterialized) {
  const auto three = enumerate_topologies(3);
  const ProductSpace ps({three[5], three[17]});
  const auto mat = ps.materialize();
  for (const auto& ty : three)
    for (const auto& f : all_maps(9, 3)) {
      if (f.map[0] + f.map[4] + f.map[8] != 3) continue;  // thin the 3^9 maps
      EXPECT_EQ(ps.check_continuous(f.map, ty).continuous, is_continuous_by_preimages(f, mat, ty).continuous);
    }
}

TEST(Continuity, MonotoneMatchesOpenPreimages) {
  const auto three = enumerate_topologies(3);
  const auto maps = all_maps(3, 3);
  std::size_t continuous = 0;
  for (const auto& tx : three)
    for (const auto& ty : three)
      for (const auto& f : maps) {
        bool by_def = true;
        for (const auto& v : ty.opens()) by_def = by_def && tx.is_open(f.preimage(v));
        const auto verdict = is_continuous(f, tx, ty);
        ASSERT_EQ(verdict.continuous, by_def);
        if (!verdict.continuous) {
          ASSERT_TRUE(verdict.witness_open && verdict.preimage);
          EXPECT_TRUE(ty.is_open(*verdict.witness_open));
          EXPECT_FALSE(tx.is_open(*verdict.preimage));
          EXPECT_EQ(*verdict.preimage, f.preimage(*verdict.witness_open));
        }
        continuous += by_def ? 1 : 0;
      }
  EXPECT_GT(continuous, 0U);
}

TEST(Continuity, OpenAndClosedMapsByDefinition) {
  const auto three = enumerate_topologies(3);
  const auto maps = all_maps(3, 3);
  for (std::size_t i = 0; i < three.size(); i += 3)
    for (std::size_t j = 0; j < three.size(); j += 2)
      for (const auto& f : maps) {
        bool open = true, closed = true;
        for (const auto& u : three[i].opens()) {
          open = open && three[j].is_open(f.image(u));
          closed = closed && three[j].is_closed(f.image(~u));
        }
        EXPECT_EQ(is_open_map(f, three[i], three[j]), open);
        EXPECT_EQ(is_closed_map(f, three[i], three[j]), closed);
      }
}

TEST(Closure, MatchesClosedSetIntersection) {
  for (const auto& t : enumerate_topologies(4))
    for (std::uint64_t m = 0; m < 16; ++m) {
      const auto s = from_mask(4, m);
      EXPECT_EQ(t.closure(s), closure_by_closed_sets(t, s));
      const auto info = closure_calculus(t, s);
      EXPECT_EQ(info.interior, ~t.closure(~s));
      EXPECT_EQ(info.dense, info.closure.all());
      EXPECT_TRUE(t.is_open(t.open_hull(s)));
    }
}

TEST(Components, MatchClopenSeparation) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      const auto c = pi0(t);
      EXPECT_EQ(block_masks(c.partition), components_by_clopens(t));
      EXPECT_TRUE(is_discrete(c.space));
      for (const auto& b : c.partition.blocks()) EXPECT_TRUE(is_connected_subset(t, b));
    }
}

TEST(Sober, PointsAreIrreducibleClosedSets) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      const auto s = sober_space(t);
      std::set<std::uint64_t> got;
      for (const auto& z : s.points) got.insert(to_mask(z));
      EXPECT_EQ(got, irreducible_closed_by_definition(t));
      EXPECT_TRUE(space_predicates(s.topology).t0);
      EXPECT_TRUE(s.map_continuous && s.map_closed && s.map_open);
      const bool t0 = space_predicates(t).t0;
      EXPECT_EQ(s.points.size() == n, t0);
      if (t0) {
        EXPECT_TRUE(is_homeomorphism(s.canonical_map, t, s.topology));
      }
    }
}

TEST(Derived, SubspaceQuotientInducedByDefinition) {
  const auto four = enumerate_topologies(4);
  for (std::size_t i = 0; i < four.size(); i += 7) {
    const auto& t = four[i];
    const auto sub = make_subset(4, {1, 3});
    const auto s = subspace_topology(t, sub);
    std::set<std::uint64_t> want;
    for (const auto& u : t.opens()) {
      std::uint64_t m = 0;
      for (std::size_t k = 0; k < s.to_parent.size(); ++k)
        if (u.test(s.to_parent[k])) m |= std::uint64_t{1} << k;
      want.insert(m);
    }
    EXPECT_EQ(open_masks(s.topology), want);

    const std::vector<Elem> labels{0, 1, 0, 2};
    const auto p = Partition::from_labels(labels);
    const auto q = quotient_topology(t, p);
    std::set<std::uint64_t> qwant;
    for (std::uint64_t w = 0; w < 8; ++w) {
      Subset un(4);
      for (std::size_t b = 0; b < 3; ++b)
        if ((w >> b) & 1U) un |= p.blocks()[b];
      if (t.is_open(un)) qwant.insert(w);
    }
    EXPECT_EQ(open_masks(q), qwant);

    const MapTable f(4, {3, 2, 1, 0});
    std::set<std::uint64_t> iwant;
    for (const auto& u : t.opens()) iwant.insert(to_mask(f.preimage(u)));
    EXPECT_EQ(open_masks(induced_topology(f, t)), iwant);
  }
}

TEST(Derived, PartitionValidation) {
  EXPECT_THROW(Partition(3, {make_subset(3, {0, 1}), make_subset(3, {1, 2})}), PreconditionError);
  EXPECT_THROW(Partition(3, {make_subset(3, {0, 1})}), PreconditionError);
  EXPECT_THROW(Partition(3, {make_subset(3, {0, 1, 2}), Subset(3)}), PreconditionError);
}

TEST(Homeomorphism, ClassCountsOnSmallGrounds) {
  auto classes = [](std::size_t n) {
    std::vector<FinTopology> reps;
    for (const auto& t : enumerate_topologies(n)) {
      bool fresh = true;
      for (const auto& r : reps)
        if (auto h = find_homeomorphism(t, r)) {
          EXPECT_TRUE(is_homeomorphism(MapTable(n, *h), t, r));
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(t);
    }
    return reps.size();
  };
  EXPECT_EQ(classes(2), 3U);
  EXPECT_EQ(classes(3), 9U);
  EXPECT_EQ(classes(4), 33U);
}

TEST(Predicates, HausdorffByOpenSeparation) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      bool separated = true;
      for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y) {
          bool pair = false;
          for (const auto& u : t.opens())
            for (const auto& v : t.opens())
              pair = pair || (u.test(x) && v.test(y) && !u.intersects(v));
          separated = separated && pair;
        }
      const auto p = space_predicates(t);
      EXPECT_EQ(p.hausdorff, separated);
      EXPECT_EQ(p.hausdorff, p.discrete);
      EXPECT_EQ(p.trivial, t.opens().size() == 2 || n == 1);
    }
  EXPECT_FALSE(space_predicates(FinTopology::sierpinski()).hausdorff);
  EXPECT_TRUE(space_predicates(FinTopology::sierpinski()).t0);
}

TEST(Predicates, FinerThan) {
  const auto d = FinTopology::discrete(3), t = FinTopology::trivial(3);
  EXPECT_TRUE(d.is_finer_than(t));
  EXPECT_FALSE(t.is_finer_than(d));
  for (const auto& s : enumerate_topologies(3)) EXPECT_TRUE(s.is_finer_than(t) && d.is_finer_than(s));
}

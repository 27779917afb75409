#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "topring/search.hpp"

using namespace topring;

namespace {

// Definitional filter: every open of T pulls back to an open of the rectangle-generated product.
bool ring_by_preimages(const FiniteRing& r, const FinTopology& t) {
  const auto prod = product_topology_from_rectangles(t, t);
  const std::size_t n = r.size();
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = r.add(a, b);
      mul[a * n + b] = r.mul(a, b);
    }
  const MapTable fa(n, add), fm(n, mul);
  for (const auto& u : t.opens())
    if (!prod.is_open(fa.preimage(u)) || !prod.is_open(fm.preimage(u))) return false;
  return true;
}

std::size_t count_by_filter(const FiniteRing& r) {
  std::size_t c = 0;
  for (const auto& t : enumerate_topologies(r.size())) c += ring_by_preimages(r, t) ? 1 : 0;
  return c;
}

SearchConfig quick() {
  SearchConfig c;
  c.max_exhaustive_size = 4;
  c.sample_count = 0;
  return c;
}

}  // namespace

TEST(TopRingSearch, CountsMatchDefinitionalFilter) {
  const auto z2 = enumerate_topological_rings(zmod(2));
  EXPECT_EQ(z2.searched, 4U);
  EXPECT_EQ(z2.topologies.size(), 2U);
  EXPECT_TRUE(z2.exhaustive);
  for (const char* spec : {"Z/2", "Z/3", "Z/4", "Z/2 x Z/2", "Z/2[x]/(1,1,1)", "Z/2[x]/(0,0,1)"}) {
    const auto r = make_ring(spec);
    EXPECT_EQ(enumerate_topological_rings(r).topologies.size(), count_by_filter(r)) << spec;
  }
}

TEST(TopRingSearch, OneTopologyPerIdeal) {
  for (const char* spec : {"Z/4", "Z/2 x Z/2", "Z/5"}) {
    const auto r = make_ring(spec);
    EXPECT_EQ(enumerate_topological_rings(r).topologies.size(), all_ideals(r).size()) << spec;
  }
}

TEST(TopGroupSearch, OneTopologyPerNormalSubgroup) {
  for (const auto& g : {cyclic_group(4), cyclic_group(5), additive_group(make_ring("Z/2 x Z/2"))}) {
    const auto res = enumerate_topological_groups(g);
    EXPECT_EQ(res.topologies.size(), g.all_subgroups().size()) << g.name();
  }
}

TEST(Determinism, WorkerCountDoesNotChangeResults) {
  SearchConfig one, three;
  three.workers = 3;
  const auto r = zmod(5);
  const auto a = enumerate_topological_rings(r, one), b = enumerate_topological_rings(r, three);
  ASSERT_EQ(a.topologies.size(), b.topologies.size());
  for (std::size_t i = 0; i < a.topologies.size(); ++i) EXPECT_EQ(a.topologies[i], b.topologies[i]);

  SearchConfig c1 = quick(), c3 = quick();
  c1.theorems = c3.theorems = {"adic-structure", "dense-trivial"};
  c1.rings = c3.rings = {"Z/8", "Z/2 x Z/4"};
  c3.workers = 3;
  EXPECT_EQ(theorem_corpus_report(c1).to_json().dump(), theorem_corpus_report(c3).to_json().dump());
}

TEST(Sources, SamplingAndCaps) {
  SearchConfig c;
  c.sample_count = 30;
  c.max_sampled_size = 7;
  const auto s = topology_source(7, c);
  EXPECT_FALSE(s.exhaustive);
  std::set<std::vector<Subset>> rows;
  for (std::size_t i = 0; i < s.size(); ++i) rows.insert(s.at(i).preorder_rows());
  EXPECT_EQ(rows.size(), s.size());
  EXPECT_TRUE(rows.contains(FinTopology::discrete(7).preorder_rows()));
  EXPECT_TRUE(rows.contains(FinTopology::trivial(7).preorder_rows()));
  c.sample_count = 0;
  EXPECT_THROW(topology_source(7, c), PreconditionError);
  c.max_exhaustive_size = 7;
  EXPECT_THROW(topology_source(3, c), PreconditionError);
  EXPECT_EQ(topology_source(5, SearchConfig{}).size(), 6942U);
}

TEST(NonAbsolute, EmptyOnSmallRings) {
  for (const char* spec : {"Z/2", "Z/4"}) {
    const auto res = find_non_absolute(make_ring(spec));
    EXPECT_TRUE(res.findings.empty()) << spec;
    EXPECT_GT(res.topological_rings, 0U);
  }
  const auto z5 = find_non_absolute(zmod(5));
  EXPECT_EQ(z5.searched, 6942U);
  EXPECT_EQ(z5.topological_rings, 2U);
  const auto j = to_json(z5);
  EXPECT_EQ(j["topologies_searched"].get<std::size_t>(), 6942U);
  EXPECT_TRUE(j["non_absolute"].is_array());
}

TEST(Corpus, RingLists) {
  for (const auto& s : corpus::cyclic_products(16)) EXPECT_LE(make_ring(s).size(), 16U) << s;
  const auto p = corpus::cyclic_products(16);
  EXPECT_NE(std::find(p.begin(), p.end(), "Z/2 x Z/2 x Z/2 x Z/2"), p.end());
  EXPECT_NE(std::find(p.begin(), p.end(), "Z/4 x Z/4"), p.end());
  for (const auto& s : corpus::small_rings()) EXPECT_LE(make_ring(s).size(), 5U);
  EXPECT_EQ(corpus::cyclic(2, 100).size(), 99U);
}

TEST(Corpus, MaskedReportOnCustomRings) {
  auto c = quick();
  c.theorems = {"nonfield-criterion"};
  c.rings = {"Z/4", "Z/12", "Z/2 x Z/3"};
  const auto rep = theorem_corpus_report(c);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.sections["nonfield_rings"].get<std::size_t>(), 3U);
  std::size_t holds = 0;
  for (const auto& [id, t] : rep.tallies) {
    if (id == "nonfield-criterion") holds = t.holds;
    else EXPECT_EQ(t.holds + t.unmet + t.violations, 0U) << id;
  }
  EXPECT_EQ(holds, 9U);  // three checks per nonfield ring
  EXPECT_NE(rep.to_text().find("corpus  [ok]"), std::string::npos);
}

TEST(Corpus, AdicMaskOnSmallCyclics) {
  auto c = quick();
  c.theorems = {"adic-absolute"};
  c.rings = corpus::cyclic(2, 12);
  const auto rep = theorem_corpus_report(c);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.total(Verdict::holds), 0U);
  EXPECT_EQ(rep.total(Verdict::violation), 0U);
}

TEST(Corpus, RejectsUnknownTheorem) {
  SearchConfig c;
  c.theorems = {"no-such-theorem"};
  EXPECT_THROW(theorem_corpus_report(c), PreconditionError);
}

TEST(Corpus, SmallExhaustiveRunHasNoViolations) {
  auto c = quick();
  c.max_exhaustive_size = 3;
  c.sample_count = 20;  // carriers above 3 points draw a seeded sample
  c.theorems = {"coset-structure", "identity-component", "hausdorff-discrete", "koh-hypotheses", "product-ring"};
  const auto rep = theorem_corpus_report(c);
  EXPECT_TRUE(rep.ok()) << rep.to_text();
  for (const auto& [id, t] : rep.tallies)
    if (id == "coset-structure") {
      EXPECT_GT(t.holds, 0U);
    }
}

TEST(Findings, JsonShape) {
  const Finding f{"x", topology_literal(FinTopology::sierpinski()), "sierpinski-example", Verdict::violation,
                  json{{"open", json::array({0})}}};
  const auto j = to_json(f);
  EXPECT_EQ(j["verdict"], "VIOLATION");
  EXPECT_EQ(topology_from_json(j["topology"]), FinTopology::sierpinski());
}

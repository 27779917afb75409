#pragma once

// Sweeps over (ring, topology) and (group, topology) pairs: filtering enumerated topologies down to
// the topological ones, hunting non-absolute topological rings, and running every theorem predicate
// over a corpus with per-theorem tallies.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "topring/error.hpp"
#include "topring/finring.hpp"
#include "topring/fintop.hpp"
#include "topring/group.hpp"
#include "topring/report.hpp"
#include "topring/topalg.hpp"

namespace topring {

struct SearchConfig {
  std::vector<std::string> rings;         // empty: the built-in corpus
  std::size_t max_exhaustive_size = 5;    // every topology enumerated up to this carrier size (at most 6)
  std::size_t sample_count = 2000;        // random topologies per carrier above the exhaustive size
  std::size_t max_sampled_size = 6;
  std::uint64_t seed = 1;
  std::vector<std::string> theorems;      // empty: all
  unsigned workers = 1;
  std::uint64_t polynomial_limit = std::uint64_t{1} << 16;  // exhaustive coefficient sweeps up to this many

  [[nodiscard]] bool selected(const std::string& id) const {
    return theorems.empty() || std::find(theorems.begin(), theorems.end(), id) != theorems.end();
  }
  [[nodiscard]] bool any_selected(std::initializer_list<const char*> ids) const {
    for (const char* id : ids)
      if (selected(id)) return true;
    return false;
  }
};

inline void validate(const SearchConfig& c) {
  if (c.max_exhaustive_size > kExhaustiveTopologyCap)
    throw PreconditionError("exhaustive enumeration is limited to carriers of size " +
                            std::to_string(kExhaustiveTopologyCap));
  for (const auto& id : c.theorems)
    if (std::find(theorem::all().begin(), theorem::all().end(), id) == theorem::all().end())
      throw PreconditionError("unknown theorem id '" + id + "'");
}

struct Finding {
  std::string subject;
  json topology;
  std::string theorem;
  Verdict verdict = Verdict::holds;
  json witness = json::object();
};

inline json to_json(const Finding& f) {
  return json{{"subject", f.subject},
              {"topology", f.topology},
              {"theorem", f.theorem},
              {"verdict", to_string(f.verdict)},
              {"witness", f.witness}};
}

/// Topology literal safe for any size: open family when small, minimal opens otherwise.
inline json topology_literal(const FinTopology& t) {
  if (t.count_opens(4096)) return topology_to_json(t);
  json rows = json::array();
  for (Elem x = 0; x < t.size(); ++x) rows.push_back(members(t.min_open(x)));
  return json{{"n", t.size()}, {"min_opens", rows}};
}

// ---------------------------------------------------------------------------
// Parallel map with results in index order

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned workers, Fn&& fn) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------------------
// Topology sources

inline std::shared_ptr<const TopologyEnumeration> cached_enumeration(std::size_t n) {
  static std::mutex m;
  static std::map<std::size_t, std::shared_ptr<const TopologyEnumeration>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const TopologyEnumeration>(n);
  return slot;
}

/// Topologies searched on an n-point carrier under the config, in deterministic order.
struct TopologySource {
  std::size_t ground_size = 0;
  bool exhaustive = false;
  std::shared_ptr<const TopologyEnumeration> enumeration;
  std::vector<FinTopology> sampled;

  [[nodiscard]] std::size_t size() const { return exhaustive ? enumeration->size() : sampled.size(); }
  [[nodiscard]] FinTopology at(std::size_t i) const { return exhaustive ? enumeration->at(i) : sampled[i]; }
};

inline TopologySource topology_source(std::size_t n, const SearchConfig& config) {
  validate(config);
  TopologySource s;
  s.ground_size = n;
  if (n <= config.max_exhaustive_size) {
    s.exhaustive = true;
    s.enumeration = cached_enumeration(n);
  } else if (config.sample_count > 0 && n <= config.max_sampled_size) {
    auto raw = sample_topologies(n, config.sample_count, config.seed ^ (n * 0x9e3779b97f4a7c15ULL));
    // the extremes are always part of the sample; repeats are dropped, first occurrence kept
    raw.push_back(FinTopology::discrete(n));
    raw.push_back(FinTopology::trivial(n));
    std::set<std::vector<Subset>> seen;
    for (auto& t : raw)
      if (seen.insert(t.preorder_rows()).second) s.sampled.push_back(std::move(t));
  } else {
    throw PreconditionError("carrier of size " + std::to_string(n) +
                            " exceeds the exhaustive cap and sampling is not enabled for it");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Topological rings and groups on a carrier

struct TopRingSearch {
  std::string ring;
  std::size_t searched = 0;
  bool exhaustive = false;
  std::vector<FinTopology> topologies;  // qualifying ones, in source order
};

inline TopRingSearch enumerate_topological_rings(const FiniteRing& r, const SearchConfig& config = {}) {
  const auto src = topology_source(r.size(), config);
  auto keep = parallel_map<std::optional<FinTopology>>(src.size(), config.workers, [&](std::size_t i) {
    auto t = src.at(i);
    return check_topological_ring(r, t).is_topological_ring() ? std::optional<FinTopology>(std::move(t))
                                                              : std::nullopt;
  });
  TopRingSearch out{r.spec(), src.size(), src.exhaustive, {}};
  for (auto& t : keep)
    if (t) out.topologies.push_back(std::move(*t));
  return out;
}

struct TopGroupSearch {
  std::string group;
  std::size_t searched = 0;
  bool exhaustive = false;
  std::vector<FinTopology> topologies;
};

inline TopGroupSearch enumerate_topological_groups(const FiniteGroup& g, const SearchConfig& config = {}) {
  const auto src = topology_source(g.size(), config);
  auto keep = parallel_map<std::optional<FinTopology>>(src.size(), config.workers, [&](std::size_t i) {
    auto t = src.at(i);
    return check_topological_group(g, t).is_topological_group() ? std::optional<FinTopology>(std::move(t))
                                                                : std::nullopt;
  });
  TopGroupSearch out{g.name(), src.size(), src.exhaustive, {}};
  for (auto& t : keep)
    if (t) out.topologies.push_back(std::move(*t));
  return out;
}

// ---------------------------------------------------------------------------
// Non-absolute hunt

struct NonAbsoluteSearch {
  std::string ring;
  std::size_t searched = 0;
  bool exhaustive = false;
  std::size_t topological_rings = 0;
  std::vector<Finding> findings;  // empty is a result in its own right
};

inline NonAbsoluteSearch find_non_absolute(const FiniteRing& r, const SearchConfig& config = {}) {
  const auto rings = enumerate_topological_rings(r, config);
  NonAbsoluteSearch out{r.spec(), rings.searched, rings.exhaustive, rings.topologies.size(), {}};
  const auto units = unit_group(r);
  for (const auto& t : rings.topologies) {
    const auto sub = subspace_topology(t, units.in_ring).topology;
    const auto v = check_topological_group(units.group, sub);
    if (v.is_topological_group()) continue;
    // a non-absolute ring is a discovery, not a violation; the verdict is that of the characterization on it
    const auto abs = absolute_check(r, t);
    json w = to_json(v);
    w["units"] = units.to_ring;
    w["subspace_equals_tf"] = abs.data["subspace_equals_tf"];
    out.findings.push_back({r.spec(), topology_to_json(t), theorem::kTfCharacterization,
                            abs.ok() ? Verdict::holds : Verdict::violation, w});
  }
  return out;
}

inline json to_json(const NonAbsoluteSearch& s) {
  json f = json::array();
  for (const auto& x : s.findings) f.push_back(to_json(x));
  return json{{"ring", s.ring},
              {"topologies_searched", s.searched},
              {"exhaustive", s.exhaustive},
              {"topological_rings", s.topological_rings},
              {"non_absolute", f}};
}

// ---------------------------------------------------------------------------
// Corpus

namespace corpus {

inline std::vector<std::string> cyclic(std::size_t lo, std::size_t hi) {
  std::vector<std::string> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back("Z/" + std::to_string(n));
  return out;
}

/// Products of at least two cyclic factors (each >= 2, nondecreasing) of total size <= max_size.
inline std::vector<std::string> cyclic_products(std::size_t max_size) {
  std::vector<std::string> out;
  std::vector<std::size_t> f;
  auto rec = [&](auto&& self, std::size_t min_factor, std::size_t size) -> void {
    if (f.size() >= 2) {
      std::string s;
      for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(f[i]);
      out.push_back(s);
    }
    for (std::size_t k = min_factor; size * k <= max_size; ++k) {
      f.push_back(k);
      self(self, k, size * k);
      f.pop_back();
    }
  };
  rec(rec, 2, 1);
  std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return make_ring(a).size() < make_ring(b).size();
  });
  return out;
}

/// Polynomial quotients up to 16 elements: fields, dual numbers and a few non-reduced rings.
inline std::vector<std::string> polynomial_quotients() {
  return {"Z/2[x]/(1,1,1)", "Z/2[x]/(0,0,1)", "Z/3[x]/(0,0,1)", "Z/3[x]/(1,0,1)", "Z/2[x]/(0,0,0,1)",
          "Z/2[x]/(1,1,0,1)", "Z/2[x]/(1,0,0,1)", "Z/2[x]/(0,0,0,0,1)", "Z/2[x]/(1,1,0,0,1)"};
}

/// Every commutative unital ring with at most 5 elements, up to isomorphism.
inline std::vector<std::string> small_rings() {
  return {"Z/2", "Z/3", "Z/4", "Z/2 x Z/2", "Z/2[x]/(1,1,1)", "Z/2[x]/(0,0,1)", "Z/5"};
}

/// Rings for the adic sweep: Z/n up to 24, products up to 16, polynomial quotients.
inline std::vector<std::string> adic_rings() {
  auto out = cyclic(2, 24);
  for (auto& s : cyclic_products(16)) out.push_back(s);
  for (auto& s : polynomial_quotients()) out.push_back(s);
  return out;
}

/// Rings for the nonfield criterion: Z/n up to 100 and cyclic products up to 100.
inline std::vector<std::string> criterion_rings() {
  auto out = cyclic(2, 100);
  for (auto& s : cyclic_products(100)) out.push_back(s);
  return out;
}

}  // namespace corpus

struct TheoremTally {
  std::size_t holds = 0;
  std::size_t unmet = 0;
  std::size_t degenerate = 0;
  std::size_t violations = 0;
};

struct CorpusReport {
  std::vector<std::pair<std::string, TheoremTally>> tallies;  // theorem::all() order
  std::vector<Finding> violations;
  json sections = json::object();

  [[nodiscard]] bool ok() const { return violations.empty(); }

  TheoremTally& tally(const std::string& id) {
    for (auto& [k, v] : tallies)
      if (k == id) return v;
    return tallies.emplace_back(id, TheoremTally{}).second;
  }

  void record(const Report& r, const json& topology = nullptr) {
    for (const auto& c : r.checks) {
      auto& t = tally(c.theorem);
      switch (c.verdict) {
        case Verdict::holds:
          ++t.holds;
          break;
        case Verdict::hypothesis_unmet:
          ++t.unmet;
          break;
        case Verdict::degenerate:
          ++t.degenerate;
          break;
        case Verdict::violation:
          ++t.violations;
          violations.push_back({r.subject, topology, c.theorem, Verdict::violation,
                                json{{"claim", c.claim}, {"detail", c.detail}, {"data", r.data}}});
          break;
      }
    }
  }

  [[nodiscard]] std::size_t total(Verdict v) const {
    std::size_t n = 0;
    for (const auto& [k, t] : tallies)
      n += v == Verdict::holds ? t.holds
           : v == Verdict::hypothesis_unmet ? t.unmet
           : v == Verdict::degenerate ? t.degenerate
                                      : t.violations;
    return n;
  }

  [[nodiscard]] json to_json() const {
    json t = json::object();
    for (const auto& [k, v] : tallies)
      t[k] = {{"holds", v.holds}, {"hypothesis-unmet", v.unmet}, {"degenerate-finite", v.degenerate},
              {"VIOLATION", v.violations}};
    json viol = json::array();
    for (const auto& f : violations) viol.push_back(topring::to_json(f));
    return json{{"ok", ok()}, {"tallies", t}, {"violations", viol}, {"sections", sections}};
  }

  [[nodiscard]] std::string to_text() const {
    std::string out = ok() ? "corpus  [ok]\n" : "corpus  [VIOLATION]\n";
    for (const auto& [k, v] : tallies)
      out += "  " + k + ": holds=" + std::to_string(v.holds) + " hypothesis-unmet=" + std::to_string(v.unmet) +
             " degenerate-finite=" + std::to_string(v.degenerate) + " VIOLATION=" + std::to_string(v.violations) + "\n";
    for (const auto& [k, v] : sections.items()) out += "  " + k + ": " + v.dump() + "\n";
    for (const auto& f : violations) out += "  VIOLATION " + f.theorem + " on " + f.subject + ": " + f.witness.dump() + "\n";
    return out;
  }
};

namespace detail {

struct Job {
  std::string name;
  std::function<std::vector<std::pair<Report, json>>()> run;
};

using Batch = std::vector<std::pair<Report, json>>;

/// Subsets of a small carrier satisfying a predicate, in mask order.
inline std::vector<Subset> subsets_where(std::size_t n, const std::function<bool(const Subset&)>& pred) {
  std::vector<Subset> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    Subset s = from_mask(n, m);
    if (pred(s)) out.push_back(std::move(s));
  }
  return out;
}

inline Report coset_structure(const Subset& nbhd, bool is_normal, bool coset_unions, const std::string& subject,
                              const char* what) {
  Report rep;
  rep.subject = "coset-structure " + subject;
  rep.data["neighbourhood"] = members(nbhd);
  rep.expect(theorem::kCosetStructure, std::string("minimal open of the identity is a ") + what, is_normal);
  rep.expect(theorem::kCosetStructure, "opens are exactly unions of its cosets", coset_unions);
  return rep;
}

/// Subring generated by {1, a}: closure under +, -, *.
inline Subset generated_subring(const FiniteRing& r, Elem a) {
  Subset s = singleton(r.size(), r.one());
  s.set(r.zero());
  s.set(a);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto x : members(s))
      for (auto y : members(s))
        for (Elem z : {r.add(x, y), r.sub(x, y), r.mul(x, y)})
          if (!s.test(z)) {
            s.set(z);
            grew = true;
          }
  }
  return s;
}

/// Multiplicative set {1, a, a^2, ...}.
inline Subset powers_of(const FiniteRing& r, Elem a) {
  Subset s = singleton(r.size(), r.one());
  for (Elem x = a; !s.test(x); x = r.mul(x, a)) s.set(x);
  return s;
}

/// Theorem checks for one topological group.
inline Batch group_instance(const FiniteGroup& g, const FinTopology& t, const SearchConfig& cfg, bool small) {
  Batch out;
  const json lit = topology_literal(t);
  const auto v = check_topological_group(g, t);
  if (cfg.selected(theorem::kCosetStructure))
    out.emplace_back(coset_structure(v.identity_neighbourhood, v.neighbourhood_is_normal_subgroup,
                                     v.opens_are_coset_unions, g.name(), "normal subgroup"),
                     lit);
  if (cfg.selected(theorem::kHausdorffDiscrete)) out.emplace_back(hausdorff_discrete_criteria(g, t), lit);
  if (cfg.selected(theorem::kIdentityComponent)) out.emplace_back(identity_component(g, t), lit);
  const auto subgroups = g.all_subgroups();
  if (cfg.selected(theorem::kDenseTrivial)) {
    out.emplace_back(dense_triviality(g, t), lit);
    for (const auto& h : subgroups) out.emplace_back(dense_triviality(g, t, h), lit);
  }
  if (cfg.selected(theorem::kClosureSubstructure))
    for (const auto& h : subgroups) {
      out.emplace_back(closure_substructure(g, t, h, GroupSubstructure::subgroup), lit);
      if (g.is_normal_subgroup(h))
        out.emplace_back(closure_substructure(g, t, h, GroupSubstructure::normal_subgroup), lit);
    }
  if (cfg.selected(theorem::kGroupClosure)) {
    if (small)
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m)
        out.emplace_back(group_closure_formula(g, t, from_mask(g.size(), m)), lit);
    else
      for (Elem x = 0; x < g.size(); ++x) out.emplace_back(group_closure_formula(g, t, singleton(g.size(), x)), lit);
  }
  if (cfg.selected(theorem::kWeakClosed)) {
    const auto closed_under_op =
        small ? subsets_where(g.size(), [&](const Subset& s) { return g.is_closed_under_op(s); }) : subgroups;
    for (const auto& h : closed_under_op) out.emplace_back(weak_closed_check(g, t, h), lit);
  }
  if (cfg.selected(theorem::kMonomial)) {
    Report rep;
    rep.subject = "monomials " + g.name();
    std::size_t checked = 0;
    for (Elem a = 0; a < g.size(); ++a)
      for (long long d1 = -3; d1 <= 3; ++d1) {
        const long long one[] = {d1};
        ++checked;
        if (!topring::detail::monomial_check(g, t, one, a).continuous)
          rep.expect(theorem::kMonomial, "a x^d continuous", false, {{"a", a}, {"d", d1}});
        for (long long d2 = -3; d2 <= 3; ++d2) {
          const long long two[] = {d1, d2};
          ++checked;
          if (!topring::detail::monomial_check(g, t, two, a).continuous)
            rep.expect(theorem::kMonomial, "a x^d1 y^d2 continuous", false, {{"a", a}, {"d1", d1}, {"d2", d2}});
        }
      }
    rep.data["monomials"] = checked;
    if (rep.ok()) rep.expect(theorem::kMonomial, "every monomial with exponents in [-3,3], arity <= 2, is continuous", true);
    out.emplace_back(std::move(rep), lit);
  }
  if (cfg.selected(theorem::kPowerNeighborhood)) {
    Report rep;
    rep.subject = "power-neighbourhood " + g.name();
    const Elem e = g.identity();
    std::vector<Subset> us;
    if (t.count_opens(256))
      for (auto& u : t.opens(256))
        if (u.test(e)) us.push_back(std::move(u));
    if (us.empty()) us.push_back(t.min_open(e));
    for (const auto& u : us)
      for (unsigned n = 1; n <= 3; ++n) {
        bool ok = true;
        try {
          const Subset vv = power_neighborhood(g, t, u, n);
          ok = t.is_open(vv) && vv.test(e);
        } catch (const TheoremViolation&) {
          ok = false;
        }
        if (!ok) rep.expect(theorem::kPowerNeighborhood, "open V with V^n inside U", false, {{"U", members(u)}, {"n", n}});
      }
    if (rep.ok()) rep.expect(theorem::kPowerNeighborhood, "open V with V^n inside U for every open U of e, n <= 3", true);
    out.emplace_back(std::move(rep), lit);
  }
  return out;
}

/// Polynomial continuity report: arity 1 and 2, degree <= 3.
inline Report polynomial_report(const FiniteRing& r, const FinTopology& t, const SearchConfig& cfg) {
  Report rep;
  rep.subject = "polynomials " + r.spec();
  for (std::size_t arity = 1; arity <= 2; ++arity) {
    const auto s = polynomial_sweep(r, t, arity, 3, cfg.polynomial_limit, cfg.seed);
    const std::string tag = "arity" + std::to_string(arity);
    rep.data[tag + "_checked"] = s.checked;
    rep.data[tag + "_exhaustive"] = s.exhaustive;
    json w = json::object();
    if (s.first_failure) {
      json terms = json::array();
      for (const auto& [e, c] : s.first_failure->terms) terms.push_back({{"exponents", e}, {"coefficient", c}});
      w["polynomial"] = terms;
    }
    rep.expect(theorem::kPolynomial, "every polynomial of degree <= 3 in " + std::to_string(arity) + " variables is continuous",
               s.continuous == s.checked, w);
  }
  return rep;
}

/// Theorem checks for one topological ring (exhaustive or sampled corpus member).
inline Batch ring_instance(const FiniteRing& r, const FinTopology& t, const SearchConfig& cfg) {
  Batch out;
  const json lit = topology_literal(t);
  const bool small = r.size() <= 6;
  const auto v = check_topological_ring(r, t);
  if (cfg.selected(theorem::kCosetStructure))
    out.emplace_back(coset_structure(v.zero_neighbourhood, v.neighbourhood_is_ideal, v.opens_are_coset_unions,
                                     r.spec(), "ideal"),
                     lit);
  if (cfg.any_selected({theorem::kTfGroup, theorem::kTfCharacterization, theorem::kPointwiseOps}))
    out.emplace_back(absolute_check(r, t), lit);
  if (cfg.selected(theorem::kBooleanSubspace) || cfg.selected(theorem::kPolynomial))
    out.emplace_back(boolean_subspace_check(r, t), lit);
  if (cfg.selected(theorem::kPolynomial)) out.emplace_back(polynomial_report(r, t, cfg), lit);
  if (cfg.selected(theorem::kIdentityComponent)) out.emplace_back(identity_component(r, t), lit);
  const auto ideals = all_ideals(r);
  if (cfg.selected(theorem::kDenseTrivial) || cfg.selected(theorem::kClosureSubstructure))
    for (const auto& i : ideals) out.emplace_back(dense_ideal_check(r, t, i), lit);
  if (cfg.selected(theorem::kClosureSubstructure)) {
    for (const auto& i : ideals)
      out.emplace_back(closure_substructure(r, t, i.elements(), RingSubstructure::ideal), lit);
    std::vector<Subset> mult, sub;
    if (small) {
      mult = subsets_where(r.size(), [&](const Subset& s) { return is_multiplicative_set(r, s); });
      sub = subsets_where(r.size(), [&](const Subset& s) { return is_subring(r, s); });
    } else {
      for (Elem a = 0; a < r.size(); ++a) {
        mult.push_back(powers_of(r, a));
        sub.push_back(generated_subring(r, a));
      }
      mult.push_back(units_group(r).elements);
      canonical_sort(mult);
      canonical_sort(sub);
    }
    for (const auto& s : mult) out.emplace_back(closure_substructure(r, t, s, RingSubstructure::multiplicative_set), lit);
    for (const auto& s : sub) out.emplace_back(closure_substructure(r, t, s, RingSubstructure::subring), lit);
  }
  if (cfg.selected(theorem::kKoh)) {
    const auto z = zerodivisors(r);
    for_each_member(z, [&](Elem x) {
      if (x != r.zero()) out.emplace_back(koh_hypotheses(r, t, x), lit);
    });
  }
  if (cfg.selected(theorem::kPointwiseOps) && small) {
    // f, g range over the continuous self-maps of (R, T), capped
    std::vector<MapTable> maps;
    std::vector<Elem> f(r.size(), 0);
    for (;;) {
      MapTable m(r.size(), f);
      if (is_continuous(m, t, t, 0).continuous) maps.push_back(std::move(m));
      if (maps.size() >= 16) break;
      std::size_t k = 0;
      while (k < f.size() && f[k] + 1 == r.size()) f[k++] = 0;
      if (k == f.size()) break;
      ++f[k];
    }
    for (const auto& a : maps)
      for (const auto& b : maps) out.emplace_back(pointwise_ops_check(t, r, t, a, b), lit);
  }
  return out;
}

/// Theorem checks for one (R, I) adic instance.
inline Batch adic_instance(const Ideal& ideal, const SearchConfig& cfg) {
  Batch out;
  const auto& r = ideal.ring();
  const auto adic = adic_topology(ideal);
  const auto& t = adic.topology;
  const json lit = json{{"ring", r.spec()}, {"ideal", ideal.members()}, {"stable", members(adic.stable().elements())}};
  if (cfg.any_selected({theorem::kAdicStructure, theorem::kAdicAbsolute, theorem::kSoberCanonical}))
    out.emplace_back(adic_structure_theorems(ideal), lit);
  if (cfg.any_selected({theorem::kTfGroup, theorem::kTfCharacterization})) out.emplace_back(absolute_check(r, t), lit);
  if (cfg.selected(theorem::kBooleanSubspace)) out.emplace_back(boolean_subspace_check(r, t), lit);
  if (cfg.selected(theorem::kIdentityComponent)) out.emplace_back(identity_component(r, t), lit);
  if (cfg.selected(theorem::kDenseTrivial) || cfg.selected(theorem::kClosureSubstructure))
    for (const auto& j : all_ideals(r)) out.emplace_back(dense_ideal_check(r, t, j), lit);
  if (cfg.selected(theorem::kKoh))
    for_each_member(zerodivisors(r), [&](Elem x) {
      if (x != r.zero()) out.emplace_back(koh_hypotheses(r, t, x), lit);
    });
  if (cfg.selected(theorem::kClosureSubstructure)) {
    for (const auto& j : all_ideals(r))
      out.emplace_back(closure_substructure(r, t, j.elements(), RingSubstructure::ideal), lit);
    for (Elem a = 0; a < r.size(); ++a) {
      out.emplace_back(closure_substructure(r, t, powers_of(r, a), RingSubstructure::multiplicative_set), lit);
      out.emplace_back(closure_substructure(r, t, generated_subring(r, a), RingSubstructure::subring), lit);
    }
  }
  if (cfg.selected(theorem::kPolynomial) && r.size() <= 6) out.emplace_back(polynomial_report(r, t, cfg), lit);
  // the additive group and the unit group with the induced topologies
  const auto additive = additive_group(r);
  for (auto& b : group_instance(additive, t, cfg, false)) out.push_back(std::move(b));
  if (r.size() <= 12) {
    const auto units = unit_group(r);
    const auto sub = subspace_topology(t, units.in_ring).topology;
    for (auto& b : group_instance(units.group, sub, cfg, units.group.size() <= 5)) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace detail

/// Every selected theorem predicate over the corpus. Findings are merged in job order, so the
/// result does not depend on the worker count.
inline CorpusReport theorem_corpus_report(const SearchConfig& cfg = {}) {
  validate(cfg);
  using detail::Batch;
  using detail::Job;
  CorpusReport report;
  for (const auto& id : theorem::all()) report.tally(id);
  std::vector<Job> jobs;
  const bool custom = !cfg.rings.empty();

  // nonfield criterion
  if (cfg.selected(theorem::kNonfield)) {
    const auto specs = custom ? cfg.rings : corpus::criterion_rings();
    for (const auto& s : specs)
      jobs.push_back({"nonfield " + s, [s] { return Batch{{finite_nonfield_criterion(make_ring(s)), nullptr}}; }});
    report.sections["nonfield_rings"] = specs.size();
  }

  if (cfg.selected(theorem::kSierpinski)) jobs.push_back({"sierpinski", [] { return Batch{{sierpinski_example(), nullptr}}; }});

  // adic instances
  const bool adic_wanted = cfg.any_selected(
      {theorem::kAdicStructure, theorem::kAdicAbsolute, theorem::kSoberCanonical, theorem::kTfGroup,
       theorem::kTfCharacterization, theorem::kBooleanSubspace, theorem::kIdentityComponent, theorem::kDenseTrivial,
       theorem::kClosureSubstructure, theorem::kKoh, theorem::kPolynomial, theorem::kCosetStructure,
       theorem::kHausdorffDiscrete, theorem::kGroupClosure, theorem::kWeakClosed, theorem::kMonomial,
       theorem::kPowerNeighborhood});
  std::size_t adic_instances = 0;
  if (adic_wanted) {
    const auto specs = custom ? cfg.rings : corpus::adic_rings();
    for (const auto& s : specs) {
      const auto r = make_ring(s);
      for (const auto& i : all_ideals(r)) {
        ++adic_instances;
        jobs.push_back({"adic " + s + " " + to_string(i.elements()), [i, &cfg] { return detail::adic_instance(i, cfg); }});
      }
    }
    report.sections["adic_instances"] = adic_instances;
  }

  // adic morphisms Z/n -> Z/m and prime distinctness
  if (cfg.selected(theorem::kAdicMorphism) && !custom) {
    std::size_t pairs = 0;
    for (std::size_t n = 2; n <= 12; ++n)
      for (std::size_t m = 2; m <= n; ++m) {
        if (n % m) continue;
        const auto f = reduction_morphism(n, m);
        pairs += all_ideals(f.domain()).size() * all_ideals(f.codomain()).size();
        jobs.push_back({"morphism Z/" + std::to_string(n) + " -> Z/" + std::to_string(m), [f] {
                          Batch b;
                          for (const auto& i : all_ideals(f.domain()))
                            for (const auto& j : all_ideals(f.codomain()))
                              b.emplace_back(adic_morphism_continuity(f, i, j), nullptr);
                          return b;
                        }});
      }
    for (std::size_t n = 2; n <= 30; ++n)
      jobs.push_back({"prime-adic Z/" + std::to_string(n), [n] { return Batch{{prime_adic_distinctness(zmod(n)), nullptr}}; }});
    report.sections["morphism_ideal_pairs"] = pairs;
  }

  // exhaustive / sampled topological rings and groups on small carriers
  json searched = json::object();
  if (!custom) {
    const bool ring_wanted = cfg.any_selected(
        {theorem::kCosetStructure, theorem::kTfGroup, theorem::kTfCharacterization, theorem::kPointwiseOps,
         theorem::kBooleanSubspace, theorem::kPolynomial, theorem::kIdentityComponent, theorem::kDenseTrivial,
         theorem::kClosureSubstructure, theorem::kKoh, theorem::kProductRing});
    std::vector<std::pair<FiniteRing, std::vector<FinTopology>>> found;
    if (ring_wanted) {
      auto specs = corpus::small_rings();
      if (cfg.max_exhaustive_size >= 6 || (cfg.sample_count > 0 && cfg.max_sampled_size >= 6)) specs.push_back("Z/6");
      for (const auto& s : specs) {
        const auto r = make_ring(s);
        auto res = enumerate_topological_rings(r, cfg);
        for (const auto& h : additive_group(r).all_subgroups()) {
          auto t = coset_topology(r, h);
          if (check_topological_ring(r, t).is_topological_ring() &&
              std::find(res.topologies.begin(), res.topologies.end(), t) == res.topologies.end())
            res.topologies.push_back(std::move(t));
        }
        searched[s] = {{"topologies", res.searched}, {"exhaustive", res.exhaustive}, {"topological_rings", res.topologies.size()}};
        for (const auto& t : res.topologies)
          jobs.push_back({"ring " + s, [r, t, &cfg] { return detail::ring_instance(r, t, cfg); }});
        found.emplace_back(r, std::move(res.topologies));
      }
    }
    if (cfg.selected(theorem::kProductRing)) {
      for (std::size_t a = 0; a < found.size(); ++a)
        for (std::size_t b = a; b < found.size(); ++b) {
          if (found[a].first.size() * found[b].first.size() > 16) continue;
          for (const auto& ta : found[a].second)
            for (const auto& tb : found[b].second) {
              const auto& ra = found[a].first;
              const auto& rb = found[b].first;
              jobs.push_back({"product", [ra, ta, rb, tb] { return Batch{{product_ring_check(ra, ta, rb, tb), nullptr}}; }});
            }
        }
    }
    const bool group_wanted = cfg.any_selected(
        {theorem::kCosetStructure, theorem::kHausdorffDiscrete, theorem::kIdentityComponent, theorem::kDenseTrivial,
         theorem::kClosureSubstructure, theorem::kGroupClosure, theorem::kWeakClosed, theorem::kMonomial,
         theorem::kPowerNeighborhood});
    if (group_wanted) {
      std::vector<FiniteGroup> groups;
      for (std::size_t n = 1; n <= 5; ++n) groups.push_back(cyclic_group(n));
      groups.push_back(additive_group(make_ring("Z/2 x Z/2")));
      if (cfg.max_exhaustive_size >= 6 || (cfg.sample_count > 0 && cfg.max_sampled_size >= 6)) {
        groups.push_back(cyclic_group(6));
        groups.push_back(symmetric_group(3));
      }
      for (const auto& g : groups) {
        auto res = enumerate_topological_groups(g, cfg);
        // coset topologies of every subgroup join the search; the non-normal ones are negative controls
        for (const auto& h : g.all_subgroups()) {
          auto t = coset_topology(g, h);
          if (check_topological_group(g, t).is_topological_group() &&
              std::find(res.topologies.begin(), res.topologies.end(), t) == res.topologies.end())
            res.topologies.push_back(std::move(t));
        }
        searched[g.name()] = {{"topologies", res.searched}, {"exhaustive", res.exhaustive},
                              {"topological_groups", res.topologies.size()}};
        for (const auto& t : res.topologies) {
          const bool small = g.size() <= 5;
          jobs.push_back({"group " + g.name(), [g, t, small, &cfg] { return detail::group_instance(g, t, cfg, small); }});
        }
      }
    }
    report.sections["searched"] = searched;
  }

  // non-absolute hunt rides along with the characterization
  if (!custom && cfg.selected(theorem::kTfCharacterization)) {
    json hunts = json::array();
    for (const auto& s : corpus::small_rings()) hunts.push_back(to_json(find_non_absolute(make_ring(s), cfg)));
    report.sections["non_absolute_search"] = hunts;
  }

  auto batches = parallel_map<Batch>(jobs.size(), cfg.workers, [&](std::size_t k) { return jobs[k].run(); });
  for (const auto& b : batches)
    for (const auto& [rep, lit] : b) report.record(rep, lit);
  report.sections["jobs"] = jobs.size();
  return report;
}

}  // namespace topring

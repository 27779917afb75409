#pragma once

// Topological groups and rings on finite carriers: axiom checks, adic topologies, the unit-group
// topologies, and one predicate per theorem. Predicates return a Report in which an implication whose
// hypothesis fails is recorded as hypothesis-unmet and never asserted.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "topring/error.hpp"
#include "topring/finring.hpp"
#include "topring/fintop.hpp"
#include "topring/group.hpp"
#include "topring/report.hpp"
#include "topring/subset.hpp"

namespace topring {

namespace theorem {
inline constexpr const char* kAdicAbsolute = "adic-absolute";
inline constexpr const char* kTfGroup = "tf-group";
inline constexpr const char* kTfCharacterization = "tf-characterization";
inline constexpr const char* kProductRing = "product-ring";
inline constexpr const char* kPointwiseOps = "pointwise-ops";
inline constexpr const char* kMonomial = "monomial-continuity";
inline constexpr const char* kPolynomial = "polynomial-continuity";
inline constexpr const char* kPowerNeighborhood = "power-neighborhood";
inline constexpr const char* kBooleanSubspace = "boolean-subspace";
inline constexpr const char* kIdentityComponent = "identity-component";
inline constexpr const char* kAdicStructure = "adic-structure";
inline constexpr const char* kSoberCanonical = "sober-canonical";
inline constexpr const char* kDenseTrivial = "dense-trivial";
inline constexpr const char* kGroupClosure = "group-closure";
inline constexpr const char* kClosureSubstructure = "closure-substructure";
inline constexpr const char* kHausdorffDiscrete = "hausdorff-discrete";
inline constexpr const char* kWeakClosed = "weak-closed";
inline constexpr const char* kAdicMorphism = "adic-morphism";
inline constexpr const char* kKoh = "koh-hypotheses";
inline constexpr const char* kNonfield = "nonfield-criterion";
inline constexpr const char* kSierpinski = "sierpinski-example";
inline constexpr const char* kCosetStructure = "coset-structure";

inline const std::vector<std::string>& all() {
  static const std::vector<std::string> ids{
      kAdicAbsolute,     kTfGroup,        kTfCharacterization,  kProductRing,       kPointwiseOps,
      kMonomial,         kPolynomial,     kPowerNeighborhood,   kBooleanSubspace,   kIdentityComponent,
      kAdicStructure,    kSoberCanonical, kDenseTrivial,        kGroupClosure,      kClosureSubstructure,
      kHausdorffDiscrete, kWeakClosed,    kAdicMorphism,        kKoh,               kNonfield,
      kSierpinski,       kCosetStructure};
  return ids;
}
}  // namespace theorem

inline json subset_json(const Subset& s) { return members(s); }

// ---------------------------------------------------------------------------
// Topological groups

struct TopGroupVerdict {
  bool op_continuous = true;
  bool inverse_continuous = true;
  std::optional<Subset> op_witness;            // open V of G with op^-1(V) not open
  std::optional<Subset> op_witness_preimage;   // in G x G, pair (a, b) encoded a * |G| + b
  std::optional<Subset> inverse_witness;
  Subset identity_neighbourhood;               // minimal open set containing e
  bool neighbourhood_is_normal_subgroup = false;
  bool opens_are_coset_unions = false;         // min_open(x) == x N for every x

  [[nodiscard]] bool is_topological_group() const { return op_continuous && inverse_continuous; }
};

inline std::vector<Elem> binary_table(std::size_t n, auto&& op) {
  std::vector<Elem> v(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) v[a * n + b] = op(a, b);
  return v;
}

inline TopGroupVerdict check_topological_group(const FiniteGroup& g, const FinTopology& t) {
  if (g.size() != t.size()) throw PreconditionError("group and topology sizes differ");
  TopGroupVerdict v;
  const ProductSpace g2({t, t});
  const auto op = binary_table(g.size(), [&](Elem a, Elem b) { return g.op(a, b); });
  auto c = g2.check_continuous(op, t, "group operation");
  v.op_continuous = c.continuous;
  v.op_witness = c.witness_open;
  v.op_witness_preimage = c.preimage;
  std::vector<Elem> inv(g.size());
  for (Elem a = 0; a < g.size(); ++a) inv[a] = g.inv(a);
  auto ci = is_continuous(MapTable(g.size(), inv), t, t);
  v.inverse_continuous = ci.continuous;
  v.inverse_witness = ci.witness_open;
  v.identity_neighbourhood = t.min_open(g.identity());
  v.neighbourhood_is_normal_subgroup = g.is_normal_subgroup(v.identity_neighbourhood);
  v.opens_are_coset_unions = true;
  for (Elem x = 0; x < g.size(); ++x)
    if (t.min_open(x) != g.product(singleton(g.size(), x), v.identity_neighbourhood)) {
      v.opens_are_coset_unions = false;
      break;
    }
  return v;
}

inline json to_json(const TopGroupVerdict& v) {
  json j{{"topological_group", v.is_topological_group()},
         {"op_continuous", v.op_continuous},
         {"inverse_continuous", v.inverse_continuous},
         {"identity_neighbourhood", subset_json(v.identity_neighbourhood)},
         {"neighbourhood_is_normal_subgroup", v.neighbourhood_is_normal_subgroup},
         {"opens_are_coset_unions", v.opens_are_coset_unions}};
  if (v.op_witness) j["op_witness_open"] = subset_json(*v.op_witness);
  if (v.op_witness_preimage) j["op_witness_preimage"] = subset_json(*v.op_witness_preimage);
  if (v.inverse_witness) j["inverse_witness_open"] = subset_json(*v.inverse_witness);
  return j;
}

// ---------------------------------------------------------------------------
// Topological rings

struct TopRingVerdict {
  bool add_continuous = true;
  bool mul_continuous = true;
  std::optional<Subset> add_witness, add_witness_preimage;
  std::optional<Subset> mul_witness, mul_witness_preimage;
  Subset zero_neighbourhood;
  bool neighbourhood_is_ideal = false;
  bool opens_are_coset_unions = false;

  [[nodiscard]] bool is_topological_ring() const { return add_continuous && mul_continuous; }
};

inline TopRingVerdict check_topological_ring(const FiniteRing& r, const FinTopology& t) {
  if (r.size() != t.size()) throw PreconditionError("ring and topology sizes differ");
  TopRingVerdict v;
  const ProductSpace r2({t, t});
  const auto add = binary_table(r.size(), [&](Elem a, Elem b) { return r.add(a, b); });
  const auto mul = binary_table(r.size(), [&](Elem a, Elem b) { return r.mul(a, b); });
  auto ca = r2.check_continuous(add, t, "ring addition");
  auto cm = r2.check_continuous(mul, t, "ring multiplication");
  v.add_continuous = ca.continuous;
  v.add_witness = ca.witness_open;
  v.add_witness_preimage = ca.preimage;
  v.mul_continuous = cm.continuous;
  v.mul_witness = cm.witness_open;
  v.mul_witness_preimage = cm.preimage;
  v.zero_neighbourhood = t.min_open(r.zero());
  v.neighbourhood_is_ideal = is_ideal(r, v.zero_neighbourhood);
  v.opens_are_coset_unions = true;
  for (Elem x = 0; x < r.size(); ++x) {
    Subset coset(r.size());
    for_each_member(v.zero_neighbourhood, [&](Elem i) { coset.set(r.add(x, i)); });
    if (coset != t.min_open(x)) {
      v.opens_are_coset_unions = false;
      break;
    }
  }
  return v;
}

inline json to_json(const TopRingVerdict& v) {
  json j{{"topological_ring", v.is_topological_ring()},
         {"add_continuous", v.add_continuous},
         {"mul_continuous", v.mul_continuous},
         {"zero_neighbourhood", subset_json(v.zero_neighbourhood)},
         {"neighbourhood_is_ideal", v.neighbourhood_is_ideal},
         {"opens_are_coset_unions", v.opens_are_coset_unions}};
  if (v.add_witness) {
    j["add_witness_open"] = subset_json(*v.add_witness);
    j["add_witness_preimage"] = subset_json(*v.add_witness_preimage);
  }
  if (v.mul_witness) {
    j["mul_witness_open"] = subset_json(*v.mul_witness);
    j["mul_witness_preimage"] = subset_json(*v.mul_witness_preimage);
  }
  return j;
}

inline void require_topological_ring(const FiniteRing& r, const FinTopology& t) {
  if (!check_topological_ring(r, t).is_topological_ring())
    throw PreconditionError("(" + r.spec() + ", T) is not a topological ring");
}

inline void require_topological_group(const FiniteGroup& g, const FinTopology& t) {
  if (!check_topological_group(g, t).is_topological_group())
    throw PreconditionError(g.name() + " with the given topology is not a topological group");
}

/// Topology whose opens are the unions of cosets x + H of an additive subgroup H.
inline FinTopology coset_topology(const FiniteRing& r, const Subset& h) {
  std::vector<Subset> up(r.size(), Subset(r.size()));
  for (Elem x = 0; x < r.size(); ++x) for_each_member(h, [&](Elem i) { up[x].set(r.add(x, i)); });
  return FinTopology::from_preorder(std::move(up));
}

inline FinTopology coset_topology(const FiniteGroup& g, const Subset& h) {
  std::vector<Subset> up(g.size(), Subset(g.size()));
  for (Elem x = 0; x < g.size(); ++x) up[x] = g.product(singleton(g.size(), x), h);
  return FinTopology::from_preorder(std::move(up));
}

// ---------------------------------------------------------------------------
// Unit group topologies

struct UnitsTopologies {
  UnitsAsGroup units;
  FinTopology subspace;  // restriction of T to R*
  FinTopology tf;        // induced by a |-> (a, a^-1) into R x R with the product topology
};

/// Pre: (R, T) is a topological ring. The induced topology is finer than the subspace topology and
/// makes R* a topological group; both are asserted.
inline UnitsTopologies units_topologies(const FiniteRing& r, const FinTopology& t) {
  require_topological_ring(r, t);
  auto units = unit_group(r);
  auto sub = subspace_topology(t, units.in_ring).topology;
  const std::size_t n = r.size(), k = units.to_ring.size();
  std::vector<Elem> f(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Elem a = units.to_ring[i];
    const Elem a_inv = units.to_ring[units.group.inv(static_cast<Elem>(i))];
    f[i] = static_cast<Elem>(a * n + a_inv);
  }
  auto tf = induced_topology(MapTable(n * n, std::move(f)), product_topology(t, t));
  if (!tf.is_finer_than(sub)) throw TheoremViolation("induced unit topology is not finer than the subspace topology");
  auto verdict = check_topological_group(units.group, tf);
  if (!verdict.is_topological_group())
    throw TheoremViolation("R* with the induced topology is not a topological group (" + r.spec() + ")");
  return UnitsTopologies{std::move(units), std::move(sub), std::move(tf)};
}

/// Three verdicts that must agree: (a) inversion continuous on the unit subspace, (b) the unit
/// subspace is a topological group, (c) the subspace topology equals the induced one.
inline Report absolute_check(const FiniteRing& r, const FinTopology& t) {
  Report rep;
  rep.subject = "absolute " + r.spec();
  auto ut = units_topologies(r, t);
  const auto& g = ut.units.group;
  std::vector<Elem> inv(g.size());
  for (Elem a = 0; a < g.size(); ++a) inv[a] = g.inv(a);
  const auto inverse = is_continuous(MapTable(g.size(), inv), ut.subspace, ut.subspace);
  const auto group = check_topological_group(g, ut.subspace);
  const bool equal = ut.subspace == ut.tf;
  rep.data["units"] = ut.units.to_ring;
  rep.data["inverse_continuous"] = inverse.continuous;
  rep.data["units_topological_group"] = group.is_topological_group();
  rep.data["subspace_equals_tf"] = equal;
  rep.data["absolute"] = group.is_topological_group();
  rep.expect(theorem::kPointwiseOps, "multiplication restricted to R* is continuous", group.op_continuous);
  rep.expect(theorem::kTfCharacterization, "(a) inverse continuous <=> (b) R* topological group",
             inverse.continuous == group.is_topological_group());
  rep.expect(theorem::kTfCharacterization, "(b) R* topological group <=> (c) subspace == T_f",
             group.is_topological_group() == equal,
             {{"group", group.is_topological_group()}, {"equal", equal}});
  rep.expect(theorem::kTfGroup, "R* with T_f is a topological group",
             check_topological_group(g, ut.tf).is_topological_group());
  if (!inverse.continuous && inverse.witness_open)
    rep.data["inverse_witness_open"] = members(*inverse.witness_open);
  return rep;
}

// ---------------------------------------------------------------------------
// Adic topologies

struct AdicTopology {
  Ideal ideal;
  PowerChain chain;
  FinTopology topology;

  [[nodiscard]] const FiniteRing& ring() const { return ideal.ring(); }
  [[nodiscard]] const Ideal& stable() const { return chain.stable; }
};

/// Topology generated by the base {a + I^n : a in R, 1 <= n <= m}: the minimal open of x is the
/// intersection of the base sets containing it.
inline FinTopology adic_topology_from_base(const Ideal& ideal) {
  const auto& r = ideal.ring();
  const auto chain = ideal_power_chain(ideal);
  std::vector<Subset> up(r.size(), full_set(r.size()));
  for (const auto& power : chain.chain)
    for (Elem a = 0; a < r.size(); ++a) {
      Subset base(r.size());
      for_each_member(power.elements(), [&](Elem i) { base.set(r.add(a, i)); });
      for_each_member(base, [&](Elem x) { up[x] &= base; });
    }
  return FinTopology::from_preorder(std::move(up));
}

/// I-adic topology. On a finite ring the base stabilizes at the cosets of the stable power, so opens
/// are the unions of cosets of I^m. Asserts the result is an absolute topological ring.
inline AdicTopology adic_topology(const Ideal& ideal) {
  auto chain = ideal_power_chain(ideal);
  auto t = coset_topology(ideal.ring(), chain.stable.elements());
  AdicTopology a{ideal, std::move(chain), std::move(t)};
  const auto tr = check_topological_ring(a.ring(), a.topology);
  if (!tr.is_topological_ring())
    throw TheoremViolation("adic topology on " + a.ring().spec() + " is not a topological ring");
  const auto abs = absolute_check(a.ring(), a.topology);
  if (!abs.data["absolute"].get<bool>())
    throw TheoremViolation("adic topology on " + a.ring().spec() + " is not absolute");
  return a;
}

// ---------------------------------------------------------------------------
// Polynomial and monomial functions

/// Multivariate polynomial over a finite ring: coefficient per exponent vector.
struct Polynomial {
  std::size_t arity = 1;
  std::vector<std::pair<std::vector<unsigned>, Elem>> terms;

  [[nodiscard]] Elem eval(const FiniteRing& r, std::span<const Elem> x) const {
    Elem acc = r.zero();
    for (const auto& [exps, coeff] : terms) {
      Elem term = coeff;
      for (std::size_t i = 0; i < arity; ++i) term = r.mul(term, r.pow(x[i], exps[i]));
      acc = r.add(acc, term);
    }
    return acc;
  }
};

inline ProductSpace power_space(const FinTopology& t, std::size_t arity) {
  return ProductSpace(std::vector<FinTopology>(arity, t));
}

/// Continuity of the polynomial function R^n -> R against the n-fold product topology.
inline ContinuityVerdict polynomial_continuity(const FiniteRing& r, const FinTopology& t, const Polynomial& p) {
  if (p.arity == 0 || p.arity > 3) throw PreconditionError("polynomial arity must be 1..3");
  for (const auto& [exps, coeff] : p.terms)
    if (exps.size() != p.arity || coeff >= r.size()) throw PreconditionError("malformed polynomial term");
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < 2 * p.arity; ++i) work *= r.size();
  charge_budget(work, "polynomial continuity");
  require_topological_ring(r, t);
  const auto space = power_space(t, p.arity);
  std::vector<Elem> values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) values[i] = p.eval(r, space.decode(i));
  return space.check_continuous(values, t, "polynomial continuity");
}

/// Successor lists whose reflexive-transitive closure is the specialization preorder: a cycle through
/// each equivalence class, plus class-to-class covering steps between the least members.
inline std::vector<std::vector<Elem>> preorder_generators(const FinTopology& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Elem>> out(n);
  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) {
    const Subset cls = t.min_open(x) & t.point_closure(x);
    rep[x] = static_cast<Elem>(cls.find_first());
    auto next = cls.find_next(x);
    if (next == Subset::npos) next = cls.find_first();
    if (next != x) out[x].push_back(static_cast<Elem>(next));
  }
  for (Elem x = 0; x < n; ++x) {
    if (rep[x] != x) continue;
    const Subset strict = t.min_open(x) - (t.min_open(x) & t.point_closure(x));
    for_each_member(strict, [&](Elem y) {
      if (rep[y] != y) return;
      // y covers x when nothing strictly between them
      bool cover = true;
      for_each_member(strict, [&](Elem z) {
        if (cover && rep[z] == z && z != y && t.leq(z, y) && !t.leq(y, z)) cover = false;
      });
      if (cover) out[x].push_back(y);
    });
  }
  return out;
}

struct PolynomialSweep {
  std::uint64_t checked = 0;
  std::uint64_t continuous = 0;
  bool exhaustive = true;
  std::optional<Polynomial> first_failure;
};

/// Exponent vectors of total degree <= max_degree, graded then lexicographic.
inline std::vector<std::vector<unsigned>> monomial_shapes(std::size_t arity, unsigned max_degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(arity, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == arity) {
      out.push_back(e);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      e[i] = d;
      self(self, i + 1, left - d);
    }
  };
  rec(rec, 0, max_degree);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0U) < std::accumulate(b.begin(), b.end(), 0U);
  });
  return out;
}

/// Continuity of every polynomial function R^arity -> R of degree <= max_degree, all coefficient
/// vectors over R in odometer order. When there are more than `limit` of them, `limit` seeded random
/// coefficient vectors are checked instead and `exhaustive` is false.
inline PolynomialSweep polynomial_sweep(const FiniteRing& r, const FinTopology& t, std::size_t arity, unsigned max_degree,
                                        std::uint64_t limit, std::uint64_t seed = 1) {
  if (arity == 0 || arity > 3) throw PreconditionError("polynomial arity must be 1..3");
  require_topological_ring(r, t);
  const std::size_t n = r.size();
  const auto space = power_space(t, arity);
  const std::size_t pts = space.size();
  const auto shapes = monomial_shapes(arity, max_degree);
  std::vector<std::vector<Elem>> mono(shapes.size(), std::vector<Elem>(pts));
  for (std::size_t p = 0; p < pts; ++p) {
    const auto x = space.decode(p);
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      Elem v = r.one();
      for (std::size_t i = 0; i < arity; ++i) v = r.mul(v, r.pow(x[i], shapes[s][i]));
      mono[s][p] = v;
    }
  }
  // generating steps of the product preorder
  std::vector<std::pair<std::uint32_t, std::uint32_t>> steps;
  const auto gens = preorder_generators(space.materialize());
  for (std::size_t p = 0; p < pts; ++p)
    for (Elem q : gens[p]) steps.emplace_back(p, q);
  std::vector<char> leq(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) leq[a * n + b] = t.leq(a, b) ? 1 : 0;

  PolynomialSweep out;
  std::vector<Elem> coeff(shapes.size(), r.zero()), values(pts, r.zero());
  auto set_coeff = [&](std::size_t s, Elem c) {
    for (std::size_t p = 0; p < pts; ++p)
      values[p] = r.add(r.sub(values[p], r.mul(coeff[s], mono[s][p])), r.mul(c, mono[s][p]));
    coeff[s] = c;
  };
  // step[s][c][p]: change of the value at p when coefficient s moves from c to c + 1 (mod |R|)
  std::vector<std::vector<std::vector<Elem>>> step(shapes.size(), std::vector<std::vector<Elem>>(n));
  for (std::size_t s = 0; s < shapes.size(); ++s)
    for (Elem c = 0; c < n; ++c) {
      const Elem next = static_cast<Elem>((c + 1) % n);
      auto& d = step[s][c];
      d.resize(pts);
      for (std::size_t p = 0; p < pts; ++p) d[p] = r.sub(r.mul(next, mono[s][p]), r.mul(c, mono[s][p]));
    }
  auto advance = [&](std::size_t s) {
    const auto& d = step[s][coeff[s]];
    for (std::size_t p = 0; p < pts; ++p) values[p] = r.add(values[p], d[p]);
    coeff[s] = static_cast<Elem>((coeff[s] + 1) % n);
  };
  auto check = [&] {
    ++out.checked;
    for (const auto& [p, q] : steps)
      if (!leq[values[p] * n + values[q]]) {
        if (!out.first_failure) {
          Polynomial poly{arity, {}};
          for (std::size_t s = 0; s < shapes.size(); ++s)
            if (coeff[s] != r.zero()) poly.terms.emplace_back(shapes[s], coeff[s]);
          out.first_failure = std::move(poly);
        }
        return;
      }
    ++out.continuous;
  };
  long double total = 1;
  for (std::size_t s = 0; s < shapes.size(); ++s) total *= static_cast<long double>(n);
  if (total <= static_cast<long double>(limit)) {
    for (;;) {
      check();
      std::size_t s = 0;
      while (s < shapes.size() && coeff[s] + 1 == n) advance(s++);
      if (s == shapes.size()) break;
      advance(s);
    }
  } else {
    out.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::uint64_t k = 0; k < limit; ++k) {
      for (std::size_t s = 0; s < shapes.size(); ++s) set_coeff(s, pick(rng));
      check();
    }
  }
  return out;
}

/// Continuity of (x_1..x_n) |-> a x_1^d_1 ... x_n^d_n on G^n; exponents may be negative.
namespace detail {

inline ContinuityVerdict monomial_check(const FiniteGroup& g, const FinTopology& t, std::span<const long long> exponents,
                                        Elem a) {
  if (exponents.empty() || exponents.size() > 3) throw PreconditionError("monomial arity must be 1..3");
  if (a >= g.size()) throw PreconditionError("constant out of range");
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < 2 * exponents.size(); ++i) work *= g.size();
  charge_budget(work, "monomial continuity");
  const auto space = power_space(t, exponents.size());
  std::vector<Elem> values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto x = space.decode(i);
    Elem v = a;
    for (std::size_t k = 0; k < exponents.size(); ++k) v = g.op(v, g.pow(x[k], exponents[k]));
    values[i] = v;
  }
  return space.check_continuous(values, t, "monomial continuity");
}

}  // namespace detail

inline ContinuityVerdict monomial_continuity(const FiniteGroup& g, const FinTopology& t,
                                             std::span<const long long> exponents, Elem a) {
  require_topological_group(g, t);
  return detail::monomial_check(g, t, exponents, a);
}

/// An open V containing e with V^n inside U. The n-fold product map sends (e,...,e) into U, so its
/// (open) preimage contains the minimal rectangle around (e,...,e); V is the minimal open of e.
inline Subset power_neighborhood(const FiniteGroup& g, const FinTopology& t, const Subset& u, unsigned n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  if (!t.is_open(u) || !u.test(g.identity())) throw PreconditionError("U must be an open set containing e");
  require_topological_group(g, t);
  Subset v = t.min_open(g.identity());
  Subset power = v;
  for (unsigned k = 1; k < n; ++k) power = g.product(power, v);
  if (!power.is_subset_of(u))
    throw TheoremViolation("no open neighbourhood V of e with V^" + std::to_string(n) + " inside " + to_string(u));
  return v;
}

// ---------------------------------------------------------------------------
// Boolean ring, pointwise operations, products

inline Report boolean_subspace_check(const FiniteRing& r, const FinTopology& t) {
  require_topological_ring(r, t);
  Report rep;
  rep.subject = "boolean-subspace " + r.spec();
  auto b = boolean_ring(r);
  auto sub = subspace_topology(t, make_subset(r.size(), b.elements));
  const auto v = check_topological_ring(b.ring, sub.topology);
  rep.data["idempotents"] = b.elements;
  rep.expect(theorem::kBooleanSubspace, "B(R) with the subspace topology is a topological ring",
             v.is_topological_ring(), to_json(v));
  Polynomial xor_poly{2, {{{1, 0}, r.one()}, {{0, 1}, r.one()}, {{1, 1}, r.neg(r.scale(2, r.one()))}}};
  rep.expect(theorem::kPolynomial, "x + y - 2xy is continuous on R x R",
             polynomial_continuity(r, t, xor_poly).continuous);
  return rep;
}

/// For continuous f, g: X -> R the pointwise sum and product are continuous, and so is the pairing
/// X -> R x R corestricted to its image.
inline Report pointwise_ops_check(const FinTopology& x, const FiniteRing& r, const FinTopology& t, const MapTable& f,
                                  const MapTable& g) {
  Report rep;
  rep.subject = "pointwise-ops " + r.spec();
  const bool fc = is_continuous(f, x, t).continuous, gc = is_continuous(g, x, t).continuous;
  if (!fc || !gc || !check_topological_ring(r, t).is_topological_ring()) {
    rep.unmet(theorem::kPointwiseOps, "f, g continuous into a topological ring");
    return rep;
  }
  std::vector<Elem> sum(x.size()), prod(x.size()), pair(x.size());
  for (Elem p = 0; p < x.size(); ++p) {
    sum[p] = r.add(f(p), g(p));
    prod[p] = r.mul(f(p), g(p));
    pair[p] = static_cast<Elem>(f(p) * r.size() + g(p));
  }
  rep.expect(theorem::kPointwiseOps, "f + g continuous", is_continuous(MapTable(r.size(), sum), x, t).continuous);
  rep.expect(theorem::kPointwiseOps, "f * g continuous", is_continuous(MapTable(r.size(), prod), x, t).continuous);
  // corestriction of h = (f, g) to Z = Im(h) with the subspace topology
  const auto rr = product_topology(t, t);
  MapTable h(r.size() * r.size(), pair);
  const Subset image = h.image(full_set(x.size()));
  auto z = subspace_topology(rr, image);
  std::vector<Elem> pos(rr.size(), 0);
  for (std::size_t i = 0; i < z.to_parent.size(); ++i) pos[z.to_parent[i]] = static_cast<Elem>(i);
  std::vector<Elem> core(x.size());
  for (Elem p = 0; p < x.size(); ++p) core[p] = pos[pair[p]];
  rep.expect(theorem::kPointwiseOps, "(f, g) corestricted to its image is continuous",
             is_continuous(MapTable(z.to_parent.size(), core), x, z.topology).continuous);
  return rep;
}

/// The product of two topological rings with the product topology is a topological ring.
inline Report product_ring_check(const FiniteRing& r1, const FinTopology& t1, const FiniteRing& r2,
                                 const FinTopology& t2) {
  Report rep;
  rep.subject = "product-ring " + r1.spec() + " x " + r2.spec();
  if (!check_topological_ring(r1, t1).is_topological_ring() || !check_topological_ring(r2, t2).is_topological_ring()) {
    rep.unmet(theorem::kProductRing, "both factors topological rings");
    return rep;
  }
  const auto r = product_ring(r1, r2, r1.size() * r2.size());
  const auto v = check_topological_ring(r, product_topology(t1, t2));
  rep.expect(theorem::kProductRing, "R1 x R2 with the product topology is a topological ring",
             v.is_topological_ring(), to_json(v));
  return rep;
}

// ---------------------------------------------------------------------------
// Connected components

inline Subset component_of(const Components& c, Elem x) { return c.partition.blocks()[c.partition.block_of(x)]; }

/// Quotient group G/H on the left cosets of a normal subgroup, cosets ordered by least member.
inline FiniteGroup quotient_group(const FiniteGroup& g, const Subset& h) {
  if (!g.is_normal_subgroup(h)) throw PreconditionError("quotient needs a normal subgroup");
  const auto cosets = g.left_cosets(h);
  const std::size_t k = cosets.size();
  std::vector<Elem> cls(g.size());
  for (std::size_t i = 0; i < k; ++i) for_each_member(cosets[i], [&](Elem x) { cls[x] = static_cast<Elem>(i); });
  std::vector<Elem> op(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      op[i * k + j] = cls[g.op(static_cast<Elem>(cosets[i].find_first()), static_cast<Elem>(cosets[j].find_first()))];
  return FiniteGroup(k, std::move(op), cls[g.identity()], g.name() + "/" + to_string(h));
}

inline Report identity_component(const FiniteGroup& g, const FinTopology& t) {
  require_topological_group(g, t);
  Report rep;
  rep.subject = "identity-component " + g.name();
  const auto comps = pi0(t);
  const Subset n = component_of(comps, g.identity());
  rep.data["component"] = members(n);
  rep.data["components"] = comps.partition.size();
  if (!rep.expect(theorem::kIdentityComponent, "N is a normal subgroup", g.is_normal_subgroup(n))) return rep;
  rep.expect(theorem::kIdentityComponent, "components are exactly the cosets xN",
             comps.partition.blocks() == g.left_cosets(n));
  const auto q = quotient_group(g, n);
  const auto qt = quotient_topology(t, Partition(g.size(), g.left_cosets(n)));
  rep.expect(theorem::kIdentityComponent, "G/N with the quotient topology is the space of components",
             qt == comps.space && check_topological_group(q, qt).is_topological_group());
  return rep;
}

inline Report identity_component(const FiniteRing& r, const FinTopology& t) {
  require_topological_ring(r, t);
  Report rep;
  rep.subject = "zero-component " + r.spec();
  const auto comps = pi0(t);
  const Subset c = component_of(comps, r.zero());
  rep.data["component"] = members(c);
  rep.data["components"] = comps.partition.size();
  if (!rep.expect(theorem::kIdentityComponent, "C is an ideal", is_ideal(r, c))) return rep;
  const auto q = quotient_ring(Ideal(r, c));
  rep.expect(theorem::kIdentityComponent, "components are exactly the cosets r + C",
             comps.partition.blocks() == q.cosets);
  const auto qt = quotient_topology(t, Partition(r.size(), q.cosets));
  rep.expect(theorem::kIdentityComponent, "R/C with the quotient topology is the space of components",
             qt == comps.space && check_topological_ring(q.ring, qt).is_topological_ring());
  return rep;
}

// ---------------------------------------------------------------------------
// Adic structure

struct AdicStructureOptions {
  std::size_t all_subsets_max_size = 12;  // every subset checked up to this ring size
  std::size_t sampled_subsets = 512;      // otherwise: this many random subsets plus singletons
  std::uint64_t seed = 0x5eed;
};

inline Report adic_structure_theorems(const Ideal& ideal, const AdicStructureOptions& opt = {}) {
  const auto& r = ideal.ring();
  const std::size_t n = r.size();
  const auto adic = adic_topology(ideal);
  const auto& t = adic.topology;
  const Subset& stable = adic.stable().elements();
  Report rep;
  rep.subject = "adic-structure " + r.spec() + " I=" + to_string(ideal.elements());
  rep.data["stable_ideal"] = members(stable);
  rep.data["stable_index"] = adic.chain.stable_index;
  rep.data["nilpotent"] = adic.chain.nilpotent;
  rep.data["idempotent"] = adic.chain.idempotent;

  rep.expect(theorem::kAdicStructure, "stable-power construction equals the topology generated by the base",
             adic_topology_from_base(ideal) == t);
  rep.expect(theorem::kAdicAbsolute, "adic topology is an absolute topological ring",
             absolute_check(r, t).data["absolute"].get<bool>());

  // closure of S is the intersection of S + I^n
  auto sum_closure = [&](const Subset& s) {
    Subset acc = full_set(n);
    for (const auto& power : adic.chain.chain) {
      Subset sum(n);
      for_each_member(s, [&](Elem a) { for_each_member(power.elements(), [&](Elem i) { sum.set(r.add(a, i)); }); });
      acc &= sum;
    }
    return acc;
  };
  std::size_t checked = 0;
  std::optional<Subset> bad;
  auto check_subset = [&](const Subset& s) {
    ++checked;
    if (!bad && t.closure(s) != sum_closure(s)) bad = s;
  };
  if (n <= opt.all_subsets_max_size) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) check_subset(from_mask(n, m));
  } else {
    std::mt19937_64 rng(opt.seed);
    for (Elem x = 0; x < n; ++x) check_subset(singleton(n, x));
    for (std::size_t k = 0; k < opt.sampled_subsets; ++k) {
      Subset s(n);
      for (std::size_t x = 0; x < n; ++x)
        if (rng() & 1U) s.set(x);
      check_subset(s);
    }
  }
  rep.expect(theorem::kAdicStructure, "closure(S) = intersection of S + I^n",
             !bad.has_value(), bad ? json{{"subset", members(*bad)}} : json{{"subsets_checked", checked}});

  bool points_ok = true;
  for (Elem x = 0; x < n && points_ok; ++x) {
    Subset coset(n);
    for_each_member(stable, [&](Elem i) { coset.set(r.add(x, i)); });
    points_ok = t.point_closure(x) == coset;
  }
  rep.expect(theorem::kAdicStructure, "closure{x} = x + stable ideal", points_ok);

  const auto q = quotient_ring(adic.stable());
  const Partition cosets(n, q.cosets);
  const auto quotient_space = quotient_topology(t, cosets);
  const auto comps = pi0(t);
  rep.data["pi0_size"] = comps.partition.size();
  {
    // natural map: component -> coset of any of its points
    std::vector<Elem> h(comps.partition.size());
    for (std::size_t k = 0; k < comps.partition.size(); ++k)
      h[k] = cosets.block_of(static_cast<Elem>(comps.partition.blocks()[k].find_first()));
    const bool natural = comps.partition == cosets &&
                         is_homeomorphism(MapTable(cosets.size(), h), comps.space, quotient_space);
    rep.expect(theorem::kAdicStructure, "pi0(R) = R/stable as spaces", natural,
               {{"components", comps.partition.size()}, {"cosets", cosets.size()}});
  }
  const auto sober = sober_space(t);
  rep.data["sober_size"] = sober.points.size();
  {
    bool same = sober.points.size() == cosets.size();
    std::vector<Elem> h(sober.points.size());
    for (std::size_t k = 0; same && k < sober.points.size(); ++k) {
      const auto x = static_cast<Elem>(sober.points[k].find_first());
      same = sober.points[k] == cosets.blocks()[cosets.block_of(x)];
      h[k] = cosets.block_of(x);
    }
    same = same && is_homeomorphism(MapTable(cosets.size(), h), sober.topology, quotient_space);
    rep.expect(theorem::kAdicStructure, "t(R) = R/stable as spaces", same);
  }
  rep.expect(theorem::kSoberCanonical, "canonical map X -> t(X) continuous and closed",
             sober.map_continuous && sober.map_closed);
  rep.data["sober_map_open"] = sober.map_open;

  const bool connected_i = is_connected_subset(t, ideal.elements());
  rep.expect(theorem::kAdicStructure, "I connected <=> I idempotent", connected_i == adic.chain.idempotent,
             {{"connected", connected_i}, {"idempotent", adic.chain.idempotent}});
  if (adic.chain.idempotent)
    rep.expect(theorem::kAdicStructure, "I idempotent => I is the component of 0",
               component_of(comps, r.zero()) == ideal.elements());

  const auto pred = space_predicates(t);
  bool singleton_component = false;
  for (const auto& b : comps.partition.blocks()) singleton_component = singleton_component || b.count() == 1;
  const bool stable_zero = adic.chain.nilpotent;
  rep.data["hausdorff"] = pred.hausdorff;
  rep.expect(theorem::kAdicStructure, "Hausdorff <=> stable = 0 <=> totally disconnected <=> singleton component",
             pred.hausdorff == stable_zero && stable_zero == pred.totally_disconnected &&
                 pred.totally_disconnected == singleton_component,
             {{"hausdorff", pred.hausdorff},
              {"stable_zero", stable_zero},
              {"totally_disconnected", pred.totally_disconnected},
              {"singleton_component", singleton_component}});
  bool isolated = false;
  for (Elem x = 0; x < n; ++x) isolated = isolated || t.min_open(x).count() == 1;
  rep.expect(theorem::kAdicStructure, "discrete <=> isolated point <=> I nilpotent",
             pred.discrete == isolated && isolated == adic.chain.nilpotent);
  if (!ideal.is_whole())
    rep.expect(theorem::kAdicStructure, "I proper => R not connected", !pred.connected);
  else
    rep.unmet(theorem::kAdicStructure, "I proper => R not connected");
  return rep;
}

// ---------------------------------------------------------------------------
// Density and triviality

inline Report dense_triviality(const FiniteGroup& g, const FinTopology& t, const std::optional<Subset>& h = {}) {
  require_topological_group(g, t);
  Report rep;
  rep.subject = "dense-trivial " + g.name();
  const bool trivial = is_trivial(t);
  const bool e_dense = t.point_closure(g.identity()).all();
  if (e_dense)
    rep.expect(theorem::kDenseTrivial, "{e} dense => topology trivial", trivial);
  else
    rep.unmet(theorem::kDenseTrivial, "{e} dense => topology trivial");
  if (trivial)
    rep.expect(theorem::kDenseTrivial, "topology trivial => {e} dense", e_dense);
  else
    rep.unmet(theorem::kDenseTrivial, "topology trivial => {e} dense");

  if (h) {
    if (!g.is_subgroup(*h)) throw PreconditionError("H is not a subgroup");
    const bool dense = t.closure(*h).all();
    const auto qt = quotient_topology(t, Partition(g.size(), g.left_cosets(*h)));
    const bool q_trivial = is_trivial(qt);
    rep.data["h_dense"] = dense;
    rep.data["quotient_trivial"] = q_trivial;
    if (q_trivial)
      rep.expect(theorem::kDenseTrivial, "G/H trivial => H dense", dense);
    else
      rep.unmet(theorem::kDenseTrivial, "G/H trivial => H dense");
    if (g.is_normal_subgroup(*h) && dense)
      rep.expect(theorem::kDenseTrivial, "H normal and dense => G/H trivial", q_trivial);
    else
      rep.unmet(theorem::kDenseTrivial, "H normal and dense => G/H trivial");
  }
  if (g.is_simple())
    rep.expect(theorem::kDenseTrivial, "G simple => {e} closed or topology trivial",
               t.point_closure(g.identity()).count() == 1 || trivial);
  else
    rep.unmet(theorem::kDenseTrivial, "G simple => {e} closed or topology trivial");
  return rep;
}

/// Ring forms: an ideal is dense iff R/I carries the trivial quotient topology; a field has {0}
/// closed or the trivial topology.
inline Report dense_ideal_check(const FiniteRing& r, const FinTopology& t, const Ideal& ideal) {
  require_topological_ring(r, t);
  Report rep;
  rep.subject = "dense-ideal " + r.spec() + " I=" + to_string(ideal.elements());
  const bool dense = t.closure(ideal.elements()).all();
  const auto q = quotient_ring(ideal);
  const bool q_trivial = is_trivial(quotient_topology(t, Partition(r.size(), q.cosets)));
  rep.expect(theorem::kDenseTrivial, "I dense <=> R/I trivial", dense == q_trivial,
             {{"dense", dense}, {"quotient_trivial", q_trivial}});
  if (is_field(r))
    rep.expect(theorem::kDenseTrivial, "R field => {0} closed or topology trivial",
               t.point_closure(r.zero()).count() == 1 || is_trivial(t));
  else
    rep.unmet(theorem::kDenseTrivial, "R field => {0} closed or topology trivial");
  // a maximal ideal is closed or dense
  bool maximal = false;
  for (const auto& m : maximal_ideals(r)) maximal = maximal || m == ideal;
  if (maximal) {
    const Subset c = t.closure(ideal.elements());
    rep.expect(theorem::kClosureSubstructure, "maximal ideal is closed or dense", c == ideal.elements() || c.all());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Closures of substructures

enum class GroupSubstructure { subgroup, normal_subgroup };
enum class RingSubstructure { ideal, multiplicative_set, subring };

inline bool is_multiplicative_set(const FiniteRing& r, const Subset& s) {
  if (!s.test(r.one())) return false;
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a))
    for (auto b = s.find_first(); b != Subset::npos; b = s.find_next(b))
      if (!s.test(r.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
  return true;
}

inline bool is_subring(const FiniteRing& r, const Subset& s) {
  if (!is_multiplicative_set(r, s)) return false;
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a))
    for (auto b = s.find_first(); b != Subset::npos; b = s.find_next(b))
      if (!s.test(r.sub(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
  return true;
}

inline const char* to_string(GroupSubstructure k) {
  return k == GroupSubstructure::subgroup ? "subgroup" : "normal-subgroup";
}

inline const char* to_string(RingSubstructure k) {
  switch (k) {
    case RingSubstructure::ideal:
      return "ideal";
    case RingSubstructure::multiplicative_set:
      return "multiplicative-set";
    case RingSubstructure::subring:
      return "subring";
  }
  return "?";
}

inline Report closure_substructure(const FiniteGroup& g, const FinTopology& t, const Subset& s, GroupSubstructure kind) {
  auto holds = [&](const Subset& x) {
    return kind == GroupSubstructure::subgroup ? g.is_subgroup(x) : g.is_normal_subgroup(x);
  };
  if (!holds(s)) throw PreconditionError(to_string(s) + " is not a " + to_string(kind));
  require_topological_group(g, t);
  Report rep;
  rep.subject = std::string("closure-") + to_string(kind) + " " + g.name();
  const Subset c = t.closure(s);
  rep.expect(theorem::kClosureSubstructure, std::string("closure of a ") + to_string(kind) + " is one", holds(c),
             {{"subset", members(s)}, {"closure", members(c)}});
  return rep;
}

inline Report closure_substructure(const FiniteRing& r, const FinTopology& t, const Subset& s, RingSubstructure kind) {
  auto holds = [&](const Subset& x) {
    switch (kind) {
      case RingSubstructure::ideal:
        return is_ideal(r, x);
      case RingSubstructure::multiplicative_set:
        return is_multiplicative_set(r, x);
      case RingSubstructure::subring:
        return is_subring(r, x);
    }
    return false;
  };
  if (!holds(s)) throw PreconditionError(to_string(s) + " is not a " + to_string(kind));
  require_topological_ring(r, t);
  Report rep;
  rep.subject = std::string("closure-") + to_string(kind) + " " + r.spec();
  const Subset c = t.closure(s);
  rep.expect(theorem::kClosureSubstructure, std::string("closure of a ") + to_string(kind) + " is one", holds(c),
             {{"subset", members(s)}, {"closure", members(c)}});
  return rep;
}

inline Report hausdorff_discrete_criteria(const FiniteGroup& g, const FinTopology& t) {
  require_topological_group(g, t);
  Report rep;
  rep.subject = "hausdorff-discrete " + g.name();
  const bool hausdorff = is_hausdorff(t);
  const bool e_closed = t.point_closure(g.identity()).count() == 1;
  bool isolated = false;
  for (Elem x = 0; x < g.size(); ++x) isolated = isolated || t.min_open(x).count() == 1;
  const bool discrete = is_discrete(t);
  rep.data["hausdorff"] = hausdorff;
  rep.data["discrete"] = discrete;
  rep.expect(theorem::kHausdorffDiscrete, "Hausdorff <=> {e} closed", hausdorff == e_closed);
  rep.expect(theorem::kHausdorffDiscrete, "discrete <=> some isolated point", discrete == isolated);
  return rep;
}

// ---------------------------------------------------------------------------
// Closure formula in groups

struct GroupClosureOptions {
  std::size_t open_family_cap = 4096;  // enumerate N(e) and the closed sets up to this many
};

inline Report group_closure_formula(const FiniteGroup& g, const FinTopology& t, const Subset& s,
                                    const GroupClosureOptions& opt = {}) {
  require_topological_group(g, t);
  Report rep;
  rep.subject = "group-closure " + g.name() + " S=" + to_string(s);
  const std::size_t n = g.size();
  const Elem e = g.identity();
  std::vector<Subset> nbhds;
  const bool enumerable = t.count_opens(opt.open_family_cap).has_value();
  if (enumerable) {
    for (auto& u : t.opens(opt.open_family_cap))
      if (u.test(e)) nbhds.push_back(std::move(u));
  } else {
    nbhds.push_back(t.min_open(e));
  }
  Subset via_su = full_set(n), via_closure = full_set(n);
  for (const auto& u : nbhds) {
    const Subset su = g.product(s, u);
    via_su &= su;
    via_closure &= t.closure(su);
  }
  const Subset c = t.closure(s);
  rep.data["closure"] = members(c);
  rep.data["neighbourhoods"] = nbhds.size();
  rep.expect(theorem::kGroupClosure, "closure(S) = intersection of SU over U in N(e)", c == via_su,
             {{"closure", members(c)}, {"intersection", members(via_su)}});
  rep.expect(theorem::kGroupClosure, "closure(S) = intersection of closure(SU)", c == via_closure);

  // EK and KE closed for closed E; K = S (every finite set is quasi-compact)
  std::vector<Subset> closed;
  if (enumerable)
    closed = t.closed_sets(opt.open_family_cap);
  else
    for (Elem x = 0; x < n; ++x) closed.push_back(t.point_closure(x));
  std::optional<Subset> bad;
  for (const auto& ecl : closed)
    if (!t.is_closed(g.product(ecl, s)) || !t.is_closed(g.product(s, ecl))) {
      bad = ecl;
      break;
    }
  rep.expect(theorem::kGroupClosure, "EK and KE closed for closed E and K = S", !bad.has_value(),
             bad ? json{{"E", members(*bad)}} : json::object());
  rep.degenerate(theorem::kGroupClosure, "K quasi-compact (every finite subset is); products ES are always closed here");

  // canonical map G -> G/H is closed for every subgroup H
  bool all_closed = true;
  json failing = json::object();
  for (const auto& h : g.all_subgroups()) {
    const Partition p(n, g.left_cosets(h));
    if (!is_closed_map(p.projection(), t, quotient_topology(t, p))) {
      all_closed = false;
      failing = {{"H", members(h)}};
      break;
    }
  }
  rep.expect(theorem::kGroupClosure, "G -> G/H is a closed map for every subgroup H", all_closed, failing);
  rep.degenerate(theorem::kGroupClosure, "fibres xH quasi-compact, so G -> G/H is perfect");
  return rep;
}

// ---------------------------------------------------------------------------
// Weak-closed subgroups

/// U n E closed in the subspace U.
inline bool trace_closed_in(const FinTopology& t, const Subset& u, const Subset& e) {
  const Subset trace = u & e;
  return (t.closure(trace) & u) == trace;
}

/// Weak closed: some open U meets E in a nonempty set closed in U. Restricting such a U to the
/// minimal open of a point of U n E keeps the property, so minimal opens of points of E suffice.
inline bool is_weak_closed(const FinTopology& t, const Subset& e) {
  for (auto x = e.find_first(); x != Subset::npos; x = e.find_next(x))
    if (trace_closed_in(t, t.min_open(static_cast<Elem>(x)), e)) return true;
  return false;
}

/// Same predicate by scanning every open set.
inline bool is_weak_closed_by_opens(const FinTopology& t, const Subset& e, std::size_t cap = kOpenFamilyCap) {
  for (const auto& u : t.opens(cap))
    if ((u & e).any() && trace_closed_in(t, u, e)) return true;
  return false;
}

inline Report weak_closed_check(const FiniteGroup& g, const FinTopology& t, const Subset& h) {
  if (h.none() || !g.is_closed_under_op(h)) throw PreconditionError("H must be nonempty and closed under the operation");
  require_topological_group(g, t);
  Report rep;
  rep.subject = "weak-closed " + g.name() + " H=" + to_string(h);
  const bool weak = is_weak_closed(t, h);
  const bool closed = t.is_closed(h);
  rep.data["weak_closed"] = weak;
  rep.data["closed"] = closed;
  if (t.count_opens(4096))
    rep.expect(theorem::kWeakClosed, "minimal-open and all-open weak-closed scans agree",
               weak == is_weak_closed_by_opens(t, h, 4096));
  rep.expect(theorem::kWeakClosed, "finite operation-closed subset is a subgroup", g.is_subgroup(h));
  if (weak)
    rep.expect(theorem::kWeakClosed, "weak closed subgroup is closed", closed);
  else
    rep.unmet(theorem::kWeakClosed, "weak closed subgroup is closed");
  return rep;
}

// ---------------------------------------------------------------------------
// Adic morphisms

inline Report adic_morphism_continuity(const RingMorphism& f, const Ideal& i, const Ideal& j) {
  if (!(i.ring() == f.domain()) || !(j.ring() == f.codomain())) throw PreconditionError("ideals must live in the domain and codomain");
  Report rep;
  rep.subject = "adic-morphism " + f.domain().spec() + " -> " + f.codomain().spec() + " I=" + to_string(i.elements()) +
                " J=" + to_string(j.elements());
  const auto ti = adic_topology(i), tj = adic_topology(j);
  const bool continuous = is_continuous(MapTable(f.codomain().size(), f.table()), ti.topology, tj.topology).continuous;
  std::optional<std::size_t> witness_power;
  for (std::size_t k = 0; k < ti.chain.chain.size(); ++k)
    if (f.image(ti.chain.chain[k].elements()).is_subset_of(j.elements())) {
      witness_power = k + 1;
      break;
    }
  rep.data["continuous"] = continuous;
  rep.data["power"] = witness_power ? json(*witness_power) : json(nullptr);
  rep.expect(theorem::kAdicMorphism, "f continuous <=> f(I^n) inside J for some n", continuous == witness_power.has_value());
  bool identity = f.domain() == f.codomain();
  for (Elem a = 0; identity && a < f.domain().size(); ++a) identity = f(a) == a;
  if (identity) {
    const bool finer = ti.topology.is_finer_than(tj.topology);
    rep.data["i_adic_finer"] = finer;
    rep.expect(theorem::kAdicMorphism, "I-adic finer than J-adic <=> I^n inside J", finer == witness_power.has_value());
  }
  return rep;
}

/// For maximal (= prime at finite scale) ideals p, q: p-adic == q-adic iff p == q.
inline Report prime_adic_distinctness(const FiniteRing& r) {
  Report rep;
  rep.subject = "prime-adic " + r.spec();
  const auto maxl = maximal_ideals(r);
  std::vector<FinTopology> tops;
  for (const auto& m : maxl) tops.push_back(adic_topology(m).topology);
  rep.data["maximal_ideals"] = maxl.size();
  bool ok = true;
  json bad = json::object();
  for (std::size_t a = 0; a < maxl.size(); ++a)
    for (std::size_t b = 0; b < maxl.size(); ++b)
      if ((tops[a] == tops[b]) != (maxl[a] == maxl[b])) {
        ok = false;
        bad = {{"p", maxl[a].members()}, {"q", maxl[b].members()}};
      }
  rep.expect(theorem::kAdicMorphism, "p-adic == q-adic <=> p == q", ok, bad);
  return rep;
}

// ---------------------------------------------------------------------------
// Multiplication-by-x hypotheses

inline Report koh_hypotheses(const FiniteRing& r, const FinTopology& t, Elem x) {
  if (x >= r.size()) throw PreconditionError("element out of range");
  if (x == r.zero()) throw PreconditionError("x must be nonzero");
  if (!zerodivisors(r).test(x)) throw PreconditionError("x must be a zerodivisor");
  require_topological_ring(r, t);
  Report rep;
  rep.subject = "koh " + r.spec() + " x=" + std::to_string(x);
  std::vector<Elem> mx(r.size());
  for (Elem a = 0; a < r.size(); ++a) mx[a] = r.mul(a, x);
  const MapTable f(r.size(), mx);
  const bool closed_map = is_closed_map(f, t, t);
  const auto ker = annihilator(r, x);
  const bool ker_closed = t.is_closed(ker.elements());
  const bool hausdorff = is_hausdorff(t);
  const Subset rx = f.image(r.all());
  rep.data["closed_map"] = closed_map;
  rep.data["ker"] = ker.members();
  rep.data["ker_closed"] = ker_closed;
  rep.data["hausdorff"] = hausdorff;
  rep.data["rx"] = members(rx);
  if (closed_map) {
    rep.expect(theorem::kKoh, "Ker(f) closed <=> Hausdorff", ker_closed == hausdorff,
               {{"ker_closed", ker_closed}, {"hausdorff", hausdorff}});
    rep.expect(theorem::kKoh, "Rx closed", t.is_closed(rx));
    // R/Ker(f) -> Rx is a homeomorphism onto the subspace when f is closed
    const auto q = quotient_ring(ker);
    const auto qt = quotient_topology(t, Partition(r.size(), q.cosets));
    const auto sub = subspace_topology(t, rx);
    std::vector<Elem> pos(r.size(), 0);
    for (std::size_t k = 0; k < sub.to_parent.size(); ++k) pos[sub.to_parent[k]] = static_cast<Elem>(k);
    std::vector<Elem> g(q.cosets.size());
    for (std::size_t k = 0; k < q.cosets.size(); ++k) g[k] = pos[mx[q.cosets[k].find_first()]];
    rep.expect(theorem::kKoh, "R/Ker(f) -> Rx is a homeomorphism",
               is_homeomorphism(MapTable(sub.to_parent.size(), g), qt, sub.topology));
  } else {
    rep.unmet(theorem::kKoh, "Ker(f) closed <=> Hausdorff (needs r -> rx closed)");
  }
  rep.degenerate(theorem::kKoh, "Z(R) quasi-compact => R quasi-compact");
  return rep;
}

// ---------------------------------------------------------------------------

/// Z/2 with opens {}, {0}, Z/2 is not a topological ring: addition pulls {0} back to {(0,0),(1,1)}.
inline Report sierpinski_example() {
  Report rep;
  rep.subject = "sierpinski Z/2";
  const auto r = zmod(2);
  const auto v = check_topological_ring(r, FinTopology::sierpinski());
  rep.data["verdict"] = to_json(v);
  const bool expected = !v.add_continuous && v.add_witness == make_subset(2, {0}) &&
                        v.add_witness_preimage == make_subset(4, {0, 3});
  rep.expect(theorem::kSierpinski, "addition not continuous, witness open {0} with preimage {(0,0),(1,1)}", expected);
  return rep;
}

}  // namespace topring

#pragma once

// Topologies on finite ground sets {0, ..., n-1}.
//
// A finite topology is determined by its specialization preorder (x <= y iff x lies in the closure
// of {y}, iff every open set containing x contains y). Open sets are exactly the up-closed sets of
// that preorder and closed sets the down-closed ones. FinTopology keeps, per point, the minimal open
// neighbourhood up(x) and the point closure down(x); the open family itself is produced on demand.

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topring/error.hpp"
#include "topring/report.hpp"
#include "topring/subset.hpp"

namespace topring {

/// Default ceiling on the number of open sets materialized by FinTopology::opens().
inline constexpr std::size_t kOpenFamilyCap = std::size_t{1} << 16;

/// make_topology rejection carrying the violated axiom and the offending pair of opens.
class TopologyAxiomError : public PreconditionError {
 public:
  TopologyAxiomError(std::string axiom, Subset first, Subset second)
      : PreconditionError("not a topology: " + axiom + " violated by " + to_string(first) + ", " + to_string(second)),
        axiom_(std::move(axiom)),
        first_(std::move(first)),
        second_(std::move(second)) {}

  [[nodiscard]] const std::string& axiom() const { return axiom_; }
  [[nodiscard]] const Subset& first() const { return first_; }
  [[nodiscard]] const Subset& second() const { return second_; }

 private:
  std::string axiom_;
  Subset first_, second_;
};

class FinTopology {
 public:
  /// From an explicit open family; validates the axioms (empty set, whole set, pairwise unions and
  /// intersections) and derives the specialization preorder.
  static FinTopology from_opens(std::size_t n, std::vector<Subset> opens) {
    if (n == 0) throw PreconditionError("empty ground set");
    for (const auto& u : opens)
      if (u.size() != n) throw PreconditionError("open set has wrong ground size");
    canonical_sort(opens);
    const Subset empty(n), full = full_set(n);
    if (opens.empty() || opens.front() != empty) throw TopologyAxiomError("contains the empty set", empty, empty);
    if (opens.back() != full) throw TopologyAxiomError("contains the whole set", full, full);
    std::set<Subset> members(opens.begin(), opens.end());
    for (std::size_t i = 0; i < opens.size(); ++i)
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        if (!members.contains(opens[i] | opens[j])) throw TopologyAxiomError("closed under union", opens[i], opens[j]);
        if (!members.contains(opens[i] & opens[j]))
          throw TopologyAxiomError("closed under intersection", opens[i], opens[j]);
      }
    std::vector<Subset> up(n, full);
    for (const auto& u : opens)
      for_each_member(u, [&](Elem x) { up[x] &= u; });
    return FinTopology(std::move(up));
  }

  /// From minimal open neighbourhoods up[x] = {y : x <= y}; validates reflexivity and transitivity.
  static FinTopology from_preorder(std::vector<Subset> up) {
    const std::size_t n = up.size();
    if (n == 0) throw PreconditionError("empty ground set");
    for (std::size_t x = 0; x < n; ++x) {
      if (up[x].size() != n) throw PreconditionError("preorder row has wrong size");
      if (!up[x].test(x)) throw PreconditionError("preorder is not reflexive at " + std::to_string(x));
    }
    for (std::size_t x = 0; x < n; ++x)
      for_each_member(up[x], [&](Elem y) {
        if (!up[y].is_subset_of(up[x]))
          throw PreconditionError("preorder is not transitive at " + std::to_string(x) + " <= " + std::to_string(y));
      });
    return FinTopology(std::move(up));
  }

  /// From an arbitrary reflexive relation rows[x] (x relates to each member); takes the
  /// reflexive-transitive closure.
  static FinTopology from_relation(std::vector<Subset> rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw PreconditionError("empty ground set");
    for (std::size_t x = 0; x < n; ++x) rows[x].set(x);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x)
        if (rows[x].test(k)) rows[x] |= rows[k];
    return FinTopology(std::move(rows));
  }

  static FinTopology discrete(std::size_t n) {
    if (n == 0) throw PreconditionError("empty ground set");
    std::vector<Subset> up;
    for (std::size_t x = 0; x < n; ++x) up.push_back(singleton(n, static_cast<Elem>(x)));
    return FinTopology(std::move(up));
  }

  static FinTopology trivial(std::size_t n) {
    if (n == 0) throw PreconditionError("empty ground set");
    return FinTopology(std::vector<Subset>(n, full_set(n)));
  }

  /// Two-point space with opens {}, {0}, {0,1}.
  static FinTopology sierpinski() {
    return from_opens(2, {empty_set(2), make_subset(2, {0}), full_set(2)});
  }

  [[nodiscard]] std::size_t size() const { return d_->n; }
  /// x <= y in the specialization preorder.
  [[nodiscard]] bool leq(Elem x, Elem y) const { return d_->up[x].test(y); }
  /// Minimal open neighbourhood of x.
  [[nodiscard]] const Subset& min_open(Elem x) const { return d_->up[x]; }
  /// Closure of {x}.
  [[nodiscard]] const Subset& point_closure(Elem x) const { return d_->down[x]; }
  [[nodiscard]] const std::vector<Subset>& preorder_rows() const { return d_->up; }

  [[nodiscard]] bool is_open(const Subset& s) const {
    for (auto x = s.find_first(); x != Subset::npos; x = s.find_next(x))
      if (!d_->up[x].is_subset_of(s)) return false;
    return true;
  }

  [[nodiscard]] bool is_closed(const Subset& s) const {
    for (auto x = s.find_first(); x != Subset::npos; x = s.find_next(x))
      if (!d_->down[x].is_subset_of(s)) return false;
    return true;
  }

  [[nodiscard]] Subset closure(const Subset& s) const {
    Subset c(size());
    for_each_member(s, [&](Elem x) { c |= d_->down[x]; });
    return c;
  }

  /// Smallest open set containing s.
  [[nodiscard]] Subset open_hull(const Subset& s) const {
    Subset c(size());
    for_each_member(s, [&](Elem x) { c |= d_->up[x]; });
    return c;
  }

  [[nodiscard]] Subset interior(const Subset& s) const {
    Subset in(size());
    for_each_member(s, [&](Elem x) {
      if (d_->up[x].is_subset_of(s)) in.set(x);
    });
    return in;
  }

  /// All open sets in canonical order. Throws BudgetExceeded when more than `cap` exist.
  [[nodiscard]] std::vector<Subset> opens(std::size_t cap = kOpenFamilyCap) const {
    std::vector<Subset> out;
    enumerate_up_sets(d_->up, d_->down, cap, out);
    canonical_sort(out);
    return out;
  }

  /// Number of open sets, or nullopt when it exceeds `cap`.
  [[nodiscard]] std::optional<std::size_t> count_opens(std::size_t cap = kOpenFamilyCap) const {
    try {
      std::vector<Subset> out;
      enumerate_up_sets(d_->up, d_->down, cap, out);
      return out.size();
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  }

  [[nodiscard]] std::vector<Subset> closed_sets(std::size_t cap = kOpenFamilyCap) const {
    std::vector<Subset> out;
    enumerate_up_sets(d_->down, d_->up, cap, out);
    canonical_sort(out);
    return out;
  }

  /// Equal open families (equivalently, equal preorders).
  friend bool operator==(const FinTopology& a, const FinTopology& b) { return a.d_->up == b.d_->up; }

  /// Every open of `coarser` is open here.
  [[nodiscard]] bool is_finer_than(const FinTopology& coarser) const {
    if (coarser.size() != size()) return false;
    for (std::size_t x = 0; x < size(); ++x)
      if (!d_->up[x].is_subset_of(coarser.d_->up[x])) return false;
    return true;
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Subset> up, down;
  };

  explicit FinTopology(std::vector<Subset> up) {
    auto d = std::make_shared<Data>();
    d->n = up.size();
    d->down.assign(d->n, Subset(d->n));
    for (std::size_t x = 0; x < d->n; ++x) for_each_member(up[x], [&](Elem y) { d->down[y].set(x); });
    d->up = std::move(up);
    d_ = std::move(d);
  }

  // Up-closed sets of the preorder given by `up` (with its transpose `down`), one per leaf of a
  // branch-and-propagate search: including x forces up(x), excluding x forces down(x) out.
  static void enumerate_up_sets(const std::vector<Subset>& up, const std::vector<Subset>& down, std::size_t cap,
                                std::vector<Subset>& out) {
    const std::size_t n = up.size();
    Subset in(n), excluded(n);
    auto rec = [&](auto&& self, std::size_t x) -> void {
      while (x < n && (in.test(x) || excluded.test(x))) ++x;
      if (x == n) {
        if (out.size() >= cap) throw BudgetExceeded("open family exceeds cap " + std::to_string(cap));
        out.push_back(in);
        return;
      }
      {
        const Subset saved = in;
        in |= up[x];
        if (!in.intersects(excluded)) self(self, x + 1);
        in = saved;
      }
      {
        const Subset saved = excluded;
        excluded |= down[x];
        if (!excluded.intersects(in)) self(self, x + 1);
        excluded = saved;
      }
    };
    rec(rec, 0);
  }

  std::shared_ptr<const Data> d_;
};

/// Validating constructor from an open family (the literal format's `opens`).
inline FinTopology make_topology(std::size_t n, std::vector<Subset> opens) {
  return FinTopology::from_opens(n, std::move(opens));
}

inline FinTopology make_topology(std::size_t n, const std::vector<std::vector<Elem>>& opens) {
  std::vector<Subset> fam;
  fam.reserve(opens.size());
  for (const auto& u : opens) fam.push_back(make_subset(n, u));
  return FinTopology::from_opens(n, std::move(fam));
}

// ---------------------------------------------------------------------------
// JSON literal {"n": 2, "opens": [[], [0], [0, 1]]}

inline json topology_to_json(const FinTopology& t, std::size_t cap = kOpenFamilyCap) {
  json j;
  j["n"] = t.size();
  json arr = json::array();
  for (const auto& u : t.opens(cap)) arr.push_back(members(u));
  j["opens"] = std::move(arr);
  return j;
}

inline FinTopology topology_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("opens"))
    throw ParseError("topology literal needs fields \"n\" and \"opens\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() <= 0) throw ParseError("\"n\" must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  if (!j["opens"].is_array()) throw ParseError("\"opens\" must be an array of integer arrays");
  std::vector<Subset> fam;
  for (const auto& u : j["opens"]) {
    if (!u.is_array()) throw ParseError("each open must be an integer array");
    Subset s(n);
    for (const auto& e : u) {
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<std::size_t>() >= n)
        throw ParseError("open set element out of range");
      s.set(e.get<std::size_t>());
    }
    fam.push_back(std::move(s));
  }
  return make_topology(n, std::move(fam));
}

inline FinTopology topology_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("topology literal is not valid JSON: ") + e.what());
  }
  return topology_from_json(j);
}

// ---------------------------------------------------------------------------
// Maps and partitions

struct MapTable {
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<Elem> map;

  MapTable() = default;
  MapTable(std::size_t codomain, std::vector<Elem> values)
      : domain_size(values.size()), codomain_size(codomain), map(std::move(values)) {
    for (Elem v : map)
      if (v >= codomain_size) throw PreconditionError("map value out of range");
  }

  [[nodiscard]] Elem operator()(Elem x) const { return map[x]; }

  [[nodiscard]] Subset image(const Subset& s) const {
    Subset out(codomain_size);
    for_each_member(s, [&](Elem x) { out.set(map[x]); });
    return out;
  }

  [[nodiscard]] Subset preimage(const Subset& s) const {
    Subset out(domain_size);
    for (Elem x = 0; x < domain_size; ++x)
      if (s.test(map[x])) out.set(x);
    return out;
  }
};

inline MapTable identity_map(std::size_t n) {
  std::vector<Elem> id(n);
  std::iota(id.begin(), id.end(), Elem{0});
  return MapTable(n, std::move(id));
}

class Partition {
 public:
  /// Validates nonempty, pairwise disjoint, covering blocks; reorders blocks by least member.
  Partition(std::size_t n, std::vector<Subset> blocks) : n_(n), block_of_(n, static_cast<Elem>(blocks.size())) {
    if (n == 0) throw PreconditionError("empty ground set");
    std::sort(blocks.begin(), blocks.end(), [](const Subset& a, const Subset& b) {
      return a.find_first() < b.find_first();
    });
    Subset seen(n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (blocks[k].size() != n) throw PreconditionError("partition block has wrong ground size");
      if (blocks[k].none()) throw PreconditionError("partition block is empty");
      if (blocks[k].intersects(seen)) throw PreconditionError("partition blocks overlap");
      seen |= blocks[k];
      for_each_member(blocks[k], [&](Elem x) { block_of_[x] = static_cast<Elem>(k); });
    }
    if (!seen.all()) throw PreconditionError("partition blocks do not cover the ground set");
    blocks_ = std::move(blocks);
  }

  static Partition from_labels(std::span<const Elem> labels) {
    const std::size_t n = labels.size();
    Elem k = 0;
    for (Elem l : labels) k = std::max(k, l + 1);
    std::vector<Subset> blocks(k, Subset(n));
    for (std::size_t x = 0; x < n; ++x) blocks[labels[x]].set(x);
    std::erase_if(blocks, [](const Subset& b) { return b.none(); });
    return Partition(n, std::move(blocks));
  }

  static Partition singletons(std::size_t n) {
    std::vector<Subset> blocks;
    for (std::size_t x = 0; x < n; ++x) blocks.push_back(singleton(n, static_cast<Elem>(x)));
    return Partition(n, std::move(blocks));
  }

  [[nodiscard]] std::size_t ground_size() const { return n_; }
  [[nodiscard]] std::size_t size() const { return blocks_.size(); }
  [[nodiscard]] const std::vector<Subset>& blocks() const { return blocks_; }
  [[nodiscard]] Elem block_of(Elem x) const { return block_of_[x]; }
  [[nodiscard]] MapTable projection() const { return MapTable(blocks_.size(), block_of_); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::size_t n_;
  std::vector<Subset> blocks_;
  std::vector<Elem> block_of_;
};

// ---------------------------------------------------------------------------
// Derived topologies

/// Product topology; point (x, y) is encoded as x * |T2| + y.
inline FinTopology product_topology(const FinTopology& t1, const FinTopology& t2) {
  const std::size_t n1 = t1.size(), n2 = t2.size(), n = n1 * n2;
  std::vector<Subset> up(n, Subset(n));
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n2; ++y) {
      auto& row = up[x * n2 + y];
      for_each_member(t1.min_open(x), [&](Elem a) {
        for_each_member(t2.min_open(y), [&](Elem b) { row.set(a * n2 + b); });
      });
    }
  return FinTopology::from_preorder(std::move(up));
}

/// Product topology generated directly from the rectangles U x V of the two open families.
/// Minimal open of a point is the intersection of the rectangles containing it.
inline FinTopology product_topology_from_rectangles(const FinTopology& t1, const FinTopology& t2,
                                                    std::size_t cap = 4096) {
  const auto o1 = t1.opens(cap), o2 = t2.opens(cap);
  const std::size_t n1 = t1.size(), n2 = t2.size(), n = n1 * n2;
  std::vector<Subset> up(n, full_set(n));
  for (const auto& u : o1)
    for (const auto& v : o2) {
      Subset rect(n);
      for_each_member(u, [&](Elem a) { for_each_member(v, [&](Elem b) { rect.set(a * n2 + b); }); });
      for_each_member(rect, [&](Elem p) { up[p] &= rect; });
    }
  return FinTopology::from_preorder(std::move(up));
}

struct Subspace {
  FinTopology topology;
  std::vector<Elem> to_parent;  // subspace index -> ground index
};

inline Subspace subspace_topology(const FinTopology& t, const Subset& subset) {
  if (subset.size() != t.size()) throw PreconditionError("subset has wrong ground size");
  if (subset.none()) throw PreconditionError("subspace of the empty set");
  auto idx = members(subset);
  std::vector<Elem> pos(t.size(), static_cast<Elem>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<Elem>(i);
  std::vector<Subset> up(idx.size(), Subset(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for_each_member(t.min_open(idx[i]) & subset, [&](Elem y) { up[i].set(pos[y]); });
  return Subspace{FinTopology::from_preorder(std::move(up)), std::move(idx)};
}

/// W open in the quotient iff the union of its blocks is open.
inline FinTopology quotient_topology(const FinTopology& t, const Partition& p) {
  if (p.ground_size() != t.size()) throw PreconditionError("partition has wrong ground size");
  const std::size_t k = p.size();
  std::vector<Subset> rel(k, Subset(k));
  for (Elem x = 0; x < t.size(); ++x)
    for_each_member(t.min_open(x), [&](Elem y) { rel[p.block_of(x)].set(p.block_of(y)); });
  return FinTopology::from_relation(std::move(rel));
}

/// Opens {f^-1(U) : U open in the codomain}.
inline FinTopology induced_topology(const MapTable& f, const FinTopology& codomain) {
  if (f.codomain_size != codomain.size()) throw PreconditionError("map codomain does not match the topology");
  if (f.domain_size == 0) throw PreconditionError("empty ground set");
  std::vector<Subset> up(f.domain_size, Subset(f.domain_size));
  for (Elem a = 0; a < f.domain_size; ++a) up[a] = f.preimage(codomain.min_open(f(a)));
  return FinTopology::from_preorder(std::move(up));
}

struct ClosureInfo {
  Subset closure, interior;
  bool dense = false;
  Subset isolated_points;
};

inline ClosureInfo closure_calculus(const FinTopology& t, const Subset& s) {
  if (s.size() != t.size()) throw PreconditionError("subset has wrong ground size");
  ClosureInfo info{t.closure(s), t.interior(s), false, Subset(t.size())};
  info.dense = info.closure.all();
  for (Elem x = 0; x < t.size(); ++x)
    if (t.min_open(x).count() == 1) info.isolated_points.set(x);
  return info;
}

// ---------------------------------------------------------------------------
// Continuity

struct ContinuityVerdict {
  bool continuous = true;
  std::optional<Subset> witness_open;  // open V of the codomain whose preimage is not open
  std::optional<Subset> preimage;
};

namespace detail {

inline ContinuityVerdict monotone_check(const MapTable& f, const FinTopology& tx, const FinTopology& ty) {
  for (Elem x = 0; x < tx.size(); ++x)
    for (auto y = tx.min_open(x).find_first(); y != Subset::npos; y = tx.min_open(x).find_next(y))
      if (!ty.leq(f(x), f(static_cast<Elem>(y)))) {
        Subset v = ty.min_open(f(x));
        Subset pre = f.preimage(v);
        return {false, std::move(v), std::move(pre)};
      }
  return {};
}

inline ContinuityVerdict open_preimage_check(const MapTable& f, const FinTopology& tx, const std::vector<Subset>& opens) {
  for (const auto& v : opens) {
    auto pre = f.preimage(v);
    if (!tx.is_open(pre)) return {false, v, std::move(pre)};
  }
  return {};
}

}  // namespace detail

/// Open-preimage criterion over the full codomain open family (the definitional route).
inline ContinuityVerdict is_continuous_by_preimages(const MapTable& f, const FinTopology& tx, const FinTopology& ty,
                                                    std::size_t cap = kOpenFamilyCap) {
  if (f.domain_size != tx.size() || f.codomain_size != ty.size())
    throw PreconditionError("map sizes do not match the spaces");
  return detail::open_preimage_check(f, tx, ty.opens(cap));
}

/// Continuity of f: (X, TX) -> (Y, TY). Uses monotonicity of the specialization preorders; when the
/// codomain has at most `oracle_cap` opens the open-preimage criterion is run too and must agree.
inline ContinuityVerdict is_continuous(const MapTable& f, const FinTopology& tx, const FinTopology& ty,
                                       std::size_t oracle_cap = 256) {
  if (f.domain_size != tx.size() || f.codomain_size != ty.size())
    throw PreconditionError("map sizes do not match the spaces");
  auto fast = detail::monotone_check(f, tx, ty);
  if (oracle_cap > 0) {
    if (auto count = ty.count_opens(oracle_cap)) {
      auto slow = detail::open_preimage_check(f, tx, ty.opens(oracle_cap));
      if (slow.continuous != fast.continuous)
        throw TheoremViolation("monotonicity and open-preimage continuity criteria disagree");
    }
  }
  return fast;
}

/// Image of every closed set is closed. Closed sets are unions of point closures, so those suffice.
inline bool is_closed_map(const MapTable& f, const FinTopology& tx, const FinTopology& ty) {
  for (Elem x = 0; x < tx.size(); ++x)
    if (!ty.is_closed(f.image(tx.point_closure(x)))) return false;
  return true;
}

inline bool is_open_map(const MapTable& f, const FinTopology& tx, const FinTopology& ty) {
  for (Elem x = 0; x < tx.size(); ++x)
    if (!ty.is_open(f.image(tx.min_open(x)))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Product spaces X_1 x ... x X_k without materializing the product preorder

class ProductSpace {
 public:
  explicit ProductSpace(std::vector<FinTopology> factors) : factors_(std::move(factors)) {
    size_ = 1;
    for (const auto& f : factors_) size_ *= f.size();
  }

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] std::size_t arity() const { return factors_.size(); }
  [[nodiscard]] const std::vector<FinTopology>& factors() const { return factors_; }

  /// Row-major coordinates, first factor most significant.
  [[nodiscard]] std::vector<Elem> decode(std::size_t index) const {
    std::vector<Elem> c(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      c[i] = static_cast<Elem>(index % factors_[i].size());
      index /= factors_[i].size();
    }
    return c;
  }

  [[nodiscard]] std::size_t encode(std::span<const Elem> coords) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i].size() + coords[i];
    return idx;
  }

  /// Continuity of values: product -> (Y, ty), values[i] is the image of the i-th product point.
  /// The product preorder is generated by single-coordinate steps, so monotonicity along those suffices.
  [[nodiscard]] ContinuityVerdict check_continuous(std::span<const Elem> values, const FinTopology& ty,
                                                   const std::string& what = "product continuity") const {
    if (values.size() != size_) throw PreconditionError("value table does not cover the product");
    charge_budget(static_cast<std::uint64_t>(size_) * size_, what);
    std::vector<std::size_t> stride(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) stride[i - 1] = stride[i] * factors_[i].size();
    for (std::size_t p = 0; p < size_; ++p) {
      const auto c = decode(p);
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& row = factors_[i].min_open(c[i]);
        for (auto y = row.find_first(); y != Subset::npos; y = row.find_next(y)) {
          const std::size_t q = p + (y - c[i]) * stride[i];
          if (!ty.leq(values[p], values[q])) {
            Subset v = ty.min_open(values[p]);
            Subset pre(size_);
            for (std::size_t r = 0; r < size_; ++r)
              if (v.test(values[r])) pre.set(r);
            return {false, std::move(v), std::move(pre)};
          }
        }
      }
    }
    return {};
  }

  [[nodiscard]] FinTopology materialize() const {
    FinTopology t = factors_.front();
    for (std::size_t i = 1; i < factors_.size(); ++i) t = product_topology(t, factors_[i]);
    return t;
  }

 private:
  std::vector<FinTopology> factors_;
  std::size_t size_ = 1;
};

// ---------------------------------------------------------------------------
// Connected components

struct Components {
  Partition partition;
  FinTopology space;  // quotient topology on the components
};

/// Components of the comparability graph of the specialization preorder.
inline Components pi0(const FinTopology& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> ds(rank.data(), parent.data());
  for (std::size_t x = 0; x < n; ++x) ds.make_set(x);
  for (Elem x = 0; x < n; ++x) for_each_member(t.min_open(x), [&](Elem y) { ds.union_set(x, y); });
  std::vector<Elem> root_label(n, static_cast<Elem>(n)), labels(n);
  Elem next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    auto r = ds.find_set(x);
    if (root_label[r] == n) root_label[r] = next++;
    labels[x] = root_label[r];
  }
  Partition p = Partition::from_labels(labels);
  FinTopology q = quotient_topology(t, p);
  return Components{std::move(p), std::move(q)};
}

/// Whether the subspace on s is connected (s nonempty).
inline bool is_connected_subset(const FinTopology& t, const Subset& s) {
  if (s.none()) return true;
  return pi0(subspace_topology(t, s).topology).partition.size() == 1;
}

// ---------------------------------------------------------------------------
// Sober space t(X)

struct SoberSpace {
  std::vector<Subset> points;  // irreducible closed subsets of the base space, canonical order
  FinTopology topology;        // closed sets are exactly t(E) = {Z in points : Z subset of E}
  MapTable canonical_map;      // x |-> closure{x}
  bool map_continuous = false;
  bool map_closed = false;
  bool map_open = false;
};

/// Irreducible by the open-set definition: nonempty, and any two nonempty relatively open subsets
/// meet. Relatively open sets contain traces of minimal opens, so pairs of points suffice.
inline bool is_irreducible(const FinTopology& t, const Subset& e) {
  if (e.none()) return false;
  for (auto x = e.find_first(); x != Subset::npos; x = e.find_next(x))
    for (auto y = e.find_next(x); y != Subset::npos; y = e.find_next(y))
      if (!(t.min_open(static_cast<Elem>(x)) & t.min_open(static_cast<Elem>(y)) & e).any()) return false;
  return true;
}

inline SoberSpace sober_space(const FinTopology& t) {
  const std::size_t n = t.size();
  // Every closed set is the finite union of its point closures, so an irreducible closed set is one of them.
  std::vector<Subset> pts;
  for (Elem x = 0; x < n; ++x) pts.push_back(t.point_closure(x));
  canonical_sort(pts);
  for (const auto& z : pts)
    if (!t.is_closed(z) || !is_irreducible(t, z))
      throw TheoremViolation("point closure " + to_string(z) + " is not irreducible and closed");
  const std::size_t k = pts.size();
  // Z1 lies in the closure of Z2 iff every t(E) containing Z2 contains Z1 iff Z1 is inside Z2.
  std::vector<Subset> up(k, Subset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (pts[i].is_subset_of(pts[j])) up[i].set(j);
  auto top = FinTopology::from_preorder(std::move(up));
  std::vector<Elem> cmap(n);
  for (Elem x = 0; x < n; ++x)
    cmap[x] = static_cast<Elem>(std::lower_bound(pts.begin(), pts.end(), t.point_closure(x), canonical_less) - pts.begin());
  MapTable f(k, std::move(cmap));
  SoberSpace s{std::move(pts), top, f, false, false, false};
  s.map_continuous = detail::monotone_check(f, t, top).continuous;
  s.map_closed = is_closed_map(f, t, top);
  s.map_open = is_open_map(f, t, top);
  return s;
}

// ---------------------------------------------------------------------------
// Homeomorphism

/// Bijection h with x <= y iff h(x) <= h(y); backtracking with degree-signature pruning.
inline std::optional<std::vector<Elem>> find_homeomorphism(const FinTopology& a, const FinTopology& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const FinTopology& t, Elem x) {
    return std::pair{t.min_open(x).count(), t.point_closure(x).count()};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sa(n), sb(n);
  for (Elem x = 0; x < n; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  if (a.count_opens(kOpenFamilyCap) != b.count_opens(kOpenFamilyCap)) return std::nullopt;
  std::vector<Elem> h(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, Elem x) -> bool {
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = a.leq(x, x) == b.leq(y, y);
      for (Elem z = 0; ok && z < x; ++z)
        ok = a.leq(x, z) == b.leq(y, h[z]) && a.leq(z, x) == b.leq(h[z], y);
      if (!ok) continue;
      h[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return h;
}

/// Whether a given bijection is a homeomorphism.
inline bool is_homeomorphism(const MapTable& h, const FinTopology& a, const FinTopology& b) {
  if (h.domain_size != a.size() || h.codomain_size != b.size() || a.size() != b.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Elem x = 0; x < a.size(); ++x) {
    if (hit[h(x)]) return false;
    hit[h(x)] = true;
  }
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(h(x), h(y))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Predicates

struct SpacePredicates {
  bool hausdorff = false;
  bool t0 = false;
  bool discrete = false;
  bool trivial = false;
  bool connected = false;
  bool totally_disconnected = false;
};

/// Hausdorff iff the minimal neighbourhoods of distinct points are disjoint.
inline bool is_hausdorff(const FinTopology& t) {
  for (Elem x = 0; x < t.size(); ++x)
    for (Elem y = x + 1; y < t.size(); ++y)
      if (t.min_open(x).intersects(t.min_open(y))) return false;
  return true;
}

inline bool is_discrete(const FinTopology& t) {
  for (Elem x = 0; x < t.size(); ++x)
    if (t.min_open(x).count() != 1) return false;
  return true;
}

inline bool is_trivial(const FinTopology& t) {
  for (Elem x = 0; x < t.size(); ++x)
    if (!t.min_open(x).all()) return false;
  return true;
}

inline SpacePredicates space_predicates(const FinTopology& t) {
  SpacePredicates p;
  p.hausdorff = is_hausdorff(t);
  p.t0 = true;
  for (Elem x = 0; x < t.size() && p.t0; ++x)
    for (Elem y = x + 1; y < t.size(); ++y)
      if (t.leq(x, y) && t.leq(y, x)) {
        p.t0 = false;
        break;
      }
  p.discrete = is_discrete(t);
  p.trivial = is_trivial(t);
  const auto comps = pi0(t);
  p.connected = comps.partition.size() == 1;
  p.totally_disconnected = comps.partition.size() == t.size();
  return p;
}

inline json to_json(const SpacePredicates& p) {
  return json{{"hausdorff", p.hausdorff},   {"t0", p.t0},
              {"discrete", p.discrete},     {"trivial", p.trivial},
              {"connected", p.connected},   {"totally_disconnected", p.totally_disconnected}};
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::size_t kExhaustiveTopologyCap = 6;

/// Every topology on a ground set of size n <= 6, in canonical order (lexicographic on canonically
/// ordered open families). Topologies are generated as preorders: pairs (i, j) are decided in a fixed
/// order, each inclusion is closed transitively, and a closure that hits an excluded pair is pruned.
class TopologyEnumeration {
 public:
  explicit TopologyEnumeration(std::size_t n) : n_(n) {
    if (n == 0) throw PreconditionError("empty ground set");
    if (n > kExhaustiveTopologyCap)
      throw PreconditionError("exhaustive enumeration is limited to ground size " +
                              std::to_string(kExhaustiveTopologyCap) + "; use sampling");
    std::vector<std::vector<std::uint8_t>> families;
    for_each_preorder([&](const std::array<std::uint8_t, 8>& up) { families.push_back(up_sets(up)); });
    std::sort(families.begin(), families.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), mask_less);
    });
    offsets_.reserve(families.size() + 1);
    offsets_.push_back(0);
    for (const auto& f : families) {
      opens_.insert(opens_.end(), f.begin(), f.end());
      offsets_.push_back(opens_.size());
    }
  }

  [[nodiscard]] std::size_t ground_size() const { return n_; }
  [[nodiscard]] std::size_t size() const { return offsets_.size() - 1; }

  /// Open-set bitmasks of topology i, canonical order.
  [[nodiscard]] std::span<const std::uint8_t> masks(std::size_t i) const {
    return {opens_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  [[nodiscard]] FinTopology at(std::size_t i) const {
    std::vector<Subset> up(n_, full_set(n_));
    for (auto m : masks(i)) {
      const Subset u = from_mask(n_, m);
      for_each_member(u, [&](Elem x) { up[x] &= u; });
    }
    return FinTopology::from_preorder(std::move(up));
  }

  /// Canonical order on masks of equal ground set: by size, then lexicographic member lists.
  static bool mask_less(std::uint8_t a, std::uint8_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const auto d = static_cast<std::uint8_t>(a ^ b);
    if (d == 0) return false;
    const auto low = static_cast<std::uint8_t>(d & -d);
    return (a & low) != 0;
  }

  /// Number of preorders on n points via the same generator, without materializing families.
  static std::size_t count_preorders(std::size_t n) {
    std::size_t c = 0;
    TopologyEnumeration probe;
    probe.n_ = n;
    probe.for_each_preorder([&](const auto&) { ++c; });
    return c;
  }

 private:
  TopologyEnumeration() = default;

  template <class Fn>
  void for_each_preorder(Fn&& fn) const {
    const std::size_t n = n_;
    std::array<std::uint8_t, 8> up{}, excl{};
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<std::uint8_t>(1U << i);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) pairs.emplace_back(i, j);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      while (k < pairs.size() && ((up[pairs[k].first] >> pairs[k].second) & 1U)) ++k;
      if (k == pairs.size()) {
        fn(up);
        return;
      }
      const auto [i, j] = pairs[k];
      {
        auto saved = up;
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
          if ((up[a] >> i) & 1U) {
            up[a] |= up[j];
            if (up[a] & excl[a]) ok = false;
          }
        if (ok) self(self, k + 1);
        up = saved;
      }
      excl[i] |= static_cast<std::uint8_t>(1U << j);
      self(self, k + 1);
      excl[i] &= static_cast<std::uint8_t>(~(1U << j));
    };
    rec(rec, 0);
  }

  [[nodiscard]] std::vector<std::uint8_t> up_sets(const std::array<std::uint8_t, 8>& up) const {
    std::vector<std::uint8_t> out;
    const unsigned limit = 1U << n_;
    for (unsigned m = 0; m < limit; ++m) {
      bool closed = true;
      for (std::size_t x = 0; x < n_ && closed; ++x)
        if (((m >> x) & 1U) && (up[x] & ~m)) closed = false;
      if (closed) out.push_back(static_cast<std::uint8_t>(m));
    }
    std::sort(out.begin(), out.end(), mask_less);
    return out;
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> opens_;
  std::vector<std::size_t> offsets_;
};

inline std::vector<FinTopology> enumerate_topologies(std::size_t n) {
  TopologyEnumeration e(n);
  std::vector<FinTopology> out;
  out.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e.at(i));
  return out;
}

/// Random topologies for ground sets beyond the exhaustive cap: a random relation with edge
/// probability `density`, closed reflexively and transitively. Deterministic in `seed`.
inline std::vector<FinTopology> sample_topologies(std::size_t n, std::size_t count, std::uint64_t seed,
                                                  double density = 0.15) {
  if (n == 0) throw PreconditionError("empty ground set");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<FinTopology> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Subset> rel(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && edge(rng)) rel[i].set(j);
    out.push_back(FinTopology::from_relation(std::move(rel)));
  }
  return out;
}

}  // namespace topring

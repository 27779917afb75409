#pragma once

// Finite groups by Cayley table, plus the two groups a ring carries: (R, +) and R*.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topring/error.hpp"
#include "topring/finring.hpp"
#include "topring/subset.hpp"

namespace topring {

class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses.
  FiniteGroup(std::size_t size, std::vector<Elem> table, Elem identity, std::string name)
      : size_(size), op_(std::make_shared<std::vector<Elem>>(std::move(table))), e_(identity), name_(std::move(name)) {
    if (size_ == 0) throw PreconditionError("group must be nonempty");
    if (op_->size() != size_ * size_) throw PreconditionError("group table must be size x size");
    if (e_ >= size_) throw PreconditionError("identity out of range");
    for (Elem v : *op_)
      if (v >= size_) throw PreconditionError("group table entry out of range");
    auto inv = std::make_shared<std::vector<Elem>>(size_, static_cast<Elem>(size_));
    for (Elem a = 0; a < size_; ++a) {
      if (op(a, e_) != a || op(e_, a) != a) throw PreconditionError("identity fails at " + std::to_string(a));
      for (Elem b = 0; b < size_; ++b)
        if (op(a, b) == e_ && op(b, a) == e_) (*inv)[a] = b;
      if ((*inv)[a] == size_) throw PreconditionError("no inverse for " + std::to_string(a));
    }
    for (Elem a = 0; a < size_; ++a)
      for (Elem b = 0; b < size_; ++b)
        for (Elem c = 0; c < size_; ++c)
          if (op(op(a, b), c) != op(a, op(b, c))) throw PreconditionError("group operation not associative");
    inv_ = std::move(inv);
  }

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] Elem identity() const { return e_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] Elem op(Elem a, Elem b) const { return (*op_)[a * size_ + b]; }
  [[nodiscard]] Elem inv(Elem a) const { return (*inv_)[a]; }
  [[nodiscard]] const std::vector<Elem>& table() const { return *op_; }

  /// a^d for any integer d.
  [[nodiscard]] Elem pow(Elem a, long long d) const {
    if (d < 0) return pow(inv(a), -d);
    Elem r = e_;
    while (d-- > 0) r = op(r, a);
    return r;
  }

  [[nodiscard]] bool is_abelian() const {
    for (Elem a = 0; a < size_; ++a)
      for (Elem b = 0; b < size_; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

  /// AB = {ab : a in A, b in B}.
  [[nodiscard]] Subset product(const Subset& a, const Subset& b) const {
    Subset out(size_);
    for_each_member(a, [&](Elem x) { for_each_member(b, [&](Elem y) { out.set(op(x, y)); }); });
    return out;
  }

  /// A^-1 = {x : x^-1 in A}.
  [[nodiscard]] Subset inverse_set(const Subset& a) const {
    Subset out(size_);
    for_each_member(a, [&](Elem x) { out.set(inv(x)); });
    return out;
  }

  [[nodiscard]] bool is_subgroup(const Subset& h) const {
    if (h.size() != size_ || !h.test(e_)) return false;
    bool ok = true;
    for_each_member(h, [&](Elem a) {
      if (!h.test(inv(a))) ok = false;
      for_each_member(h, [&](Elem b) {
        if (!h.test(op(a, b))) ok = false;
      });
    });
    return ok;
  }

  [[nodiscard]] bool is_normal_subgroup(const Subset& h) const {
    if (!is_subgroup(h)) return false;
    for (Elem g = 0; g < size_; ++g) {
      bool ok = true;
      for_each_member(h, [&](Elem x) {
        if (!h.test(op(op(g, x), inv(g)))) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  [[nodiscard]] bool is_closed_under_op(const Subset& s) const {
    bool ok = true;
    for_each_member(s, [&](Elem a) {
      for_each_member(s, [&](Elem b) {
        if (!s.test(op(a, b))) ok = false;
      });
    });
    return ok;
  }

  /// Subgroup generated by s.
  [[nodiscard]] Subset generate(const Subset& s) const {
    Subset h = s;
    h.set(e_);
    for (bool grew = true; grew;) {
      grew = false;
      for (auto x : members(h)) {
        if (!h.test(inv(x))) {
          h.set(inv(x));
          grew = true;
        }
        for (auto y : members(h))
          if (!h.test(op(x, y))) {
            h.set(op(x, y));
            grew = true;
          }
      }
    }
    return h;
  }

  /// Left cosets xH, ordered by least member.
  [[nodiscard]] std::vector<Subset> left_cosets(const Subset& h) const {
    std::vector<Subset> out;
    Subset seen(size_);
    for (Elem x = 0; x < size_; ++x) {
      if (seen.test(x)) continue;
      Subset c = product(singleton(size_, x), h);
      seen |= c;
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Every subgroup, canonical order (joins of cyclic subgroups reach all of them).
  [[nodiscard]] std::vector<Subset> all_subgroups() const {
    std::vector<Subset> found;
    std::set<Subset> seen;
    std::vector<Subset> cyclic;
    for (Elem a = 0; a < size_; ++a) {
      auto h = generate(singleton(size_, a));
      if (seen.insert(h).second) {
        found.push_back(h);
        cyclic.push_back(h);
      }
    }
    for (std::size_t k = 0; k < found.size(); ++k)
      for (const auto& c : cyclic) {
        auto h = generate(found[k] | c);
        if (seen.insert(h).second) found.push_back(h);
      }
    canonical_sort(found);
    return found;
  }

  /// Only normal subgroups are {e} and G (and G is nontrivial).
  [[nodiscard]] bool is_simple() const {
    if (size_ == 1) return false;
    for (const auto& h : all_subgroups())
      if (h.count() != 1 && !h.all() && is_normal_subgroup(h)) return false;
    return true;
  }

 private:
  std::size_t size_;
  std::shared_ptr<const std::vector<Elem>> op_;
  std::shared_ptr<const std::vector<Elem>> inv_;
  Elem e_;
  std::string name_;
};

inline FiniteGroup additive_group(const FiniteRing& r) {
  std::vector<Elem> op(r.size() * r.size());
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b) op[a * r.size() + b] = r.add(a, b);
  return FiniteGroup(r.size(), std::move(op), r.zero(), "(" + r.spec() + ", +)");
}

/// R* as a group on 0..k-1; `to_ring[i]` is the ring element at position i.
struct UnitsAsGroup {
  FiniteGroup group;
  std::vector<Elem> to_ring;
  Subset in_ring;
};

inline UnitsAsGroup unit_group(const FiniteRing& r) {
  const auto u = units_group(r);
  auto elems = members(u.elements);
  const std::size_t k = elems.size();
  std::vector<Elem> pos(r.size(), static_cast<Elem>(k));
  for (std::size_t i = 0; i < k; ++i) pos[elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> op(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) op[i * k + j] = pos[r.mul(elems[i], elems[j])];
  FiniteGroup g(k, std::move(op), pos[r.one()], "(" + r.spec() + ")*");
  return UnitsAsGroup{std::move(g), std::move(elems), u.elements};
}

/// Cyclic group Z/n under addition.
inline FiniteGroup cyclic_group(std::size_t n) { return additive_group(zmod(n)); }

/// S_n on permutations in lexicographic order, (p q)(i) = p(q(i)); identity is element 0.
inline FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw PreconditionError("symmetric group needs 1 <= n <= 5");
  std::vector<std::vector<Elem>> perms;
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t k = perms.size();
  std::vector<Elem> op(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<Elem> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      op[a * k + b] = static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(k, std::move(op), 0, "S" + std::to_string(n));
}

}  // namespace topring

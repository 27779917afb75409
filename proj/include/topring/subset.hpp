#pragma once

// Subsets of a finite ground set {0, ..., n-1} as characteristic bitsets.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "topring/error.hpp"

namespace topring {

using Elem = std::uint32_t;
using Subset = boost::dynamic_bitset<std::uint64_t>;

inline Subset empty_set(std::size_t n) { return Subset(n); }

inline Subset full_set(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

inline Subset singleton(std::size_t n, Elem x) {
  Subset s(n);
  s.set(x);
  return s;
}

inline Subset make_subset(std::size_t n, std::span<const Elem> elems) {
  Subset s(n);
  for (Elem e : elems) {
    if (e >= n) {
      throw PreconditionError("element " + std::to_string(e) + " out of range for ground set of size " +
                              std::to_string(n));
    }
    s.set(e);
  }
  return s;
}

inline Subset make_subset(std::size_t n, std::initializer_list<Elem> elems) {
  return make_subset(n, std::span<const Elem>(elems.begin(), elems.size()));
}

/// Sorted member list.
inline std::vector<Elem> members(const Subset& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(static_cast<Elem>(i));
  return out;
}

template <class Fn>
inline void for_each_member(const Subset& s, Fn&& fn) {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) fn(static_cast<Elem>(i));
}

/// Canonical subset order: by size, then lexicographically on sorted member lists.
inline bool canonical_less(const Subset& a, const Subset& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto ia = a.find_first(), ib = b.find_first();
  while (ia != Subset::npos && ib != Subset::npos) {
    if (ia != ib) return ia < ib;
    ia = a.find_next(ia);
    ib = b.find_next(ib);
  }
  return false;
}

inline void canonical_sort(std::vector<Subset>& family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

/// Lexicographic comparison of two canonically sorted families.
inline bool family_less(const std::vector<Subset>& a, const std::vector<Subset>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

/// Small-ground-set bitmask; only valid when the ground size is at most 64.
inline std::uint64_t to_mask(const Subset& s) {
  std::uint64_t m = 0;
  for_each_member(s, [&](Elem e) { m |= std::uint64_t{1} << e; });
  return m;
}

inline Subset from_mask(std::size_t n, std::uint64_t m) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1U) s.set(i);
  return s;
}

inline std::string to_string(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](Elem e) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

}  // namespace topring

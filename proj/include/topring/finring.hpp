#pragma once

// Finite commutative unital rings given by exact operation tables.
//
// Elements are the indices 0..size-1. Constructions:
//   Z/n                     residues in natural order
//   A x B                   pairs (a, b) encoded row-major as a * |B| + b
//   Z/p[x]/(c0,...,c_{d-1},1)  coefficient vectors (a0..a_{d-1}) encoded as sum a_i p^i
// so element 0 is always zero, and 1 is the identity for Z/n and polynomial quotients.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topring/error.hpp"
#include "topring/report.hpp"
#include "topring/subset.hpp"

namespace topring {

inline constexpr std::size_t kDefaultRingCap = 256;

class FiniteRing {
 public:
  /// Validates every commutative-ring axiom exhaustively; throws PreconditionError on failure.
  FiniteRing(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
             std::string spec)
      : t_(std::make_shared<Tables>()) {
    if (size == 0) throw PreconditionError("ring must have at least one element");
    if (add.size() != size * size || mul.size() != size * size)
      throw PreconditionError("operation tables must be size x size");
    if (zero >= size || one >= size) throw PreconditionError("zero/one out of range");
    t_->size = size;
    t_->add = std::move(add);
    t_->mul = std::move(mul);
    t_->zero = zero;
    t_->one = one;
    t_->spec = std::move(spec);
    for (Elem v : t_->add)
      if (v >= size) throw PreconditionError("addition table entry out of range");
    for (Elem v : t_->mul)
      if (v >= size) throw PreconditionError("multiplication table entry out of range");
    t_->neg.assign(size, size);
    for (Elem a = 0; a < size; ++a)
      for (Elem b = 0; b < size; ++b)
        if (t_->add[a * size + b] == zero) {
          t_->neg[a] = b;
          break;
        }
    if (auto err = axiom_violation()) throw PreconditionError("not a commutative ring (" + t_->spec + "): " + *err);
  }

  [[nodiscard]] std::size_t size() const { return t_->size; }
  [[nodiscard]] Elem zero() const { return t_->zero; }
  [[nodiscard]] Elem one() const { return t_->one; }
  [[nodiscard]] const std::string& spec() const { return t_->spec; }
  [[nodiscard]] bool is_zero_ring() const { return t_->size == 1; }

  [[nodiscard]] Elem add(Elem a, Elem b) const { return t_->add[a * t_->size + b]; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const { return t_->mul[a * t_->size + b]; }
  [[nodiscard]] Elem neg(Elem a) const { return t_->neg[a]; }
  [[nodiscard]] Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  /// a^k for k >= 0.
  [[nodiscard]] Elem pow(Elem a, unsigned k) const {
    Elem r = one();
    while (k-- > 0) r = mul(r, a);
    return r;
  }

  /// k * a for an integer k (repeated addition, negatives via the additive inverse).
  [[nodiscard]] Elem scale(long long k, Elem a) const {
    if (k < 0) return scale(-k, neg(a));
    auto n = static_cast<long long>(size());
    k %= n == 0 ? 1 : n;  // additive order divides |R|
    Elem r = zero();
    while (k-- > 0) r = add(r, a);
    return r;
  }

  /// Additive order of a.
  [[nodiscard]] std::size_t additive_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != zero(); x = add(x, a)) ++k;
    return k;
  }

  [[nodiscard]] Subset all() const { return full_set(size()); }

  /// First failing axiom, if any.
  [[nodiscard]] std::optional<std::string> axiom_violation() const {
    const auto n = static_cast<Elem>(size());
    if (n > 1 && zero() == one()) return "zero equals one in a nonzero ring";
    for (Elem a = 0; a < n; ++a) {
      if (add(a, zero()) != a) return "zero is not an additive identity for " + std::to_string(a);
      if (mul(a, one()) != a) return "one is not a multiplicative identity for " + std::to_string(a);
      if (neg(a) >= n) return "no additive inverse for " + std::to_string(a);
      for (Elem b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) return "addition not commutative at " + pair_str(a, b);
        if (mul(a, b) != mul(b, a)) return "multiplication not commutative at " + pair_str(a, b);
      }
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab_sum = add(a, b), ab_prod = mul(a, b);
        for (Elem c = 0; c < n; ++c) {
          if (add(ab_sum, c) != add(a, add(b, c))) return "addition not associative at " + triple_str(a, b, c);
          if (mul(ab_prod, c) != mul(a, mul(b, c)))
            return "multiplication not associative at " + triple_str(a, b, c);
          if (mul(a, add(b, c)) != add(ab_prod, mul(a, c))) return "not distributive at " + triple_str(a, b, c);
        }
      }
    return std::nullopt;
  }

  friend bool operator==(const FiniteRing& x, const FiniteRing& y) {
    return x.t_ == y.t_ || (x.t_->size == y.t_->size && x.t_->zero == y.t_->zero && x.t_->one == y.t_->one &&
                            x.t_->add == y.t_->add && x.t_->mul == y.t_->mul);
  }

 private:
  struct Tables {
    std::size_t size = 0;
    std::vector<Elem> add, mul, neg;
    Elem zero = 0, one = 0;
    std::string spec;
  };

  static std::string pair_str(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
  static std::string triple_str(Elem a, Elem b, Elem c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }

  std::shared_ptr<Tables> t_;
};

// ---------------------------------------------------------------------------
// Constructions

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline FiniteRing zmod(std::size_t n, std::size_t cap = kDefaultRingCap) {
  if (n == 0) throw ParseError("Z/0 is infinite");
  if (n > cap) throw PreconditionError("ring size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  return FiniteRing(n, std::move(add), std::move(mul), 0, static_cast<Elem>(1 % n), "Z/" + std::to_string(n));
}

inline FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b, std::size_t cap = kDefaultRingCap) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  if (n > cap) throw PreconditionError("ring size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<Elem> add(n * n), mul(n * n);
  auto enc = [nb](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem x1 = x / nb, x2 = x % nb, y1 = y / nb, y2 = y % nb;
      add[x * n + y] = enc(a.add(x1, y1), b.add(x2, y2));
      mul[x * n + y] = enc(a.mul(x1, y1), b.mul(x2, y2));
    }
  auto wrap = [](const std::string& s) { return s.find(" x ") != std::string::npos ? "(" + s + ")" : s; };
  std::string spec = a.spec() + " x " + wrap(b.spec());
  return FiniteRing(n, std::move(add), std::move(mul), enc(a.zero(), b.zero()), enc(a.one(), b.one()),
                    std::move(spec));
}

/// Z/p[x]/(f) with f monic, given by its coefficient list c0..c_d (c_d == 1).
inline FiniteRing poly_quotient(std::size_t p, const std::vector<long long>& coeffs,
                                std::size_t cap = kDefaultRingCap) {
  if (!is_prime(p)) throw PreconditionError("polynomial quotient needs a prime modulus, got " + std::to_string(p));
  if (coeffs.empty()) throw ParseError("empty coefficient list");
  const std::size_t deg = coeffs.size() - 1;
  std::vector<std::size_t> f(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto c = coeffs[i] % static_cast<long long>(p);
    f[i] = static_cast<std::size_t>(c < 0 ? c + static_cast<long long>(p) : c);
  }
  if (coeffs.back() != 1) throw PreconditionError("polynomial is not monic (leading coefficient must be 1)");
  std::size_t n = 1;
  for (std::size_t i = 0; i < deg; ++i) {
    n *= p;
    if (n > cap) throw PreconditionError("ring size exceeds cap " + std::to_string(cap));
  }
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> v(deg);
    for (std::size_t i = 0; i < deg; ++i, idx /= p) v[i] = idx % p;
    return v;
  };
  auto encode = [&](const std::vector<std::size_t>& v) {
    std::size_t idx = 0;
    for (std::size_t i = deg; i-- > 0;) idx = idx * p + v[i];
    return static_cast<Elem>(idx);
  };
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto vx = decode(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto vy = decode(y);
      std::vector<std::size_t> s(deg);
      for (std::size_t i = 0; i < deg; ++i) s[i] = (vx[i] + vy[i]) % p;
      add[x * n + y] = encode(s);
      std::vector<std::size_t> prod(deg == 0 ? 1 : 2 * deg - 1, 0);
      for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + vx[i] * vy[j]) % p;
      // reduce: x^d = -(c0 + ... + c_{d-1} x^{d-1})
      for (std::size_t k = prod.size(); k-- > deg;) {
        const std::size_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < deg; ++i) prod[k - deg + i] = (prod[k - deg + i] + (p - f[i]) * c) % p;
      }
      prod.resize(deg);
      mul[x * n + y] = encode(prod);
    }
  }
  std::string spec = "Z/" + std::to_string(p) + "[x]/(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) spec += (i ? "," : "") + std::to_string(f[i]);
  spec += ")";
  return FiniteRing(n, std::move(add), std::move(mul), 0, static_cast<Elem>(n > 1 ? 1 : 0), std::move(spec));
}

namespace detail {

class RingSpecParser {
 public:
  RingSpecParser(std::string_view text, std::size_t cap) : s_(text), cap_(cap) {}

  FiniteRing parse() {
    auto r = parse_product();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  FiniteRing parse_product() {
    auto r = parse_term();
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'X')) {
        ++pos_;
        auto rhs = parse_term();
        if (r.size() * rhs.size() > cap_)
          throw PreconditionError("ring size " + std::to_string(r.size() * rhs.size()) + " exceeds cap " +
                                  std::to_string(cap_));
        r = product_ring(r, rhs, cap_);
      } else {
        return r;
      }
    }
  }

  FiniteRing parse_term() {
    skip_ws();
    if (accept('(')) {
      auto r = parse_product();
      skip_ws();
      expect(')');
      return r;
    }
    expect('Z');
    expect('/');
    const auto n = parse_uint();
    if (s_.substr(pos_, 4) == "[x]/") {
      pos_ += 4;
      expect('(');
      std::vector<long long> coeffs;
      do {
        skip_ws();
        bool negative = accept('-');
        auto c = static_cast<long long>(parse_uint());
        coeffs.push_back(negative ? -c : c);
        skip_ws();
      } while (accept(','));
      expect(')');
      return poly_quotient(n, coeffs, cap_);
    }
    if (n == 0) fail("Z/0 is not a finite ring");
    if (n > cap_) throw PreconditionError("ring size " + std::to_string(n) + " exceeds cap " + std::to_string(cap_));
    return zmod(n, cap_);
  }

  std::size_t parse_uint() {
    skip_ws();
    const auto start = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1'000'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("ring spec \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `Z/<n>`, `<spec> x <spec>` (left-associative, parentheses allowed) or `Z/<p>[x]/(c0,...,1)`.
inline FiniteRing make_ring(std::string_view spec, std::size_t cap = kDefaultRingCap) {
  return detail::RingSpecParser(spec, cap).parse();
}

// ---------------------------------------------------------------------------
// Ideals

class Ideal {
 public:
  /// Validates ideal closure.
  Ideal(FiniteRing ring, Subset elems) : ring_(std::move(ring)), elems_(std::move(elems)) {
    if (elems_.size() != ring_.size()) throw PreconditionError("ideal subset has wrong ground size");
    if (!elems_.test(ring_.zero())) throw PreconditionError("ideal must contain zero");
    for_each_member(elems_, [&](Elem a) {
      for_each_member(elems_, [&](Elem b) {
        if (!elems_.test(ring_.add(a, b))) throw PreconditionError("subset not closed under addition");
      });
      for (Elem r = 0; r < ring_.size(); ++r)
        if (!elems_.test(ring_.mul(r, a))) throw PreconditionError("subset not closed under ring multiplication");
    });
  }

  [[nodiscard]] const FiniteRing& ring() const { return ring_; }
  [[nodiscard]] const Subset& elements() const { return elems_; }
  [[nodiscard]] std::vector<Elem> members() const { return topring::members(elems_); }
  [[nodiscard]] std::size_t size() const { return elems_.count(); }
  [[nodiscard]] bool contains(Elem x) const { return elems_.test(x); }
  [[nodiscard]] bool is_zero() const { return elems_.count() == 1; }
  [[nodiscard]] bool is_whole() const { return elems_.all(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.elems_ == b.elems_; }

 private:
  FiniteRing ring_;
  Subset elems_;
};

inline bool is_ideal(const FiniteRing& r, const Subset& s) {
  if (s.size() != r.size() || !s.test(r.zero())) return false;
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a)) {
    for (auto b = s.find_first(); b != Subset::npos; b = s.find_next(b))
      if (!s.test(r.add(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
    for (Elem x = 0; x < r.size(); ++x)
      if (!s.test(r.mul(x, static_cast<Elem>(a)))) return false;
  }
  return true;
}

/// Smallest ideal containing `gens`, by saturation to a fixpoint.
inline Ideal ideal_generate(const FiniteRing& r, const Subset& gens) {
  if (gens.size() != r.size()) throw PreconditionError("generator set has wrong ground size");
  Subset s = gens;
  s.set(r.zero());
  std::vector<Elem> work = members(s);
  while (!work.empty()) {
    const Elem a = work.back();
    work.pop_back();
    auto push = [&](Elem v) {
      if (!s.test(v)) {
        s.set(v);
        work.push_back(v);
      }
    };
    for (Elem x = 0; x < r.size(); ++x) push(r.mul(x, a));
    for (auto b : members(s)) push(r.add(a, b));
  }
  return Ideal(r, std::move(s));
}

inline Ideal ideal_generate(const FiniteRing& r, std::span<const Elem> gens) {
  return ideal_generate(r, make_subset(r.size(), gens));
}

inline Ideal ideal_generate(const FiniteRing& r, std::initializer_list<Elem> gens) {
  return ideal_generate(r, make_subset(r.size(), gens));
}

inline Ideal zero_ideal(const FiniteRing& r) { return Ideal(r, singleton(r.size(), r.zero())); }
inline Ideal unit_ideal(const FiniteRing& r) { return Ideal(r, r.all()); }

/// Ideal generated by all products ab with a in I, b in J.
inline Ideal ideal_product(const Ideal& i, const Ideal& j) {
  const auto& r = i.ring();
  Subset gens(r.size());
  for_each_member(i.elements(), [&](Elem a) { for_each_member(j.elements(), [&](Elem b) { gens.set(r.mul(a, b)); }); });
  return ideal_generate(r, gens);
}

inline Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  return ideal_generate(i.ring(), i.elements() | j.elements());
}

/// Every ideal of r, in canonical subset order. Ideals are sums of principal ideals, so closing the
/// principal ideals under sums reaches all of them.
inline std::vector<Ideal> all_ideals(const FiniteRing& r) {
  std::vector<Subset> found;
  std::set<std::vector<Elem>> seen;
  auto add = [&](const Ideal& i) {
    if (seen.insert(i.members()).second) {
      found.push_back(i.elements());
      return true;
    }
    return false;
  };
  std::vector<Ideal> principal;
  for (Elem a = 0; a < r.size(); ++a) {
    auto i = ideal_generate(r, {a});
    if (add(i)) principal.push_back(i);
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    const Ideal current(r, found[k]);
    for (const auto& p : principal) add(ideal_sum(current, p));
  }
  canonical_sort(found);
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.emplace_back(r, std::move(s));
  return out;
}

/// Proper ideals not contained in any other proper ideal. At finite scale these are exactly the primes.
inline std::vector<Ideal> maximal_ideals(const FiniteRing& r) {
  auto ideals = all_ideals(r);
  std::vector<Ideal> out;
  for (const auto& i : ideals) {
    if (i.is_whole()) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (!j.is_whole() && j.size() > i.size() && i.elements().is_subset_of(j.elements())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

struct PowerChain {
  std::vector<Ideal> chain;  // I, I^2, ..., I^m with I^m == I^{m+1}
  std::size_t stable_index = 1;
  Ideal stable;              // I^m, the intersection of all powers
  bool nilpotent = false;    // stable == 0
  bool idempotent = false;   // I^2 == I
};

inline PowerChain ideal_power_chain(const Ideal& i) {
  std::vector<Ideal> chain{i};
  for (;;) {
    auto next = ideal_product(chain.back(), i);
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  const std::size_t m = chain.size();
  Ideal stable = chain.back();
  const bool nil = stable.is_zero();
  return PowerChain{std::move(chain), m, std::move(stable), nil, m == 1};
}

inline Ideal annihilator(const FiniteRing& r, Elem x) {
  if (x >= r.size()) throw PreconditionError("element out of range");
  Subset s(r.size());
  for (Elem a = 0; a < r.size(); ++a)
    if (r.mul(a, x) == r.zero()) s.set(a);
  return Ideal(r, std::move(s));
}

// ---------------------------------------------------------------------------
// Units, zerodivisors, idempotents

struct UnitGroup {
  Subset elements;
  std::vector<Elem> inverse;  // indexed by ring element; only meaningful on members
};

inline UnitGroup units_group(const FiniteRing& r) {
  UnitGroup g{Subset(r.size()), std::vector<Elem>(r.size(), r.zero())};
  for (Elem a = 0; a < r.size(); ++a) {
    std::optional<Elem> inv;
    for (Elem b = 0; b < r.size(); ++b)
      if (r.mul(a, b) == r.one()) {
        if (inv) throw TheoremViolation("inverse of " + std::to_string(a) + " is not unique");
        inv = b;
      }
    if (inv) {
      g.elements.set(a);
      g.inverse[a] = *inv;
    }
  }
  return g;
}

/// Z(R) = {a : Ann(a) != 0}; contains 0 for a nonzero ring.
inline Subset zerodivisors(const FiniteRing& r) {
  Subset z(r.size());
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      if (b != r.zero() && r.mul(a, b) == r.zero()) {
        z.set(a);
        break;
      }
  return z;
}

inline Subset idempotents(const FiniteRing& r) {
  Subset e(r.size());
  for (Elem a = 0; a < r.size(); ++a)
    if (r.mul(a, a) == a) e.set(a);
  return e;
}

inline bool is_field(const FiniteRing& r) {
  return !r.is_zero_ring() && units_group(r).elements.count() == r.size() - 1;
}

/// Idempotents under e (+) f = e + f - 2ef and the ring product.
struct BooleanRing {
  std::vector<Elem> elements;  // sorted ring indices
  FiniteRing ring;             // table ring on 0..k-1, position i <-> elements[i]
};

inline BooleanRing boolean_ring(const FiniteRing& r) {
  auto elems = members(idempotents(r));
  const std::size_t k = elems.size();
  std::vector<Elem> pos(r.size(), static_cast<Elem>(k));
  for (std::size_t i = 0; i < k; ++i) pos[elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> add(k * k), mul(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem e = elems[i], f = elems[j];
      const Elem ef = r.mul(e, f);
      const Elem x = r.sub(r.add(e, f), r.add(ef, ef));
      if (pos[x] == k || pos[ef] == k) throw TheoremViolation("idempotents not closed under the Boolean operations");
      add[i * k + j] = pos[x];
      mul[i * k + j] = pos[ef];
    }
  FiniteRing b(k, std::move(add), std::move(mul), pos[r.zero()], pos[r.one()], "B(" + r.spec() + ")");
  return BooleanRing{std::move(elems), std::move(b)};
}

// ---------------------------------------------------------------------------
// Morphisms and quotients

class RingMorphism {
 public:
  /// Validates preservation of +, *, 0, 1.
  RingMorphism(FiniteRing domain, FiniteRing codomain, std::vector<Elem> map)
      : dom_(std::move(domain)), cod_(std::move(codomain)), map_(std::move(map)) {
    if (map_.size() != dom_.size()) throw PreconditionError("morphism table must cover the domain");
    for (Elem v : map_)
      if (v >= cod_.size()) throw PreconditionError("morphism value out of range");
    if (map_[dom_.zero()] != cod_.zero() || map_[dom_.one()] != cod_.one())
      throw PreconditionError("morphism must preserve 0 and 1");
    for (Elem a = 0; a < dom_.size(); ++a)
      for (Elem b = 0; b < dom_.size(); ++b)
        if (map_[dom_.add(a, b)] != cod_.add(map_[a], map_[b]) || map_[dom_.mul(a, b)] != cod_.mul(map_[a], map_[b]))
          throw PreconditionError("map does not preserve ring operations");
  }

  [[nodiscard]] const FiniteRing& domain() const { return dom_; }
  [[nodiscard]] const FiniteRing& codomain() const { return cod_; }
  [[nodiscard]] const std::vector<Elem>& table() const { return map_; }
  [[nodiscard]] Elem operator()(Elem a) const { return map_[a]; }

  [[nodiscard]] Subset image(const Subset& s) const {
    Subset out(cod_.size());
    for_each_member(s, [&](Elem a) { out.set(map_[a]); });
    return out;
  }

 private:
  FiniteRing dom_, cod_;
  std::vector<Elem> map_;
};

inline RingMorphism identity_morphism(const FiniteRing& r) {
  std::vector<Elem> id(r.size());
  std::iota(id.begin(), id.end(), Elem{0});
  return RingMorphism(r, r, std::move(id));
}

/// Z/n -> Z/m, a |-> a mod m, for m dividing n.
inline RingMorphism reduction_morphism(std::size_t n, std::size_t m) {
  if (m == 0 || n % m != 0) throw PreconditionError("Z/n -> Z/m needs m | n");
  std::vector<Elem> map(n);
  for (std::size_t a = 0; a < n; ++a) map[a] = static_cast<Elem>(a % m);
  return RingMorphism(zmod(n), zmod(m), std::move(map));
}

struct Quotient {
  FiniteRing ring;
  RingMorphism projection;
  std::vector<Subset> cosets;  // coset k is the fiber over quotient element k
};

/// Coset ring R/I. Quotient element k is the coset whose least member is the k-th smallest coset minimum.
inline Quotient quotient_ring(const Ideal& ideal) {
  const auto& r = ideal.ring();
  const std::size_t n = r.size();
  std::vector<Elem> cls(n, static_cast<Elem>(n));
  std::vector<Elem> reps;
  std::vector<Subset> cosets;
  for (Elem a = 0; a < n; ++a) {
    if (cls[a] != n) continue;
    const auto k = static_cast<Elem>(reps.size());
    reps.push_back(a);
    Subset c(n);
    for_each_member(ideal.elements(), [&](Elem i) {
      const Elem x = r.add(a, i);
      cls[x] = k;
      c.set(x);
    });
    cosets.push_back(std::move(c));
  }
  const std::size_t q = reps.size();
  if (q * ideal.size() != n) throw TheoremViolation("|R| != |I| * |R/I|");
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      add[i * q + j] = cls[r.add(reps[i], reps[j])];
      mul[i * q + j] = cls[r.mul(reps[i], reps[j])];
    }
  std::string spec = r.spec() + " / " + to_string(ideal.elements());
  FiniteRing qr(q, std::move(add), std::move(mul), cls[r.zero()], cls[r.one()], std::move(spec));
  RingMorphism proj(r, qr, cls);
  return Quotient{std::move(qr), std::move(proj), std::move(cosets)};
}

/// Brute-force ring isomorphism search with additive-order pruning. Exponential; intended for size <= 16.
inline std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<std::size_t> ord_a(n), ord_b(n);
  for (Elem x = 0; x < n; ++x) {
    ord_a[x] = a.additive_order(x);
    ord_b[x] = b.additive_order(x);
  }
  {
    auto sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const auto idem_a = idempotents(a), idem_b = idempotents(b);
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(n, kUnset);
  std::vector<bool> used(n, false);
  std::vector<Elem> assigned;

  auto consistent = [&](Elem x) {
    for (Elem y : assigned) {
      const Elem sum = a.add(x, y), prod = a.mul(x, y);
      if (map[sum] != kUnset && map[sum] != b.add(map[x], map[y])) return false;
      if (map[prod] != kUnset && map[prod] != b.mul(map[x], map[y])) return false;
    }
    // pairs (y, z) already placed whose sum or product is x
    for (Elem y : assigned)
      for (Elem z : assigned) {
        if (a.add(y, z) == x && map[x] != b.add(map[y], map[z])) return false;
        if (a.mul(y, z) == x && map[x] != b.mul(map[y], map[z])) return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, Elem x) -> bool {
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || ord_a[x] != ord_b[y] || idem_a.test(x) != idem_b.test(y)) continue;
      if (x == a.zero() && y != b.zero()) continue;
      if (x == a.one() && y != b.one()) continue;
      map[x] = y;
      if (consistent(x)) {
        used[y] = true;
        assigned.push_back(x);
        if (self(self, x + 1)) return true;
        assigned.pop_back();
        used[y] = false;
      }
      map[x] = kUnset;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

// ---------------------------------------------------------------------------
// Finite nonfield criterion

/// A nonzero ring is a finite nonfield iff Z(R) is a finite nonzero set, and then |R| <= |Z(R)|^2.
inline Report finite_nonfield_criterion(const FiniteRing& r) {
  if (r.is_zero_ring()) throw PreconditionError("the criterion assumes a nonzero ring; got the zero ring");
  Report rep;
  rep.subject = "nonfield-criterion " + r.spec();
  const auto z = zerodivisors(r);
  const bool nonfield = !is_field(r);
  const bool z_nonzero = z.count() > 1;
  const std::size_t zn = z.count();
  rep.data["size"] = r.size();
  rep.data["zerodivisors"] = members(z);
  rep.data["nonfield"] = nonfield;
  rep.expect("nonfield-criterion", "finite nonfield <=> Z(R) nonzero", nonfield == z_nonzero,
             {{"nonfield", nonfield}, {"z_nonzero", z_nonzero}});
  if (z_nonzero) {
    rep.expect("nonfield-criterion", "|R| <= |Z(R)|^2", r.size() <= zn * zn, {{"size", r.size()}, {"z", zn}});
    // the counting argument: pick x != 0 in Z(R); Ann(x) is inside Z(R) and R/Ann(x) injects into Z(R)
    Elem x = r.zero();
    for_each_member(z, [&](Elem e) {
      if (x == r.zero() && e != r.zero()) x = e;
    });
    const auto ann = annihilator(r, x);
    const auto q = quotient_ring(ann);
    bool injective_into_z = true;
    Subset image(r.size());
    for (const auto& coset : q.cosets) {
      const Elem rep_elem = static_cast<Elem>(coset.find_first());
      const Elem v = r.mul(rep_elem, x);
      if (!z.test(v) || image.test(v)) injective_into_z = false;
      image.set(v);
    }
    rep.expect("nonfield-criterion", "Ann(x) inside Z(R), R/Ann(x) -> Z(R) injective, |R| = |I||R/I|",
               ann.elements().is_subset_of(z) && injective_into_z && ann.size() * q.ring.size() == r.size(),
               {{"x", x}, {"ann", ann.members()}});
    rep.data["bound_tight"] = r.size() == zn * zn;
  } else {
    rep.unmet("nonfield-criterion", "|R| <= |Z(R)|^2 (needs Z(R) != 0)");
  }
  return rep;
}

}  // namespace topring

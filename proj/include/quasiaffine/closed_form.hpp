#pragma once

#include <algorithm>
#include <utility>
#include <variant>
#include <vector>

#include "quasiaffine/rational.hpp"

namespace quasiaffine {

// Symbolic set of integers. A fixed-point set is always a contiguous run, so
// there is deliberately no variant for arbitrary finite sets.
struct EmptySet {
  friend bool operator==(const EmptySet&, const EmptySet&) = default;
};
struct IntegerRange {
  Integer lo;
  Integer hi;  // lo <= hi
  friend bool operator==(const IntegerRange&, const IntegerRange&) = default;
};
struct AllIntegers {
  friend bool operator==(const AllIntegers&, const AllIntegers&) = default;
};
using IntegerSet = std::variant<EmptySet, IntegerRange, AllIntegers>;

struct FiniteCount {
  Integer n;
  friend bool operator==(const FiniteCount&, const FiniteCount&) = default;
};
struct InfiniteCount {
  friend bool operator==(const InfiniteCount&, const InfiniteCount&) = default;
};
using CountValue = std::variant<FiniteCount, InfiniteCount>;

/// Unordered pair stored as a < b.
struct CyclePair {
  Integer a;
  Integer b;

  static CyclePair of(Integer x, Integer y) {
    if (y < x) std::swap(x, y);
    return {std::move(x), std::move(y)};
  }
  friend bool operator==(const CyclePair&, const CyclePair&) = default;
  friend bool operator<(const CyclePair& l, const CyclePair& r) {
    return l.a < r.a || (l.a == r.a && l.b < r.b);
  }
};

struct FiniteCycles {
  std::vector<CyclePair> pairs;  // sorted, duplicate-free
  friend bool operator==(const FiniteCycles&, const FiniteCycles&) = default;
};
/// {{x, c - x} : x in Z, x != c - x}, the lambda = -1 family with c = floor(mu).
struct NegOneFamily {
  Integer c;
  friend bool operator==(const NegOneFamily&, const NegOneFamily&) = default;
};
using TwoCycleSet = std::variant<FiniteCycles, NegOneFamily>;

/// Integer window [lo, hi].
struct Window {
  Integer lo;
  Integer hi;

  Window(Integer l, Integer h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("window with lo > hi");
  }
  bool contains(const Integer& z) const { return lo <= z && z <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

namespace detail {

inline const Rational& one() {
  static const Rational r(1);
  return r;
}

// -mu / (lambda - 1) and -(mu - 1) / (lambda - 1), both undefined at lambda = 1.
inline Rational lower_root(const Params& p) { return -p.mu / (p.lambda - one()); }
inline Rational upper_root(const Params& p) { return -(p.mu - one()) / (p.lambda - one()); }

}  // namespace detail

/// Fix(f). Integer z is fixed iff 0 <= (lambda - 1) z + mu < 1.
inline IntegerSet fixed_points(const Params& p) {
  const auto sign = (p.lambda <=> Rational(1));
  if (sign == 0) {
    if (Rational(0) <= p.mu && p.mu < Rational(1)) return AllIntegers{};
    return EmptySet{};
  }
  Integer lo;
  Integer hi;
  if (sign > 0) {
    lo = ceil_rat(detail::lower_root(p));
    hi = ceil_rat(detail::upper_root(p)) - 1;
  } else {
    lo = floor_rat(detail::upper_root(p)) + 1;
    hi = floor_rat(detail::lower_root(p));
  }
  if (lo > hi) return EmptySet{};
  return IntegerRange{std::move(lo), std::move(hi)};
}

/// N_p as its own piecewise formula, independent of fixed_points().
inline CountValue count_fixed_points(const Params& p) {
  const auto sign = (p.lambda <=> Rational(1));
  if (sign == 0) {
    if (p.mu < Rational(0) || p.mu >= Rational(1)) return FiniteCount{0};
    return InfiniteCount{};
  }
  Integer n = sign > 0 ? ceil_rat(detail::upper_root(p)) - ceil_rat(detail::lower_root(p))
                       : floor_rat(detail::lower_root(p)) - floor_rat(detail::upper_root(p));
  return FiniteCount{n.sign() > 0 ? n : Integer(0)};
}

inline CountValue cardinality(const IntegerSet& s) {
  if (std::holds_alternative<EmptySet>(s)) return FiniteCount{0};
  if (const auto* r = std::get_if<IntegerRange>(&s)) return FiniteCount{r->hi - r->lo + 1};
  return InfiniteCount{};
}

inline bool contains(const IntegerSet& s, const Integer& z) {
  if (const auto* r = std::get_if<IntegerRange>(&s)) return r->lo <= z && z <= r->hi;
  return std::holds_alternative<AllIntegers>(s);
}

inline std::vector<Integer> clip(const IntegerSet& s, const Window& w) {
  std::vector<Integer> out;
  Integer lo = w.lo;
  Integer hi = w.hi;
  if (std::holds_alternative<EmptySet>(s)) return out;
  if (const auto* r = std::get_if<IntegerRange>(&s)) {
    lo = std::max(lo, r->lo);
    hi = std::min(hi, r->hi);
  }
  for (Integer z = lo; z <= hi; ++z) out.push_back(z);
  return out;
}

namespace detail {

// Number of k-values in the union over k = 1..K of the two-cycle formula.
inline Integer two_cycle_k_max(const Params& p) {
  const Rational inv = one() / (p.lambda + one());
  if (p.lambda > Rational(-1)) return ceil_rat(inv) - 1;
  return -floor_rat(inv) - 1;
}

// Range of x (inclusive) for which {x, x + k} is a 2-cycle; may be empty.
inline std::pair<Integer, Integer> two_cycle_x_range(const Params& p, const Integer& k) {
  const Rational& lam = p.lambda;
  const Rational& mu = p.mu;
  const Rational denom = lam - one();
  const Rational kr(k);
  if (lam > Rational(-1))
    return {floor_rat((-lam * kr - mu + one()) / denom) + 1, floor_rat((kr - mu) / denom)};
  return {floor_rat((kr + one() - mu) / denom) + 1, floor_rat((-lam * kr - mu) / denom)};
}

inline bool has_finite_two_cycle_formula(const Params& p) {
  return (Rational(-1) < p.lambda && p.lambda < Rational(0)) ||
         (Rational(-2) < p.lambda && p.lambda < Rational(-1));
}

}  // namespace detail

/// Cyc(f). The union over k is materialized for -2 < lambda < 0, lambda != -1.
inline TwoCycleSet two_cycles(const Params& p) {
  if (p.lambda == Rational(-1)) return NegOneFamily{floor_rat(p.mu)};
  FiniteCycles out;
  if (!detail::has_finite_two_cycle_formula(p)) return out;
  const Integer k_max = detail::two_cycle_k_max(p);
  for (Integer k = 1; k <= k_max; ++k) {
    auto [lo, hi] = detail::two_cycle_x_range(p, k);
    for (Integer x = lo; x <= hi; ++x) out.pairs.push_back(CyclePair{x, x + k});
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

/// N_c evaluated as the summation formula.
inline CountValue count_two_cycles(const Params& p) {
  if (p.lambda == Rational(-1)) return InfiniteCount{};
  if (!detail::has_finite_two_cycle_formula(p)) return FiniteCount{0};
  const Integer k_max = detail::two_cycle_k_max(p);
  Integer total = 0;
  for (Integer k = 1; k <= k_max; ++k) {
    auto [lo, hi] = detail::two_cycle_x_range(p, k);
    Integer n = hi - lo + 1;
    if (n.sign() > 0) total += n;
  }
  return FiniteCount{total};
}

inline CountValue cardinality(const TwoCycleSet& s) {
  if (const auto* f = std::get_if<FiniteCycles>(&s)) return FiniteCount{Integer(f->pairs.size())};
  return InfiniteCount{};
}

inline bool contains(const TwoCycleSet& s, const CyclePair& pair) {
  if (const auto* f = std::get_if<FiniteCycles>(&s))
    return std::binary_search(f->pairs.begin(), f->pairs.end(), pair);
  const auto& fam = std::get<NegOneFamily>(s);
  // x == c - x would be a fixed point, not a 2-cycle.
  return pair.a != pair.b && pair.a + pair.b == fam.c;
}

/// Pairs whose two elements both lie in w, canonically ordered.
inline std::vector<CyclePair> clip(const TwoCycleSet& s, const Window& w) {
  std::vector<CyclePair> out;
  if (const auto* f = std::get_if<FiniteCycles>(&s)) {
    for (const auto& pr : f->pairs)
      if (w.contains(pr.a) && w.contains(pr.b)) out.push_back(pr);
    return out;
  }
  const Integer& c = std::get<NegOneFamily>(s).c;
  for (Integer x = w.lo; x <= w.hi; ++x) {
    Integer y = c - x;
    if (x < y && w.contains(y)) out.push_back(CyclePair{x, std::move(y)});
  }
  return out;
}

/// Every integer lying on some 2-cycle and inside w, ascending.
inline std::vector<Integer> period_two_points(const TwoCycleSet& s, const Window& w) {
  std::vector<Integer> out;
  if (const auto* f = std::get_if<FiniteCycles>(&s)) {
    for (const auto& pr : f->pairs) {
      if (w.contains(pr.a)) out.push_back(pr.a);
      if (w.contains(pr.b)) out.push_back(pr.b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  const Integer& c = std::get<NegOneFamily>(s).c;
  for (Integer x = w.lo; x <= w.hi; ++x)
    if (2 * x != c) out.push_back(x);
  return out;
}

}  // namespace quasiaffine

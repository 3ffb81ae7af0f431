#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "quasiaffine/closed_form.hpp"
#include "quasiaffine/rational.hpp"

namespace quasiaffine {

struct FixedLimit {
  Integer z;
  friend bool operator==(const FixedLimit&, const FixedLimit&) = default;
};
/// 2-cycle {a, b} with a < b, f(a) = b and f(b) = a.
struct TwoCycleLimit {
  Integer a;
  Integer b;
  friend bool operator==(const TwoCycleLimit&, const TwoCycleLimit&) = default;
};
struct PlusInfinity {
  friend bool operator==(const PlusInfinity&, const PlusInfinity&) = default;
};
struct MinusInfinity {
  friend bool operator==(const MinusInfinity&, const MinusInfinity&) = default;
};
/// Even and odd iterates diverge to opposite infinities.
struct PlusMinusInfinity {
  friend bool operator==(const PlusMinusInfinity&, const PlusMinusInfinity&) = default;
};

using OmegaLimit = std::variant<FixedLimit, TwoCycleLimit, PlusInfinity, MinusInfinity, PlusMinusInfinity>;

inline bool is_escape(const OmegaLimit& w) {
  return std::holds_alternative<PlusInfinity>(w) || std::holds_alternative<MinusInfinity>(w) ||
         std::holds_alternative<PlusMinusInfinity>(w);
}

inline std::string describe(const OmegaLimit& w) {
  struct Visitor {
    std::string operator()(const FixedLimit& f) const { return "Fixed(" + f.z.str() + ")"; }
    std::string operator()(const TwoCycleLimit& c) const {
      return "TwoCycle(" + c.a.str() + "," + c.b.str() + ")";
    }
    std::string operator()(const PlusInfinity&) const { return "+inf"; }
    std::string operator()(const MinusInfinity&) const { return "-inf"; }
    std::string operator()(const PlusMinusInfinity&) const { return "+-inf"; }
  };
  return std::visit(Visitor{}, w);
}

enum class CaseTag { I, II, III, IV, V, VI, VII, VIII, IX };

inline std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "i";
    case CaseTag::II: return "ii";
    case CaseTag::III: return "iii";
    case CaseTag::IV: return "iv";
    case CaseTag::V: return "v";
    case CaseTag::VI: return "vi";
    case CaseTag::VII: return "vii";
    case CaseTag::VIII: return "viii";
    case CaseTag::IX: return "ix";
  }
  return "?";
}

namespace detail {

// floor(-mu / (lambda - 1)): the unique fixed point when lambda < 0 and one exists,
// and the base value of the I_n partition.
inline Integer partition_base(const Params& p) { return floor_rat(lower_root(p)); }

// For lambda < 1: does a fixed point exist?
inline bool has_fixed_point_below_one(const Params& p) {
  return floor_rat(upper_root(p)) + 1 <= floor_rat(lower_root(p));
}

inline void require_negative_slope(const Params& p, const char* what) {
  if (p.lambda >= Rational(0)) throw std::invalid_argument(std::string(what) + " requires lambda < 0");
}

}  // namespace detail

/// Half-open interval I_n = (left, right] for lambda < 0.
struct PartitionInterval {
  Rational left;   // exclusive
  Rational right;  // inclusive

  bool contains(const Rational& x) const { return left < x && x <= right; }
};

inline PartitionInterval partition_interval(const Params& p, const Integer& n) {
  detail::require_negative_slope(p, "partition_interval");
  const Rational shifted = Rational(detail::partition_base(p)) - p.mu + Rational(n);
  return {(shifted + Rational(1)) / p.lambda, shifted / p.lambda};
}

/// The n with x in I_n, i.e. f(x) = floor(-mu / (lambda - 1)) + n.
inline Integer interval_index(const Params& p, const Rational& x) {
  detail::require_negative_slope(p, "interval_index");
  return eval_map(p, x) - detail::partition_base(p);
}

inline CaseTag classify_case(const Params& p) {
  const Rational one(1);
  if (p.lambda > one) {
    const Integer first = ceil_rat(detail::lower_root(p));
    const Integer last = ceil_rat(detail::upper_root(p)) - 1;
    return first <= last ? CaseTag::I : CaseTag::II;
  }
  if (p.lambda == one) return CaseTag::III;
  if (p.lambda > Rational(0)) return CaseTag::IV;
  if (p.lambda == Rational(0)) return CaseTag::V;
  const bool fixed = detail::has_fixed_point_below_one(p);
  if (p.lambda > Rational(-1)) return fixed ? CaseTag::VI : CaseTag::VII;
  return fixed ? CaseTag::VIII : CaseTag::IX;
}

/*
 * Decides the ambiguous negative-slope cases ("either a 2-cycle or ...") exactly.
 *
 * g = f o f is monotone non-decreasing on Z, so the g-orbit of z = f(x) is
 * either eventually constant or strictly monotone from its first move on. It
 * can only stop on a fixed point of g, i.e. on a point of Fix(f) or of a
 * 2-cycle, and both sets are finite here. An orbit moving up past the largest
 * such point (or down past the smallest) never stops: its even iterates go to
 * one infinity and, f being decreasing, its odd iterates to the other.
 */
inline OmegaLimit resolve_negative(const Params& p, const Rational& x) {
  if (p.lambda >= Rational(0) || p.lambda == Rational(-1))
    throw std::invalid_argument("resolve_negative requires lambda < 0 and lambda != -1");

  std::optional<Integer> lowest;
  std::optional<Integer> highest;
  auto note = [&](const Integer& v) {
    if (!lowest || v < *lowest) lowest = v;
    if (!highest || v > *highest) highest = v;
  };
  const IntegerSet fixed = fixed_points(p);
  if (const auto* r = std::get_if<IntegerRange>(&fixed)) {
    note(r->lo);
    note(r->hi);
  }
  for (const auto& pr : std::get<FiniteCycles>(two_cycles(p)).pairs) {
    note(pr.a);
    note(pr.b);
  }

  Integer z = eval_map(p, x);
  for (;;) {
    Integer fz = eval_map(p, z);
    if (fz == z) return FixedLimit{std::move(z)};
    Integer next = eval_map(p, fz);
    if (next == z) {
      if (z < fz) return TwoCycleLimit{std::move(z), std::move(fz)};
      return TwoCycleLimit{std::move(fz), std::move(z)};
    }
    if (next > z && (!highest || *highest <= z)) return PlusMinusInfinity{};
    if (next < z && (!lowest || *lowest >= z)) return PlusMinusInfinity{};
    z = std::move(next);
  }
}

inline OmegaLimit omega_limit(const Params& p, const Rational& x) {
  const Rational& lam = p.lambda;
  const Rational& mu = p.mu;
  const Rational one(1);

  if (lam == Rational(-1)) {
    // f(x) = floor(-x + mu), f^2(x) = floor(mu) - f(x) and f^3 = f.
    Integer first = floor_rat(-x + mu);
    Integer second = floor_rat(mu) - first;
    if (first == second) return FixedLimit{std::move(first)};
    if (first < second) return TwoCycleLimit{std::move(first), std::move(second)};
    return TwoCycleLimit{std::move(second), std::move(first)};
  }

  switch (classify_case(p)) {
    case CaseTag::I: {
      const Rational low = (Rational(ceil_rat(detail::lower_root(p))) - mu) / lam;
      const Rational high = (Rational(ceil_rat(detail::upper_root(p))) - mu) / lam;
      if (x >= high) return PlusInfinity{};
      if (x < low) return MinusInfinity{};
      return FixedLimit{eval_map(p, x)};
    }
    case CaseTag::II: {
      const Rational threshold = (Rational(detail::partition_base(p)) - mu + one) / lam;
      if (x >= threshold) return PlusInfinity{};
      return MinusInfinity{};
    }
    case CaseTag::III:
      if (mu >= one) return PlusInfinity{};
      if (mu < Rational(0)) return MinusInfinity{};
      return FixedLimit{floor_rat(x + mu)};
    case CaseTag::IV: {
      const Rational upper = detail::upper_root(p);
      const Rational lower = detail::lower_root(p);
      if (x <= upper) return FixedLimit{floor_rat(upper) + 1};
      if (x > lower) return FixedLimit{floor_rat(lower)};
      return FixedLimit{eval_map(p, x)};
    }
    case CaseTag::V:
      return FixedLimit{floor_rat(mu)};
    case CaseTag::VI:
    case CaseTag::VIII:
      if (partition_interval(p, 0).contains(x)) return FixedLimit{detail::partition_base(p)};
      [[fallthrough]];
    case CaseTag::VII:
    case CaseTag::IX:
      break;
  }
  return resolve_negative(p, x);
}

}  // namespace quasiaffine

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "quasiaffine/closed_form.hpp"
#include "quasiaffine/omega.hpp"
#include "quasiaffine/rational.hpp"

// Brute-force counterparts of the closed forms. The brute_* routines and
// check_no_long_cycles use eval_map only; omega_agrees and cross_check are
// where the two sides meet.
namespace quasiaffine::oracle {

struct Verdict {
  bool agrees = true;
  std::string detail;  // empty when agrees
  std::size_t unchecked = 0;  // points skipped by check_no_long_cycles
};

inline constexpr std::size_t kDefaultMaxSteps = 512;
inline const Integer kDefaultEscapeBound = Integer(1000000000);

inline std::vector<Integer> brute_fixed_points(const Params& p, const Window& w) {
  std::vector<Integer> out;
  for (Integer z = w.lo; z <= w.hi; ++z)
    if (eval_map(p, z) == z) out.push_back(z);
  return out;
}

inline std::vector<CyclePair> brute_two_cycles(const Params& p, const Window& w) {
  std::vector<CyclePair> out;
  for (Integer z = w.lo; z <= w.hi; ++z) {
    Integer fz = eval_map(p, z);
    // Each pair is seen from both ends; keep it once, from its smaller element.
    if (fz > z && w.contains(fz) && eval_map(p, fz) == z) out.push_back(CyclePair{z, std::move(fz)});
  }
  return out;
}

/*
 * Orbit-based estimate of omega(x). Eventual constancy and period-2
 * alternation of the integer tail are exact once seen. Escapes are reported
 * only after the tail has passed +-escape_bound and the next two iterates keep
 * moving outward in a consistent pattern. Returns nullopt if nothing is
 * detected within max_steps iterates.
 */
inline std::optional<OmegaLimit> brute_omega(const Params& p, const Rational& x,
                                             std::size_t max_steps = kDefaultMaxSteps,
                                             const Integer& escape_bound = kDefaultEscapeBound) {
  const Orbit orbit = iterate_orbit(p, x, max_steps);
  const auto& t = orbit.tail;
  for (std::size_t k = 0; k + 2 < t.size(); ++k) {
    if (t[k + 1] == t[k]) return FixedLimit{t[k]};
    if (t[k + 2] == t[k]) {
      if (t[k] < t[k + 1]) return TwoCycleLimit{t[k], t[k + 1]};
      return TwoCycleLimit{t[k + 1], t[k]};
    }
    const Integer& a = t[k];
    const Integer& b = t[k + 1];
    const Integer& c = t[k + 2];
    if (a > escape_bound) {
      if (b > a && c > b) return PlusInfinity{};
      if (b < -escape_bound && c > a) return PlusMinusInfinity{};
    } else if (a < -escape_bound) {
      if (b < a && c < b) return MinusInfinity{};
      if (b > escape_bound && c < a) return PlusMinusInfinity{};
    }
  }
  return std::nullopt;
}

/*
 * Certifies an escape verdict from the tail alone: over the second half of
 * max_steps iterates the orbit must move strictly outward in the claimed
 * pattern (monotone up, monotone down, or even/odd subsequences separating).
 */
inline bool confirms_escape(const Params& p, const Rational& x, const OmegaLimit& claimed,
                            std::size_t max_steps = kDefaultMaxSteps) {
  const Orbit orbit = iterate_orbit(p, x, max_steps);
  const auto& t = orbit.tail;
  if (t.size() < 8) return false;
  const std::size_t from = t.size() / 2;
  if (std::holds_alternative<PlusInfinity>(claimed)) {
    for (std::size_t k = from; k + 1 < t.size(); ++k)
      if (!(t[k + 1] > t[k])) return false;
    return true;
  }
  if (std::holds_alternative<MinusInfinity>(claimed)) {
    for (std::size_t k = from; k + 1 < t.size(); ++k)
      if (!(t[k + 1] < t[k])) return false;
    return true;
  }
  if (std::holds_alternative<PlusMinusInfinity>(claimed)) {
    for (std::size_t k = from; k + 2 < t.size(); ++k) {
      const bool up = t[k].sign() > 0 && t[k + 2] > t[k] && t[k + 1].sign() < 0;
      const bool down = t[k].sign() < 0 && t[k + 2] < t[k] && t[k + 1].sign() > 0;
      if (!up && !down) return false;
    }
    return true;
  }
  return false;
}

/*
 * Looks for points of w with minimal period 3..n_max. Orbits are followed
 * inside the padded window [lo - P, hi + P], P = ceil((|lambda| + 1)(hi - lo));
 * points whose orbit leaves it first are skipped and counted as unchecked.
 */
inline Verdict check_no_long_cycles(const Params& p, const Window& w, std::size_t n_max) {
  if (n_max < 3) throw std::invalid_argument("check_no_long_cycles requires n_max >= 3");
  const Rational abs_lambda = p.lambda.sign() < 0 ? -p.lambda : p.lambda;
  const Integer pad = ceil_rat((abs_lambda + Rational(1)) * Rational(w.hi - w.lo));
  const Window padded(w.lo - pad, w.hi + pad);

  Verdict v;
  std::ostringstream detail;
  for (Integer z = w.lo; z <= w.hi; ++z) {
    Integer cur = z;
    for (std::size_t m = 1; m <= n_max; ++m) {
      cur = eval_map(p, cur);
      if (cur == z) {
        if (m >= 3) {
          v.agrees = false;
          detail << "lambda=" << p.lambda << " mu=" << p.mu << ": point " << z << " has period " << m << "; ";
        }
        break;
      }
      if (!padded.contains(cur)) {
        ++v.unchecked;
        break;
      }
    }
  }
  if (!v.agrees) v.detail = detail.str();
  return v;
}

/// Does omega_limit(p, x) agree with the orbit? Appends a description to detail if not.
inline bool omega_agrees(const Params& p, const Rational& x, std::ostream* detail = nullptr,
                         std::size_t max_steps = kDefaultMaxSteps,
                         const Integer& escape_bound = kDefaultEscapeBound) {
  const OmegaLimit closed = omega_limit(p, x);
  const auto brute = brute_omega(p, x, max_steps, escape_bound);
  if (brute) {
    if (*brute == closed) return true;
    if (detail)
      *detail << "lambda=" << p.lambda << " mu=" << p.mu << " x=" << x << ": omega "
              << describe(closed) << " vs orbit " << describe(*brute) << "; ";
    return false;
  }
  // Slow (e.g. linear) escapes may not reach the bound; accept them only with a monotone exit.
  if (is_escape(closed) && confirms_escape(p, x, closed, max_steps)) return true;
  if (detail)
    *detail << "lambda=" << p.lambda << " mu=" << p.mu << " x=" << x << ": omega " << describe(closed)
            << " vs unresolved orbit; ";
  return false;
}

/// Compares the closed forms against brute enumeration on w and orbits from each sample.
inline Verdict cross_check(const Params& p, const Window& w, std::span<const Rational> samples,
                           std::size_t max_steps = kDefaultMaxSteps,
                           const Integer& escape_bound = kDefaultEscapeBound) {
  Verdict v;
  std::ostringstream detail;

  const auto fixed = clip(fixed_points(p), w);
  if (fixed != brute_fixed_points(p, w)) {
    v.agrees = false;
    detail << "lambda=" << p.lambda << " mu=" << p.mu << ": fixed points differ; ";
  }
  if (clip(two_cycles(p), w) != brute_two_cycles(p, w)) {
    v.agrees = false;
    detail << "lambda=" << p.lambda << " mu=" << p.mu << ": 2-cycles differ; ";
  }
  for (const auto& x : samples)
    if (!omega_agrees(p, x, &detail, max_steps, escape_bound)) v.agrees = false;

  if (!v.agrees) v.detail = detail.str();
  return v;
}

}  // namespace quasiaffine::oracle

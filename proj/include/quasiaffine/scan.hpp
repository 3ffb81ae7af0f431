#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "quasiaffine/closed_form.hpp"
#include "quasiaffine/rational.hpp"

namespace quasiaffine {

enum class SweepTarget { FixedPoints, Period2Points };

/// Inclusive rational grid from, from + step, ... (up to and including `to` when landed on).
struct GridAxis {
  Rational from;
  Rational to;
  Rational step;

  std::vector<Rational> values() const {
    std::vector<Rational> out;
    for (Rational v = from; v <= to; v += step) out.push_back(v);
    return out;
  }
};

struct SweepSpec {
  GridAxis lambda;
  GridAxis mu;
  Window x_window;
  SweepTarget target = SweepTarget::FixedPoints;

  void validate() const {
    for (const GridAxis* axis : {&lambda, &mu}) {
      if (axis->step <= Rational(0)) throw std::invalid_argument("sweep step must be positive");
      if (axis->to < axis->from) throw std::invalid_argument("sweep range must have from <= to");
    }
  }
};

struct SweepRow {
  Rational lambda;
  Rational mu;
  Integer x;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Points of the target set at p, clipped to w, ascending.
inline std::vector<Integer> sweep_points(const Params& p, const Window& w, SweepTarget target) {
  if (target == SweepTarget::FixedPoints) return clip(fixed_points(p), w);
  return period_two_points(two_cycles(p), w);
}

/// Emits rows in lexicographic (lambda, mu, x) order.
inline void sweep(const SweepSpec& spec, const std::function<void(const SweepRow&)>& emit) {
  spec.validate();
  const auto mus = spec.mu.values();
  for (const auto& lambda : spec.lambda.values()) {
    for (const auto& mu : mus) {
      for (auto& x : sweep_points(Params{lambda, mu}, spec.x_window, spec.target))
        emit(SweepRow{lambda, mu, std::move(x)});
    }
  }
}

inline std::vector<SweepRow> sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  sweep(spec, [&](const SweepRow& r) { rows.push_back(r); });
  return rows;
}

inline std::size_t write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "lambda,mu,x\n";
  for (const auto& r : rows) out << r.lambda << ',' << r.mu << ',' << r.x << '\n';
  out.flush();
  if (!out) throw std::runtime_error("failed writing CSV output");
  return rows.size();
}

inline std::size_t write_jsonl(const std::vector<SweepRow>& rows, std::ostream& out) {
  for (const auto& r : rows) {
    // Rational text needs no escaping; x is written verbatim so large integers stay exact.
    out << R"({"lambda":")" << r.lambda << R"(","mu":")" << r.mu << R"(","x":)" << r.x << "}\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing JSON-lines output");
  return rows.size();
}

}  // namespace quasiaffine

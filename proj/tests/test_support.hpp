#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "quasiaffine/rational.hpp"

namespace quasiaffine::testing {

inline Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

inline std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

/// Inclusive exact grid from, from + step, ..., to.
inline std::vector<Rational> grid(const Rational& from, const Rational& to, const Rational& step) {
  std::vector<Rational> out;
  for (Rational v = from; v <= to; v += step) out.push_back(v);
  return out;
}

/// Every (lambda, mu) of lambda in {-3, -3 + 1/7, ..., 3}, mu in {-2, -2 + 1/5, ..., 2}.
inline std::vector<Params> standard_grid() {
  std::vector<Params> out;
  for (const auto& l : grid(q(-3), q(3), q(1, 7)))
    for (const auto& m : grid(q(-2), q(2), q(1, 5))) out.push_back({l, m});
  return out;
}

class RandomRationals {
public:
  explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

  /// Uniform p/q in [-span, span] with q in 1..max_den.
  Rational next(long long span = 200, long long max_den = 30) {
    const long long d = integer(1, max_den);
    return q(integer(-span * d, span * d), d);
  }
  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<long long>(v.size()) - 1))];
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace quasiaffine::testing

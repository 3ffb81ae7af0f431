#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quasiaffine {

using Integer = boost::multiprecision::cpp_int;

/*
 * Exact rational number p/q kept in canonical form: q > 0 and gcd(|p|, q) = 1.
 *
 * Text form is "p/q" with the sign carried by p and "/q" omitted when q = 1,
 * e.g. "13/10", "-2", "0".
 */
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  Integer n{std::string(digits)};
  return negative ? Integer(-n) : n;
}

// Floor division for q > 0, rounding toward -infinity.
inline Integer floor_div(const Integer& p, const Integer& q) {
  Integer quot;
  Integer rem;
  boost::multiprecision::divide_qr(p, q, quot, rem);
  if (rem.sign() < 0) --quot;
  return quot;
}

}  // namespace detail

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or q = 0.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, text));
  const std::string_view den = text.substr(slash + 1);
  if (!detail::all_digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer q(std::string{den});
  if (q == 0) throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
  return Rational(detail::parse_integer(text.substr(0, slash), text), std::move(q));
}

inline Integer floor_rat(const Rational& x) { return detail::floor_div(x.num(), x.den()); }

inline Integer ceil_rat(const Rational& x) { return -floor_rat(-x); }

/// The pair (lambda, mu) of one map x -> floor(lambda * x + mu).
struct Params {
  Rational lambda;
  Rational mu;

  friend bool operator==(const Params&, const Params&) = default;
};

/// F(x) = lambda * x + mu.
inline Rational eval_affine(const Params& p, const Rational& x) { return p.lambda * x + p.mu; }

/// f(x) = floor(lambda * x + mu).
inline Integer eval_map(const Params& p, const Rational& x) {
  // floor((ln*xn*md + mn*ld*xd) / (ld*xd*md)) without intermediate normalization.
  const Integer& ln = p.lambda.num();
  const Integer& ld = p.lambda.den();
  const Integer& mn = p.mu.num();
  const Integer& md = p.mu.den();
  const Integer lx_den = ld * x.den();
  return detail::floor_div(ln * x.num() * md + mn * lx_den, lx_den * md);
}

inline Integer eval_map(const Params& p, const Integer& z) {
  const Integer& ld = p.lambda.den();
  const Integer& md = p.mu.den();
  return detail::floor_div(p.lambda.num() * z * md + p.mu.num() * ld, ld * md);
}

/// Orbit of a rational start under f. Only the integer tail f(x), f^2(x), ... is stored.
struct Orbit {
  Rational start;
  std::vector<Integer> tail;
  bool truncated = true;
};

inline Orbit iterate_orbit(const Params& p, const Rational& x, std::size_t steps) {
  Orbit orbit{x, {}, true};
  orbit.tail.reserve(steps);
  if (steps == 0) return orbit;
  orbit.tail.push_back(eval_map(p, x));
  while (orbit.tail.size() < steps) orbit.tail.push_back(eval_map(p, orbit.tail.back()));
  return orbit;
}

}  // namespace quasiaffine

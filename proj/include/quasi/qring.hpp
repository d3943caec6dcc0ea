#pragma once

// Exact arithmetic in the quadratic integer rings Z[alpha], alpha a root of
// x^2 = m x + eps. The golden ring (m = 1, eps = +1) has alpha = tau.

#include "quasi/integer.hpp"

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace quasi {

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("ring elements belong to different rings") {}
};

/// Defining polynomial x^2 - m x - eps of the ring. Default-constructed
/// value is the golden ring.
class RingSpec {
 public:
  constexpr RingSpec() = default;

  RingSpec(int trace, int eps) : trace_(trace), eps_(eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    if (trace < 1) throw std::invalid_argument("trace m must be >= 1");
    if (eps == -1 && trace < 3)
      throw std::invalid_argument("eps = -1 requires m >= 3 (alpha must be irrational)");
  }

  static constexpr RingSpec golden() { return RingSpec{}; }

  constexpr int trace() const { return trace_; }
  constexpr int eps() const { return eps_; }
  /// m^2 + 4 eps; positive and never a perfect square for a valid ring.
  constexpr std::int64_t discriminant() const {
    return std::int64_t{trace_} * trace_ + 4 * eps_;
  }
  constexpr bool is_golden() const { return trace_ == 1 && eps_ == 1; }

  friend constexpr bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  int trace_ = 1;
  int eps_ = 1;
};

inline std::string to_string(const RingSpec& r) {
  return "m=" + std::to_string(r.trace()) + ",eps=" + std::to_string(r.eps());
}

/// c0 + c1 * alpha. The pair (c0, c1) is the canonical representation.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(RingSpec ring, Integer c0 = 0, Integer c1 = 0)
      : ring_(ring), c0_(std::move(c0)), c1_(std::move(c1)) {}

  static RingElement alpha(RingSpec ring) { return RingElement(ring, 0, 1); }

  const RingSpec& ring() const { return ring_; }
  const Integer& c0() const { return c0_; }
  const Integer& c1() const { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  bool is_integer() const { return c1_.is_zero(); }

  RingElement operator-() const { return RingElement(ring_, -c0_, -c1_); }

  RingElement& operator+=(const RingElement& y) {
    check_ring(y);
    c0_ += y.c0_;
    c1_ += y.c1_;
    return *this;
  }
  RingElement& operator-=(const RingElement& y) {
    check_ring(y);
    c0_ -= y.c0_;
    c1_ -= y.c1_;
    return *this;
  }
  RingElement& operator*=(const RingElement& y) {
    check_ring(y);
    // alpha^2 = m alpha + eps
    const Integer bd = c1_ * y.c1_;
    Integer n0 = c0_ * y.c0_ + ring_.eps() * bd;
    Integer n1 = c0_ * y.c1_ + c1_ * y.c0_ + ring_.trace() * bd;
    c0_ = std::move(n0);
    c1_ = std::move(n1);
    return *this;
  }
  RingElement& operator*=(const Integer& k) {
    c0_ *= k;
    c1_ *= k;
    return *this;
  }

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator*(RingElement x, const RingElement& y) { return x *= y; }
  friend RingElement operator*(RingElement x, const Integer& k) { return x *= k; }
  friend RingElement operator*(const Integer& k, RingElement x) { return x *= k; }

  friend bool operator==(const RingElement& x, const RingElement& y) {
    return x.ring_ == y.ring_ && x.c0_ == y.c0_ && x.c1_ == y.c1_;
  }

  /// Order of the real values. Throws RingMismatch across rings.
  friend std::strong_ordering operator<=>(const RingElement& x, const RingElement& y);

  void check_ring(const RingElement& y) const {
    if (!(ring_ == y.ring_)) throw RingMismatch();
  }

 private:
  RingSpec ring_;
  Integer c0_;
  Integer c1_;
};

/// Galois conjugation alpha -> alpha' = m - alpha.
inline RingElement conjugate(const RingElement& x) {
  return RingElement(x.ring(), x.c0() + x.ring().trace() * x.c1(), -x.c1());
}

/// x * conjugate(x) = c0^2 + m c0 c1 - eps c1^2.
inline Integer norm(const RingElement& x) {
  const RingSpec& r = x.ring();
  return x.c0() * x.c0() + r.trace() * x.c0() * x.c1() - r.eps() * x.c1() * x.c1();
}

/// Exact sign of the real value c0 + c1 alpha, with alpha = (m + sqrt(D)) / 2.
/// Writes 2x = p + q sqrt(D) and compares p^2 against D q^2 when p and q
/// have opposite signs.
inline int sign(const RingElement& x) {
  const Integer p = 2 * x.c0() + x.ring().trace() * x.c1();
  const Integer& q = x.c1();
  const int sp = p.sign();
  const int sq = q.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // D is not a perfect square, so p^2 != D q^2 here.
  const int c = (p * p > x.ring().discriminant() * q * q) ? 1 : -1;
  return sp > 0 ? c : -c;
}

inline std::strong_ordering operator<=>(const RingElement& x, const RingElement& y) {
  const int s = sign(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline RingElement abs(const RingElement& x) { return sign(x) < 0 ? -x : x; }

/// Largest integer k with k <= x.
inline Integer floor(const RingElement& x) {
  const RingSpec& r = x.ring();
  const Integer& c1 = x.c1();
  if (c1.is_zero()) return x.c0();
  // floor(c1 * sqrt(D)); D c1^2 is never a perfect square for c1 != 0.
  Integer s = isqrt(r.discriminant() * c1 * c1);
  if (c1.sign() < 0) s = -s - 1;
  // floor((m c1 + c1 sqrt(D)) / 2) == floor((m c1 + s) / 2) since the
  // fractional part of c1 sqrt(D) is strictly inside (0, 1).
  return x.c0() + floor_div(r.trace() * c1 + s, 2);
}

/// Smallest integer k with k >= x.
inline Integer ceil(const RingElement& x) { return -floor(-x); }

/// Generalized Fibonacci numbers g_k with g_0 = 0, g_1 = 1 and
/// g_{k+1} = m g_k + eps g_{k-1}, extended to negative k by running the
/// recurrence backward. Returns (g_{k-1}, g_k).
inline std::pair<Integer, Integer> fib_pair(const RingSpec& r, std::int64_t k) {
  Integer prev = r.eps();  // g_{-1} = eps (g_1 - m g_0)
  Integer cur = 0;         // g_0
  const int m = r.trace();
  const int eps = r.eps();
  for (std::int64_t i = 0; i < k; ++i) {
    Integer next = m * cur + eps * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  for (std::int64_t i = 0; i > k; --i) {
    Integer before = eps * (cur - m * prev);
    cur = std::move(prev);
    prev = std::move(before);
  }
  return {prev, cur};
}

inline Integer fib(const RingSpec& r, std::int64_t k) { return fib_pair(r, k).second; }
inline Integer fibonacci(std::int64_t k) { return fib(RingSpec::golden(), k); }

/// alpha^k = g_k alpha + eps g_{k-1}, valid for every integer k since
/// alpha is a unit.
inline RingElement alpha_pow(const RingSpec& r, std::int64_t k) {
  auto [prev, cur] = fib_pair(r, k);
  return RingElement(r, r.eps() * prev, cur);
}

/// Double-precision images of x and its conjugate. Display only.
inline std::pair<double, double> approx(const RingElement& x) {
  const RingSpec& r = x.ring();
  const long double root = std::sqrt(static_cast<long double>(r.discriminant()));
  const long double a = (r.trace() + root) / 2;
  const long double a_conj = (r.trace() - root) / 2;
  const auto c0 = x.c0().convert_to<long double>();
  const auto c1 = x.c1().convert_to<long double>();
  return {static_cast<double>(c0 + c1 * a), static_cast<double>(c0 + c1 * a_conj)};
}

/// Text form "<c0>+<c1>t": "4+5t", "-t", "1", "0".
inline std::string to_string(const RingElement& x) {
  const Integer& c0 = x.c0();
  const Integer& c1 = x.c1();
  if (c1.is_zero()) return c0.str();
  std::string out;
  if (!c0.is_zero()) out = c0.str();
  if (c1.sign() > 0 && !out.empty()) out += '+';
  if (c1 == -1)
    out += '-';
  else if (c1 != 1)
    out += c1.str();
  out += 't';
  return out;
}

/// Lexicographic order on (c0, c1); cheap, not the order of the reals.
struct CoefficientLess {
  bool operator()(const RingElement& x, const RingElement& y) const {
    if (x.c0() != y.c0()) return x.c0() < y.c0();
    return x.c1() < y.c1();
  }
};

}  // namespace quasi

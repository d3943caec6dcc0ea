#pragma once

// Acceptance windows: connected intervals of the real line whose endpoints
// are ring elements.

#include "quasi/qring.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace quasi {

struct Boundary {
  RingElement endpoint;
  bool closed = true;

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

class Window {
 public:
  /// Throws std::invalid_argument for an empty interval or mixed rings.
  Window(Boundary lo, Boundary hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    lo_.endpoint.check_ring(hi_.endpoint);
    const int s = sign(hi_.endpoint - lo_.endpoint);
    if (s < 0 || (s == 0 && !(lo_.closed && hi_.closed)))
      throw std::invalid_argument("empty window");
  }

  static Window closed(RingElement lo, RingElement hi) {
    return Window({std::move(lo), true}, {std::move(hi), true});
  }
  static Window open(RingElement lo, RingElement hi) {
    return Window({std::move(lo), false}, {std::move(hi), false});
  }
  /// (lo, hi]
  static Window left_open(RingElement lo, RingElement hi) {
    return Window({std::move(lo), false}, {std::move(hi), true});
  }
  /// [lo, hi)
  static Window right_open(RingElement lo, RingElement hi) {
    return Window({std::move(lo), true}, {std::move(hi), false});
  }

  /// (0, 1], the window of the Fibonacci chain.
  static Window unit_half_open(RingSpec r = {}) {
    return left_open(RingElement(r, 0), RingElement(r, 1));
  }
  /// [-1, 1], the largest multiplicatively closed window.
  static Window unit_symmetric(RingSpec r = {}) {
    return closed(RingElement(r, -1), RingElement(r, 1));
  }

  const Boundary& lo() const { return lo_; }
  const Boundary& hi() const { return hi_; }
  const RingSpec& ring() const { return lo_.endpoint.ring(); }

  bool contains(const RingElement& x) const {
    lo_.endpoint.check_ring(x);
    const int below = sign(x - lo_.endpoint);
    if (below < 0 || (below == 0 && !lo_.closed)) return false;
    const int above = sign(hi_.endpoint - x);
    return above > 0 || (above == 0 && hi_.closed);
  }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Boundary lo_;
  Boundary hi_;
};

/// {u x : x in w}. A negative factor swaps the boundaries; each flag
/// travels with its endpoint.
inline Window scale(const Window& w, const RingElement& u) {
  const int s = sign(u);
  if (s == 0) throw std::invalid_argument("cannot scale a window by zero");
  Boundary lo{u * w.lo().endpoint, w.lo().closed};
  Boundary hi{u * w.hi().endpoint, w.hi().closed};
  if (s < 0) std::swap(lo, hi);
  return Window(std::move(lo), std::move(hi));
}

inline Window negate(const Window& w) { return scale(w, RingElement(w.ring(), -1)); }

/// Multiplicative closure condition on a window of the form [-a, b]:
/// 0 <= a <= 1, a^2 <= b <= 1. Endpoints may be open, except that a closed
/// -a with a > 0 forces b to be closed when b = a^2, since (-a)(-a) = a^2
/// must then lie in the window.
inline bool admissible_for_multiplication(const Window& w) {
  const RingSpec& r = w.ring();
  const RingElement one(r, 1);
  const RingElement& lo = w.lo().endpoint;
  const RingElement& hi = w.hi().endpoint;
  if (sign(lo) > 0 || sign(lo + one) < 0) return false;  // -1 <= lo <= 0
  if (sign(one - hi) < 0) return false;                  // hi <= 1
  const int gap = sign(hi - lo * lo);                    // b - a^2
  if (gap < 0) return false;
  if (gap == 0 && sign(lo) < 0 && w.lo().closed && !w.hi().closed) return false;
  return true;
}

inline std::string to_string(const Window& w) {
  return std::string(w.lo().closed ? "[" : "(") + to_string(w.lo().endpoint) + "," +
         to_string(w.hi().endpoint) + (w.hi().closed ? "]" : ")");
}

}  // namespace quasi

#pragma once

// Cut-and-project point sets Sigma(W) = { x in Z[alpha] : conjugate(x) in W }.

#include "quasi/qring.hpp"
#include "quasi/window.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace quasi {

class NotAMember : public std::invalid_argument {
 public:
  explicit NotAMember(const RingElement& x)
      : std::invalid_argument(to_string(x) + " is not a member of the point set") {}
};

/// Sigma(window) over the window's ring.
struct PointSet {
  Window window;

  const RingSpec& ring() const { return window.ring(); }

  static PointSet fibonacci_chain(RingSpec r = {}) { return {Window::unit_half_open(r)}; }
  static PointSet symmetric(RingSpec r = {}) { return {Window::unit_symmetric(r)}; }
};

inline bool member(const PointSet& s, const RingElement& x) {
  return s.window.contains(conjugate(x));
}

/// Chain point with alpha-coordinate n2: n2 alpha + floor(eps n2 / alpha + 1).
/// For the golden ring this is the floor formula n2 tau + floor(n2 / tau + 1).
inline RingElement chain_point(const RingSpec& r, const Integer& n2) {
  const RingElement shift = RingElement(r, 1) + Integer(r.eps() * n2) * alpha_pow(r, -1);
  return RingElement(r, floor(shift), n2);
}

inline RingElement fibonacci_point(const Integer& n2) {
  return chain_point(RingSpec::golden(), n2);
}

namespace detail {

inline Integer lowest_above(const RingElement& v, bool closed) {
  return closed ? ceil(v) : floor(v) + 1;
}

inline Integer highest_below(const RingElement& v, bool closed) {
  return closed ? floor(v) : ceil(v) - 1;
}

}  // namespace detail

/// All members x of s with lo <= x <= hi, ascending. Complete by
/// construction: x - x* = c1 sqrt(D) bounds c1, and for each c1 the
/// admissible c0 form an exact integer interval.
inline std::vector<RingElement> enumerate(const PointSet& s, const RingElement& lo,
                                          const RingElement& hi) {
  const RingSpec& r = s.ring();
  lo.check_ring(hi);
  s.window.lo().endpoint.check_ring(lo);
  if (sign(hi - lo) < 0) throw std::invalid_argument("enumeration range is inverted");

  const RingElement& w_lo = s.window.lo().endpoint;
  const RingElement& w_hi = s.window.hi().endpoint;
  const RingElement root_d(r, -r.trace(), 2);  // alpha - alpha' = sqrt(D)
  const Integer d = r.discriminant();
  // (x - x*) / sqrt(D) = (x - x*) sqrt(D) / D
  const Integer c1_min = -floor_div(floor((w_hi - lo) * root_d), d);
  const Integer c1_max = floor_div(floor((hi - w_lo) * root_d), d);

  std::vector<RingElement> out;
  for (Integer c1 = c1_min; c1 <= c1_max; ++c1) {
    const RingElement along(r, 0, c1);
    const RingElement across = conjugate(along);
    Integer c0_min = std::max(ceil(lo - along),
                              detail::lowest_above(w_lo - across, s.window.lo().closed));
    Integer c0_max = std::min(floor(hi - along),
                              detail::highest_below(w_hi - across, s.window.hi().closed));
    for (Integer c0 = c0_min; c0 <= c0_max; ++c0) out.emplace_back(r, c0, c1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct TileReport {
  std::vector<RingElement> points;
  std::vector<RingElement> gaps;  // gaps[i] = points[i + 1] - points[i]
  std::map<RingElement, std::size_t> counts;
  std::vector<RingElement> exceptional;  // lengths occurring once in range
  std::vector<RingElement> exceptional_left;  // left point of each such tile
};

inline TileReport tiles(const PointSet& s, const RingElement& lo, const RingElement& hi) {
  TileReport rep;
  rep.points = enumerate(s, lo, hi);
  if (rep.points.size() < 2) throw std::invalid_argument("tiles need at least two points");
  for (std::size_t i = 0; i + 1 < rep.points.size(); ++i) {
    rep.gaps.push_back(rep.points[i + 1] - rep.points[i]);
    ++rep.counts[rep.gaps.back()];
  }
  for (const auto& [len, n] : rep.counts) {
    if (n != 1) continue;
    rep.exceptional.push_back(len);
    for (std::size_t i = 0; i < rep.gaps.size(); ++i)
      if (rep.gaps[i] == len) rep.exceptional_left.push_back(rep.points[i]);
  }
  return rep;
}

enum class Parity { Even, Odd, Ambiguous };
enum class ParityVariant { HalfOpen01, Closed01 };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Ambiguous: return "ambiguous";
  }
  return "?";
}

/// Even iff x* in (0, 1/tau], odd iff x* in (1/tau, 1]. The closed variant
/// works on Sigma([0,1]); there x* = 1/tau sits on both sides of the split
/// and is reported as ambiguous. Golden ring only.
inline Parity parity(const RingElement& x, ParityVariant variant = ParityVariant::HalfOpen01) {
  const RingSpec& r = x.ring();
  if (!r.is_golden()) throw std::invalid_argument("parity is defined for the golden ring");
  const RingElement zero(r, 0), one(r, 1);
  const PointSet s{variant == ParityVariant::HalfOpen01 ? Window::left_open(zero, one)
                                                        : Window::closed(zero, one)};
  if (!member(s, x)) throw NotAMember(x);
  const int side = sign(conjugate(x) - alpha_pow(r, -1));
  if (side > 0) return Parity::Odd;
  if (side == 0 && variant == ParityVariant::Closed01) return Parity::Ambiguous;
  return Parity::Even;
}

/// Window on x* for which x + alpha^a y stays in Sigma((0,1]) for every
/// member y: (0, 1 - alpha'^a] when alpha'^a > 0, (|alpha'^a|, 1] otherwise.
inline Window compatibility_window(const RingSpec& r, unsigned a) {
  if (a == 0) throw std::invalid_argument("grading must be >= 1");
  const RingElement c = conjugate(alpha_pow(r, a));
  const RingElement zero(r, 0), one(r, 1);
  if (sign(c) > 0) return Window::left_open(zero, one - c);
  return Window::left_open(-c, one);
}

inline bool is_compatible(const RingElement& x, unsigned a) {
  if (!member(PointSet::fibonacci_chain(x.ring()), x)) throw NotAMember(x);
  return compatibility_window(x.ring(), a).contains(conjugate(x));
}

inline std::vector<unsigned> compatible_gradings(const RingElement& x, unsigned a_max) {
  if (!member(PointSet::fibonacci_chain(x.ring()), x)) throw NotAMember(x);
  std::vector<unsigned> out;
  for (unsigned a = 1; a <= a_max; ++a)
    if (compatibility_window(x.ring(), a).contains(conjugate(x))) out.push_back(a);
  return out;
}

/// x + alpha^a y. Never rejects input; membership of the result is a
/// consequence of grading compatibility, not a precondition.
inline RingElement graded_add(const RingElement& x, unsigned a, const RingElement& y) {
  return x + alpha_pow(x.ring(), a) * y;
}

/// tau^2 x - tau y. Golden ring only.
inline RingElement berman_moody(const RingElement& x, const RingElement& y) {
  const RingSpec& r = x.ring();
  if (!r.is_golden()) throw std::invalid_argument("berman_moody is defined for the golden ring");
  return alpha_pow(r, 2) * x - alpha_pow(r, 1) * y;
}

/// The window W_a with alpha^a Sigma((0,1]) = Sigma(W_a).
inline Window self_similar_window(const RingSpec& r, unsigned a) {
  return scale(Window::unit_half_open(r), conjugate(alpha_pow(r, a)));
}

/// The unit u = +-alpha whose conjugate is |alpha'|, so u Sigma((0,1]) is
/// Sigma((0, |alpha'|]).
inline RingElement contracting_unit(const RingSpec& r) {
  const RingElement a = RingElement::alpha(r);
  return sign(conjugate(a)) > 0 ? a : -a;
}

struct ProductViolation {
  RingElement x;
  RingElement y;
  RingElement product;
};

struct ClosureReport {
  std::size_t points = 0;
  std::size_t pairs = 0;
  std::vector<ProductViolation> violations;
};

/// Every product of two members in [lo, hi] whose conjugate leaves the window.
inline ClosureReport closure_report(const PointSet& s, const RingElement& lo,
                                    const RingElement& hi) {
  ClosureReport rep;
  const auto pts = enumerate(s, lo, hi);
  rep.points = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      ++rep.pairs;
      RingElement p = pts[i] * pts[j];
      if (!member(s, p)) rep.violations.push_back({pts[i], pts[j], std::move(p)});
    }
  }
  return rep;
}

}  // namespace quasi

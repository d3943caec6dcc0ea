#pragma once

// Multiplicatively indexed algebras: the logarithmic Witt-type algebra over
// Sigma([-1,1]), its integer model [l_m, l_n] = (m - n) l_{mn}, monoid
// factorization, and the nilpotent window-cut Witt algebra used as contrast.

#include "quasi/linear.hpp"
#include "quasi/modelset.hpp"
#include "quasi/qring.hpp"
#include "quasi/window.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quasi {

/// coeff * L_{log key}; key is the positive representative |m|.
struct LogTerm {
  double coeff = 0;
  RingElement key;
};

namespace detail {

inline void require_nonzero_symmetric_member(const RingElement& x) {
  if (x.is_zero()) throw std::invalid_argument("log generators need a nonzero index");
  if (!member(PointSet::symmetric(x.ring()), x)) throw NotAMember(x);
}

inline double log_abs(const RingElement& x) { return std::log(std::fabs(approx(x).first)); }

}  // namespace detail

/// [L_{log|m|}, L_{log|n|}] = log(|m| / |n|) L_{log|mn|}.
inline LogTerm log_bracket(const RingElement& m, const RingElement& n) {
  detail::require_nonzero_symmetric_member(m);
  detail::require_nonzero_symmetric_member(n);
  return {detail::log_abs(m) - detail::log_abs(n), abs(m * n)};
}

struct IntTerm {
  Integer coeff;
  Integer key;
};

/// [l_m, l_n] = (m - n) l_{mn}.
inline IntTerm int_mult_bracket(const Integer& m, const Integer& n) {
  if (m < 1 || n < 1) throw std::invalid_argument("integer Witt indices must be >= 1");
  return {m - n, m * n};
}

/// Which factor pairs count as "two other elements" producing a target.
enum class PreimageReading {
  /// |m| != |n| and neither factor is 1 or the target itself.
  ExcludeUnitAndSelf,
  /// Any pair with a nonzero bracket, i.e. |m| != |n|.
  NonzeroBracket,
};

namespace detail {

inline bool excluded(const RingElement& p, const RingElement& q, const RingElement& t,
                     PreimageReading reading) {
  if (p == q) return true;
  if (reading == PreimageReading::NonzeroBracket) return false;
  const RingElement one(t.ring(), 1);
  return p == one || q == one || p == t || q == t;
}

/// t / p when it lies in Z[alpha].
inline std::optional<RingElement> exact_quotient(const RingElement& t, const RingElement& p) {
  const Integer n = norm(p);
  const RingElement num = t * conjugate(p);
  if (num.c0() % n != 0 || num.c1() % n != 0) return std::nullopt;
  return RingElement(t.ring(), num.c0() / n, num.c1() / n);
}

}  // namespace detail

/// Unordered pairs (|m|, |n|), |m| < |n|, of positive members of
/// Sigma([-1,1]) with |m||n| = |target|, filtered by `reading`. Candidates
/// |m| <= bound are enumerated exhaustively; |norm(m)| must divide
/// |norm(target)|.
inline std::vector<std::pair<RingElement, RingElement>> bracket_preimages(
    const RingElement& target, const RingElement& bound,
    PreimageReading reading = PreimageReading::ExcludeUnitAndSelf) {
  detail::require_nonzero_symmetric_member(target);
  const RingSpec& r = target.ring();
  const RingElement t = abs(target);
  const Integer target_norm = boost::multiprecision::abs(norm(t));
  const PointSet sym = PointSet::symmetric(r);
  std::vector<std::pair<RingElement, RingElement>> out;
  if (sign(bound) <= 0) return out;
  for (const RingElement& p : enumerate(sym, RingElement(r, 0), bound)) {
    if (sign(p) <= 0) continue;
    const Integer pn = boost::multiprecision::abs(norm(p));
    if (target_norm % pn != 0) continue;
    auto q = detail::exact_quotient(t, p);
    if (!q || !member(sym, *q) || !(p < *q)) continue;
    if (detail::excluded(p, *q, t, reading)) continue;
    out.emplace_back(p, std::move(*q));
  }
  return out;
}

struct Irreducibility {
  bool irreducible = true;
  /// |norm(x)| = 1: a unit, irreducible by convention.
  bool unit_convention = false;
  std::optional<std::pair<RingElement, RingElement>> factors;
};

/// Whether x admits x = p q with p, q in s, 1 < |p| <= |q| < |x|.
/// Candidates |p| <= bound; units are reported irreducible and flagged.
/// s must be closed under multiplication.
inline Irreducibility monoid_irreducible(const RingElement& x, const RingElement& bound,
                                         const PointSet& s) {
  if (x.is_zero()) throw std::invalid_argument("monoid_irreducible needs a nonzero element");
  if (!member(s, x)) throw NotAMember(x);
  if (!admissible_for_multiplication(s.window))
    throw std::invalid_argument("window " + to_string(s.window) + " is not a monoid");
  const RingSpec& r = x.ring();
  const RingElement one(r, 1);
  const RingElement t = abs(x);
  if (sign(t - one) <= 0) throw std::invalid_argument("monoid_irreducible needs |x| > 1");
  Irreducibility out;
  const Integer target_norm = boost::multiprecision::abs(norm(t));
  if (target_norm == 1) {
    out.unit_convention = true;
    return out;
  }
  const RingElement top = bound < t ? bound : t;
  if (sign(top - one) <= 0) return out;
  // Both signs of p: -p q' = t with q' = -q, and s need not be symmetric.
  for (const RingElement& cand : enumerate(s, -top, top)) {
    const RingElement p = abs(cand);
    if (!(one < p) || !(p < t)) continue;
    if (target_norm % boost::multiprecision::abs(norm(p)) != 0) continue;
    auto q = detail::exact_quotient(x, cand);
    if (!q || !member(s, *q) || abs(*q) < p || !(abs(*q) < t)) continue;
    out.irreducible = false;
    out.factors = std::make_pair(cand, std::move(*q));
    return out;
  }
  return out;
}

inline Irreducibility monoid_irreducible(const RingElement& x, const RingElement& bound) {
  return monoid_irreducible(x, bound, PointSet::symmetric(x.ring()));
}

inline Irreducibility monoid_irreducible(const RingElement& x) {
  return monoid_irreducible(x, abs(x));
}

/// Integer model: pairs (m, n), m < n, m n = target, filtered by `reading`.
inline std::vector<std::pair<Integer, Integer>> int_bracket_preimages(
    const Integer& target, PreimageReading reading = PreimageReading::ExcludeUnitAndSelf) {
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer m = 1; m * m < target; ++m) {
    if (target % m != 0) continue;
    const Integer n = target / m;
    if (reading == PreimageReading::ExcludeUnitAndSelf && (m == 1 || n == target)) continue;
    out.emplace_back(m, n);
  }
  return out;
}

using AwElement = LinearCombination<RingElement, CoefficientLess>;

namespace detail {

inline void require_aw_window(const Window& w) {
  if (sign(w.lo().endpoint) * sign(w.hi().endpoint) < 0)
    throw std::invalid_argument("window-cut Witt algebra needs a window [a,b] with a*b >= 0");
}

}  // namespace detail

/// [L_n, L_m] = (m - n) chi_w(n* + m*) L_{n+m}.
inline AwElement aw_bracket(const RingElement& n, const RingElement& m, const Window& w) {
  detail::require_aw_window(w);
  const PointSet s{w};
  if (!member(s, n)) throw NotAMember(n);
  if (!member(s, m)) throw NotAMember(m);
  if (!w.contains(conjugate(n) + conjugate(m))) return {};
  return AwElement(n + m, m - n);
}

inline AwElement aw_bracket(const AwElement& x, const AwElement& y, const Window& w) {
  return bilinear_bracket(x, y, [&w](const RingElement& n, const RingElement& m) {
    return aw_bracket(n, m, w);
  });
}

/// Dimensions of the spans of d-fold left-nested window-cut brackets.
inline std::vector<std::size_t> aw_lower_central_probe(const std::vector<RingElement>& generating,
                                                       std::size_t depth, const Window& w) {
  detail::require_aw_window(w);
  std::vector<AwElement> gens;
  for (const auto& p : generating) {
    if (!member(PointSet{w}, p)) throw NotAMember(p);
    gens.emplace_back(p, RingElement(p.ring(), 1));
  }
  return nested_bracket_dimensions(gens, depth, [&w](const AwElement& x, const AwElement& y) {
    return aw_bracket(x, y, w);
  });
}

}  // namespace quasi

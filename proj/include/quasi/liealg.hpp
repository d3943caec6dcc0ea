#pragma once

// The graded associative product J^a_m J^b_n = J^{a+b}_{m + alpha^a n} and
// its commutator Lie algebra over Sigma([-1,1]).

#include "quasi/linear.hpp"
#include "quasi/modelset.hpp"
#include "quasi/qring.hpp"
#include "quasi/window.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasi {

/// J^a_m: grading a, sub-index m.
struct Generator {
  unsigned grading = 0;
  RingElement index;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct GeneratorLess {
  bool operator()(const Generator& g, const Generator& h) const {
    if (g.grading != h.grading) return g.grading < h.grading;
    return CoefficientLess{}(g.index, h.index);
  }
};

inline std::string to_string(const Generator& g) {
  return "J[a=" + std::to_string(g.grading) + ",m=" + to_string(g.index) + "]";
}

using FreeElement = LinearCombination<Generator, GeneratorLess>;

/// Generator validity rules.
///  StrictPaper: J^0_0, or m in Sigma((0,1]) compatible with a, or
///    m in Sigma([-1,0)) with -m compatible with a.
///  SymmetricClosed: J^a_0 for every a, or m != 0 with |m*| <= 1 - |alpha'|^a.
///    The product of two valid generators is valid again.
enum class Mode { StrictPaper, SymmetricClosed };

inline const char* to_string(Mode m) {
  return m == Mode::StrictPaper ? "strict-paper" : "symmetric-closed";
}

class InvalidGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A product of valid generators whose result is not a valid generator.
class ClosureDefect : public std::runtime_error {
 public:
  ClosureDefect(Generator left, Generator right, Generator result, const std::string& why)
      : std::runtime_error("closure defect: " + to_string(left) + " * " + to_string(right) +
                           " = " + to_string(result) + " (" + why + ")"),
        left_(std::move(left)),
        right_(std::move(right)),
        result_(std::move(result)) {}

  const Generator& left() const { return left_; }
  const Generator& right() const { return right_; }
  const Generator& result() const { return result_; }

 private:
  Generator left_, right_, result_;
};

/// Reason g is not valid in the given mode, or nullopt if it is.
inline std::optional<std::string> validity_violation(const Generator& g, Mode mode) {
  const RingSpec& r = g.index.ring();
  const int s = sign(g.index);
  if (s == 0) {
    if (mode == Mode::SymmetricClosed || g.grading == 0) return std::nullopt;
    return "J^a_0 with a > 0 is not a generator in strict-paper mode";
  }
  if (g.grading == 0) return "the fine grading a = 0 is not permissible with m != 0";
  const RingElement conj = conjugate(g.index);
  if (mode == Mode::SymmetricClosed) {
    // |m*| <= 1 - |alpha'^a|
    const RingElement bound = RingElement(r, 1) - abs(conjugate(alpha_pow(r, g.grading)));
    if (sign(bound - abs(conj)) < 0) return "|m*| exceeds 1 - |alpha'|^a";
    return std::nullopt;
  }
  const RingElement cone = s > 0 ? g.index : -g.index;
  if (!member(PointSet::fibonacci_chain(r), cone))
    return "sub-index is not in Sigma([-1,0) u (0,1])";
  if (!is_compatible(cone, g.grading)) return "sub-index is not compatible with grading a";
  return std::nullopt;
}

inline bool is_valid(const Generator& g, Mode mode) { return !validity_violation(g, mode); }

inline Generator make_generator(unsigned a, RingElement m, Mode mode) {
  Generator g{a, std::move(m)};
  if (auto why = validity_violation(g, mode))
    throw InvalidGenerator(to_string(g) + ": " + *why);
  return g;
}

/// Index composition (a, m) . (b, n) = (a + b, m + alpha^a n), unvalidated.
inline Generator compose(const Generator& g, const Generator& h) {
  return {g.grading + h.grading, graded_add(g.index, g.grading, h.index)};
}

/// J^a_m J^b_n. Throws ClosureDefect when the result is not valid in `mode`.
inline Generator assoc_product(const Generator& g, const Generator& h, Mode mode) {
  Generator out = compose(g, h);
  if (auto why = validity_violation(out, mode)) throw ClosureDefect(g, h, out, *why);
  return out;
}

/// [J^a_m, J^b_n] = J^{a+b}_{m + alpha^a n} - J^{a+b}_{n + alpha^b m}.
inline FreeElement bracket(const Generator& g, const Generator& h, Mode mode) {
  const RingElement one(g.index.ring(), 1);
  FreeElement out(assoc_product(g, h, mode), one);
  out.add(assoc_product(h, g, mode), -one);
  return out;
}

inline FreeElement bracket(const FreeElement& x, const FreeElement& y, Mode mode) {
  return bilinear_bracket(x, y, [mode](const Generator& g, const Generator& h) {
    return bracket(g, h, mode);
  });
}

inline FreeElement as_element(const Generator& g) {
  return FreeElement(g, RingElement(g.index.ring(), 1));
}

/// [[g,h],k] + [[h,k],g] + [[k,g],h]; zero for a Lie algebra.
inline FreeElement jacobi_residual(const Generator& g, const Generator& h, const Generator& k,
                                   Mode mode) {
  const FreeElement eg = as_element(g), eh = as_element(h), ek = as_element(k);
  FreeElement out = bracket(bracket(g, h, mode), ek, mode);
  out += bracket(bracket(h, k, mode), eg, mode);
  out += bracket(bracket(k, g, mode), eh, mode);
  return out;
}

/// Valid generators with sub-index in Sigma([-1,1]) and [lo, hi], gradings 0..a_max.
inline std::vector<Generator> valid_generators(Mode mode, const RingElement& lo,
                                               const RingElement& hi, unsigned a_max) {
  std::vector<Generator> out;
  for (const RingElement& m : enumerate(PointSet::symmetric(lo.ring()), lo, hi))
    for (unsigned a = 0; a <= a_max; ++a) {
      Generator g{a, m};
      if (is_valid(g, mode)) out.push_back(std::move(g));
    }
  return out;
}

struct ClosureDefectWitness {
  Generator left;
  Generator right;
  Generator result;
  std::string reason;
};

struct ClosureProbeReport {
  std::size_t generators = 0;
  std::size_t pairs = 0;
  std::vector<ClosureDefectWitness> defects;
};

/// Every ordered pair of valid generators (sub-indices in [lo, hi],
/// gradings <= a_max) whose product is not valid.
inline ClosureProbeReport closure_probe(Mode mode, const RingElement& lo, const RingElement& hi,
                                        unsigned a_max) {
  ClosureProbeReport rep;
  const auto gens = valid_generators(mode, lo, hi, a_max);
  rep.generators = gens.size();
  for (const auto& g : gens)
    for (const auto& h : gens) {
      ++rep.pairs;
      Generator p = compose(g, h);
      if (auto why = validity_violation(p, mode))
        rep.defects.push_back({g, h, std::move(p), *why});
    }
  return rep;
}

struct TriangularParts {
  FreeElement negative;
  FreeElement center;
  FreeElement positive;
};

/// Splits terms by the sign of their sub-index.
inline TriangularParts triangular_split(const FreeElement& x) {
  TriangularParts parts;
  for (const auto& [g, c] : x.terms()) {
    const int s = sign(g.index);
    FreeElement& dst = s < 0 ? parts.negative : (s == 0 ? parts.center : parts.positive);
    dst.add(g, c);
  }
  return parts;
}

/// (a, m) -> (a, -m); exchanges the positive and negative halves.
inline Generator mirror(const Generator& g) { return {g.grading, -g.index}; }

/// (a, m) -> (a, alpha^s m), the embedding onto the self-similar copy with
/// index set alpha^s Sigma([-1,1]) = Sigma([-|alpha'|^s, |alpha'|^s]).
inline Generator scale_generator(const Generator& g, unsigned s) {
  return {g.grading, alpha_pow(g.index.ring(), s) * g.index};
}

/// Whether g lies in the image of scale_generator(., s) applied to valid
/// symmetric-closed generators: |m*| <= |alpha'|^s (1 - |alpha'|^a), with
/// J^0_0 always included. The extra grading factor is what makes the image
/// closed under the product.
inline bool in_scaled_subalgebra(const Generator& g, unsigned s) {
  const RingSpec& r = g.index.ring();
  if (g.index.is_zero()) return true;
  const RingElement shrink = abs(conjugate(alpha_pow(r, s)));
  const RingElement room = RingElement(r, 1) - abs(conjugate(alpha_pow(r, g.grading)));
  return sign(shrink * room - abs(conjugate(g.index))) >= 0;
}

/// Whether m lies in the scaled index set Sigma([-|alpha'|^s, |alpha'|^s]).
inline bool in_scaled_index_set(const RingElement& m, unsigned s) {
  return sign(abs(conjugate(alpha_pow(m.ring(), s))) - abs(conjugate(m))) >= 0;
}

/// Dimensions of the spans of d-fold left-nested brackets of `generating`.
inline std::vector<std::size_t> lower_central_probe(const std::vector<Generator>& generating,
                                                    std::size_t depth, Mode mode) {
  std::vector<FreeElement> gens;
  for (const auto& g : generating) {
    if (auto why = validity_violation(g, mode))
      throw InvalidGenerator(to_string(g) + ": " + *why);
    gens.push_back(as_element(g));
  }
  return nested_bracket_dimensions(gens, depth, [mode](const FreeElement& x, const FreeElement& y) {
    return bracket(x, y, mode);
  });
}

}  // namespace quasi

#pragma once

// Finite formal linear combinations over Z[alpha] and exact span
// computations over its fraction field.

#include "quasi/qring.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace quasi {

/// Sparse map key -> nonzero ring coefficient. Equal maps are equal elements.
template <class Key, class KeyLess = std::less<Key>>
class LinearCombination {
 public:
  using Terms = std::map<Key, RingElement, KeyLess>;

  LinearCombination() = default;
  LinearCombination(const Key& k, RingElement coeff) { add(k, std::move(coeff)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& k, const RingElement& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  LinearCombination& operator+=(const LinearCombination& y) {
    for (const auto& [k, c] : y.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& y) {
    for (const auto& [k, c] : y.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const RingElement& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination x, const LinearCombination& y) {
    return x += y;
  }
  friend LinearCombination operator-(LinearCombination x, const LinearCombination& y) {
    return x -= y;
  }
  friend LinearCombination operator*(const RingElement& s, LinearCombination x) {
    return x *= s;
  }
  LinearCombination operator-() const {
    LinearCombination out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }

  friend bool operator==(const LinearCombination& x, const LinearCombination& y) {
    return x.terms_ == y.terms_;
  }

 private:
  Terms terms_;
};

/// Bilinear extension of a bracket defined on basis keys.
template <class Key, class KeyLess, class BasisBracket>
LinearCombination<Key, KeyLess> bilinear_bracket(const LinearCombination<Key, KeyLess>& x,
                                                 const LinearCombination<Key, KeyLess>& y,
                                                 BasisBracket&& basis_bracket) {
  LinearCombination<Key, KeyLess> out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out += (cx * cy) * basis_bracket(kx, ky);
  return out;
}

namespace detail {

/// Divides out the integer content of all coefficients.
template <class Key, class KeyLess>
void strip_content(LinearCombination<Key, KeyLess>& v) {
  Integer g = 0;
  for (const auto& [k, c] : v.terms()) {
    g = gcd(g, c.c0());
    g = gcd(g, c.c1());
    if (g == 1) return;
  }
  if (g <= 1) return;
  LinearCombination<Key, KeyLess> out;
  for (const auto& [k, c] : v.terms())
    out.add(k, RingElement(c.ring(), c.c0() / g, c.c1() / g));
  v = std::move(out);
}

}  // namespace detail

/// Row-echelon basis of span(vectors) over the fraction field of Z[alpha].
/// Fraction-free: eliminating with pivot p uses v <- p v - c row, which
/// stays in the ring because Z[alpha] is an integral domain.
template <class Key, class KeyLess>
std::vector<LinearCombination<Key, KeyLess>> echelon_basis(
    const std::vector<LinearCombination<Key, KeyLess>>& vectors) {
  std::map<Key, LinearCombination<Key, KeyLess>, KeyLess> rows;  // by pivot key
  for (auto v : vectors) {
    while (!v.is_zero()) {
      const auto& [pivot_key, coeff] = *v.terms().begin();
      auto it = rows.find(pivot_key);
      if (it == rows.end()) {
        detail::strip_content(v);
        const Key k = v.terms().begin()->first;
        rows.emplace(k, std::move(v));
        break;
      }
      const RingElement c = coeff;
      const RingElement p = it->second.terms().begin()->second;
      v *= p;
      v -= c * it->second;
      detail::strip_content(v);
    }
  }
  std::vector<LinearCombination<Key, KeyLess>> out;
  out.reserve(rows.size());
  for (auto& [k, row] : rows) out.push_back(std::move(row));
  return out;
}

template <class Key, class KeyLess>
std::size_t rank(const std::vector<LinearCombination<Key, KeyLess>>& vectors) {
  return echelon_basis(vectors).size();
}

/// Dimensions of the spans of d-fold left-nested brackets
/// [[[g1, g2], g3], ..., gd] of the generating set, for d = 1..depth.
/// Level d + 1 is spanned by [b, g] with b in a basis of level d.
template <class Key, class KeyLess, class Bracket>
std::vector<std::size_t> nested_bracket_dimensions(
    const std::vector<LinearCombination<Key, KeyLess>>& generating, std::size_t depth,
    Bracket&& bracket) {
  std::vector<std::size_t> dims;
  if (depth == 0) return dims;
  auto level = echelon_basis(generating);
  dims.push_back(level.size());
  for (std::size_t d = 2; d <= depth; ++d) {
    std::vector<LinearCombination<Key, KeyLess>> next;
    for (const auto& b : level)
      for (const auto& g : generating) {
        auto v = bracket(b, g);
        if (!v.is_zero()) next.push_back(std::move(v));
      }
    level = echelon_basis(next);
    dims.push_back(level.size());
  }
  return dims;
}

}  // namespace quasi

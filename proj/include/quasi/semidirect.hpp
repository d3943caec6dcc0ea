#pragma once

// The index composition written as a semi-direct product Z^2 x_Phi N,
// (m, a) x (n, b) = (m + Phi(a) n, a + b), with Phi(a) the matrix of
// multiplication by alpha^a in the basis (1, alpha).

#include "quasi/liealg.hpp"
#include "quasi/qring.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace quasi {

struct Matrix2 {
  std::array<Integer, 4> e{1, 0, 0, 1};  // row-major

  const Integer& operator()(int i, int j) const { return e[2 * i + j]; }
  Integer& operator()(int i, int j) { return e[2 * i + j]; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    Matrix2 out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return out;
  }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

inline std::string to_string(const Matrix2& m) {
  return "[[" + m(0, 0).str() + "," + m(0, 1).str() + "],[" + m(1, 0).str() + "," +
         m(1, 1).str() + "]]";
}

/// Phi(a) = [[eps g_{a-1}, eps g_a], [g_a, g_{a+1}]]; for the golden ring
/// [[f_{a-1}, f_a], [f_a, f_{a+1}]]. Phi(0) is the identity.
inline Matrix2 phi_matrix(const RingSpec& r, std::int64_t a) {
  auto [prev, cur] = fib_pair(r, a);
  Matrix2 m;
  m(0, 0) = r.eps() * prev;
  m(0, 1) = r.eps() * cur;
  m(1, 0) = cur;
  m(1, 1) = r.trace() * cur + r.eps() * prev;  // g_{a+1}
  return m;
}

inline Matrix2 phi_matrix(std::int64_t a) { return phi_matrix(RingSpec::golden(), a); }

/// ((m1, m2), a) with m = m1 + m2 alpha.
struct SdpElement {
  Integer m1;
  Integer m2;
  unsigned a = 0;

  friend bool operator==(const SdpElement&, const SdpElement&) = default;
};

inline SdpElement to_sdp(const Generator& g) { return {g.index.c0(), g.index.c1(), g.grading}; }

inline SdpElement sdp_compose(const RingSpec& r, const SdpElement& x, const SdpElement& y) {
  const Matrix2 phi = phi_matrix(r, x.a);
  return {x.m1 + phi(0, 0) * y.m1 + phi(0, 1) * y.m2,
          x.m2 + phi(1, 0) * y.m1 + phi(1, 1) * y.m2, x.a + y.a};
}

inline SdpElement sdp_compose(const SdpElement& x, const SdpElement& y) {
  return sdp_compose(RingSpec::golden(), x, y);
}

/// Whether the matrix route reproduces the ring route m + alpha^a n.
inline bool sdp_equivalence_check(const Generator& g, const Generator& h) {
  const SdpElement via_matrix = sdp_compose(g.index.ring(), to_sdp(g), to_sdp(h));
  return via_matrix == to_sdp(compose(g, h));
}

}  // namespace quasi

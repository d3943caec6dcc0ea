#include "quasi/liealg.hpp"

#include "quasi/semidirect.hpp"

#include <gtest/gtest.h>

#include <random>

namespace quasi {
namespace {

const RingSpec kGolden;
const RingSpec kSilver(2, 1);
const RingSpec kSquared(3, -1);

constexpr Mode kStrict = Mode::StrictPaper;
constexpr Mode kClosed = Mode::SymmetricClosed;

RingElement E(long c0, long c1 = 0, RingSpec r = {}) { return RingElement(r, c0, c1); }
Generator G(unsigned a, long c0, long c1 = 0, RingSpec r = {}) { return {a, E(c0, c1, r)}; }

FreeElement F(const Generator& g, long c = 1) { return FreeElement(g, E(c, 0, g.index.ring())); }

// Independent route for a generator product: alpha^a by repeated
// multiplication instead of the closed form.
Generator slow_compose(const Generator& g, const Generator& h) {
  RingElement p(g.index.ring(), 1);
  for (unsigned i = 0; i < g.grading; ++i) p *= RingElement::alpha(g.index.ring());
  return {g.grading + h.grading, g.index + p * h.index};
}

const std::vector<Generator>& core() {
  static const std::vector<Generator> gens = valid_generators(kClosed, E(-8), E(8), 4);
  return gens;
}

TEST(MakeGenerator, Examples) {
  EXPECT_NO_THROW(make_generator(2, E(1, 1), kStrict));
  EXPECT_NO_THROW(make_generator(2, E(1, 1), kClosed));
  EXPECT_THROW(make_generator(0, E(1), kStrict), InvalidGenerator);
  EXPECT_THROW(make_generator(0, E(1), kClosed), InvalidGenerator);
  EXPECT_NO_THROW(make_generator(0, E(0), kStrict));
  EXPECT_NO_THROW(make_generator(0, E(0), kClosed));
}

TEST(MakeGenerator, ModesDifferWhereDocumented) {
  // J^a_0 with a > 0
  EXPECT_THROW(make_generator(3, E(0), kStrict), InvalidGenerator);
  EXPECT_NO_THROW(make_generator(3, E(0), kClosed));
  // (2t+2)* = 4 - 2t ~ 0.76: odd-compatible, but above 1 - 1/t
  EXPECT_NO_THROW(make_generator(1, E(2, 2), kStrict));
  EXPECT_THROW(make_generator(1, E(2, 2), kClosed), InvalidGenerator);
  // non-members and incompatible gradings
  EXPECT_THROW(make_generator(1, E(0, 1), kStrict), InvalidGenerator);  // t* < 0
  EXPECT_THROW(make_generator(2, E(1), kStrict), InvalidGenerator);     // 1 > 1/t
  EXPECT_NO_THROW(make_generator(1, E(-1), kStrict));
  EXPECT_THROW(make_generator(1, E(-1), kClosed), InvalidGenerator);
}

TEST(MakeGenerator, ErrorNamesTheViolatedClause) {
  try {
    make_generator(0, E(1), kStrict);
    FAIL();
  } catch (const InvalidGenerator& e) {
    EXPECT_NE(std::string(e.what()).find("a = 0"), std::string::npos) << e.what();
  }
}

TEST(AssocProduct, Examples) {
  EXPECT_EQ(assoc_product(G(2, 1, 1), G(1, 2, 2), kStrict), G(3, 5, 7));
  for (const auto& g : core()) EXPECT_EQ(assoc_product(G(0, 0), g, kClosed), g);
  const Generator n = G(1, 1), m = G(2, 1, 1), k = G(1, 2, 2);
  const Generator left = assoc_product(assoc_product(n, m, kStrict), k, kStrict);
  const Generator right = assoc_product(n, assoc_product(m, k, kStrict), kStrict);
  EXPECT_EQ(left, right);
  // n + t m + t^3 k
  EXPECT_EQ(left.index, n.index + alpha_pow(kGolden, 1) * m.index + alpha_pow(kGolden, 3) * k.index);
  EXPECT_EQ(left.grading, 4u);
}

TEST(AssocProduct, StrictDefectThrows) {
  EXPECT_THROW(assoc_product(G(2, 2, 3), G(2, -1, -1), kStrict), ClosureDefect);
  try {
    assoc_product(G(2, 2, 3), G(2, -1, -1), kStrict);
  } catch (const ClosureDefect& e) {
    EXPECT_EQ(e.result(), G(4, 0));
  }
  EXPECT_EQ(assoc_product(G(2, 2, 3), G(2, -1, -1), kClosed), G(4, 0));
}

TEST(AssocProduct, MatchesRepeatedMultiplicationRoute) {
  for (RingSpec r : {kGolden, kSilver, kSquared}) {
    const auto gens = valid_generators(kClosed, E(-6, 0, r), E(6, 0, r), 5);
    for (const auto& g : gens)
      for (const auto& h : gens) EXPECT_EQ(compose(g, h), slow_compose(g, h));
  }
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(G(2, 1, 1), G(1, 2, 2), kStrict), F(G(3, 5, 7)) - F(G(3, 3, 4)));
  EXPECT_TRUE(bracket(G(0, 0), G(1, 1), kStrict).is_zero());
  // t+1 + t^2 = 2t+2 = 1 + t(t+1)
  EXPECT_TRUE(bracket(G(2, 1, 1), G(1, 1), kStrict).is_zero());
}

TEST(Bracket, FreeExtensionIsBilinear) {
  const Generator g = G(2, 1, 1), h = G(1, 2, 2), k = G(1, 1);
  const FreeElement x = F(g) + F(h, -3);
  EXPECT_TRUE(bracket(x, x, kStrict).is_zero());
  EXPECT_EQ(bracket(F(g, 2), F(h), kStrict), E(2) * bracket(g, h, kStrict));
  EXPECT_EQ(bracket(F(g) + F(h), F(k), kStrict), bracket(g, k, kStrict) + bracket(h, k, kStrict));
  const RingElement c = E(-1, 3);
  EXPECT_EQ(bracket(c * F(g), F(h), kStrict), c * bracket(g, h, kStrict));
}

TEST(Bracket, AntisymmetryOnCore) {
  for (const auto& g : core())
    for (const auto& h : core())
      EXPECT_TRUE((bracket(g, h, kClosed) + bracket(h, g, kClosed)).is_zero());
}

TEST(Jacobi, Examples) {
  EXPECT_TRUE(jacobi_residual(G(1, 1), G(2, 1, 1), G(1, 2, 2), kStrict).is_zero());
  for (const auto& g : core())
    EXPECT_TRUE(jacobi_residual(G(0, 0), g, core().front(), kClosed).is_zero());
}

TEST(Jacobi, ExhaustiveCoreIsExactlyZero) {
  const auto& gens = core();
  ASSERT_GT(gens.size(), 30u);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = j + 1; k < gens.size(); ++k)
        ASSERT_TRUE(jacobi_residual(gens[i], gens[j], gens[k], kClosed).is_zero())
            << to_string(gens[i]) << to_string(gens[j]) << to_string(gens[k]);
}

TEST(Jacobi, RandomTriplesAcrossRings) {
  std::mt19937_64 rng(41);
  for (RingSpec r : {kGolden, kSilver, kSquared}) {
    const auto gens = valid_generators(kClosed, E(-80, 0, r), E(80, 0, r), 9);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int i = 0; i < 1500; ++i) {
      const auto &g = gens[pick(rng)], &h = gens[pick(rng)], &k = gens[pick(rng)];
      ASSERT_TRUE(jacobi_residual(g, h, k, kClosed).is_zero());
      EXPECT_EQ(compose(compose(g, h), k), compose(g, compose(h, k)));
    }
  }
}

TEST(Center, OnlyTheUnitGeneratorIsCentral) {
  const auto& gens = core();
  for (const auto& g : gens) {
    EXPECT_TRUE(bracket(G(0, 0), g, kClosed).is_zero());
    if (g == G(0, 0)) continue;
    bool witnessed = false;
    for (const auto& h : gens)
      if (!bracket(g, h, kClosed).is_zero()) {
        witnessed = true;
        break;
      }
    EXPECT_TRUE(witnessed) << to_string(g);
  }
}

TEST(ClosureProbe, SymmetricClosedHasNoDefects) {
  for (RingSpec r : {kGolden, kSilver, kSquared}) {
    const auto rep = closure_probe(kClosed, E(-8, 0, r), E(8, 0, r), 4);
    EXPECT_GT(rep.pairs, 0u);
    EXPECT_TRUE(rep.defects.empty()) << to_string(r);
  }
}

TEST(ClosureProbe, StrictFindsTheZeroIndexWitness) {
  ASSERT_EQ(E(0, 1) * E(0, 1) * E(1, 1), E(2, 3));  // t^2 (t+1) = 3t+2
  const auto rep = closure_probe(kStrict, E(-3), E(7), 2);
  bool found = false;
  for (const auto& d : rep.defects) {
    EXPECT_FALSE(is_valid(d.result, kStrict));
    EXPECT_EQ(compose(d.left, d.right), d.result);
    if (d.left == G(2, 2, 3) && d.right == G(2, -1, -1)) {
      found = true;
      EXPECT_EQ(d.result, G(4, 0));
    }
  }
  EXPECT_TRUE(found);
}

TEST(ClosureProbe, StrictPositiveConeHasNoDefects) {
  const auto rep = closure_probe(kStrict, E(0), E(30), 6);
  EXPECT_GT(rep.generators, 20u);
  EXPECT_TRUE(rep.defects.empty());
}

TEST(TriangularSplit, Examples) {
  const FreeElement x = F(G(3, 5, 7)) - F(G(3, -3, -4));
  const auto parts = triangular_split(x);
  EXPECT_EQ(parts.positive, F(G(3, 5, 7)));
  EXPECT_EQ(parts.negative, -F(G(3, -3, -4)));
  EXPECT_TRUE(parts.center.is_zero());

  const auto c = triangular_split(E(2, 1) * F(G(0, 0)));
  EXPECT_EQ(c.center, E(2, 1) * F(G(0, 0)));
  EXPECT_TRUE(c.positive.is_zero() && c.negative.is_zero());

  const auto z = triangular_split(FreeElement{});
  EXPECT_TRUE(z.positive.is_zero() && z.negative.is_zero() && z.center.is_zero());
}

TEST(TriangularSplit, PartsSumBack) {
  FreeElement x;
  long c = 1;
  for (const auto& g : core()) {
    x.add(g, E(c % 5 - 2, c % 3));
    ++c;
  }
  const auto p = triangular_split(x);
  EXPECT_EQ(p.negative + p.center + p.positive, x);
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror(G(2, 1, 1)), G(2, -1, -1));
  EXPECT_EQ(mirror(G(0, 0)), G(0, 0));
  for (const auto& g : core()) EXPECT_EQ(mirror(mirror(g)), g);
}

TEST(Mirror, PreservesValidityAndSwapsHalves) {
  for (Mode mode : {kStrict, kClosed}) {
    for (const auto& g : valid_generators(mode, E(-20), E(20), 6)) {
      EXPECT_TRUE(is_valid(mirror(g), mode)) << to_string(g);
      EXPECT_EQ(sign(mirror(g).index), -sign(g.index));
    }
  }
}

TEST(ScaledSubalgebra, Examples) {
  EXPECT_TRUE(in_scaled_subalgebra(G(0, 0), 1));
  EXPECT_TRUE(in_scaled_subalgebra(G(0, 0), 7));
  EXPECT_FALSE(in_scaled_subalgebra(G(1, 1), 1));
  EXPECT_FALSE(in_scaled_index_set(E(1), 1));
  // t times a valid generator lands in the s = 1 family
  const Generator g = G(2, 1, 1);
  ASSERT_TRUE(is_valid(g, kClosed));
  const Generator scaled = scale_generator(g, 1);
  EXPECT_EQ(scaled.index, E(1, 2));
  EXPECT_TRUE(in_scaled_subalgebra(scaled, 1));
  EXPECT_TRUE(in_scaled_index_set(scaled.index, 1));
}

TEST(ScaledSubalgebra, IsTheImageOfScaling) {
  for (unsigned s = 0; s <= 4; ++s) {
    for (const auto& g : valid_generators(kClosed, E(-12), E(12), 5)) {
      const Generator h = scale_generator(g, s);
      EXPECT_TRUE(in_scaled_subalgebra(h, s)) << s << to_string(g);
      EXPECT_TRUE(in_scaled_index_set(h.index, s));
    }
    // and nothing else: membership pulls back to a valid generator
    for (const auto& h : valid_generators(kClosed, E(-12), E(12), 5)) {
      if (!in_scaled_subalgebra(h, s)) continue;
      const Generator back{h.grading, alpha_pow(kGolden, -static_cast<int>(s)) * h.index};
      EXPECT_TRUE(is_valid(back, kClosed)) << s << to_string(h);
    }
  }
}

TEST(ScaledSubalgebra, BracketsStayInside) {
  for (unsigned s = 1; s <= 3; ++s) {
    std::vector<Generator> sub;
    for (const auto& g : valid_generators(kClosed, E(-10), E(10), 4))
      if (in_scaled_subalgebra(g, s)) sub.push_back(g);
    ASSERT_GT(sub.size(), 4u);
    for (const auto& g : sub)
      for (const auto& h : sub) {
        const FreeElement b = bracket(g, h, kClosed);
        for (const auto& [k, c] : b.terms())
          EXPECT_TRUE(in_scaled_subalgebra(k, s)) << s << " " << to_string(k);
      }
  }
}

TEST(ScaledSubalgebra, IndexSetAloneIsNotClosed) {
  // Generators whose index merely lies in the scaled index set can leave it.
  bool escaped = false;
  for (const auto& g : valid_generators(kClosed, E(-10), E(10), 4)) {
    if (!in_scaled_index_set(g.index, 1)) continue;
    for (const auto& h : valid_generators(kClosed, E(-10), E(10), 4)) {
      if (!in_scaled_index_set(h.index, 1)) continue;
      if (!in_scaled_index_set(compose(g, h).index, 1)) escaped = true;
    }
  }
  EXPECT_TRUE(escaped);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi_matrix(1), (Matrix2{{0, 1, 1, 1}}));
  EXPECT_EQ(phi_matrix(2), (Matrix2{{1, 1, 1, 2}}));
  EXPECT_EQ(phi_matrix(0), Matrix2{});
  EXPECT_EQ(phi_matrix(1) * phi_matrix(1), phi_matrix(2));
}

TEST(Phi, IsAHomomorphism) {
  for (RingSpec r : {kGolden, kSilver, kSquared})
    for (int a = 0; a <= 30; ++a)
      for (int b = 0; b <= 30; ++b)
        EXPECT_EQ(phi_matrix(r, a) * phi_matrix(r, b), phi_matrix(r, a + b));
}

TEST(Phi, GoldenEntriesAreFibonacci) {
  for (int a = 0; a <= 40; ++a) {
    const Matrix2 m = phi_matrix(a);
    EXPECT_EQ(m, (Matrix2{{fibonacci(a - 1), fibonacci(a), fibonacci(a), fibonacci(a + 1)}}));
  }
}

TEST(Sdp, Examples) {
  const SdpElement x{1, 1, 2}, y{2, 2, 1};
  EXPECT_EQ(sdp_compose(x, y), (SdpElement{5, 7, 3}));
  EXPECT_EQ(sdp_compose(SdpElement{0, 0, 0}, y), y);
  EXPECT_TRUE(sdp_equivalence_check(G(2, 1, 1), G(1, 2, 2)));
  for (const auto& g : core()) EXPECT_TRUE(sdp_equivalence_check(G(0, 0), g));
}

TEST(Sdp, AssociativeAndEquivalentOnRandomPairs) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> c(-1000, 1000);
  std::uniform_int_distribution<unsigned> a(0, 12);
  for (RingSpec r : {kGolden, kSilver, kSquared}) {
    for (int i = 0; i < 2000; ++i) {
      const SdpElement x{c(rng), c(rng), a(rng)}, y{c(rng), c(rng), a(rng)},
          z{c(rng), c(rng), a(rng)};
      EXPECT_EQ(sdp_compose(r, sdp_compose(r, x, y), z), sdp_compose(r, x, sdp_compose(r, y, z)));
      const Generator g{x.a, RingElement(r, x.m1, x.m2)}, h{y.a, RingElement(r, y.m1, y.m2)};
      EXPECT_TRUE(sdp_equivalence_check(g, h));
    }
  }
}

TEST(Echelon, RankOverTheFractionField) {
  const Generator g = G(1, 1), h = G(2, 1, 1), k = G(3, 3, 4);
  const FreeElement x = F(g) + E(0, 1) * F(h);
  const FreeElement y = E(0, 1) * x;  // dependent over Q(t), not over Z
  EXPECT_EQ(rank(std::vector<FreeElement>{x, y}), 1u);
  EXPECT_EQ(rank(std::vector<FreeElement>{x, y, F(g)}), 2u);
  EXPECT_EQ(rank(std::vector<FreeElement>{x, F(g), F(h), F(k), x - F(k)}), 3u);
  EXPECT_EQ(rank(std::vector<FreeElement>{}), 0u);
  EXPECT_EQ(rank(std::vector<FreeElement>{FreeElement{}}), 0u);
  // (t+1) x - t^2 x = 0 exactly
  EXPECT_EQ(rank(std::vector<FreeElement>{E(1, 1) * x, E(0, 1) * E(0, 1) * x}), 1u);
}

TEST(Echelon, RankMatchesDeterminantOracle) {
  // 2x2 over a two-key support: rank 2 iff the determinant is nonzero.
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> d(-3, 3);
  const Generator g = G(1, 1), h = G(2, 1, 1);
  for (int i = 0; i < 2000; ++i) {
    const RingElement a = E(d(rng), d(rng)), b = E(d(rng), d(rng)), c = E(d(rng), d(rng)),
                      e = E(d(rng), d(rng));
    FreeElement u, v;
    u.add(g, a);
    u.add(h, b);
    v.add(g, c);
    v.add(h, e);
    const std::size_t expected =
        !(a * e - b * c).is_zero() ? 2 : ((u.is_zero() && v.is_zero()) ? 0 : 1);
    EXPECT_EQ(rank(std::vector<FreeElement>{u, v}), expected);
  }
}

TEST(LowerCentral, CentralGeneratorDiesAtOnce) {
  EXPECT_EQ(lower_central_probe({G(0, 0)}, 5, kStrict), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

TEST(LowerCentral, CommutingPairSpansNothingAtDepthTwo) {
  // [J^1_1, J^2_{t+1}] = 0, so the pair generates an abelian subalgebra.
  EXPECT_EQ(lower_central_probe({G(1, 1), G(2, 1, 1)}, 5, kStrict),
            (std::vector<std::size_t>{2, 0, 0, 0, 0}));
}

TEST(LowerCentral, NonCommutingPairStaysPositive) {
  const auto dims = lower_central_probe({G(1, 1), G(1, 2, 2)}, 6, kStrict);
  ASSERT_EQ(dims.size(), 6u);
  for (std::size_t d : dims) EXPECT_GE(d, 1u);
}

TEST(LowerCentral, RejectsInvalidGenerators) {
  EXPECT_THROW(lower_central_probe({G(0, 1)}, 3, kStrict), InvalidGenerator);
}

}  // namespace
}  // namespace quasi

#pragma once

// Named verification suites. Each checks one statement about the point sets
// or the algebras over an exhaustive core (plus seeded samples where noted)
// and reports witnesses that replay_witness() can re-check independently.

#include "quasi/liealg.hpp"
#include "quasi/modelset.hpp"
#include "quasi/parse.hpp"
#include "quasi/qring.hpp"
#include "quasi/semidirect.hpp"
#include "quasi/serialize.hpp"
#include "quasi/virasoro.hpp"
#include "quasi/window.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasi {

struct VerifyParams {
  RingSpec ring;
  std::optional<Window> window;
  /// Range of the exhaustive core; each suite has its own default.
  std::optional<std::pair<Integer, Integer>> range;
  std::optional<unsigned> a_max;
  std::optional<Mode> mode;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  std::size_t depth = 8;
  /// Generating set for non-nilpotent; empty selects the default seed.
  std::vector<Generator> generators;
};

struct Report {
  explicit Report(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  bool pass = true;
  std::vector<Json> witnesses;
  /// Observations that are expected outcomes, e.g. product violations of a
  /// non-admissible window. Not failures.
  std::vector<Json> findings;
  Json counts = Json::object();
  double wall_ms = 0;
};

inline constexpr std::size_t kMaxWitnesses = 20;

inline Json to_json(const Report& rep, bool with_time = true) {
  Json j = {{"suite", rep.suite},
            {"pass", rep.pass},
            {"witnesses", rep.witnesses},
            {"counts", rep.counts}};
  if (!rep.findings.empty()) j["findings"] = rep.findings;
  if (with_time) j["wall_ms"] = rep.wall_ms;
  return j;
}

namespace detail {

inline void count(Report& rep, const std::string& key, std::uint64_t n = 1) {
  if (!rep.counts.contains(key)) rep.counts[key] = 0;
  rep.counts[key] = rep.counts[key].get<std::uint64_t>() + n;
}

inline void fail(Report& rep, Json w, const RingSpec& r) {
  rep.pass = false;
  count(rep, "failures");
  if (rep.witnesses.size() >= kMaxWitnesses) return;
  w["ring"] = to_json(r);
  rep.witnesses.push_back(std::move(w));
}

inline void note(Report& rep, Json w, const RingSpec& r) {
  count(rep, "findings");
  if (rep.findings.size() >= kMaxWitnesses) return;
  w["ring"] = to_json(r);
  rep.findings.push_back(std::move(w));
}

inline std::pair<RingElement, RingElement> range_or(const VerifyParams& p, long lo, long hi) {
  if (p.range) return {RingElement(p.ring, p.range->first), RingElement(p.ring, p.range->second)};
  return {RingElement(p.ring, lo), RingElement(p.ring, hi)};
}

inline std::pair<long, long> int_range_or(const VerifyParams& p, long lo, long hi) {
  if (p.range) return {p.range->first.convert_to<long>(), p.range->second.convert_to<long>()};
  return {lo, hi};
}

inline RingElement E(const RingSpec& r, long c0, long c1 = 0) { return RingElement(r, c0, c1); }

inline Json json_list(const std::vector<Generator>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(to_json(g));
  return out;
}

inline Json json_list(const std::vector<RingElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

inline std::vector<Generator> generators_from_json(const Json& j, const RingSpec& r) {
  std::vector<Generator> out;
  for (const auto& g : j) out.push_back(generator_from_json(g, r));
  return out;
}

inline std::vector<RingElement> elements_from_json(const Json& j, const RingSpec& r) {
  std::vector<RingElement> out;
  for (const auto& x : j) out.push_back(ring_element_from_json(x, r));
  return out;
}

/// Admissible windows [-a, b], a^2 <= b <= 1, and one with b < a^2.
inline std::vector<Window> theorem1_windows(const RingSpec& r) {
  const RingElement zero(r, 0), one(r, 1);
  const RingElement shrink = abs(conjugate(RingElement::alpha(r)));  // |alpha'|
  return {Window::left_open(zero, one), Window::closed(-one, one), Window::closed(-shrink, one),
          Window::closed(-one, shrink * shrink)};
}

inline std::vector<Generator> sample_pool(Mode mode, const RingElement& lo, const RingElement& hi,
                                          unsigned a_max) {
  return valid_generators(mode, E(lo.ring(), 10) * lo, E(lo.ring(), 10) * hi, a_max + 5);
}

/// J^2_{3t+2} J^2_{-(t+1)} = J^4_0, since t^2 (t+1) = 3t+2.
inline std::optional<std::pair<Generator, Generator>> documented_strict_defect(const RingSpec& r) {
  if (!r.is_golden()) return std::nullopt;
  return std::make_pair(Generator{2, E(r, 2, 3)}, Generator{2, E(r, -1, -1)});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Point-set suites

inline Report verify_theorem1(const VerifyParams& p) {
  Report rep{"theorem1"};
  const RingSpec& r = p.ring;
  const auto [lo, hi] = detail::range_or(p, -30, 30);
  const std::vector<Window> windows =
      p.window ? std::vector<Window>{*p.window} : detail::theorem1_windows(r);
  for (const Window& w : windows) {
    const bool admissible = admissible_for_multiplication(w);
    const ClosureReport cr = closure_report(PointSet{w}, lo, hi);
    detail::count(rep, "windows");
    detail::count(rep, admissible ? "admissible" : "not_admissible");
    detail::count(rep, "pairs", cr.pairs);
    detail::count(rep, "violations", cr.violations.size());
    for (const auto& v : cr.violations) {
      Json w_json = {{"kind", "product"},        {"window", to_string(w)},
                     {"x", to_json(v.x)},        {"y", to_json(v.y)},
                     {"product", to_json(v.product)}};
      if (admissible)
        detail::fail(rep, std::move(w_json), r);
      else
        detail::note(rep, std::move(w_json), r);
    }
    if (!admissible && cr.violations.empty())
      detail::fail(rep,
                   {{"kind", "no-violation"},
                    {"window", to_string(w)},
                    {"lo", to_json(lo)},
                    {"hi", to_json(hi)}},
                   r);
  }
  return rep;
}

inline Report verify_floor_identity(const VerifyParams& p) {
  Report rep{"floor-identity"};
  const RingSpec& r = p.ring;
  const auto [lo, hi] = detail::int_range_or(p, -200, 200);
  std::vector<RingElement> pts;
  for (long n = lo; n <= hi; ++n) pts.push_back(chain_point(r, n));
  for (long m = lo; m <= hi; ++m)
    for (long n = lo; n <= hi; ++n) {
      const RingElement& x = pts[m - lo];
      const RingElement& y = pts[n - lo];
      // p2 = m n (tau-coefficient of tau^2) + n floor(m/tau+1) + m floor(n/tau+1)
      const Integer p2 = Integer(r.trace()) * m * n + n * x.c0() + m * y.c0();
      detail::count(rep, "cases");
      if (x * y != chain_point(r, p2))
        detail::fail(rep, {{"kind", "floor"}, {"m2", m}, {"n2", n}}, r);
    }
  return rep;
}

inline Report verify_lemma1(const VerifyParams& p) {
  Report rep{"lemma1"};
  const RingSpec& r = p.ring;
  const auto [lo, hi] = detail::range_or(p, -30, 30);
  const unsigned a_max = p.a_max.value_or(6);
  const PointSet chain = PointSet::fibonacci_chain(r);
  const auto pts = enumerate(chain, lo, hi);
  const RingElement one(r, 1);
  for (const auto& x : pts)
    for (unsigned a = 1; a <= a_max; ++a) {
      if (!is_compatible(x, a)) {
        // sharpness: m = 1 already leaves the chain
        detail::count(rep, "sharpness_checks");
        if (member(chain, graded_add(x, a, one)))
          detail::fail(rep, {{"kind", "sharpness"}, {"x", to_json(x)}, {"a", a}}, r);
        continue;
      }
      for (const auto& y : pts) {
        detail::count(rep, "sums");
        if (!member(chain, graded_add(x, a, y)))
          detail::fail(rep,
                       {{"kind", "graded-add"}, {"x", to_json(x)}, {"a", a}, {"y", to_json(y)}}, r);
      }
    }
  detail::count(rep, "points", pts.size());
  return rep;
}

/// Parity exclusivity and the n2 = 0..10 census. Golden ring only; other
/// rings report applicable = 0 (their odd/even windows do not partition).
inline Report verify_lemma2(const VerifyParams& p) {
  Report rep{"lemma2"};
  const RingSpec& r = p.ring;
  if (!r.is_golden()) {
    rep.counts["applicable"] = 0;
    return rep;
  }
  rep.counts["applicable"] = 1;
  const auto [lo, hi] = detail::range_or(p, -30, 30);
  const PointSet chain = PointSet::fibonacci_chain(r);
  const RingElement one(r, 1);
  for (const auto& x : enumerate(chain, lo, hi)) {
    detail::count(rep, "points");
    const bool odd = parity(x) == Parity::Odd;
    const bool c1 = is_compatible(x, 1), c2 = is_compatible(x, 2);
    if (c1 == c2 || odd != c1 || member(chain, graded_add(x, odd ? 2 : 1, one)))
      detail::fail(rep, {{"kind", "parity"}, {"x", to_json(x)}}, r);
  }
  const std::set<long> odd_class = {0, 2, 5, 7, 10};
  for (long n2 = 0; n2 <= 10; ++n2) {
    detail::count(rep, "census");
    const Parity expected = odd_class.count(n2) ? Parity::Odd : Parity::Even;
    if (parity(fibonacci_point(n2)) != expected)
      detail::fail(rep, {{"kind", "census"}, {"n2", n2}, {"expected", to_string(expected)}}, r);
  }
  return rep;
}

inline Report verify_lemma3(const VerifyParams& p) {
  Report rep{"lemma3"};
  const RingSpec& r = p.ring;
  const auto [lo, hi] = detail::range_or(p, -30, 30);
  const unsigned a_max = p.a_max.value_or(6);
  const auto pts = enumerate(PointSet::fibonacci_chain(r), lo, hi);
  std::vector<std::vector<unsigned>> grades;
  for (const auto& x : pts) grades.push_back(compatible_gradings(x, a_max));
  static const char* const kCase[2][2] = {{"case_even_even", "case_even_odd"},
                                          {"case_odd_even", "case_odd_odd"}};
  for (const char* const* row : kCase)
    for (int j = 0; j < 2; ++j) rep.counts[row[j]] = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (unsigned a : grades[i])
      for (std::size_t j = 0; j < pts.size(); ++j)
        for (unsigned b : grades[j]) {
          detail::count(rep, kCase[a % 2][b % 2]);
          if (!is_compatible(graded_add(pts[i], a, pts[j]), a + b))
            detail::fail(rep,
                         {{"kind", "lemma3"},
                          {"x", to_json(pts[i])},
                          {"a", a},
                          {"y", to_json(pts[j])},
                          {"b", b}},
                         r);
        }
  for (const char* const* row : kCase)
    for (int j = 0; j < 2; ++j)
      if (rep.counts[row[j]].get<std::uint64_t>() == 0)
        detail::fail(rep,
                     {{"kind", "missing-case"},
                      {"case", row[j]},
                      {"lo", to_json(lo)},
                      {"hi", to_json(hi)},
                      {"a_max", a_max}},
                     r);
  return rep;
}

inline Report verify_selfsim(const VerifyParams& p) {
  Report rep{"selfsim"};
  const RingSpec& r = p.ring;
  const auto [lo, hi] = detail::range_or(p, -40, 40);
  const unsigned a_max = p.a_max.value_or(8);
  const PointSet chain = PointSet::fibonacci_chain(r);
  const auto base = enumerate(chain, lo, hi);
  for (unsigned a = 1; a <= a_max; ++a) {
    const RingElement s = alpha_pow(r, a);
    const Window wa = self_similar_window(r, a);
    if (r.is_golden()) {
      // [-1/tau^a, 0) for odd a, (0, 1/tau^a] for even a
      const RingElement inv = abs(alpha_pow(r, -static_cast<long>(a)));
      const Window expected = a % 2 ? Window::right_open(-inv, RingElement(r, 0))
                                    : Window::left_open(RingElement(r, 0), inv);
      if (!(wa == expected))
        detail::fail(rep, {{"kind", "selfsim-window"}, {"a", a}, {"window", to_string(wa)}}, r);
    }
    std::vector<RingElement> scaled;
    for (const auto& x : base) scaled.push_back(s * x);
    const auto direct = enumerate(PointSet{wa}, s * lo, s * hi);
    std::vector<RingElement> diff;
    std::set_symmetric_difference(scaled.begin(), scaled.end(), direct.begin(), direct.end(),
                                  std::back_inserter(diff));
    detail::count(rep, "points", direct.size());
    for (const auto& x : diff) detail::fail(rep, {{"kind", "selfsim"}, {"a", a}, {"x", to_json(x)}}, r);
  }
  return rep;
}

inline Report verify_decompose(const VerifyParams& p) {
  Report rep{"decompose"};
  const RingSpec& r = p.ring;
  const auto [lo, hi] = detail::range_or(p, -40, 40);
  const PointSet chain = PointSet::fibonacci_chain(r);
  const RingElement zero(r, 0), one(r, 1);

  // Sigma([-1,1]) = -Sigma((0,1]) u {0} u Sigma((0,1]), disjointly
  for (const auto& x : enumerate(PointSet::symmetric(r), lo, hi)) {
    detail::count(rep, "symmetric_points");
    const int parts = int(member(chain, x)) + int(member(chain, -x)) + int(x.is_zero());
    if (parts != 1) detail::fail(rep, {{"kind", "decompose"}, {"x", to_json(x)}}, r);
  }
  for (const auto& x : enumerate(chain, lo, hi))
    if (!member(PointSet::symmetric(r), x))
      detail::fail(rep, {{"kind", "decompose"}, {"x", to_json(x)}}, r);

  // Sigma((0,1]) = u Sigma((0,1]) u Sigma((u*,1]), u the contracting unit
  const RingElement u = contracting_unit(r);
  const RingElement u_inv = conjugate(u) * RingElement(r, norm(u));
  const PointSet rest{Window::left_open(conjugate(u), one)};
  for (const auto& x : enumerate(chain, lo, hi)) {
    detail::count(rep, "chain_points");
    const int parts = int(member(chain, u_inv * x)) + int(member(rest, x));
    if (parts != 1) detail::fail(rep, {{"kind", "decompose2"}, {"x", to_json(x)}}, r);
  }

  // Sigma(W) = -Sigma(-W)
  for (const Window& w : {Window::unit_half_open(r), Window::right_open(-one, one),
                          Window::left_open(-one, zero)}) {
    const PointSet s{w}, neg{negate(w)};
    for (const auto& x : enumerate(PointSet::symmetric(r), lo, hi)) {
      detail::count(rep, "reflections");
      if (member(s, x) != member(neg, -x))
        detail::fail(rep, {{"kind", "reflection"}, {"window", to_string(w)}, {"x", to_json(x)}}, r);
    }
  }
  return rep;
}

inline Report verify_tiles(const VerifyParams& p) {
  Report rep{"tiles"};
  const RingSpec& r = p.ring;
  const auto [lo, hi] = detail::range_or(p, -50, 50);
  const RingElement zero(r, 0), one(r, 1);
  const TileReport chain = tiles(PointSet::fibonacci_chain(r), lo, hi);
  const TileReport closed = tiles(PointSet{Window::closed(zero, one)}, lo, hi);
  detail::count(rep, "chain_tiles", chain.gaps.size());
  detail::count(rep, "closed_tiles", closed.gaps.size());
  const auto lengths = [](const TileReport& t) {
    std::vector<RingElement> out;
    for (const auto& [len, n] : t.counts) out.push_back(len);
    return out;
  };
  const auto mismatch = [&](const char* window, const TileReport& t) {
    detail::fail(rep,
                 {{"kind", "tiles"},
                  {"window", window},
                  {"lo", to_json(lo)},
                  {"hi", to_json(hi)},
                  {"lengths", detail::json_list(lengths(t))}},
                 r);
  };
  if (r.is_golden()) {
    const RingElement tau = RingElement::alpha(r);
    if (lengths(chain) != std::vector<RingElement>{tau, tau + one}) mismatch("(0,1]", chain);
    if (lengths(closed) != std::vector<RingElement>{one, tau, tau + one} || closed.exceptional != std::vector<RingElement>{one} ||
        closed.exceptional_left != std::vector<RingElement>{zero})
      mismatch("[0,1]", closed);
  } else {
    // interval windows give at most three distinct tiles
    if (chain.counts.size() > 3) mismatch("(0,1]", chain);
    if (closed.counts.size() > 3) mismatch("[0,1]", closed);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Lie algebra suites

inline Report verify_jacobi(const VerifyParams& p) {
  Report rep{"jacobi"};
  const RingSpec& r = p.ring;
  const Mode mode = p.mode.value_or(Mode::SymmetricClosed);
  const auto [lo, hi] = detail::range_or(p, -8, 8);
  const unsigned a_max = p.a_max.value_or(4);
  const auto core = valid_generators(mode, lo, hi, a_max);
  detail::count(rep, "generators", core.size());
  const auto check = [&](const Generator& g, const Generator& h, const Generator& k) {
    try {
      detail::count(rep, "triples");
      if (!jacobi_residual(g, h, k, mode).is_zero())
        detail::fail(rep,
                     {{"kind", "jacobi"},
                      {"mode", to_string(mode)},
                      {"g", to_json(g)},
                      {"h", to_json(h)},
                      {"k", to_json(k)}},
                     r);
    } catch (const ClosureDefect&) {
      detail::count(rep, "closure_defects");
    }
  };
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = i; j < core.size(); ++j) {
      try {
        detail::count(rep, "pairs");
        if (!(bracket(core[i], core[j], mode) + bracket(core[j], core[i], mode)).is_zero())
          detail::fail(rep,
                       {{"kind", "antisymmetry"},
                        {"mode", to_string(mode)},
                        {"g", to_json(core[i])},
                        {"h", to_json(core[j])}},
                       r);
      } catch (const ClosureDefect&) {
        detail::count(rep, "closure_defects");
      }
    }
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = i + 1; j < core.size(); ++j)
      for (std::size_t k = j + 1; k < core.size(); ++k) check(core[i], core[j], core[k]);
  const auto pool = detail::sample_pool(mode, lo, hi, a_max);
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t s = 0; s < p.samples; ++s) {
    detail::count(rep, "samples");
    const Generator &g = pool[pick(rng)], &h = pool[pick(rng)], &k = pool[pick(rng)];
    check(g, h, k);
  }
  return rep;
}

inline Report verify_associativity(const VerifyParams& p) {
  Report rep{"associativity"};
  const RingSpec& r = p.ring;
  const Mode mode = p.mode.value_or(Mode::SymmetricClosed);
  const auto [lo, hi] = detail::range_or(p, -8, 8);
  const unsigned a_max = p.a_max.value_or(4);
  const auto core = valid_generators(mode, lo, hi, a_max);
  const auto check = [&](const Generator& g, const Generator& h, const Generator& k) {
    detail::count(rep, "triples");
    const Generator left = compose(compose(g, h), k), right = compose(g, compose(h, k));
    // n + alpha^a m + alpha^(a+b) k, written out
    const Generator direct{g.grading + h.grading + k.grading,
                           g.index + alpha_pow(r, g.grading) * h.index +
                               alpha_pow(r, g.grading + h.grading) * k.index};
    if (left != right || left != direct)
      detail::fail(rep,
                   {{"kind", "associativity"},
                    {"g", to_json(g)},
                    {"h", to_json(h)},
                    {"k", to_json(k)}},
                   r);
  };
  for (const auto& g : core)
    for (const auto& h : core)
      for (const auto& k : core) check(g, h, k);
  const auto pool = detail::sample_pool(mode, lo, hi, a_max);
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t s = 0; s < p.samples; ++s) {
    detail::count(rep, "samples");
    check(pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]);
  }
  return rep;
}

inline Report verify_center(const VerifyParams& p) {
  Report rep{"center"};
  const RingSpec& r = p.ring;
  const Mode mode = p.mode.value_or(Mode::SymmetricClosed);
  const auto [lo, hi] = detail::range_or(p, -8, 8);
  const unsigned a_max = p.a_max.value_or(4);
  const auto core = valid_generators(mode, lo, hi, a_max);
  const Generator unit{0, RingElement(r, 0)};
  for (const auto& g : core) {
    detail::count(rep, "generators");
    if (!bracket(unit, g, mode).is_zero())
      detail::fail(rep, {{"kind", "central"}, {"mode", to_string(mode)}, {"g", to_json(g)}}, r);
    if (g == unit) continue;
    const bool witnessed = std::any_of(core.begin(), core.end(), [&](const Generator& h) {
      try {
        return !bracket(g, h, mode).is_zero();
      } catch (const ClosureDefect&) {
        return false;
      }
    });
    if (!witnessed)
      detail::fail(rep,
                   {{"kind", "also-central"},
                    {"mode", to_string(mode)},
                    {"g", to_json(g)},
                    {"lo", to_json(lo)},
                    {"hi", to_json(hi)},
                    {"a_max", a_max}},
                   r);
  }
  return rep;
}

inline Report verify_sdp(const VerifyParams& p) {
  Report rep{"sdp"};
  const RingSpec& r = p.ring;
  const Mode mode = p.mode.value_or(Mode::SymmetricClosed);
  const auto [lo, hi] = detail::range_or(p, -8, 8);
  const unsigned a_max = p.a_max.value_or(4);
  const auto check = [&](const Generator& g, const Generator& h) {
    detail::count(rep, "pairs");
    if (!sdp_equivalence_check(g, h))
      detail::fail(rep, {{"kind", "sdp"}, {"g", to_json(g)}, {"h", to_json(h)}}, r);
  };
  const auto core = valid_generators(mode, lo, hi, a_max);
  for (const auto& g : core)
    for (const auto& h : core) check(g, h);
  const auto pool = detail::sample_pool(mode, lo, hi, a_max);
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t s = 0; s < p.samples; ++s) {
    detail::count(rep, "samples");
    check(pool[pick(rng)], pool[pick(rng)]);
  }
  return rep;
}

inline Report verify_phi(const VerifyParams& p) {
  Report rep{"phi"};
  const RingSpec& r = p.ring;
  const unsigned a_max = p.a_max.value_or(30);
  for (unsigned a = 0; a <= a_max; ++a)
    for (unsigned b = 0; b <= a_max; ++b) {
      detail::count(rep, "products");
      if (phi_matrix(r, a) * phi_matrix(r, b) != phi_matrix(r, a + b))
        detail::fail(rep, {{"kind", "phi"}, {"a", a}, {"b", b}}, r);
    }
  if (r.is_golden())
    for (unsigned a = 1; a <= a_max; ++a) {
      const Matrix2 expected{{fibonacci(a - 1), fibonacci(a), fibonacci(a), fibonacci(a + 1)}};
      if (phi_matrix(a) != expected) detail::fail(rep, {{"kind", "phi-entries"}, {"a", a}}, r);
    }
  return rep;
}

inline Report verify_closure(const VerifyParams& p, Mode mode) {
  Report rep{mode == Mode::StrictPaper ? "closure-strict" : "closure-symmetric"};
  const RingSpec& r = p.ring;
  const auto [lo, hi] = detail::range_or(p, -8, 8);
  const unsigned a_max = p.a_max.value_or(4);
  const ClosureProbeReport probe = closure_probe(mode, lo, hi, a_max);
  detail::count(rep, "generators", probe.generators);
  detail::count(rep, "pairs", probe.pairs);
  detail::count(rep, "defects", probe.defects.size());
  for (const auto& d : probe.defects) {
    Json w = {{"kind", "closure-defect"},
              {"mode", to_string(mode)},
              {"left", to_json(d.left)},
              {"right", to_json(d.right)},
              {"result", to_json(d.result)},
              {"reason", d.reason}};
    if (mode == Mode::SymmetricClosed)
      detail::fail(rep, std::move(w), r);
    else
      detail::note(rep, std::move(w), r);
  }
  if (mode == Mode::StrictPaper) {
    // The strict generator set is expected to be open under the product.
    const auto documented = detail::documented_strict_defect(r);
    const bool found =
        documented ? std::any_of(probe.defects.begin(), probe.defects.end(),
                                 [&](const ClosureDefectWitness& d) {
                                   return d.left == documented->first &&
                                          d.right == documented->second;
                                 })
                   : !probe.defects.empty();
    if (!found)
      detail::fail(rep,
                   {{"kind", "missing-defect"},
                    {"lo", to_json(lo)},
                    {"hi", to_json(hi)},
                    {"a_max", a_max}},
                   r);
  }
  return rep;
}

/// Default non-commuting seed in strict mode: J^1_1 and J^1_{2t+2} for the
/// golden ring, the first non-commuting pair of small generators otherwise.
inline std::vector<Generator> default_non_nilpotent_seed(const RingSpec& r) {
  if (r.is_golden()) return {{1, RingElement(r, 1)}, {1, RingElement(r, 2, 2)}};
  const auto gens = valid_generators(Mode::StrictPaper, RingElement(r, 0), RingElement(r, 8), 3);
  for (const auto& g : gens)
    for (const auto& h : gens)
      if (g.grading > 0 && h.grading > 0 && !bracket(g, h, Mode::StrictPaper).is_zero())
        return {g, h};
  throw std::logic_error("no non-commuting pair among small generators");
}

inline Report verify_non_nilpotent(const VerifyParams& p) {
  Report rep{"non-nilpotent"};
  const RingSpec& r = p.ring;
  const Mode mode = p.mode.value_or(Mode::StrictPaper);
  const auto seed = p.generators.empty() ? default_non_nilpotent_seed(r) : p.generators;
  const auto dims = lower_central_probe(seed, p.depth, mode);
  detail::count(rep, "depth", dims.size());
  detail::count(rep, "min_dimension",
                dims.empty() ? 0 : *std::min_element(dims.begin(), dims.end()));
  if (std::find(dims.begin(), dims.end(), 0u) != dims.end())
    detail::fail(rep,
                 {{"kind", "lcs"},
                  {"mode", to_string(mode)},
                  {"generators", detail::json_list(seed)},
                  {"depth", p.depth},
                  {"dims", dims}},
                 r);
  return rep;
}

// ---------------------------------------------------------------------------
// Multiplicative-index suites

inline Report verify_aw_nilpotent(const VerifyParams& p) {
  Report rep{"aw-nilpotent"};
  const RingSpec& r = p.ring;
  const Window w = p.window.value_or(Window::closed(RingElement(r, 0), RingElement(r, 1)));
  std::vector<RingElement> seed;
  for (const auto& x : enumerate(PointSet{w}, RingElement(r, 0), RingElement(r, 50)))
    if (sign(x) > 0 && seed.size() < 3) seed.push_back(x);
  const auto dims = aw_lower_central_probe(seed, p.depth, w);
  detail::count(rep, "generators", seed.size());
  detail::count(rep, "depth", dims.size());
  const auto zero_at = std::find(dims.begin(), dims.end(), 0u);
  detail::count(rep, "zero_at_depth", zero_at == dims.end() ? 0 : (zero_at - dims.begin()) + 1);
  if (zero_at == dims.end())
    detail::fail(rep,
                 {{"kind", "aw-lcs"},
                  {"window", to_string(w)},
                  {"generators", detail::json_list(seed)},
                  {"depth", p.depth},
                  {"dims", dims}},
                 r);
  return rep;
}

inline Report verify_primes(const VerifyParams& p) {
  Report rep{"primes"};
  const RingSpec& r = p.ring;
  const long max = p.range ? p.range->second.convert_to<long>() : 1000;
  for (long n = 2; n <= max; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (!prime) continue;
    detail::count(rep, "integer_primes");
    if (!int_bracket_preimages(n).empty() || !int_bracket_preimages(Integer(n) * n).empty())
      detail::fail(rep, {{"kind", "int-preimage"}, {"p", n}}, r);
  }
  if (r.is_golden()) {
    const RingElement five(r, 4, 5), six(r, 4, 6);
    detail::count(rep, "ring_targets", 2);
    if (!bracket_preimages(five, five).empty() || !monoid_irreducible(five).irreducible)
      detail::fail(rep, {{"kind", "preimage"}, {"target", to_json(five)}, {"expect", "none"}}, r);
    const auto six_pairs = bracket_preimages(six, six);
    const std::pair<RingElement, RingElement> known{RingElement(r, 1, 1), RingElement(r, 2, 2)};
    if (std::find(six_pairs.begin(), six_pairs.end(), known) == six_pairs.end())
      detail::fail(rep,
                   {{"kind", "preimage"},
                    {"target", to_json(six)},
                    {"expect", Json::array({to_json(known.first), to_json(known.second)})}},
                   r);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Registry

struct Suite {
  const char* name;
  const char* statement;
  std::function<Report(const VerifyParams&)> run;
};

/// All suites, ordered by name.
inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = [] {
    std::vector<Suite> s = {
        {"theorem1", "Sigma(W) is closed under multiplication for W = [-a,b], a^2 <= b <= 1",
         verify_theorem1},
        {"floor-identity", "the product of two chain points is the chain point of m2 n2 + n2 floor(m2/t+1) + m2 floor(n2/t+1)",
         verify_floor_identity},
        {"lemma1", "x compatible with a implies x + t^a m stays in the chain; sharp at m = 1",
         verify_lemma1},
        {"lemma2", "every chain point has exactly one parity: odd iff grading 1, even iff grading 2",
         verify_lemma2},
        {"lemma3", "x compatible with a and y with b imply x + t^a y compatible with a+b",
         verify_lemma3},
        {"selfsim", "t^a Sigma((0,1]) = Sigma([-1/t^a,0)) (a odd) or Sigma((0,1/t^a]) (a even)",
         verify_selfsim},
        {"decompose", "Sigma([-1,1]) = -F u {0} u F and F = (-t) F u Sigma((1/t,1])",
         verify_decompose},
        {"jacobi", "the bracket is antisymmetric and satisfies the Jacobi identity", verify_jacobi},
        {"associativity", "(J^a_n J^b_m) J^c_k = J^a_n (J^b_m J^c_k)", verify_associativity},
        {"center", "J^0_0 is central and no other generator is", verify_center},
        {"sdp", "the index composition is the semi-direct product (m, a)(n, b) = (m + Phi(a) n, a + b)",
         verify_sdp},
        {"phi", "Phi(a) Phi(b) = Phi(a+b)", verify_phi},
        {"closure-strict", "the literal generator set is not closed: J^2_{3t+2} J^2_{-(t+1)} = J^4_0",
         [](const VerifyParams& p) { return verify_closure(p, Mode::StrictPaper); }},
        {"closure-symmetric", "the symmetric-closed generator set is closed under the product",
         [](const VerifyParams& p) { return verify_closure(p, Mode::SymmetricClosed); }},
        {"aw-nilpotent", "the window-cut Witt algebra is nilpotent", verify_aw_nilpotent},
        {"non-nilpotent", "the lower central series of the graded algebra does not vanish",
         verify_non_nilpotent},
        {"primes", "l_p and l_{p^2} are not commutators; 5t+4 is a monoid prime", verify_primes},
        {"tiles", "chain tiles are t and t^2; Sigma([0,1]) adds one tile of length 1 at 0",
         verify_tiles},
    };
    std::sort(s.begin(), s.end(),
              [](const Suite& x, const Suite& y) { return std::string(x.name) < y.name; });
    return s;
  }();
  return all;
}

inline const Suite* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (name == s.name) return &s;
  return nullptr;
}

inline Report run_suite(const Suite& suite, const VerifyParams& p) {
  const auto start = std::chrono::steady_clock::now();
  Report rep = suite.run(p);
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Replay

/// Re-checks a witness through the library. True iff the failure it records
/// still occurs.
inline bool replay_witness(const Json& w) {
  const RingSpec r = ring_spec_from_json(w.at("ring"));
  const auto el = [&](const char* key) { return ring_element_from_json(w.at(key), r); };
  const auto gen = [&](const char* key) { return generator_from_json(w.at(key), r); };
  const auto mode = [&] { return parse_mode(w.at("mode").get<std::string>()); };
  const auto window = [&] { return parse_window(w.at("window").get<std::string>(), r); };
  const std::string kind = w.at("kind").get<std::string>();
  const PointSet chain = PointSet::fibonacci_chain(r);
  const RingElement one(r, 1);

  if (kind == "product") {
    const PointSet s{window()};
    return member(s, el("x")) && member(s, el("y")) && el("x") * el("y") == el("product") &&
           !member(s, el("product"));
  }
  if (kind == "no-violation")
    return closure_report(PointSet{window()}, el("lo"), el("hi")).violations.empty();
  if (kind == "floor") {
    const Integer m = w.at("m2").get<long>(), n = w.at("n2").get<long>();
    const RingElement x = chain_point(r, m), y = chain_point(r, n);
    return x * y != chain_point(r, Integer(r.trace()) * m * n + n * x.c0() + m * y.c0());
  }
  if (kind == "sharpness") {
    const unsigned a = w.at("a").get<unsigned>();
    return !is_compatible(el("x"), a) && member(chain, graded_add(el("x"), a, one));
  }
  if (kind == "graded-add") {
    const unsigned a = w.at("a").get<unsigned>();
    return is_compatible(el("x"), a) && member(chain, el("y")) &&
           !member(chain, graded_add(el("x"), a, el("y")));
  }
  if (kind == "parity") {
    const RingElement x = el("x");
    const bool odd = parity(x) == Parity::Odd;
    const bool c1 = is_compatible(x, 1), c2 = is_compatible(x, 2);
    return c1 == c2 || odd != c1 || member(chain, graded_add(x, odd ? 2 : 1, one));
  }
  if (kind == "census")
    return to_string(parity(fibonacci_point(w.at("n2").get<long>()))) !=
           w.at("expected").get<std::string>();
  if (kind == "lemma3") {
    const unsigned a = w.at("a").get<unsigned>(), b = w.at("b").get<unsigned>();
    return is_compatible(el("x"), a) && is_compatible(el("y"), b) &&
           !is_compatible(graded_add(el("x"), a, el("y")), a + b);
  }
  if (kind == "missing-case") {
    VerifyParams p;
    p.ring = r;
    p.range = {el("lo").c0(), el("hi").c0()};
    p.a_max = w.at("a_max").get<unsigned>();
    return verify_lemma3(p).counts.at(w.at("case").get<std::string>()).get<std::uint64_t>() == 0;
  }
  if (kind == "selfsim") {
    const unsigned a = w.at("a").get<unsigned>();
    const RingElement x = el("x");
    const bool lhs = member(chain, alpha_pow(r, -static_cast<long>(a)) * x);
    return lhs != member(PointSet{self_similar_window(r, a)}, x);
  }
  if (kind == "selfsim-window") {
    const unsigned a = w.at("a").get<unsigned>();
    const RingElement inv = abs(alpha_pow(r, -static_cast<long>(a)));
    const Window expected = a % 2 ? Window::right_open(-inv, RingElement(r, 0))
                                  : Window::left_open(RingElement(r, 0), inv);
    return !(self_similar_window(r, a) == expected);
  }
  if (kind == "decompose") {
    const RingElement x = el("x");
    const int parts = int(member(chain, x)) + int(member(chain, -x)) + int(x.is_zero());
    return member(PointSet::symmetric(r), x) != (parts == 1) || parts > 1;
  }
  if (kind == "decompose2") {
    const RingElement x = el("x");
    const RingElement u = contracting_unit(r);
    const RingElement u_inv = conjugate(u) * RingElement(r, norm(u));
    const int parts = int(member(chain, u_inv * x)) +
                      int(member(PointSet{Window::left_open(conjugate(u), one)}, x));
    return member(chain, x) != (parts == 1) || parts > 1;
  }
  if (kind == "reflection") {
    const Window wd = window();
    return member(PointSet{wd}, el("x")) != member(PointSet{negate(wd)}, -el("x"));
  }
  if (kind == "tiles") {
    VerifyParams p;
    p.ring = r;
    p.range = {el("lo").c0(), el("hi").c0()};
    return !verify_tiles(p).pass;
  }
  if (kind == "jacobi") return !jacobi_residual(gen("g"), gen("h"), gen("k"), mode()).is_zero();
  if (kind == "antisymmetry")
    return !(bracket(gen("g"), gen("h"), mode()) + bracket(gen("h"), gen("g"), mode())).is_zero();
  if (kind == "associativity") {
    const Generator g = gen("g"), h = gen("h"), k = gen("k");
    return compose(compose(g, h), k) != compose(g, compose(h, k));
  }
  if (kind == "central")
    return !bracket(Generator{0, RingElement(r, 0)}, gen("g"), mode()).is_zero();
  if (kind == "also-central") {
    const Generator g = gen("g");
    for (const auto& h :
         valid_generators(mode(), el("lo"), el("hi"), w.at("a_max").get<unsigned>()))
      if (!bracket(g, h, mode()).is_zero()) return false;
    return true;
  }
  if (kind == "sdp") return !sdp_equivalence_check(gen("g"), gen("h"));
  if (kind == "phi") {
    const unsigned a = w.at("a").get<unsigned>(), b = w.at("b").get<unsigned>();
    return phi_matrix(r, a) * phi_matrix(r, b) != phi_matrix(r, a + b);
  }
  if (kind == "phi-entries") {
    const unsigned a = w.at("a").get<unsigned>();
    return phi_matrix(a) !=
           Matrix2{{fibonacci(a - 1), fibonacci(a), fibonacci(a), fibonacci(a + 1)}};
  }
  if (kind == "closure-defect") {
    const Generator g = gen("left"), h = gen("right");
    return is_valid(g, mode()) && is_valid(h, mode()) && !is_valid(compose(g, h), mode());
  }
  if (kind == "missing-defect") {
    VerifyParams p;
    p.ring = r;
    p.range = {el("lo").c0(), el("hi").c0()};
    p.a_max = w.at("a_max").get<unsigned>();
    return !verify_closure(p, Mode::StrictPaper).pass;
  }
  if (kind == "lcs") {
    const auto dims = lower_central_probe(detail::generators_from_json(w.at("generators"), r),
                                          w.at("depth").get<std::size_t>(), mode());
    return std::find(dims.begin(), dims.end(), 0u) != dims.end();
  }
  if (kind == "aw-lcs") {
    const auto dims = aw_lower_central_probe(detail::elements_from_json(w.at("generators"), r),
                                             w.at("depth").get<std::size_t>(), window());
    return std::find(dims.begin(), dims.end(), 0u) == dims.end();
  }
  if (kind == "int-preimage") {
    const Integer n = w.at("p").get<long>();
    return !int_bracket_preimages(n).empty() || !int_bracket_preimages(n * n).empty();
  }
  if (kind == "preimage") {
    const RingElement t = el("target");
    const auto pairs = bracket_preimages(t, t);
    const Json& expect = w.at("expect");
    if (expect == "none") return !pairs.empty() || !monoid_irreducible(t).irreducible;
    const std::pair<RingElement, RingElement> pair{ring_element_from_json(expect.at(0), r),
                                                   ring_element_from_json(expect.at(1), r)};
    return std::find(pairs.begin(), pairs.end(), pair) == pairs.end();
  }
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

}  // namespace quasi

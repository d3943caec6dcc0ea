// quasi: command-line front end over the header library.
//
// Exit codes: 0 all checks pass, 1 a check or suite failed (witnesses are
// printed), 2 usage error or malformed input.

#include "quasi/liealg.hpp"
#include "quasi/modelset.hpp"
#include "quasi/parse.hpp"
#include "quasi/semidirect.hpp"
#include "quasi/serialize.hpp"
#include "quasi/verify.hpp"
#include "quasi/virasoro.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace quasi;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses an option value, naming the option in the error.
template <class F>
auto parse_arg(const char* option, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad value for ") + option + " '" + text + "': " + e.what());
  }
}

std::string fixed(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json element_json(const RingElement& x) {
  Json j = to_json(x);
  j["approx"] = approx(x).first;
  return j;
}

std::string element_text(const RingElement& x) {
  return to_string(x) + " (" + fixed(approx(x).first) + ")";
}

struct Global {
  std::string ring_text = "1,1";
  bool json = false;
  RingSpec ring;

  RingElement element(const char* option, const std::string& text) const {
    return parse_arg(option, text, [&](const std::string& s) { return parse_ring_element(s, ring); });
  }
  Window window(const char* option, const std::string& text) const {
    return parse_arg(option, text, [&](const std::string& s) { return parse_window(s, ring); });
  }
  Generator generator(const char* option, const std::string& text) const {
    return parse_arg(option, text, [&](const std::string& s) { return parse_generator(s, ring); });
  }
  std::vector<Generator> generators(const char* option, const std::vector<std::string>& texts) const {
    std::vector<Generator> out;
    for (const auto& t : texts) out.push_back(generator(option, t));
    return out;
  }
  std::vector<RingElement> elements(const char* option,
                                    const std::vector<std::string>& texts) const {
    std::vector<RingElement> out;
    for (const auto& t : texts) out.push_back(element(option, t));
    return out;
  }
};

Mode mode_arg(const std::string& text) {
  return parse_arg("--mode", text, [](const std::string& s) { return parse_mode(s); });
}

// ---------------------------------------------------------------------------
// Point sets

struct ChainArgs {
  long from = -4;
  long to = 10;
};

int run_chain(const Global& g, const ChainArgs& a) {
  if (a.from > a.to) throw UsageError("--from must not exceed --to");
  std::vector<RingElement> pts;
  for (long n2 = a.from; n2 <= a.to; ++n2) pts.push_back(chain_point(g.ring, n2));
  if (g.json) {
    print(point_list_json(PointSet::fibonacci_chain(g.ring), pts));
    return kOk;
  }
  long n2 = a.from;
  for (const auto& p : pts)
    std::cout << n2++ << '\t' << to_string(p) << '\t' << fixed(approx(p).first) << '\n';
  return kOk;
}

struct MemberArgs {
  std::string x;
  std::string window = "(0,1]";
};

int run_member(const Global& g, const MemberArgs& a) {
  const RingElement x = g.element("x", a.x);
  const PointSet s{g.window("--window", a.window)};
  const bool in = member(s, x);
  if (g.json) {
    print({{"ring", to_json(g.ring)},
           {"window", to_string(s.window)},
           {"x", to_json(x)},
           {"conjugate_approx", approx(x).second},
           {"member", in}});
  } else {
    std::cout << to_string(x) << (in ? " is" : " is not") << " in Sigma(" << to_string(s.window)
              << "); conjugate " << fixed(approx(x).second) << '\n';
  }
  return kOk;
}

struct RangeArgs {
  std::string window = "(0,1]";
  std::string from;
  std::string to;
};

std::pair<RingElement, RingElement> range_of(const Global& g, const RangeArgs& a, long lo,
                                             long hi) {
  const RingElement from = a.from.empty() ? RingElement(g.ring, lo) : g.element("--from", a.from);
  const RingElement to = a.to.empty() ? RingElement(g.ring, hi) : g.element("--to", a.to);
  if (to < from) throw UsageError("--from must not exceed --to");
  return {from, to};
}

int run_tiles(const Global& g, const RangeArgs& a) {
  const PointSet s{g.window("--window", a.window)};
  const auto [lo, hi] = range_of(g, a, -50, 50);
  const TileReport rep = tiles(s, lo, hi);
  if (g.json) {
    Json lengths = Json::array(), exceptional = Json::array();
    for (const auto& [len, n] : rep.counts) {
      Json j = element_json(len);
      j["count"] = n;
      lengths.push_back(std::move(j));
    }
    for (std::size_t i = 0; i < rep.exceptional.size(); ++i)
      exceptional.push_back(
          {{"length", to_json(rep.exceptional[i])}, {"left", to_json(rep.exceptional_left[i])}});
    print({{"ring", to_json(g.ring)},
           {"window", to_string(s.window)},
           {"from", to_json(lo)},
           {"to", to_json(hi)},
           {"points", rep.points.size()},
           {"tiles", std::move(lengths)},
           {"exceptional", std::move(exceptional)}});
    return kOk;
  }
  std::cout << rep.points.size() << " points of Sigma(" << to_string(s.window) << ") in ["
            << to_string(lo) << ", " << to_string(hi) << "]\n";
  for (const auto& [len, n] : rep.counts)
    std::cout << "  tile " << element_text(len) << " x" << n << '\n';
  for (std::size_t i = 0; i < rep.exceptional.size(); ++i)
    std::cout << "  exceptional " << to_string(rep.exceptional[i]) << " starting at "
              << to_string(rep.exceptional_left[i]) << '\n';
  return kOk;
}

int run_closure(const Global& g, const RangeArgs& a) {
  const PointSet s{g.window("--window", a.window)};
  const auto [lo, hi] = range_of(g, a, -30, 30);
  const bool admissible = admissible_for_multiplication(s.window);
  const ClosureReport rep = closure_report(s, lo, hi);
  // Violations are expected off the admissible family, a failure on it.
  const bool ok = !admissible || rep.violations.empty();
  if (g.json) {
    Json v = Json::array();
    for (std::size_t i = 0; i < rep.violations.size() && i < kMaxWitnesses; ++i)
      v.push_back({{"x", to_json(rep.violations[i].x)},
                   {"y", to_json(rep.violations[i].y)},
                   {"product", to_json(rep.violations[i].product)}});
    print({{"ring", to_json(g.ring)},
           {"window", to_string(s.window)},
           {"admissible", admissible},
           {"points", rep.points},
           {"pairs", rep.pairs},
           {"violation_count", rep.violations.size()},
           {"violations", std::move(v)},
           {"pass", ok}});
  } else {
    std::cout << "Sigma(" << to_string(s.window) << ") "
              << (admissible ? "admissible" : "not admissible") << ": " << rep.points
              << " points, " << rep.pairs << " pairs, " << rep.violations.size()
              << " product violations\n";
    for (std::size_t i = 0; i < rep.violations.size() && i < kMaxWitnesses; ++i)
      std::cout << "  (" << to_string(rep.violations[i].x) << ")*("
                << to_string(rep.violations[i].y) << ") = "
                << to_string(rep.violations[i].product) << '\n';
  }
  return ok ? kOk : kFailed;
}

struct ParityArgs {
  std::string x;
  bool closed = false;
};

int run_parity(const Global& g, const ParityArgs& a) {
  const RingElement x = g.element("x", a.x);
  const Parity p = parity(x, a.closed ? ParityVariant::Closed01 : ParityVariant::HalfOpen01);
  if (g.json)
    print({{"x", to_json(x)}, {"variant", a.closed ? "closed" : "half-open"}, {"parity", to_string(p)}});
  else
    std::cout << to_string(x) << ": " << to_string(p) << '\n';
  return kOk;
}

struct GradingArgs {
  std::string x;
  unsigned a_max = 6;
};

int run_grading(const Global& g, const GradingArgs& a) {
  const RingElement x = g.element("x", a.x);
  const auto gradings = compatible_gradings(x, a.a_max);
  if (g.json) {
    print({{"x", to_json(x)}, {"a_max", a.a_max}, {"compatible", gradings}});
  } else {
    std::cout << to_string(x) << " compatible with gradings:";
    for (unsigned k : gradings) std::cout << ' ' << k;
    std::cout << '\n';
  }
  return kOk;
}

struct SelfsimArgs {
  unsigned a = 1;
  RangeArgs range;
};

int run_selfsim(const Global& g, const SelfsimArgs& a) {
  const auto [lo, hi] = range_of(g, a.range, -40, 40);
  const RingElement u = alpha_pow(g.ring, a.a);
  const Window wa = self_similar_window(g.ring, a.a);
  std::vector<RingElement> scaled;
  for (const auto& p : enumerate(PointSet::fibonacci_chain(g.ring), lo, hi)) scaled.push_back(u * p);
  const auto direct = enumerate(PointSet{wa}, u * lo, u * hi);
  const bool ok = scaled == direct;
  if (g.json) {
    print({{"a", a.a},
           {"window", to_string(wa)},
           {"points", direct.size()},
           {"equal", ok}});
  } else {
    std::cout << "t^" << a.a << " Sigma((0,1]) = Sigma(" << to_string(wa) << ") on ["
              << to_string(lo) << ", " << to_string(hi) << "]: " << (ok ? "equal" : "DIFFER")
              << " (" << direct.size() << " points)\n";
  }
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// Graded algebra

struct AlgebraArgs {
  std::vector<std::string> gens;
  std::string mode = "symmetric-closed";
};

int run_bracket(const Global& g, const AlgebraArgs& a) {
  const auto gs = g.generators("generator", a.gens);
  const Mode mode = mode_arg(a.mode);
  try {
    const FreeElement b = bracket(gs.at(0), gs.at(1), mode);
    if (g.json)
      print({{"mode", to_string(mode)}, {"bracket", to_json(b)}});
    else
      std::cout << to_string(b) << '\n';
    return kOk;
  } catch (const ClosureDefect& e) {
    if (g.json)
      print({{"mode", to_string(mode)}, {"closure_defect", e.what()}});
    else
      std::cout << "closure defect: " << e.what() << '\n';
    return kFailed;
  }
}

int run_jacobi(const Global& g, const AlgebraArgs& a) {
  const auto gs = g.generators("generator", a.gens);
  const Mode mode = mode_arg(a.mode);
  const FreeElement r = jacobi_residual(gs.at(0), gs.at(1), gs.at(2), mode);
  if (g.json)
    print({{"mode", to_string(mode)}, {"residual", to_json(r)}, {"pass", r.is_zero()}});
  else
    std::cout << "Jacobi residual: " << to_string(r) << '\n';
  return r.is_zero() ? kOk : kFailed;
}

Json sdp_json(const SdpElement& x) { return {{"m1", x.m1.str()}, {"m2", x.m2.str()}, {"a", x.a}}; }

int run_sdp(const Global& g, const AlgebraArgs& a) {
  const auto gs = g.generators("generator", a.gens);
  const SdpElement via_matrix = sdp_compose(g.ring, to_sdp(gs.at(0)), to_sdp(gs.at(1)));
  const SdpElement via_ring = to_sdp(compose(gs.at(0), gs.at(1)));
  const bool ok = via_matrix == via_ring;
  if (g.json) {
    print({{"phi", to_string(phi_matrix(g.ring, gs.at(0).grading))},
           {"matrix", sdp_json(via_matrix)},
           {"ring", sdp_json(via_ring)},
           {"pass", ok}});
  } else {
    std::cout << "Phi(" << gs.at(0).grading << ") = " << to_string(phi_matrix(g.ring, gs.at(0).grading))
              << "\nproduct " << to_string(compose(gs.at(0), gs.at(1))) << "; matrix route "
              << (ok ? "agrees" : "DISAGREES") << '\n';
  }
  return ok ? kOk : kFailed;
}

struct ProbeClosureArgs {
  std::string mode = "strict-paper";
  std::string from = "-3";
  std::string to = "7";
  unsigned a_max = 2;
};

int run_probe_closure(const Global& g, const ProbeClosureArgs& a) {
  const Mode mode = mode_arg(a.mode);
  const RingElement lo = g.element("--from", a.from), hi = g.element("--to", a.to);
  const ClosureProbeReport rep = closure_probe(mode, lo, hi, a.a_max);
  if (g.json) {
    Json d = Json::array();
    for (const auto& w : rep.defects)
      d.push_back({{"left", to_json(w.left)},
                   {"right", to_json(w.right)},
                   {"result", to_json(w.result)},
                   {"reason", w.reason}});
    print({{"mode", to_string(mode)},
           {"generators", rep.generators},
           {"pairs", rep.pairs},
           {"defects", std::move(d)}});
  } else {
    std::cout << to_string(mode) << ": " << rep.generators << " generators, " << rep.pairs
              << " ordered pairs, " << rep.defects.size() << " closure defects\n";
    for (const auto& w : rep.defects)
      std::cout << "  " << to_string(w.left) << " * " << to_string(w.right) << " = "
                << to_string(w.result) << ": " << w.reason << '\n';
  }
  return kOk;
}

struct LcsArgs {
  std::vector<std::string> gens;
  std::string mode = "strict-paper";
  std::string window = "[0,1]";
  std::size_t depth = 8;
};

void print_dims(const Global& g, const Json& generators, const std::vector<std::size_t>& dims) {
  if (g.json) {
    print({{"generators", generators}, {"dims", dims}});
    return;
  }
  std::cout << "dims:";
  for (auto d : dims) std::cout << ' ' << d;
  std::cout << '\n';
}

int run_probe_lcs(const Global& g, const LcsArgs& a) {
  const Mode mode = mode_arg(a.mode);
  const auto gens = a.gens.empty() ? default_non_nilpotent_seed(g.ring) : g.generators("--gen", a.gens);
  Json j = Json::array();
  for (const auto& x : gens) j.push_back(to_string(x));
  print_dims(g, j, lower_central_probe(gens, a.depth, mode));
  return kOk;
}

int run_probe_aw_lcs(const Global& g, const LcsArgs& a) {
  const Window w = g.window("--window", a.window);
  std::vector<RingElement> gens = g.elements("--gen", a.gens);
  if (gens.empty())
    for (const auto& x : enumerate(PointSet{w}, RingElement(g.ring, 0), RingElement(g.ring, 50)))
      if (sign(x) > 0 && gens.size() < 3) gens.push_back(x);
  Json j = Json::array();
  for (const auto& x : gens) j.push_back(to_string(x));
  print_dims(g, j, aw_lower_central_probe(gens, a.depth, w));
  return kOk;
}

// ---------------------------------------------------------------------------
// Multiplicative indices

struct PairArgs {
  std::vector<std::string> xs;
  std::string window = "[0,1]";
};

int run_log_bracket(const Global& g, const PairArgs& a) {
  const auto xs = g.elements("index", a.xs);
  const LogTerm t = log_bracket(xs.at(0), xs.at(1));
  if (g.json)
    print({{"coeff", t.coeff}, {"key", to_json(t.key)}});
  else
    std::cout << std::setprecision(12) << t.coeff << " * L[log " << to_string(t.key) << "]\n";
  return kOk;
}

int run_aw_bracket(const Global& g, const PairArgs& a) {
  const auto xs = g.elements("index", a.xs);
  const Window w = g.window("--window", a.window);
  const AwElement b = aw_bracket(xs.at(0), xs.at(1), w);
  if (g.json) {
    Json terms = Json::array();
    for (const auto& [k, c] : b.terms()) terms.push_back({{"coeff", to_json(c)}, {"index", to_json(k)}});
    print({{"window", to_string(w)}, {"bracket", std::move(terms)}});
  } else if (b.is_zero()) {
    std::cout << "0\n";
  } else {
    for (const auto& [k, c] : b.terms()) std::cout << '(' << to_string(c) << ")*L[" << to_string(k) << "]\n";
  }
  return kOk;
}

struct PreimageArgs {
  std::string target;
  std::string bound;
};

int run_preimages(const Global& g, const PreimageArgs& a) {
  const RingElement t = g.element("target", a.target);
  const RingElement bound = a.bound.empty() ? abs(t) : g.element("--bound", a.bound);
  Json out = {{"target", to_json(t)}, {"bound", to_json(bound)}};
  for (const auto& [name, reading] :
       {std::pair{"exclude-unit-and-self", PreimageReading::ExcludeUnitAndSelf},
        std::pair{"nonzero-bracket", PreimageReading::NonzeroBracket}}) {
    Json pairs = Json::array();
    for (const auto& [p, q] : bracket_preimages(t, bound, reading))
      pairs.push_back(Json::array({to_json(p), to_json(q)}));
    out[name] = std::move(pairs);
  }
  if (g.json) {
    print(out);
    return kOk;
  }
  const auto text = [&](const Json& j) { return to_string(ring_element_from_json(j, g.ring)); };
  for (const char* name : {"exclude-unit-and-self", "nonzero-bracket"}) {
    std::cout << name << ':';
    if (out[name].empty()) std::cout << " none";
    for (const auto& pq : out[name]) std::cout << " (" << text(pq[0]) << ", " << text(pq[1]) << ')';
    std::cout << '\n';
  }
  return kOk;
}

struct PrimesArgs {
  std::string window = "[-1,1]";
  std::string max = "100";
};

int run_primes(const Global& g, const PrimesArgs& a) {
  const PointSet s{g.window("--window", a.window)};
  const RingElement max = g.element("--max", a.max);
  const RingElement one(g.ring, 1);
  if (!admissible_for_multiplication(s.window))
    throw UsageError("window " + to_string(s.window) + " is not closed under multiplication");
  Json primes = Json::array(), units = Json::array(), composites = Json::array();
  for (const auto& x : enumerate(s, one, max)) {
    if (!(one < x)) continue;
    const Irreducibility r = monoid_irreducible(x, x, s);
    if (r.unit_convention)
      units.push_back(to_json(x));
    else if (r.irreducible)
      primes.push_back(to_json(x));
    else
      composites.push_back(
          {{"x", to_json(x)}, {"factors", {to_json(r.factors->first), to_json(r.factors->second)}}});
  }
  if (g.json) {
    print({{"ring", to_json(g.ring)},
           {"window", to_string(s.window)},
           {"max", to_json(max)},
           {"primes", primes},
           {"units", units},
           {"composites", composites}});
    return kOk;
  }
  const auto text = [&](const Json& j) { return to_string(ring_element_from_json(j, g.ring)); };
  std::cout << "primes:";
  for (const auto& p : primes) std::cout << ' ' << text(p);
  std::cout << "\nunits (irreducible by convention):";
  for (const auto& p : units) std::cout << ' ' << text(p);
  std::cout << "\ncomposites:\n";
  for (const auto& c : composites)
    std::cout << "  " << text(c["x"]) << " = (" << text(c["factors"][0]) << ")*("
              << text(c["factors"][1]) << ")\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// Verification suites

struct VerifyArgs {
  std::string suite;
  bool all = false;
  std::string window;
  std::optional<long> from;
  std::optional<long> to;
  std::optional<unsigned> a_max;
  std::string mode;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  std::size_t depth = 8;
  std::vector<std::string> gens;
};

void print_report_text(const Report& rep) {
  std::cout << rep.suite << ": " << (rep.pass ? "PASS" : "FAIL") << " (" << fixed(rep.wall_ms)
            << " ms) " << rep.counts.dump() << '\n';
  for (const auto& w : rep.witnesses) std::cout << "  witness " << w.dump() << '\n';
  for (const auto& f : rep.findings) std::cout << "  finding " << f.dump() << '\n';
}

int run_verify(const Global& g, const VerifyArgs& a) {
  VerifyParams p;
  p.ring = g.ring;
  if (!a.window.empty()) p.window = g.window("--window", a.window);
  if (a.from || a.to) {
    if (!a.from || !a.to) throw UsageError("--from and --to go together");
    if (*a.from > *a.to) throw UsageError("--from must not exceed --to");
    p.range = {{*a.from, *a.to}};
  }
  p.a_max = a.a_max;
  if (!a.mode.empty()) p.mode = mode_arg(a.mode);
  p.seed = a.seed;
  p.samples = a.samples;
  p.depth = a.depth;
  p.generators = g.generators("--gen", a.gens);

  std::vector<const Suite*> chosen;
  if (a.all) {
    for (const auto& s : suites()) chosen.push_back(&s);
  } else {
    chosen.push_back(find_suite(a.suite));
  }
  // Suites are independent; run them concurrently and report in name order.
  std::vector<std::future<Report>> running;
  for (const Suite* s : chosen)
    running.push_back(std::async(std::launch::async, [s, &p] { return run_suite(*s, p); }));
  std::vector<Report> reports;
  for (auto& f : running) reports.push_back(f.get());

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (g.json) {
    if (a.all) {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      print({{"pass", pass}, {"reports", std::move(all)}});
    } else {
      print(to_json(reports.front()));
    }
  } else {
    for (const auto& r : reports) print_report_text(r);
  }
  return pass ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Exact cut-and-project point sets and the graded algebras over them."};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  Global g;
  app.add_option("--ring", g.ring_text, "Quadratic ring x^2 = m x + eps as 'm,eps'")
      ->envname("QUASI_RING")
      ->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");

  ChainArgs chain;
  auto* c_chain = app.add_subcommand("chain", "List chain points n2 t + floor(n2/t + 1) for n2 in [from, to]");
  c_chain->add_option("--from", chain.from)->capture_default_str();
  c_chain->add_option("--to", chain.to)->capture_default_str();

  MemberArgs mem;
  auto* c_member = app.add_subcommand("member", "Whether x lies in Sigma(window)");
  c_member->add_option("x", mem.x, "Ring element, e.g. 4+5t (use -- before negative input)")->required();
  c_member->add_option("--window", mem.window)->capture_default_str();

  RangeArgs tile_args;
  auto* c_tiles = app.add_subcommand("tiles", "Gap lengths of Sigma(window) in [from, to]");
  c_tiles->add_option("--window", tile_args.window)->capture_default_str();
  c_tiles->add_option("--from", tile_args.from, "Default -50");
  c_tiles->add_option("--to", tile_args.to, "Default 50");

  RangeArgs closure_args;
  auto* c_closure = app.add_subcommand(
      "closure", "All products of members in [from, to]; fails if an admissible window is not closed");
  c_closure->add_option("--window", closure_args.window)->capture_default_str();
  c_closure->add_option("--from", closure_args.from, "Default -30");
  c_closure->add_option("--to", closure_args.to, "Default 30");

  ParityArgs par;
  auto* c_parity = app.add_subcommand("parity", "Even iff x* in (0,1/t], odd iff x* in (1/t,1]");
  c_parity->add_option("x", par.x)->required();
  c_parity->add_flag("--closed", par.closed, "Work on Sigma([0,1]); 1/t is ambiguous");

  GradingArgs grad;
  auto* c_grading = app.add_subcommand("grading", "Gradings a <= a-max compatible with x");
  c_grading->add_option("x", grad.x)->required();
  c_grading->add_option("--a-max", grad.a_max)->capture_default_str();

  SelfsimArgs self;
  auto* c_selfsim = app.add_subcommand("selfsim", "Check t^a Sigma((0,1]) = Sigma(W_a) on a range");
  c_selfsim->add_option("--a", self.a)->capture_default_str();
  c_selfsim->add_option("--from", self.range.from, "Default -40");
  c_selfsim->add_option("--to", self.range.to, "Default 40");

  AlgebraArgs br, jac, sdp;
  auto* c_bracket = app.add_subcommand("bracket", "[J^a_m, J^b_n] for generators like J[a=1,m=1+t]");
  c_bracket->add_option("generators", br.gens)->required()->expected(2);
  c_bracket->add_option("--mode", br.mode)->capture_default_str();
  auto* c_jacobi = app.add_subcommand("jacobi", "Jacobi residual of three generators; fails if nonzero");
  c_jacobi->add_option("generators", jac.gens)->required()->expected(3);
  c_jacobi->add_option("--mode", jac.mode)->capture_default_str();
  auto* c_sdp = app.add_subcommand("sdp", "Index composition via Phi(a) against the ring product");
  c_sdp->add_option("generators", sdp.gens)->required()->expected(2);

  ProbeClosureArgs pc;
  auto* c_probe_closure = app.add_subcommand("probe-closure", "Products of valid generators that leave the set");
  c_probe_closure->add_option("--mode", pc.mode)->capture_default_str();
  c_probe_closure->add_option("--from", pc.from)->capture_default_str();
  c_probe_closure->add_option("--to", pc.to)->capture_default_str();
  c_probe_closure->add_option("--a-max", pc.a_max)->capture_default_str();

  LcsArgs lcs, aw_lcs;
  auto* c_probe_lcs = app.add_subcommand("probe-lcs", "Dimensions of nested brackets of generators");
  c_probe_lcs->add_option("--gen", lcs.gens, "Generator; repeat. Default: a non-commuting pair");
  c_probe_lcs->add_option("--mode", lcs.mode)->capture_default_str();
  c_probe_lcs->add_option("--depth", lcs.depth)->capture_default_str();
  auto* c_probe_aw = app.add_subcommand("probe-aw-lcs", "Dimensions of nested window-cut Witt brackets");
  c_probe_aw->add_option("--gen", aw_lcs.gens, "Index; repeat. Default: three smallest positive points");
  c_probe_aw->add_option("--window", aw_lcs.window)->capture_default_str();
  c_probe_aw->add_option("--depth", aw_lcs.depth)->capture_default_str();

  PairArgs lb, awb;
  auto* c_log = app.add_subcommand("log-bracket", "[L_log|m|, L_log|n|] for m, n in Sigma([-1,1])");
  c_log->add_option("indices", lb.xs)->required()->expected(2);
  auto* c_aw = app.add_subcommand("aw-bracket", "Window-cut Witt bracket [L_n, L_m]");
  c_aw->add_option("indices", awb.xs)->required()->expected(2);
  c_aw->add_option("--window", awb.window)->capture_default_str();

  PreimageArgs pre;
  auto* c_pre = app.add_subcommand("preimages", "Pairs (m, n) in Sigma([-1,1]) with [L_m, L_n] landing on target, both readings");
  c_pre->add_option("target", pre.target)->required();
  c_pre->add_option("--bound", pre.bound, "Largest |m| searched; default |target|");

  PrimesArgs pr;
  auto* c_primes = app.add_subcommand("primes", "Irreducible members of a multiplicative model set in (1, max]");
  c_primes->add_option("--window", pr.window)->capture_default_str();
  c_primes->add_option("--max", pr.max)->capture_default_str();

  VerifyArgs ver;
  std::vector<std::string> names;
  std::string suite_help = "Suite to run:";
  for (const auto& s : suites()) {
    names.emplace_back(s.name);
    suite_help += std::string("\n  ") + s.name + ": " + s.statement;
  }
  auto* c_verify = app.add_subcommand("verify", "Run verification suites");
  auto* o_suite = c_verify->add_option("--suite", ver.suite, suite_help)->check(CLI::IsMember(names));
  auto* o_all = c_verify->add_flag("--all", ver.all, "Run every suite");
  o_suite->excludes(o_all);
  c_verify->add_option("--window", ver.window);
  c_verify->add_option("--from", ver.from, "Lower end of the exhaustive range");
  c_verify->add_option("--to", ver.to, "Upper end of the exhaustive range");
  c_verify->add_option("--a-max", ver.a_max);
  c_verify->add_option("--mode", ver.mode, "strict-paper or symmetric-closed");
  c_verify->add_option("--seed", ver.seed)->capture_default_str();
  c_verify->add_option("--samples", ver.samples)->capture_default_str();
  c_verify->add_option("--depth", ver.depth)->capture_default_str();
  c_verify->add_option("--gen", ver.gens, "Generator for non-nilpotent; repeat");

  try {
    app.parse(argc, argv);
    if (c_verify->parsed() && ver.suite.empty() && !ver.all)
      throw CLI::RequiredError("--suite or --all");
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  g.ring = parse_arg("--ring", g.ring_text, [](const std::string& s) { return parse_ring_spec(s); });

  if (c_chain->parsed()) return run_chain(g, chain);
  if (c_member->parsed()) return run_member(g, mem);
  if (c_tiles->parsed()) return run_tiles(g, tile_args);
  if (c_closure->parsed()) return run_closure(g, closure_args);
  if (c_parity->parsed()) return run_parity(g, par);
  if (c_grading->parsed()) return run_grading(g, grad);
  if (c_selfsim->parsed()) return run_selfsim(g, self);
  if (c_bracket->parsed()) return run_bracket(g, br);
  if (c_jacobi->parsed()) return run_jacobi(g, jac);
  if (c_sdp->parsed()) return run_sdp(g, sdp);
  if (c_probe_closure->parsed()) return run_probe_closure(g, pc);
  if (c_probe_lcs->parsed()) return run_probe_lcs(g, lcs);
  if (c_probe_aw->parsed()) return run_probe_aw_lcs(g, aw_lcs);
  if (c_log->parsed()) return run_log_bracket(g, lb);
  if (c_aw->parsed()) return run_aw_bracket(g, awb);
  if (c_pre->parsed()) return run_preimages(g, pre);
  if (c_primes->parsed()) return run_primes(g, pr);
  if (c_verify->parsed()) return run_verify(g, ver);
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    // Malformed or out-of-domain input: not a member, invalid generator, ...
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

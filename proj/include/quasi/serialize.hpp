#pragma once

// JSON forms. Integers travel as decimal strings to keep full precision.

#include "quasi/liealg.hpp"
#include "quasi/modelset.hpp"
#include "quasi/qring.hpp"
#include "quasi/window.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace quasi {

using Json = nlohmann::ordered_json;

inline Json to_json(const RingSpec& r) { return {{"m", r.trace()}, {"eps", r.eps()}}; }

inline RingSpec ring_spec_from_json(const Json& j) {
  return RingSpec(j.at("m").get<int>(), j.at("eps").get<int>());
}

inline Json to_json(const RingElement& x) { return {{"c0", x.c0().str()}, {"c1", x.c1().str()}}; }

inline RingElement ring_element_from_json(const Json& j, const RingSpec& r = {}) {
  try {
    return RingElement(r, Integer(j.at("c0").get<std::string>()),
                       Integer(j.at("c1").get<std::string>()));
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("bad ring element JSON: ") + e.what());
  }
}

inline Json point_list_json(const PointSet& s, const std::vector<RingElement>& points) {
  Json pts = Json::array();
  for (const auto& p : points) {
    Json j = to_json(p);
    j["approx"] = approx(p).first;
    pts.push_back(std::move(j));
  }
  return {{"ring", to_json(s.ring())}, {"window", to_string(s.window)}, {"points", std::move(pts)}};
}

inline Json to_json(const Generator& g) { return {{"a", g.grading}, {"m", to_json(g.index)}}; }

inline Generator generator_from_json(const Json& j, const RingSpec& r = {}) {
  return {j.at("a").get<unsigned>(), ring_element_from_json(j.at("m"), r)};
}

inline Json to_json(const FreeElement& x) {
  Json out = Json::array();
  for (const auto& [g, c] : x.terms())
    out.push_back({{"coeff", to_json(c)}, {"a", g.grading}, {"m", to_json(g.index)}});
  return out;
}

inline FreeElement free_element_from_json(const Json& j, const RingSpec& r = {}) {
  FreeElement out;
  for (const auto& term : j)
    out.add({term.at("a").get<unsigned>(), ring_element_from_json(term.at("m"), r)},
            ring_element_from_json(term.at("coeff"), r));
  return out;
}

inline std::string to_string(const FreeElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : x.terms()) {
    std::string coeff = to_string(c);
    const bool compound = !c.is_integer() && !c.c0().is_zero();
    if (!out.empty()) {
      if (!compound && coeff.front() == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (compound) coeff = "(" + coeff + ")";
    if (coeff == "1")
      coeff.clear();
    else if (coeff == "-1")
      coeff = "-";
    else
      coeff += "*";
    out += coeff + to_string(g);
  }
  return out;
}

}  // namespace quasi

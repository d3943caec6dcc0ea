#include "quasi/parse.hpp"

#include "quasi/serialize.hpp"

#include <gtest/gtest.h>

#include <random>

namespace quasi {
namespace {

const RingSpec kSilver(2, 1);

RingElement E(long c0, long c1 = 0, RingSpec r = {}) { return RingElement(r, c0, c1); }

TEST(ParseElement, Examples) {
  EXPECT_EQ(parse_ring_element("4+5t"), E(4, 5));
  EXPECT_EQ(parse_ring_element("-t"), E(0, -1));
  EXPECT_EQ(parse_ring_element("1"), E(1));
  EXPECT_EQ(parse_ring_element("-1+1t"), E(-1, 1));
  EXPECT_EQ(parse_ring_element("5t+4"), E(4, 5));
  EXPECT_EQ(parse_ring_element("0"), E(0));
  EXPECT_EQ(parse_ring_element("+3"), E(3));
  EXPECT_EQ(parse_ring_element("2t", kSilver), E(0, 2, kSilver));
  EXPECT_EQ(parse_ring_element("123456789012345678901234567890t"),
            RingElement(RingSpec{}, 0, Integer("123456789012345678901234567890")));
}

TEST(ParseElement, ErrorsCarryPositions) {
  const auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_ring_element(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position_of("0.5"), 1u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("1+"), 2u);
  EXPECT_EQ(position_of("1+2+3t"), 2u);  // repeated constant term
  EXPECT_EQ(position_of("4 + 5t"), 1u);
  EXPECT_EQ(position_of("x"), 0u);
  EXPECT_EQ(position_of("tt"), 1u);
}

TEST(ParseElement, RoundTripsWithPrinter) {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 5000; ++i) {
    const RingElement x = E(i % 7 == 0 ? 0 : d(rng), i % 5 == 0 ? 0 : d(rng));
    const std::string text = to_string(x);
    EXPECT_EQ(parse_ring_element(text), x) << text;
    EXPECT_EQ(to_string(parse_ring_element(text)), text);
  }
}

TEST(ParseWindow, Examples) {
  const Window w = parse_window("(0,1]");
  EXPECT_EQ(w, Window::left_open(E(0), E(1)));
  EXPECT_EQ(parse_window("[-1,1]"), Window::closed(E(-1), E(1)));
  EXPECT_EQ(parse_window("(-1+t,1)"), Window::open(E(-1, 1), E(1)));
  EXPECT_EQ(to_string(parse_window("[1-t,2-t)")), "[1-t,2-t)");
}

TEST(ParseWindow, Errors) {
  const auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_window(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position_of("[-1,0.5]"), 5u);
  EXPECT_EQ(position_of("0,1]"), 0u);
  EXPECT_EQ(position_of("[0,1"), 4u);
  EXPECT_EQ(position_of("[01]"), 3u);
  EXPECT_NE(position_of("(1,1]"), std::string::npos);  // empty
  EXPECT_EQ(position_of("[,1]"), 1u);
}

TEST(ParseGenerator, ExamplesAndErrors) {
  const Generator g = parse_generator("J[a=2,m=1+1t]");
  EXPECT_EQ(g.grading, 2u);
  EXPECT_EQ(g.index, E(1, 1));
  EXPECT_EQ(to_string(g), "J[a=2,m=1+t]");
  EXPECT_EQ(parse_generator(to_string(g)), g);
  EXPECT_EQ(parse_generator("J[a=0,m=0]"), (Generator{0, E(0)}));
  EXPECT_THROW(parse_generator("J[2,1]"), ParseError);
  EXPECT_THROW(parse_generator("J[a=2,m=1+1t"), ParseError);
  EXPECT_THROW(parse_generator("J[a=x,m=1]"), ParseError);
  EXPECT_THROW(parse_generator("J[a=99999999999999999999,m=1]"), ParseError);
}

TEST(Json, RingElementRoundTrip) {
  const RingElement x(RingSpec{}, Integer("-98765432109876543210"), 17);
  const Json j = to_json(x);
  EXPECT_EQ(j.dump(), R"({"c0":"-98765432109876543210","c1":"17"})");
  EXPECT_EQ(ring_element_from_json(j), x);
  EXPECT_EQ(to_json(kSilver).dump(), R"({"m":2,"eps":1})");
  EXPECT_EQ(ring_spec_from_json(to_json(kSilver)), kSilver);
  EXPECT_THROW(ring_element_from_json(Json::parse(R"({"c0":"1x","c1":"0"})")),
               std::invalid_argument);
}

TEST(Json, FreeElementRoundTrip) {
  FreeElement x(Generator{3, E(5, 7)}, E(1));
  x.add(Generator{3, E(3, 4)}, E(-1));
  x.add(Generator{0, E(0)}, E(2, -1));
  const Json j = to_json(x);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].begin().key(), "coeff");
  EXPECT_EQ(free_element_from_json(j), x);
  EXPECT_EQ(to_string(x), "(2-t)*J[a=0,m=0] - J[a=3,m=3+4t] + J[a=3,m=5+7t]");
  EXPECT_EQ(to_string(FreeElement{}), "0");
}

TEST(Json, PointList) {
  const PointSet s = PointSet::fibonacci_chain();
  const Json j = point_list_json(s, {E(1), E(1, 1)});
  EXPECT_EQ(j["window"], "(0,1]");
  EXPECT_EQ(j["points"].size(), 2u);
  EXPECT_EQ(j["points"][1]["c1"], "1");
  EXPECT_NEAR(j["points"][1]["approx"].get<double>(), 2.618034, 1e-6);
}

}  // namespace
}  // namespace quasi

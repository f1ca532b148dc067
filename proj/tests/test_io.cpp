#include "weyltab/json_io.hpp"
#include "weyltab/render.hpp"

#include "weyltab/boxes_a.hpp"

#include <doctest.h>

using namespace weyltab;

namespace {

PlacedShape c2_shape() {
  auto rs = RootSystem::build(Family::C, 2);
  RootSet J;
  J.set(rs->lookup(Coords{-1, 1}) - 1);
  J.set(rs->lookup(Coords{1, 1}) - 1);
  return PlacedShape::make(rs, Weight{Rat(0), Rat(1)}, J);
}

}  // namespace

TEST_CASE("shape JSON round trip") {
  PlacedShape s = c2_shape();
  Json j = shape_to_json(s);
  CHECK(j["type"] == "C");
  CHECK(j["rank"] == 2);
  CHECK(j["gamma"][0] == "0");
  CHECK(j["gamma"][1] == "1");

  PlacedShape back = shape_from_json(j);
  CHECK(back.gamma == s.gamma);
  CHECK(back.J == s.J);
  CHECK(back.rs->name() == "C2");
  // byte-identical re-serialization
  CHECK(shape_to_json(back).dump() == j.dump());

  // half-integer weights survive the trip
  auto rs = RootSystem::build(Family::C, 2);
  auto s2 = PlacedShape::make(rs, Weight{Rat(1, 2), Rat(3, 2)}, RootSet{});
  CHECK(shape_from_json(shape_to_json(s2)).gamma == s2.gamma);

  CHECK_THROWS_AS(shape_from_json(Json{{"type", "E"}, {"rank", 8}}), InvalidInput);
}

TEST_CASE("tableau set and graph JSON") {
  PlacedShape s = c2_shape();
  WeylGroup W(s.rs);
  TableauSet ts = enumerate_standard_tableaux(W, s);
  Json j = tableau_set_to_json(ts);
  CHECK(j["count"] == 1);
  CHECK(j["elements"][0] == Json::array({1, -2}));

  auto g = build_calibration_graph(s.rs, s.gamma);
  label_components(g);
  Json gj = graph_to_json(g);
  CHECK(gj["vertices"] == 4);
  CHECK(gj["edges"] == 1);
  CHECK(gj["components"].size() == 3);

  std::string dot = graph_to_dot(g);
  CHECK(dot.find("graph calibration") != std::string::npos);
  CHECK(dot.find("v0 [label=\"(0,1)\"") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-2") == Rat(-2));
  CHECK(rat_to_string(Rat(-5, 10)) == "-1/2");
  CHECK_THROWS_AS(rat_from_string("1/0"), InvalidInput);
  CHECK_THROWS_AS(rat_from_string("abc"), InvalidInput);
}

TEST_CASE("ascii rendering is stable") {
  auto rs = RootSystem::build(Family::A, 6);
  Weight g{Rat(-1), Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(1), Rat(1)};
  RootSet J;
  auto add = [&](int j, int i) {
    Coords c(7, 0);
    c[j - 1] = 1;
    c[i - 1] = -1;
    J.set(rs->lookup(c) - 1);
  };
  add(4, 2);
  add(4, 3);
  add(6, 5);
  add(7, 5);
  BoxConfig c = boxes_a::shape_to_configuration(*rs, g, J);
  std::string expected =
      "+---+---+---+\n"
      "|-1 | 0 | 1 |\n"
      "+---+---+---+---+\n"
      "    |-1 |   | 1 |\n"
      "    +---+---+---+\n"
      "        |-1 | 0 |\n"
      "        +---+---+\n";
  CHECK(render_config(c, LabelMode::Content) == expected);

  Filling tmin{1, 3, 4, 2, 7, 5, 6};
  std::string entries =
      "+--+--+--+\n"
      "|1 |2 |5 |\n"
      "+--+--+--+--+\n"
      "   |3 |  |6 |\n"
      "   +--+--+--+\n"
      "      |4 |7 |\n"
      "      +--+--+\n";
  CHECK(render_config(c, LabelMode::Entry, &tmin) == entries);

  Json cj = config_to_json(c);
  CHECK(cj["boxes"].size() == 7);
  CHECK(cj["boxes"][0]["content"] == "-1");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "stochgeo/bodies.hpp"
#include "stochgeo/errors.hpp"
#include "stochgeo/polygon_io.hpp"

using namespace stochgeo;

TEST_CASE("parse a named polygon document") {
  const auto np = parse_polygon_json(R"({"name": "unit", "vertices": [[0,0],[1,0],[1,1],[0,1]]})");
  REQUIRE(np.name);
  CHECK(*np.name == "unit");
  CHECK(np.polygon.size() == 4);
  CHECK(area(np.polygon) == doctest::Approx(1.0));
}

TEST_CASE("name is optional and vertex order is canonicalized") {
  const auto np = parse_polygon_json(R"({"vertices": [[0,1],[1,1],[1,0],[0,0]]})");
  CHECK_FALSE(np.name);
  CHECK(np.polygon[0] == Point2{0, 0});
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_polygon_json("not json"), PolygonFormatError);
  CHECK_THROWS_AS(parse_polygon_json(R"({"name": "x"})"), PolygonFormatError);
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [[0,0],[1]]})"), PolygonFormatError);
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [[0,0],["a",1],[1,1]]})"), PolygonFormatError);
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [[0,0],[1,1],[2,2]]})"), DegeneratePolygon);
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [[0,0],[2,0],[2,2],[0,2],[1,1]]})"),
                  DegeneratePolygon);
}

TEST_CASE("round trip through a file") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "stochgeo_io_roundtrip.json";
  const auto p = random_ellipse_polygon(9, 3, 1, false);
  write_polygon_file(path, p, "nonagon");
  const auto back = read_polygon_file(path);
  REQUIRE(back.name);
  CHECK(*back.name == "nonagon");
  REQUIRE(back.polygon.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(back.polygon[i] == p[i]);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_polygon_file(dir / "stochgeo_missing_file.json"), PolygonFormatError);
}

TEST_CASE("file bodies keep their area unless one is requested") {
  const auto path = std::filesystem::temp_directory_path() / "stochgeo_io_body.json";
  {
    std::ofstream f(path);
    f << R"({"vertices": [[-2,-1],[2,-1],[2,1],[-2,1]]})";
  }
  const auto spec = BodySpec::parse("file:" + path.string());
  CHECK(area(realize(spec)) == doctest::Approx(8.0));
  auto scaled = spec;
  scaled.target_area = 2.0;
  CHECK(area(realize(scaled)) == doctest::Approx(2.0));
  std::filesystem::remove(path);
}

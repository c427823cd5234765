#include "stochgeo/polygon_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "stochgeo/errors.hpp"

namespace stochgeo {

NamedPolygon parse_polygon_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PolygonFormatError(std::string("polygon document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw PolygonFormatError("polygon document needs a 'vertices' array");
  }
  std::vector<Point2> pts;
  for (const auto& item : doc["vertices"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw PolygonFormatError("each vertex must be an [x, y] number pair");
    }
    pts.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  if (pts.size() < 3) throw PolygonFormatError("a polygon needs at least three vertices");

  NamedPolygon out{std::nullopt, ConvexPolygon::from_vertices(pts)};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw PolygonFormatError("'name' must be a string");
    out.name = doc["name"].get<std::string>();
  }
  return out;
}

NamedPolygon read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PolygonFormatError("cannot open polygon file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_polygon_json(buf.str());
}

std::string polygon_to_json(const ConvexPolygon& polygon, const std::optional<std::string>& name) {
  nlohmann::json doc;
  if (name) doc["name"] = *name;
  auto& verts = doc["vertices"] = nlohmann::json::array();
  for (const auto& v : polygon.vertices()) verts.push_back({v.x, v.y});
  return doc.dump();
}

void write_polygon_file(const std::filesystem::path& path, const ConvexPolygon& polygon,
                        const std::optional<std::string>& name) {
  std::ofstream out(path);
  if (!out) throw PolygonFormatError("cannot write polygon file " + path.string());
  out << polygon_to_json(polygon, name) << '\n';
}

}  // namespace stochgeo

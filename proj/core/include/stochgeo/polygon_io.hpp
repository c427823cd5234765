#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "stochgeo/geom2.hpp"

namespace stochgeo {

struct NamedPolygon {
  std::optional<std::string> name;
  ConvexPolygon polygon;
};

// Polygon interchange document: {"name": "...", "vertices": [[x, y], ...]}.
// `name` is optional. Readers canonicalize and validate; malformed input
// raises PolygonFormatError, non-convex input DegeneratePolygon.
NamedPolygon parse_polygon_json(const std::string& text);
NamedPolygon read_polygon_file(const std::filesystem::path& path);

std::string polygon_to_json(const ConvexPolygon& polygon,
                            const std::optional<std::string>& name = std::nullopt);
void write_polygon_file(const std::filesystem::path& path, const ConvexPolygon& polygon,
                        const std::optional<std::string>& name = std::nullopt);

}  // namespace stochgeo

#pragma once

#include <stdexcept>
#include <string>

namespace stochgeo {

// Base for every recoverable failure raised by the library.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OriginNotInterior : public GeometryError {
 public:
  OriginNotInterior() : GeometryError("origin is not strictly interior to the polygon") {}
  explicit OriginNotInterior(const std::string& what) : GeometryError(what) {}
};

class ZeroDirection : public GeometryError {
 public:
  ZeroDirection() : GeometryError("support direction must be non-zero") {}
};

class SingularMap : public GeometryError {
 public:
  SingularMap() : GeometryError("linear map is singular") {}
};

class DegeneratePolygon : public GeometryError {
 public:
  explicit DegeneratePolygon(const std::string& what) : GeometryError(what) {}
};

class NonpositiveSupport : public GeometryError {
 public:
  NonpositiveSupport() : GeometryError("support function is non-positive at a quadrature node") {}
};

class NoValidDirection : public GeometryError {
 public:
  explicit NoValidDirection(const std::string& what) : GeometryError(what) {}
};

class OutOfRange : public GeometryError {
 public:
  explicit OutOfRange(const std::string& what) : GeometryError(what) {}
};

class PolygonFormatError : public GeometryError {
 public:
  explicit PolygonFormatError(const std::string& what) : GeometryError(what) {}
};

}  // namespace stochgeo

#pragma once

#include <string>
#include <vector>

#include "document.hpp"
#include "pltopo/complement.hpp"
#include "pltopo/parity.hpp"

namespace pltopo::cli {

/// Reduced decimal when the denominator is 2^a 5^b, otherwise 12 significant
/// digits. Display only.
std::string svg_number(const Rational& r);

/// Accumulates shapes and writes them with y pointing up. The viewBox is the
/// bounding box of every shape inflated by 5% per side; lines and rays are
/// clipped to it.
class SvgScene {
 public:
  void polyline(const std::vector<Point>& pts, const std::string& cls);
  void point(const Point& p, const std::string& cls);
  void vertical_line(const Rational& x, const std::string& cls);
  void vertical_ray(const Point& origin, RayDirection dir, const std::string& cls);
  std::string render() const;

 private:
  struct Shape {
    enum class Kind { Polyline, Point, Line, Ray } kind;
    std::vector<Point> pts;
    RayDirection dir = RayDirection::Up;
    std::string cls;
  };
  std::vector<Shape> shapes_;
};

std::string svg_for_document(const GeometryDocument& doc);
std::string svg_for_decomposition(const RayDecomposition& dec);
std::string svg_for_offset(const PLCircuit& f, const OffsetCycle& offset);

}  // namespace pltopo::cli

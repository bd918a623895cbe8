#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pltopo/rational.hpp"

namespace pltopo {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic: x first, then y.
  friend auto operator<=>(const Point&, const Point&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

Point midpoint(const Point& a, const Point& b);
/// a + t (b - a)
Point lerp(const Point& a, const Point& b, const Rational& t);

/// Closed straight segment with distinct endpoints.
class Segment {
 public:
  /// Throws Error(DegeneratePiece) when a == b.
  Segment(Point a, Point b);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  bool is_vertical() const { return a_.x == b_.x; }
  bool is_horizontal() const { return a_.y == b_.y; }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point a_;
  Point b_;
};

enum class RayDirection { Up, Down };

/// Closed vertical half-line; the origin belongs to the ray.
struct VerticalRay {
  Point origin;
  RayDirection direction = RayDirection::Up;

  /// True when the y-coordinate lies on the ray's side of the origin.
  bool covers_y(const Rational& y) const {
    return direction == RayDirection::Up ? y >= origin.y : y <= origin.y;
  }

  friend bool operator==(const VerticalRay&, const VerticalRay&) = default;
};

using GeomItem = std::variant<Point, Segment, VerticalRay>;
using GeomSet = std::vector<GeomItem>;

struct BoundingBox {
  Rational x_min, y_min, x_max, y_max;

  void expand(const Point& p);
  BoundingBox inflated(const Rational& margin) const;
  bool contains(const Point& p) const;
};

BoundingBox bounding_box(std::span<const Point> points);

/// Sign of (q - p) x (r - p): +1 when r is strictly left of the directed line
/// p -> q, -1 when strictly right, 0 when collinear.
int orient(const Point& p, const Point& q, const Point& r);

/// Cross product (q - p) x (r - p).
Rational cross(const Point& p, const Point& q, const Point& r);

struct NoIntersection {
  friend bool operator==(const NoIntersection&, const NoIntersection&) = default;
};

/// Empty, a single point, or a collinear overlap segment whose endpoints are
/// ordered lexicographically.
using SegIntersection = std::variant<NoIntersection, Point, Segment>;

SegIntersection seg_intersection(const Segment& s, const Segment& t);

/// True iff p lies on the closed segment.
bool contains_point(const Segment& s, const Point& p);

/// Parameter t with p = a + t (b - a). Requires contains_point(s, p).
Rational parameter_of(const Segment& s, const Point& p);

/// Closed parameter interval [lo, hi] along s of s ∩ item, or nullopt.
std::optional<std::pair<Rational, Rational>> hit_range(const Segment& s, const GeomItem& item);

/// Some common point of two items, or nullopt when they are disjoint.
std::optional<Point> common_point(const GeomItem& a, const GeomItem& b);

bool intersects(const GeomItem& a, const GeomItem& b);

/// Exact squared distance between two items (the infimum is always attained).
Rational dist2(const GeomItem& a, const GeomItem& b);

/// Exact squared distance between the unions of two non-empty sets.
/// Throws Error(EmptyInput) when either set is empty.
Rational dist2(const GeomSet& a, const GeomSet& b);

Rational dist2(const Point& p, const Point& q);

}  // namespace pltopo

#include "pltopo/geometry.hpp"

#include <algorithm>
#include <ostream>

#include "pltopo/error.hpp"

namespace pltopo {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

Point midpoint(const Point& a, const Point& b) {
  const Rational half(mpz_class(1), mpz_class(2));
  return {(a.x + b.x) * half, (a.y + b.y) * half};
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) throw Error(ErrorCode::DegeneratePiece, "segment endpoints coincide");
}

void BoundingBox::expand(const Point& p) {
  if (p.x < x_min) x_min = p.x;
  if (p.x > x_max) x_max = p.x;
  if (p.y < y_min) y_min = p.y;
  if (p.y > y_max) y_max = p.y;
}

BoundingBox BoundingBox::inflated(const Rational& margin) const {
  return {x_min - margin, y_min - margin, x_max + margin, y_max + margin};
}

bool BoundingBox::contains(const Point& p) const {
  return x_min <= p.x && p.x <= x_max && y_min <= p.y && p.y <= y_max;
}

BoundingBox bounding_box(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "bounding box of no points");
  BoundingBox box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const auto& p : points.subspan(1)) box.expand(p);
  return box;
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int orient(const Point& p, const Point& q, const Point& r) { return cross(p, q, r).sign(); }

namespace {

bool within_box(const Point& a, const Point& b, const Point& p) {
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y &&
         p.y <= max(a.y, b.y);
}

bool boxes_overlap(const Segment& s, const Segment& t) {
  return !(max(s.a().x, s.b().x) < min(t.a().x, t.b().x) ||
           max(t.a().x, t.b().x) < min(s.a().x, s.b().x) ||
           max(s.a().y, s.b().y) < min(t.a().y, t.b().y) ||
           max(t.a().y, t.b().y) < min(s.a().y, s.b().y));
}

SegIntersection from_range(Point lo, Point hi) {
  if (hi < lo) return NoIntersection{};
  if (lo == hi) return lo;
  return Segment(std::move(lo), std::move(hi));
}

// Intersection of a vertical ray with a segment, same shape as seg_intersection.
SegIntersection ray_segment(const VerticalRay& r, const Segment& s) {
  const Rational& x = r.origin.x;
  if (s.is_vertical()) {
    if (s.a().x != x) return NoIntersection{};
    Point lo = std::min(s.a(), s.b());
    Point hi = std::max(s.a(), s.b());
    if (r.direction == RayDirection::Up) {
      if (lo.y < r.origin.y) lo = r.origin;
    } else {
      if (hi.y > r.origin.y) hi = r.origin;
    }
    return from_range(std::move(lo), std::move(hi));
  }
  if (x < min(s.a().x, s.b().x) || x > max(s.a().x, s.b().x)) return NoIntersection{};
  const Rational t = (x - s.a().x) / (s.b().x - s.a().x);
  Point p{x, s.a().y + (s.b().y - s.a().y) * t};
  if (!r.covers_y(p.y)) return NoIntersection{};
  return p;
}

Rational point_segment_dist2(const Point& p, const Segment& s) {
  const Rational vx = s.b().x - s.a().x;
  const Rational vy = s.b().y - s.a().y;
  const Rational wx = p.x - s.a().x;
  const Rational wy = p.y - s.a().y;
  const Rational dot = wx * vx + wy * vy;
  if (dot.sign() <= 0) return dist2(p, s.a());
  const Rational len2 = vx * vx + vy * vy;
  if (dot >= len2) return dist2(p, s.b());
  const Rational t = dot / len2;
  return dist2(p, Point{s.a().x + vx * t, s.a().y + vy * t});
}

Rational point_ray_dist2(const Point& p, const VerticalRay& r) {
  if (r.covers_y(p.y)) {
    const Rational dx = p.x - r.origin.x;
    return dx * dx;
  }
  return dist2(p, r.origin);
}

template <class T>
const T* as(const GeomItem& item) {
  return std::get_if<T>(&item);
}

}  // namespace

SegIntersection seg_intersection(const Segment& s, const Segment& t) {
  if (!boxes_overlap(s, t)) return NoIntersection{};
  const int d1 = orient(t.a(), t.b(), s.a());
  const int d2 = orient(t.a(), t.b(), s.b());
  const int d3 = orient(s.a(), s.b(), t.a());
  const int d4 = orient(s.a(), s.b(), t.b());
  if (d1 == 0 && d2 == 0) {
    // Collinear: on a line, lexicographic order is the order along the line.
    const Point& s_lo = std::min(s.a(), s.b());
    const Point& s_hi = std::max(s.a(), s.b());
    const Point& t_lo = std::min(t.a(), t.b());
    const Point& t_hi = std::max(t.a(), t.b());
    return from_range(std::max(s_lo, t_lo), std::min(s_hi, t_hi));
  }
  if (d1 * d2 > 0 || d3 * d4 > 0) return NoIntersection{};
  if (d1 == 0) return s.a();
  if (d2 == 0) return s.b();
  if (d3 == 0) return t.a();
  if (d4 == 0) return t.b();
  const Rational sx = s.b().x - s.a().x;
  const Rational sy = s.b().y - s.a().y;
  const Rational tx = t.b().x - t.a().x;
  const Rational ty = t.b().y - t.a().y;
  const Rational denom = sx * ty - sy * tx;
  const Rational u = ((t.a().x - s.a().x) * ty - (t.a().y - s.a().y) * tx) / denom;
  return Point{s.a().x + sx * u, s.a().y + sy * u};
}

bool contains_point(const Segment& s, const Point& p) {
  return within_box(s.a(), s.b(), p) && orient(s.a(), s.b(), p) == 0;
}

Rational parameter_of(const Segment& s, const Point& p) {
  if (!s.is_vertical()) return (p.x - s.a().x) / (s.b().x - s.a().x);
  return (p.y - s.a().y) / (s.b().y - s.a().y);
}

std::optional<std::pair<Rational, Rational>> hit_range(const Segment& s, const GeomItem& item) {
  SegIntersection hit;
  if (const auto* p = as<Point>(item)) {
    if (!contains_point(s, *p)) return std::nullopt;
    hit = *p;
  } else if (const auto* t = as<Segment>(item)) {
    hit = seg_intersection(s, *t);
  } else {
    hit = ray_segment(std::get<VerticalRay>(item), s);
  }
  if (const auto* p = std::get_if<Point>(&hit)) {
    Rational t = parameter_of(s, *p);
    return std::pair{t, t};
  }
  if (const auto* o = std::get_if<Segment>(&hit)) {
    Rational t0 = parameter_of(s, o->a());
    Rational t1 = parameter_of(s, o->b());
    if (t1 < t0) std::swap(t0, t1);
    return std::pair{std::move(t0), std::move(t1)};
  }
  return std::nullopt;
}

std::optional<Point> common_point(const GeomItem& a, const GeomItem& b) {
  if (const auto* p = as<Point>(a)) {
    if (const auto* q = as<Point>(b)) return *p == *q ? std::optional(*p) : std::nullopt;
    if (const auto* s = as<Segment>(b)) {
      return contains_point(*s, *p) ? std::optional(*p) : std::nullopt;
    }
    const auto& r = std::get<VerticalRay>(b);
    return (p->x == r.origin.x && r.covers_y(p->y)) ? std::optional(*p) : std::nullopt;
  }
  if (const auto* s = as<Segment>(a)) {
    if (as<Point>(b)) return common_point(b, a);
    const SegIntersection hit = as<Segment>(b) ? seg_intersection(*s, std::get<Segment>(b))
                                               : ray_segment(std::get<VerticalRay>(b), *s);
    if (const auto* p = std::get_if<Point>(&hit)) return *p;
    if (const auto* o = std::get_if<Segment>(&hit)) return o->a();
    return std::nullopt;
  }
  const auto& r = std::get<VerticalRay>(a);
  if (!as<VerticalRay>(b)) return common_point(b, a);
  const auto& q = std::get<VerticalRay>(b);
  if (r.origin.x != q.origin.x) return std::nullopt;
  if (r.direction == q.direction) {
    if (r.direction == RayDirection::Up) return std::max(r.origin, q.origin);
    return std::min(r.origin, q.origin);
  }
  const VerticalRay& up = r.direction == RayDirection::Up ? r : q;
  const VerticalRay& down = r.direction == RayDirection::Up ? q : r;
  if (up.origin.y <= down.origin.y) return up.origin;
  return std::nullopt;
}

bool intersects(const GeomItem& a, const GeomItem& b) { return common_point(a, b).has_value(); }

Rational dist2(const Point& p, const Point& q) {
  const Rational dx = p.x - q.x;
  const Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Rational dist2(const GeomItem& a, const GeomItem& b) {
  if (const auto* p = as<Point>(a)) {
    if (const auto* q = as<Point>(b)) return dist2(*p, *q);
    if (const auto* s = as<Segment>(b)) return point_segment_dist2(*p, *s);
    return point_ray_dist2(*p, std::get<VerticalRay>(b));
  }
  if (as<Point>(b)) return dist2(b, a);
  if (intersects(a, b)) return Rational(0);
  // Disjoint convex pieces: the minimum is attained at an endpoint of one of them.
  if (const auto* s = as<Segment>(a)) {
    if (const auto* t = as<Segment>(b)) {
      return min(min(point_segment_dist2(s->a(), *t), point_segment_dist2(s->b(), *t)),
                 min(point_segment_dist2(t->a(), *s), point_segment_dist2(t->b(), *s)));
    }
    const auto& r = std::get<VerticalRay>(b);
    return min(min(point_ray_dist2(s->a(), r), point_ray_dist2(s->b(), r)),
               point_segment_dist2(r.origin, *s));
  }
  if (as<Segment>(b)) return dist2(b, a);
  const auto& r = std::get<VerticalRay>(a);
  const auto& q = std::get<VerticalRay>(b);
  return min(point_ray_dist2(r.origin, q), point_ray_dist2(q.origin, r));
}

Rational dist2(const GeomSet& a, const GeomSet& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyInput, "dist2 of an empty set");
  std::optional<Rational> best;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Rational d = dist2(x, y);
      if (!best || d < *best) best = std::move(d);
      if (best->is_zero()) return *best;
    }
  }
  return *best;
}

}  // namespace pltopo

#include "pltopo/path.hpp"

#include <algorithm>
#include <sstream>

namespace pltopo {

PLPath PLPath::make(std::vector<Point> corners, bool closed) {
  if (corners.size() < 2) throw Error(ErrorCode::DegeneratePiece, "a path needs at least two corners");
  for (std::size_t i = 1; i < corners.size(); ++i) {
    if (corners[i] == corners[i - 1]) {
      std::ostringstream msg;
      msg << "corners " << i - 1 << " and " << i << " coincide at " << corners[i];
      throw Error(ErrorCode::DegeneratePiece, msg.str());
    }
  }
  if (closed) {
    if (corners.front() != corners.back()) {
      throw Error(ErrorCode::NotClosed, "closed path must end at its first corner");
    }
    if (corners.size() < 3) throw Error(ErrorCode::NotClosed, "closed path needs two pieces");
  }
  return PLPath(std::move(corners), closed);
}

PathLocation PLPath::locate(const Rational& t) const {
  const auto k = static_cast<long>(piece_count());
  if (t.sign() < 0 || t > Rational(k)) throw Error(ErrorCode::Precondition, "parameter out of range");
  long i = t.floor().get_si();
  if (i == k) i = k - 1;
  Rational local = t - Rational(i);
  Point p = lerp(corners_[i], corners_[i + 1], local);
  return {static_cast<std::size_t>(i + 1), std::move(local), std::move(p)};
}

Point PLPath::at(const Rational& t) const { return locate(t).point; }

GeomSet PLPath::carrier() const {
  GeomSet set;
  set.reserve(piece_count());
  for (std::size_t i = 1; i <= piece_count(); ++i) set.emplace_back(piece(i));
  return set;
}

bool PLPath::carrier_contains(const Point& p) const {
  for (std::size_t i = 1; i <= piece_count(); ++i) {
    if (contains_point(piece(i), p)) return true;
  }
  return false;
}

NotSimpleError::NotSimpleError(Violation v)
    : Error(ErrorCode::NotSimple,
            [&] {
              std::ostringstream msg;
              msg << "path meets itself at " << v.first.point << " (pieces "
                  << v.first.segment_index << " and " << v.second.segment_index << ")";
              return msg.str();
            }()),
      violation_(std::move(v)) {}

namespace {

PathLocation location_on(const PLPath& f, std::size_t i, const Point& p) {
  return {i, parameter_of(f.piece(i), p), p};
}

std::optional<Violation> pairwise_check(const PLPath& f) {
  const std::size_t k = f.piece_count();
  const auto& c = f.corners();
  for (std::size_t i = 1; i <= k; ++i) {
    const Segment si = f.piece(i);
    for (std::size_t j = i + 1; j <= k; ++j) {
      const Segment sj = f.piece(j);
      const SegIntersection hit = seg_intersection(si, sj);
      if (std::holds_alternative<NoIntersection>(hit)) continue;
      if (const auto* p = std::get_if<Point>(&hit)) {
        const bool next = j == i + 1 && *p == c[i];
        const bool wrap = f.closed() && i == 1 && j == k && *p == c[0];
        if (next || wrap) continue;
        return Violation{location_on(f, i, *p), location_on(f, j, *p)};
      }
      const auto& o = std::get<Segment>(hit);
      const Point m = midpoint(o.a(), o.b());
      return Violation{location_on(f, i, m), location_on(f, j, m)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate_arc(const PLPath& f) {
  if (f.closed()) throw Error(ErrorCode::Precondition, "validate_arc needs an open path");
  return pairwise_check(f);
}

std::optional<Violation> validate_circuit(const PLPath& f) {
  if (!f.closed()) throw Error(ErrorCode::Precondition, "validate_circuit needs a closed path");
  return pairwise_check(f);
}

PLArc PLArc::from(PLPath path) {
  if (auto v = validate_arc(path)) throw NotSimpleError(std::move(*v));
  return PLArc(std::move(path));
}

PLCircuit PLCircuit::from(PLPath path) {
  if (auto v = validate_circuit(path)) throw NotSimpleError(std::move(*v));
  return PLCircuit(std::move(path));
}

PLCircuit PLCircuit::from_corners(std::vector<Point> corners) {
  if (!corners.empty() && corners.front() != corners.back()) corners.push_back(corners.front());
  return from(PLPath::make(std::move(corners), true));
}

PLPath concat(const PLPath& f, const PLPath& g) {
  if (f.closed() || g.closed()) throw Error(ErrorCode::Precondition, "concat needs open paths");
  if (f.back() != g.front()) {
    throw Error(ErrorCode::EndpointMismatch, "last corner of the first path differs from first corner of the second");
  }
  std::vector<Point> corners = f.corners();
  corners.insert(corners.end(), g.corners().begin() + 1, g.corners().end());
  return PLPath::make(std::move(corners), false);
}

PLPath reverse(const PLPath& f) {
  std::vector<Point> corners(f.corners().rbegin(), f.corners().rend());
  return PLPath::make(std::move(corners), f.closed());
}

std::optional<std::size_t> insert_corner(std::vector<Point>& corners, const Point& p) {
  for (std::size_t i = 1; i < corners.size(); ++i) {
    if (corners[i - 1] == p) return i - 1;
    if (corners[i] == p) return i;
    if (contains_point(Segment(corners[i - 1], corners[i]), p)) {
      corners.insert(corners.begin() + static_cast<std::ptrdiff_t>(i), p);
      return i;
    }
  }
  return std::nullopt;
}

std::pair<PLArc, PLArc> split_circuit(const PLCircuit& f, const Point& u, const Point& v) {
  if (u == v) throw Error(ErrorCode::Precondition, "split points must differ");
  std::vector<Point> corners = f.path().corners();
  const auto iu = insert_corner(corners, u);
  if (!iu) throw Error(ErrorCode::PointNotOnCircuit, "first split point is off the circuit");
  // Rotate so u is corner 0.
  corners.pop_back();
  std::rotate(corners.begin(), corners.begin() + static_cast<std::ptrdiff_t>(*iu), corners.end());
  corners.push_back(corners.front());
  const auto iv = insert_corner(corners, v);
  if (!iv) throw Error(ErrorCode::PointNotOnCircuit, "second split point is off the circuit");
  std::vector<Point> first(corners.begin(), corners.begin() + static_cast<std::ptrdiff_t>(*iv) + 1);
  std::vector<Point> second(corners.begin() + static_cast<std::ptrdiff_t>(*iv), corners.end());
  return {PLArc::from(PLPath::make(std::move(first), false)),
          PLArc::from(PLPath::make(std::move(second), false))};
}

std::pair<PLPath, PLPath> split_path(const PLPath& f, const Point& p) {
  if (f.closed()) throw Error(ErrorCode::Precondition, "split_path needs an open path");
  std::vector<Point> corners = f.corners();
  const auto m = insert_corner(corners, p);
  if (!m) throw Error(ErrorCode::Precondition, "split point is off the path");
  if (*m == 0 || *m + 1 == corners.size()) {
    throw Error(ErrorCode::Precondition, "split point is an endpoint of the path");
  }
  std::vector<Point> head(corners.begin(), corners.begin() + static_cast<std::ptrdiff_t>(*m) + 1);
  std::vector<Point> tail(corners.begin() + static_cast<std::ptrdiff_t>(*m), corners.end());
  return {PLPath::make(std::move(head), false), PLPath::make(std::move(tail), false)};
}

std::optional<PathLocation> first_hit(const PLPath& f, const GeomSet& x) {
  for (std::size_t i = 1; i <= f.piece_count(); ++i) {
    const Segment s = f.piece(i);
    std::optional<Rational> best;
    for (const auto& item : x) {
      if (auto r = hit_range(s, item); r && (!best || r->first < *best)) best = r->first;
    }
    if (best) return PathLocation{i, *best, lerp(s.a(), s.b(), *best)};
  }
  return std::nullopt;
}

std::optional<PathLocation> last_hit(const PLPath& f, const GeomSet& x) {
  for (std::size_t i = f.piece_count(); i >= 1; --i) {
    const Segment s = f.piece(i);
    std::optional<Rational> best;
    for (const auto& item : x) {
      if (auto r = hit_range(s, item); r && (!best || r->second > *best)) best = r->second;
    }
    if (best) return PathLocation{i, *best, lerp(s.a(), s.b(), *best)};
  }
  return std::nullopt;
}

ExtremePoints extreme_points(const PLPath& f) {
  const auto& c = f.corners();
  ExtremePoints e{c[0], c[0], c[0], c[0]};
  for (const auto& p : c) {
    if (p.x < e.leftmost.x || (p.x == e.leftmost.x && p.y < e.leftmost.y)) e.leftmost = p;
    if (p.x > e.rightmost.x || (p.x == e.rightmost.x && p.y > e.rightmost.y)) e.rightmost = p;
    if (p.y < e.bottom.y || (p.y == e.bottom.y && p.x < e.bottom.x)) e.bottom = p;
    if (p.y > e.top.y || (p.y == e.top.y && p.x > e.top.x)) e.top = p;
  }
  return e;
}

Rational signed_area(const PLPath& f) {
  Rational twice;
  const auto& c = f.corners();
  for (std::size_t i = 1; i < c.size(); ++i) twice += c[i - 1].x * c[i].y - c[i].x * c[i - 1].y;
  return twice / Rational(2);
}

}  // namespace pltopo

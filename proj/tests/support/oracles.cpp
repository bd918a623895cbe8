#include "oracles.hpp"

#include <cmath>
#include <limits>

namespace pltopo::testing {

namespace {

Rational cross2(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (!cross2(b.x - a.x, b.y - a.y, p.x - a.x, p.y - a.y).is_zero()) return false;
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

}  // namespace

std::optional<int> slanted_ray_parity(const Point& c, const PLPath& f, const Rational& slope) {
  // Side of q relative to the line through c with direction (1, slope).
  auto side = [&](const Point& q) { return cross2(Rational(1), slope, q.x - c.x, q.y - c.y).sign(); };
  auto ahead = [&](const Point& q) { return (q.x - c.x) + slope * (q.y - c.y) > Rational(0); };
  int count = 0;
  for (std::size_t i = 1; i < f.corners().size(); ++i) {
    const Point& a = f.corners()[i - 1];
    const Point& b = f.corners()[i];
    const int sa = side(a);
    const int sb = side(b);
    if ((sa == 0 && ahead(a)) || (sb == 0 && ahead(b))) return std::nullopt;
    if (sa == 0 || sb == 0 || sa == sb) continue;
    const Rational t = cross2(c.x - a.x, c.y - a.y, Rational(1), slope) /
                       cross2(b.x - a.x, b.y - a.y, Rational(1), slope);
    const Point hit{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    if (ahead(hit)) ++count;
  }
  return count % 2;
}

int slanted_parity(const Point& c, const PLPath& f) {
  for (long k = 0; k < 64; ++k) {
    const Rational slope = Rational(mpz_class(1000 + 37 * k), mpz_class(7 + k));
    if (auto p = slanted_ray_parity(c, f, slope)) return *p;
  }
  throw std::logic_error("no generic slope found");
}

bool brute_force_drawing_ok(const Drawing& d) {
  auto is_end = [](const PLPath& f, const Point& p) { return f.front() == p || f.back() == p; };
  for (const auto& t : d.terminals) {
    for (const auto& e : d.edges) {
      if (is_end(e.arc, t.point)) continue;
      const auto& c = e.arc.corners();
      for (std::size_t k = 1; k < c.size(); ++k) {
        if (on_segment(t.point, c[k - 1], c[k])) return false;
      }
    }
  }
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < d.edges.size(); ++j) {
      const PLPath& f = d.edges[i].arc;
      const PLPath& g = d.edges[j].arc;
      auto allowed = [&](const Point& p) { return is_end(f, p) && is_end(g, p); };
      for (std::size_t a = 1; a < f.corners().size(); ++a) {
        const Point& p1 = f.corners()[a - 1];
        const Point& p2 = f.corners()[a];
        for (std::size_t b = 1; b < g.corners().size(); ++b) {
          const Point& q1 = g.corners()[b - 1];
          const Point& q2 = g.corners()[b];
          const Rational denom = cross2(p2.x - p1.x, p2.y - p1.y, q2.x - q1.x, q2.y - q1.y);
          if (!denom.is_zero()) {
            const Rational t = cross2(q1.x - p1.x, q1.y - p1.y, q2.x - q1.x, q2.y - q1.y) / denom;
            const Rational u = cross2(q1.x - p1.x, q1.y - p1.y, p2.x - p1.x, p2.y - p1.y) / denom;
            if (t < Rational(0) || t > Rational(1) || u < Rational(0) || u > Rational(1)) continue;
            const Point hit{p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)};
            if (!allowed(hit)) return false;
            continue;
          }
          if (!cross2(p2.x - p1.x, p2.y - p1.y, q1.x - p1.x, q1.y - p1.y).is_zero()) continue;
          // Collinear: compare projections onto the direction of p.
          const Rational dx = p2.x - p1.x;
          const Rational dy = p2.y - p1.y;
          auto proj = [&](const Point& q) { return (q.x - p1.x) * dx + (q.y - p1.y) * dy; };
          const Rational lo = max(Rational(0), min(proj(q1), proj(q2)));
          const Rational hi = min(dx * dx + dy * dy, max(proj(q1), proj(q2)));
          if (lo > hi) continue;
          if (lo < hi) return false;
          const Rational s = lo / (dx * dx + dy * dy);
          if (!allowed({p1.x + s * dx, p1.y + s * dy})) return false;
        }
      }
    }
  }
  return true;
}

double sampled_dist2(const std::vector<Segment>& a, const std::vector<Segment>& b, int n) {
  auto samples = [n](const std::vector<Segment>& segs) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : segs) {
      const double ax = s.a().x.to_double(), ay = s.a().y.to_double();
      const double bx = s.b().x.to_double(), by = s.b().y.to_double();
      for (int k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) / n;
        pts.emplace_back(ax + t * (bx - ax), ay + t * (by - ay));
      }
    }
    return pts;
  };
  const auto pa = samples(a);
  const auto pb = samples(b);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [x1, y1] : pa) {
    for (const auto& [x2, y2] : pb) best = std::min(best, (x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2));
  }
  return best;
}

}  // namespace pltopo::testing

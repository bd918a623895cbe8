#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace pltopo::testing {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational uniform_rational(Rng& rng, const Rational& lo, const Rational& hi, long den) {
  for (;; den *= 2) {
    const long a = (lo * Rational(den)).ceil().get_si();
    const long b = (hi * Rational(den)).floor().get_si();
    if (a <= b) return Rational(mpz_class(uniform_int(rng, a, b)), mpz_class(den));
  }
}

namespace {

using Cell = std::pair<long, long>;
using Vertex = std::pair<long, long>;

std::optional<std::vector<Vertex>> trace_boundary(const std::set<Cell>& cells) {
  std::map<Vertex, std::vector<Vertex>> out;
  auto filled = [&](long i, long j) { return cells.count({i, j}) != 0; };
  std::size_t edges = 0;
  for (const auto& [i, j] : cells) {
    auto add = [&](Vertex a, Vertex b) {
      out[a].push_back(b);
      ++edges;
    };
    if (!filled(i, j - 1)) add({i, j}, {i + 1, j});
    if (!filled(i + 1, j)) add({i + 1, j}, {i + 1, j + 1});
    if (!filled(i, j + 1)) add({i + 1, j + 1}, {i, j + 1});
    if (!filled(i - 1, j)) add({i, j + 1}, {i, j});
  }
  for (const auto& [v, nexts] : out) {
    if (nexts.size() != 1) return std::nullopt;  // pinch
  }
  std::vector<Vertex> loop{out.begin()->first};
  do {
    loop.push_back(out[loop.back()].front());
  } while (loop.back() != loop.front());
  if (loop.size() - 1 != edges) return std::nullopt;  // hole
  return loop;
}

}  // namespace

PLCircuit random_rectilinear(Rng& rng) {
  constexpr long kGrid = 6;
  for (;;) {
    std::set<Cell> cells{{uniform_int(rng, 1, 4), uniform_int(rng, 1, 4)}};
    const long target = uniform_int(rng, 1, 12);
    while (static_cast<long>(cells.size()) < target) {
      auto it = cells.begin();
      std::advance(it, uniform_int(rng, 0, static_cast<long>(cells.size()) - 1));
      static constexpr std::array<Cell, 4> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
      const Cell step = kSteps[static_cast<std::size_t>(uniform_int(rng, 0, 3))];
      const Cell next{it->first + step.first, it->second + step.second};
      if (next.first >= 0 && next.first < kGrid && next.second >= 0 && next.second < kGrid) cells.insert(next);
    }
    const auto loop = trace_boundary(cells);
    if (!loop) continue;

    const long den = uniform_int(rng, 1, 16);
    std::vector<Rational> xs{Rational(mpz_class(uniform_int(rng, -2 * den, 2 * den)), mpz_class(den))};
    std::vector<Rational> ys{Rational(mpz_class(uniform_int(rng, -2 * den, 2 * den)), mpz_class(den))};
    for (long i = 0; i < kGrid; ++i) {
      xs.push_back(xs.back() + Rational(mpz_class(uniform_int(rng, 1, 3)), mpz_class(den)));
      ys.push_back(ys.back() + Rational(mpz_class(uniform_int(rng, 1, 3)), mpz_class(den)));
    }
    std::vector<Point> corners;
    const std::size_t n = loop->size() - 1;
    for (std::size_t k = 0; k < n; ++k) {
      const Vertex& prev = (*loop)[(k + n - 1) % n];
      const Vertex& cur = (*loop)[k];
      const Vertex& next = (*loop)[k + 1];
      const bool turn = (cur.first - prev.first) * (next.second - cur.second) !=
                        (cur.second - prev.second) * (next.first - cur.first);
      if (turn) corners.push_back({xs[static_cast<std::size_t>(cur.first)], ys[static_cast<std::size_t>(cur.second)]});
    }
    if (corners.size() > 20) continue;
    return PLCircuit::from_corners(std::move(corners));
  }
}

PLCircuit random_star(Rng& rng) {
  for (;;) {
    const long k = uniform_int(rng, 3, 20);
    const double cx = static_cast<double>(uniform_int(rng, -64, 64)) / 16.0;
    const double cy = static_cast<double>(uniform_int(rng, -64, 64)) / 16.0;
    std::vector<Point> corners;
    for (long i = 0; i < k; ++i) {
      const double jitter = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
      const double theta = (static_cast<double>(i) + jitter) * 2.0 * std::numbers::pi / static_cast<double>(k);
      const double r = std::uniform_real_distribution<double>(1.0, 4.0)(rng);
      corners.push_back({Rational(mpz_class(std::lround((cx + r * std::cos(theta)) * 16)), mpz_class(16)),
                         Rational(mpz_class(std::lround((cy + r * std::sin(theta)) * 16)), mpz_class(16))});
    }
    try {
      PLCircuit f = PLCircuit::from_corners(corners);
      if (signed_area(f.path()).sign() <= 0) continue;
      const BoundingBox box = f.path().bounds();
      const Rational size = max(box.x_max - box.x_min, box.y_max - box.y_min);
      if (min_feature2(f.path()) * Rational(1600) < size * size) continue;
      return f;
    } catch (const Error&) {
      continue;
    }
  }
}

std::vector<PLCircuit> circuit_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<PLCircuit> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(i % 2 == 0 ? random_rectilinear(rng) : random_star(rng));
  return out;
}

Rational oracle_pitch(const PLPath& f) {
  const Rational mf2 = min_feature2(f);
  Rational p(1);
  while (Rational(64) * p * p * Rational(4) < mf2) p *= Rational(2);
  while (Rational(64) * p * p >= mf2) p /= Rational(2);
  return p;
}

std::vector<Point> query_points(Rng& rng, const GridLabeling& grid, const PLPath& f, std::size_t count) {
  std::vector<Point> out;
  const Rational half(mpz_class(1), mpz_class(2));
  std::size_t inside = 0;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count; ++attempt) {
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(grid.nx) - 1));
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(grid.ny) - 1));
    const auto label = grid.label(i, j);
    if (label == GridLabeling::kBlocked) continue;
    // Keep roughly half of the points off the unbounded component.
    if (label == grid.outside_label() && 2 * (out.size() - inside) >= count && attempt < 50 * count) continue;
    const Point centre = grid.cell_center(i, j);
    Point q = centre;
    switch (uniform_int(rng, 0, 2)) {
      case 0:
        break;
      case 1:
        q = {centre.x + uniform_rational(rng, -half, half, 64) * grid.pitch,
             centre.y + uniform_rational(rng, -half, half, 64) * grid.pitch};
        break;
      default: {
        // A corner's vertical line, where the ray runs along pieces or corners.
        const auto& corners = f.corners();
        const Point& c = corners[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(corners.size()) - 1))];
        const Rational lo = grid.origin.x + Rational(static_cast<long>(i)) * grid.pitch;
        if (c.x < lo || c.x > lo + grid.pitch) {
          const auto col = ((c.x - grid.origin.x) / grid.pitch).floor().get_si();
          if (col < 0 || col >= static_cast<long>(grid.nx)) continue;
          const auto row = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(grid.ny) - 1));
          q = {c.x, grid.cell_center(static_cast<std::size_t>(col), row).y};
        } else {
          q = {c.x, centre.y};
        }
        break;
      }
    }
    const auto l = grid.label_at(q);
    if (!l) continue;
    if (*l != grid.outside_label()) ++inside;
    out.push_back(std::move(q));
  }
  return out;
}

PLPath random_open_map(Rng& rng, long width, std::size_t max_corners) {
  const Rational w(width);
  std::vector<Point> corners{{Rational(0), uniform_rational(rng, -4, 4, 4)}};
  const long inner = uniform_int(rng, 0, static_cast<long>(max_corners) - 2);
  for (long i = 0; i < inner; ++i) {
    Rational x = uniform_rational(rng, -2, w + Rational(2), 4);
    if (uniform_int(rng, 0, 3) == 0) x = corners.back().x;  // vertical piece
    Point p{x, uniform_rational(rng, -4, 4, 4)};
    if (p != corners.back()) corners.push_back(std::move(p));
  }
  Point end{w, uniform_rational(rng, -4, 4, 4)};
  if (end != corners.back()) corners.push_back(std::move(end));
  if (corners.size() < 2) corners.push_back({w, corners.front().y + Rational(1)});
  return PLPath::make(std::move(corners), false);
}

PLPath random_rectilinear_path(Rng& rng, const Point& u, const Point& v, const BoundingBox& box,
                               std::size_t waypoints) {
  std::vector<Point> stops{u};
  for (std::size_t i = 0; i < waypoints; ++i) {
    stops.push_back({uniform_rational(rng, box.x_min, box.x_max, 8), uniform_rational(rng, box.y_min, box.y_max, 8)});
  }
  stops.push_back(v);
  std::vector<Point> corners{u};
  auto push = [&](Point p) {
    if (p != corners.back()) corners.push_back(std::move(p));
  };
  for (std::size_t i = 1; i < stops.size(); ++i) {
    const Point& p = stops[i - 1];
    const Point& q = stops[i];
    push(uniform_int(rng, 0, 1) == 0 ? Point{q.x, p.y} : Point{p.x, q.y});
    push(q);
  }
  if (corners.size() < 2) corners.push_back(v);
  return PLPath::make(std::move(corners), false);
}

namespace {

DrawnEdge straight(const Drawing& d, const std::string& u, const std::string& v) {
  return {u, v, PLPath::make({d.terminals[*d.terminal_index(u)].point, d.terminals[*d.terminal_index(v)].point}, false)};
}

}  // namespace

Drawing random_k4(Rng& rng) {
  for (;;) {
    std::array<Point, 3> t;
    for (auto& p : t) p = {uniform_rational(rng, 0, 8, 2), uniform_rational(rng, 0, 8, 2)};
    if (orient(t[0], t[1], t[2]) == 0) continue;
    const long w0 = uniform_int(rng, 1, 5), w1 = uniform_int(rng, 1, 5), w2 = uniform_int(rng, 1, 5);
    const Rational total(w0 + w1 + w2);
    const Point centre{(Rational(w0) * t[0].x + Rational(w1) * t[1].x + Rational(w2) * t[2].x) / total,
                       (Rational(w0) * t[0].y + Rational(w1) * t[1].y + Rational(w2) * t[2].y) / total};
    Drawing d;
    d.terminals = {{"t0", t[0]}, {"t1", t[1]}, {"t2", t[2]}, {"m", centre}};
    for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{
             {"t0", "t1"}, {"t1", "t2"}, {"t2", "t0"}, {"m", "t0"}, {"m", "t1"}, {"m", "t2"}}) {
      d.edges.push_back(straight(d, u, v));
    }
    return d;
  }
}

Drawing random_k23(Rng& rng) {
  Drawing d;
  std::vector<Rational> ys;
  while (ys.size() < 3) {
    Rational y = uniform_rational(rng, -6, 6, 2);
    if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(std::move(y));
  }
  const Rational x0 = uniform_rational(rng, -2, 2, 2);
  d.terminals = {{"u1", {x0 - uniform_rational(rng, 1, 6, 2), uniform_rational(rng, -6, 6, 2)}},
                 {"u2", {x0 + uniform_rational(rng, 1, 6, 2), uniform_rational(rng, -6, 6, 2)}},
                 {"v1", {x0, ys[0]}},
                 {"v2", {x0, ys[1]}},
                 {"v3", {x0, ys[2]}}};
  for (const std::string u : {"u1", "u2"}) {
    for (const std::string v : {"v1", "v2", "v3"}) d.edges.push_back(straight(d, u, v));
  }
  return d;
}

Drawing seeded_crossing(Rng& rng) {
  for (;;) {
    Drawing d = random_k4(rng);
    const Point& t0 = d.terminals[0].point;
    const Point& t1 = d.terminals[1].point;
    const Point& t2 = d.terminals[2].point;
    const Point& m = d.terminals[3].point;
    // Reflect the centre through a point of the far side t1-t2 and route m -> t0 via it.
    const Rational s = uniform_rational(rng, Rational(1) / Rational(4), Rational(3) / Rational(4), 8);
    const Point on_side = lerp(t1, t2, s);
    const Point beyond{on_side.x * Rational(2) - m.x, on_side.y * Rational(2) - m.y};
    PLPath arc = PLPath::make({m, beyond, t0}, false);
    if (validate_arc(arc)) continue;
    d.edges[3] = {"m", "t0", std::move(arc)};
    return d;
  }
}

Drawing random_drawing(Rng& rng) {
  Drawing d;
  const long n = uniform_int(rng, 3, 6);
  std::set<Point> used;
  while (static_cast<long>(d.terminals.size()) < n) {
    Point p{uniform_rational(rng, 0, 6, 1), uniform_rational(rng, 0, 6, 1)};
    if (used.insert(p).second) d.terminals.push_back({"t" + std::to_string(d.terminals.size()), std::move(p)});
  }
  std::set<std::pair<long, long>> pairs;
  const long m = uniform_int(rng, 2, 6);
  for (long attempt = 0; attempt < 50 && static_cast<long>(d.edges.size()) < m; ++attempt) {
    const long u = uniform_int(rng, 0, n - 1);
    const long v = uniform_int(rng, 0, n - 1);
    if (u == v || !pairs.insert(std::minmax(u, v)).second) continue;
    const Point& a = d.terminals[static_cast<std::size_t>(u)].point;
    const Point& b = d.terminals[static_cast<std::size_t>(v)].point;
    std::vector<Point> corners{a};
    if (uniform_int(rng, 0, 1) == 0) {
      Point bend{uniform_rational(rng, -1, 7, 2), uniform_rational(rng, -1, 7, 2)};
      if (bend != a && bend != b) corners.push_back(std::move(bend));
    }
    corners.push_back(b);
    PLPath arc = PLPath::make(std::move(corners), false);
    if (validate_arc(arc)) {
      pairs.erase(std::minmax(u, v));
      continue;
    }
    d.edges.push_back({d.terminals[static_cast<std::size_t>(u)].name, d.terminals[static_cast<std::size_t>(v)].name,
                       std::move(arc)});
  }
  return d;
}

Drawing random_k33_minus_edge(Rng& rng) {
  for (;;) {
    const Rational w = uniform_rational(rng, 4, 8, 2);
    const Rational h = uniform_rational(rng, 4, 8, 2);
    auto jitter = [&] { return uniform_rational(rng, 0, 1, 4); };
    const Point u2{jitter(), jitter()};
    const Point u3{w - jitter(), jitter()};
    const Point u6{w - jitter(), h - jitter()};
    const Point u5{jitter(), h - jitter()};
    if (orient(u2, u3, u6) <= 0 || orient(u3, u6, u5) <= 0 || orient(u6, u5, u2) <= 0 || orient(u5, u2, u3) <= 0) {
      continue;
    }
    const long a = uniform_int(rng, 1, 4), b = uniform_int(rng, 1, 4), c = uniform_int(rng, 1, 4),
               e = uniform_int(rng, 1, 4);
    const Rational total(a + b + c + e);
    const Point u1{(Rational(a) * u2.x + Rational(b) * u3.x + Rational(c) * u6.x + Rational(e) * u5.x) / total,
                   (Rational(a) * u2.y + Rational(b) * u3.y + Rational(c) * u6.y + Rational(e) * u5.y) / total};
    const Rational margin = uniform_rational(rng, 1, 2, 2);
    const Rational x_lo = min(u2.x, u5.x) - margin;
    const Rational x_hi = max(u3.x, u6.x) + margin;
    const Rational y_lo = min(u2.y, u3.y) - margin;
    const Point u4{uniform_rational(rng, x_lo + Rational(1), x_hi - Rational(1), 2), y_lo};

    // One of the eight symmetries of the square.
    const long sym = uniform_int(rng, 0, 7);
    auto map = [&](const Point& p) {
      Point q = (sym & 1) ? Point{p.y, p.x} : p;
      if (sym & 2) q.x = -q.x;
      if (sym & 4) q.y = -q.y;
      return q;
    };
    auto path = [&](std::vector<Point> pts) {
      for (auto& p : pts) p = map(p);
      return PLPath::make(std::move(pts), false);
    };

    Drawing d;
    d.terminals = {{"u1", map(u1)}, {"u2", map(u2)}, {"u3", map(u3)},
                   {"u4", map(u4)}, {"u5", map(u5)}, {"u6", map(u6)}};
    d.edges = {
        {"u3", "u2", path({u3, u2})},
        {"u3", "u6", path({u3, u6})},
        {"u5", "u6", path({u5, u6})},
        {"u5", "u2", path({u5, u2})},
        {"u1", "u2", path({u1, u2})},
        {"u1", "u6", path({u1, u6})},
        {"u3", "u4", path({u3, {x_hi, u3.y}, {x_hi, y_lo}, u4})},
        {"u5", "u4", path({u5, {x_lo, u5.y}, {x_lo, y_lo}, u4})},
    };
    return d;
  }
}

}  // namespace pltopo::testing

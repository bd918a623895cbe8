#include "pltopo/complement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace pltopo {

SideLabel opposite(SideLabel s) { return s == SideLabel::Left ? SideLabel::Right : SideLabel::Left; }

SideLabel side_probe(const PLCircuit& f, const PathLocation& loc, const Point& c) {
  if (loc.parameter.is_zero() || loc.parameter == Rational(1)) {
    throw Error(ErrorCode::CornerProbe, "probe location is a corner");
  }
  const PLPath& path = f.path();
  if (path.carrier_contains(c)) throw Error(ErrorCode::ProbeCrossesCurve, "probe target lies on the circuit");
  const Segment probe(loc.point, c);
  for (std::size_t i = 1; i <= path.piece_count(); ++i) {
    if (auto r = hit_range(probe, path.piece(i)); r && r->second.sign() > 0) {
      throw Error(ErrorCode::ProbeCrossesCurve, "probe segment meets the circuit");
    }
  }
  const Segment s = path.piece(loc.segment_index);
  return orient(s.a(), s.b(), c) > 0 ? SideLabel::Left : SideLabel::Right;
}

Rational min_feature2(const PLPath& f) {
  const std::size_t k = f.piece_count();
  std::optional<Rational> best;
  auto consider = [&](Rational d) {
    if (!best || d < *best) best = std::move(d);
  };
  for (std::size_t i = 1; i <= k; ++i) {
    const Segment si = f.piece(i);
    consider(dist2(si.a(), si.b()));
    for (std::size_t j = i + 2; j <= k; ++j) {
      if (f.closed() && i == 1 && j == k) continue;
      consider(dist2(GeomItem(si), GeomItem(f.piece(j))));
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Bisector offsets

namespace {

struct Vec {
  double x;
  double y;
};

Vec normalized(Vec v) {
  const double n = std::hypot(v.x, v.y);
  return {v.x / n, v.y / n};
}

std::optional<PLPath> offset_cycle(const PLPath& f, const Rational& delta, SideLabel side) {
  const auto& p = f.corners();
  const std::size_t n = f.piece_count();
  const double d = delta.to_double();
  const int bits = 24 + static_cast<int>(std::ceil(-std::log2(d)));
  std::vector<Point> q;
  q.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = p[(i + n - 1) % n];
    const Point& cur = p[i];
    const Point& next = p[i + 1];
    const Vec in = normalized({(cur.x - prev.x).to_double(), (cur.y - prev.y).to_double()});
    const Vec out = normalized({(next.x - cur.x).to_double(), (next.y - cur.y).to_double()});
    Vec m{-in.y - out.y, in.x + out.x};
    if (std::hypot(m.x, m.y) < 1e-12) m = {-in.x, -in.y};
    m = normalized(m);
    if (side == SideLabel::Right) m = {-m.x, -m.y};
    q.push_back({cur.x + from_double(d * m.x, bits), cur.y + from_double(d * m.y, bits)});
  }
  q.push_back(q.front());
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i] == q[i - 1]) return std::nullopt;
  }
  return PLPath::make(std::move(q), true);
}

std::optional<OffsetCertificate> certify_offset(const PLCircuit& f, const PLPath& cycle, SideLabel side) {
  const PLPath& path = f.path();
  for (std::size_t i = 1; i <= cycle.piece_count(); ++i) {
    const Segment s = cycle.piece(i);
    for (std::size_t j = 1; j <= path.piece_count(); ++j) {
      if (!std::holds_alternative<NoIntersection>(seg_intersection(s, path.piece(j)))) return std::nullopt;
    }
  }
  OffsetCertificate cert;
  cert.disjoint_from_circuit = true;
  cert.uniform_parity = parity(cycle.front(), path);
  for (std::size_t i = 1; i <= cycle.piece_count(); ++i) {
    const Segment s = cycle.piece(i);
    if (parity(s.b(), path) != cert.uniform_parity) return std::nullopt;
    if (parity(midpoint(s.a(), s.b()), path) != cert.uniform_parity) return std::nullopt;
  }
  const Rational half(mpz_class(1), mpz_class(2));
  for (std::size_t i = 1; i <= path.piece_count(); ++i) {
    const Segment src = path.piece(i);
    const Segment dst = cycle.piece(i);
    const PathLocation loc{i, half, midpoint(src.a(), src.b())};
    try {
      if (side_probe(f, loc, midpoint(dst.a(), dst.b())) != side) return std::nullopt;
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  cert.side_verified = true;
  return cert;
}

}  // namespace

OffsetCycle bisector_offset(const PLCircuit& f, const Rational& delta, SideLabel side) {
  if (delta.sign() <= 0) throw Error(ErrorCode::Precondition, "offset delta must be positive");
  Rational d = delta;
  for (int round = 0; round <= kOffsetRetryBudget; ++round) {
    if (auto cycle = offset_cycle(f.path(), d, side)) {
      if (auto cert = certify_offset(f, *cycle, side)) {
        return OffsetCycle{delta, d, std::move(*cycle), *cert, round};
      }
    }
    d /= Rational(2);
  }
  throw Error(ErrorCode::DeltaExhausted, "no certified offset cycle within the halving budget");
}

// ---------------------------------------------------------------------------
// Grid labeling

Point GridLabeling::cell_center(std::size_t i, std::size_t j) const {
  const Rational half(mpz_class(1), mpz_class(2));
  return {origin.x + (Rational(static_cast<long>(i)) + half) * pitch,
          origin.y + (Rational(static_cast<long>(j)) + half) * pitch};
}

BoundingBox GridLabeling::bounds() const {
  return {origin.x, origin.y, origin.x + Rational(static_cast<long>(nx)) * pitch,
          origin.y + Rational(static_cast<long>(ny)) * pitch};
}

namespace {

// Indices i with [i, i+1] meeting the closed interval [lo, hi] (grid units),
// clamped to [0, n).
std::pair<long, long> cell_range(const Rational& lo, const Rational& hi, std::size_t n) {
  long first = (lo - Rational(1)).ceil().get_si();
  long last = hi.floor().get_si();
  first = std::max(first, 0L);
  last = std::min(last, static_cast<long>(n) - 1);
  return {first, last};
}

GridLabeling build_grid(const PLPath& f, const Rational& pitch, const BoundingBox& box) {
  if (pitch.sign() <= 0) throw Error(ErrorCode::Precondition, "grid pitch must be positive");
  GridLabeling g;
  g.pitch = pitch;
  g.origin = {box.x_min - pitch * Rational(2), box.y_min - pitch * Rational(2)};
  const mpz_class nx = ((box.x_max - box.x_min) / pitch).ceil() + 4;
  const mpz_class ny = ((box.y_max - box.y_min) / pitch).ceil() + 4;
  if (nx * ny > static_cast<long>(kMaxGridCells)) {
    throw Error(ErrorCode::Precondition, "grid too large for the requested pitch");
  }
  g.nx = nx.get_ui();
  g.ny = ny.get_ui();
  g.labels.assign(g.nx * g.ny, 0);

  auto to_grid = [&](const Point& p) {
    return Point{(p.x - g.origin.x) / pitch, (p.y - g.origin.y) / pitch};
  };
  for (std::size_t s = 1; s <= f.piece_count(); ++s) {
    Point a = to_grid(f.corners()[s - 1]);
    Point b = to_grid(f.corners()[s]);
    if (b.x < a.x) std::swap(a, b);
    const auto [i0, i1] = cell_range(a.x, b.x, g.nx);
    for (long i = i0; i <= i1; ++i) {
      Rational ylo, yhi;
      if (a.x == b.x) {
        ylo = min(a.y, b.y);
        yhi = max(a.y, b.y);
      } else {
        const Rational xl = max(a.x, Rational(i));
        const Rational xr = min(b.x, Rational(i + 1));
        const Rational slope = (b.y - a.y) / (b.x - a.x);
        const Rational y_l = a.y + slope * (xl - a.x);
        const Rational y_r = a.y + slope * (xr - a.x);
        ylo = min(y_l, y_r);
        yhi = max(y_l, y_r);
      }
      const auto [j0, j1] = cell_range(ylo, yhi, g.ny);
      for (long j = j0; j <= j1; ++j) g.labels[static_cast<std::size_t>(j) * g.nx + static_cast<std::size_t>(i)] = GridLabeling::kBlocked;
    }
  }

  // Flood fill, 8-neighbour, labels in row-major discovery order.
  constexpr std::int32_t kUnvisited = 0;
  for (auto& l : g.labels) l = (l == GridLabeling::kBlocked) ? GridLabeling::kBlocked : kUnvisited;
  std::vector<std::size_t> stack;
  std::int32_t next = 0;
  for (std::size_t start = 0; start < g.labels.size(); ++start) {
    if (g.labels[start] != kUnvisited) continue;
    const std::int32_t id = ++next;
    g.labels[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t cell = stack.back();
      stack.pop_back();
      const long ci = static_cast<long>(cell % g.nx);
      const long cj = static_cast<long>(cell / g.nx);
      for (long dj = -1; dj <= 1; ++dj) {
        for (long di = -1; di <= 1; ++di) {
          const long ni = ci + di;
          const long nj = cj + dj;
          if ((di == 0 && dj == 0) || ni < 0 || nj < 0 || ni >= static_cast<long>(g.nx) ||
              nj >= static_cast<long>(g.ny)) {
            continue;
          }
          const std::size_t n = static_cast<std::size_t>(nj) * g.nx + static_cast<std::size_t>(ni);
          if (g.labels[n] == kUnvisited) {
            g.labels[n] = id;
            stack.push_back(n);
          }
        }
      }
    }
  }
  // Shift ids to 0-based.
  for (auto& l : g.labels) {
    if (l != GridLabeling::kBlocked) --l;
  }
  g.component_count = static_cast<std::size_t>(next);
  return g;
}

std::vector<std::pair<long, long>> cells_containing(const GridLabeling& g, const Point& p) {
  const Rational u = (p.x - g.origin.x) / g.pitch;
  const Rational v = (p.y - g.origin.y) / g.pitch;
  const long fi = u.floor().get_si();
  const long fj = v.floor().get_si();
  std::vector<std::pair<long, long>> out;
  for (long i : {fi, fi - 1}) {
    if (i != fi && !u.is_integer()) continue;
    for (long j : {fj, fj - 1}) {
      if (j != fj && !v.is_integer()) continue;
      if (i >= 0 && j >= 0 && i < static_cast<long>(g.nx) && j < static_cast<long>(g.ny)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

std::optional<std::int32_t> GridLabeling::label_at(const Point& p) const {
  for (const auto& [i, j] : cells_containing(*this, p)) {
    const auto l = label(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (l != kBlocked) return l;
  }
  return std::nullopt;
}

GridLabeling grid_components(const PLCircuit& f, const Rational& pitch) {
  return build_grid(f.path(), pitch, f.path().bounds());
}

// ---------------------------------------------------------------------------
// Routing

namespace {

Rational power_of_two_at_most(const Rational& bound) {
  int e = static_cast<int>(std::floor(std::log2(bound.to_double())));
  while (pow2(e) > bound) --e;
  while (pow2(e + 1) <= bound) ++e;
  return pow2(e);
}

std::optional<std::vector<std::size_t>> grid_path(const GridLabeling& g, std::size_t from, std::size_t to) {
  std::vector<std::size_t> parent(g.labels.size(), SIZE_MAX);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::size_t cell = queue.front();
    queue.pop_front();
    if (cell == to) break;
    const long ci = static_cast<long>(cell % g.nx);
    const long cj = static_cast<long>(cell / g.nx);
    for (long dj = -1; dj <= 1; ++dj) {
      for (long di = -1; di <= 1; ++di) {
        const long ni = ci + di;
        const long nj = cj + dj;
        if ((di == 0 && dj == 0) || ni < 0 || nj < 0 || ni >= static_cast<long>(g.nx) ||
            nj >= static_cast<long>(g.ny)) {
          continue;
        }
        const std::size_t n = static_cast<std::size_t>(nj) * g.nx + static_cast<std::size_t>(ni);
        if (g.labels[n] == GridLabeling::kBlocked || parent[n] != SIZE_MAX) continue;
        parent[n] = cell;
        queue.push_back(n);
      }
    }
  }
  if (parent[to] == SIZE_MAX) return std::nullopt;
  std::vector<std::size_t> cells{to};
  while (cells.back() != from) cells.push_back(parent[cells.back()]);
  std::reverse(cells.begin(), cells.end());
  return cells;
}

std::vector<Point> simplify_collinear(std::vector<Point> pts) {
  std::vector<Point> out;
  for (auto& p : pts) {
    if (!out.empty() && out.back() == p) continue;
    out.push_back(std::move(p));
    while (out.size() >= 3 && orient(out[out.size() - 3], out[out.size() - 2], out.back()) == 0) {
      out.erase(out.end() - 2);
    }
  }
  return out;
}

}  // namespace

RouteResult route_in_complement(const PLCircuit& f, const Point& u, const Point& v) {
  if (u == v) throw Error(ErrorCode::Precondition, "route endpoints must differ");
  const PLPath& path = f.path();
  if (path.carrier_contains(u) || path.carrier_contains(v)) {
    throw Error(ErrorCode::PointOnCurve, "route endpoint lies on the circuit");
  }
  const int pu = parity(u, path);
  const int pv = parity(v, path);
  if (pu != pv) return Separated{pu, pv};

  const GeomSet carrier = path.carrier();
  const Rational clearance = sqrt_lower(min(dist2(GeomSet{u}, carrier), dist2(GeomSet{v}, carrier)));
  Rational pitch = power_of_two_at_most(clearance / Rational(4));
  BoundingBox box = path.bounds();
  box.expand(u);
  box.expand(v);

  constexpr int kRefinements = 8;
  for (int attempt = 0; attempt < kRefinements; ++attempt, pitch /= Rational(2)) {
    const GridLabeling g = build_grid(path, pitch, box);
    const auto cu = cells_containing(g, u);
    const auto cv = cells_containing(g, v);
    const auto from = cu.front().second * static_cast<long>(g.nx) + cu.front().first;
    const auto to = cv.front().second * static_cast<long>(g.nx) + cv.front().first;
    if (g.labels[from] == GridLabeling::kBlocked || g.labels[to] == GridLabeling::kBlocked) continue;
    if (g.labels[from] != g.labels[to]) continue;
    const auto cells = grid_path(g, static_cast<std::size_t>(from), static_cast<std::size_t>(to));
    if (!cells) continue;
    std::vector<Point> corners{u};
    for (std::size_t c : *cells) corners.push_back(g.cell_center(c % g.nx, c / g.nx));
    corners.push_back(v);
    corners = simplify_collinear(std::move(corners));
    PLPath candidate = PLPath::make(std::move(corners), false);
    if (validate_arc(candidate)) continue;
    if (dist2(candidate.carrier(), carrier).sign() <= 0) continue;
    return PLArc::from(std::move(candidate));
  }
  throw Error(ErrorCode::RoutingFailed, "grid search could not connect the endpoints");
}

// ---------------------------------------------------------------------------
// Chords and detours

Segment horizontal_chord(const PLArc& f0, const PLArc& f1, const Rational& y) {
  struct Item {
    Rational lo;
    Rational hi;
    int label;  // 0, 1, or 2 for an arc endpoint
  };
  std::vector<Item> items;
  auto collect = [&](const PLPath& arc, int label) {
    for (std::size_t i = 1; i <= arc.piece_count(); ++i) {
      const Segment s = arc.piece(i);
      if (s.is_horizontal()) {
        if (s.a().y == y) items.push_back({min(s.a().x, s.b().x), max(s.a().x, s.b().x), label});
        continue;
      }
      if (y < min(s.a().y, s.b().y) || y > max(s.a().y, s.b().y)) continue;
      const Rational x = s.a().x + (s.b().x - s.a().x) * (y - s.a().y) / (s.b().y - s.a().y);
      items.push_back({x, x, label});
    }
    for (const Point* e : {&arc.front(), &arc.back()}) {
      if (e->y == y) items.push_back({e->x, e->x, 2});
    }
  };
  collect(f0.path(), 0);
  collect(f1.path(), 1);
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });

  // Label of a point on the line: 0 or 1 when it is interior to exactly one
  // arc, -1 otherwise.
  auto label_of = [&](const Rational& x) {
    int mask = 0;
    for (const auto& it : items) {
      if (it.lo <= x && x <= it.hi) mask |= 1 << it.label;
    }
    if (mask == 1) return 0;
    if (mask == 2) return 1;
    return -1;
  };

  // Walk the clusters of overlapping items from left to right.
  std::size_t i = 0;
  std::optional<Rational> prev_hi;
  while (i < items.size()) {
    Rational lo = items[i].lo;
    Rational hi = items[i].hi;
    std::size_t j = i + 1;
    while (j < items.size() && items[j].lo <= hi) {
      hi = max(hi, items[j].hi);
      ++j;
    }
    if (prev_hi) {
      const int left = label_of(*prev_hi);
      const int right = label_of(lo);
      if (left >= 0 && right >= 0 && left != right) {
        Point pl{*prev_hi, y};
        Point pr{lo, y};
        return left == 0 ? Segment(pl, pr) : Segment(pr, pl);
      }
    }
    prev_hi = hi;
    i = j;
  }
  throw Error(ErrorCode::NoChord, "horizontal line has no chord joining the two arcs");
}

PLArc outer_detour(const PLCircuit& f, const Point& a, const Point& b) {
  const PLPath& path = f.path();
  const BoundingBox box = path.bounds();
  if (a.y != box.y_max || !path.carrier_contains(a)) {
    throw Error(ErrorCode::Precondition, "detour start must be a highest carrier point");
  }
  if (b.y != box.y_min || !path.carrier_contains(b)) {
    throw Error(ErrorCode::Precondition, "detour end must be a lowest carrier point");
  }
  const Rational top = box.y_max + Rational(1);
  const Rational right = box.x_max + Rational(1);
  const Rational bottom = box.y_min - Rational(1);
  PLArc detour = PLArc::from(PLPath::make(
      {a, {a.x, top}, {right, top}, {right, bottom}, {b.x, bottom}, b}, false));

  const GeomSet carrier = path.carrier();
  const PLPath& d = detour.path();
  for (std::size_t i = 2; i <= 4; ++i) {
    if (dist2(GeomSet{d.piece(i)}, carrier).sign() == 0) throw std::logic_error("detour touches the circuit");
  }
  const auto first = last_hit(PLPath::make({d.corners()[0], d.corners()[1]}, false), carrier);
  const auto last = first_hit(PLPath::make({d.corners()[4], d.corners()[5]}, false), carrier);
  if (!first || first->point != a || !last || last->point != b) {
    throw std::logic_error("detour end pieces touch the circuit away from their endpoints");
  }
  return detour;
}

}  // namespace pltopo

#include "pltopo/witness.hpp"

#include <algorithm>
#include <sstream>

namespace pltopo {

BarrierChain BarrierChain::make(GeomSet parts) {
  if (parts.empty()) throw Error(ErrorCode::EmptyInput, "barrier chain needs at least one part");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!intersects(parts[i - 1], parts[i])) {
      throw Error(ErrorCode::NotChained, "consecutive barrier parts " + std::to_string(i - 1) + " and " +
                                             std::to_string(i) + " are disjoint");
    }
  }
  return BarrierChain(std::move(parts));
}

NotDisjointError::NotDisjointError(std::size_t pair_index, Point contact)
    : Error(ErrorCode::NotDisjoint,
            [&] {
              std::ostringstream msg;
              msg << "pair " << pair_index << " touches at " << contact;
              return msg.str();
            }()),
      pair_index_(pair_index),
      contact_(std::move(contact)) {}

Rational clearance_budget(const std::vector<std::pair<GeomSet, GeomSet>>& pairs) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyInput, "no pairs to measure");
  std::optional<Rational> best;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [xs, ys] = pairs[k];
    if (xs.empty() || ys.empty()) throw Error(ErrorCode::EmptyInput, "clearance pair has an empty side");
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        Rational d = dist2(x, y);
        if (d.is_zero()) throw NotDisjointError(k, *common_point(x, y));
        if (!best || d < *best) best = std::move(d);
      }
    }
  }
  return *best;
}

Rational clearance_budget(const PLPath& g, const std::vector<PLPath>& f_pieces,
                          const std::vector<BarrierChain>& barriers) {
  if (f_pieces.size() != barriers.size() + 1) {
    throw Error(ErrorCode::Precondition, "need exactly one more curve piece than barriers");
  }
  std::vector<std::pair<GeomSet, GeomSet>> pairs;
  pairs.emplace_back(g.carrier(), f_pieces[0].carrier());
  for (std::size_t i = 0; i < barriers.size(); ++i) pairs.emplace_back(barriers[i].parts(), f_pieces[i + 1].carrier());
  return clearance_budget(pairs);
}

PLPath refine_closed(const PLPath& samples, const Rational& h2, const std::vector<Point>& mandatory) {
  if (!samples.closed()) throw Error(ErrorCode::Precondition, "refine_closed needs a closed path");
  if (h2.sign() <= 0) throw Error(ErrorCode::Precondition, "spacing bound must be positive");
  std::vector<Point> corners = samples.corners();
  for (const auto& q : mandatory) {
    if (!insert_corner(corners, q)) {
      std::ostringstream msg;
      msg << "mandatory point " << q << " is off the curve";
      throw Error(ErrorCode::MandatoryOffCurve, msg.str());
    }
  }
  std::vector<Point> out{corners.front()};
  for (std::size_t i = 1; i < corners.size(); ++i) {
    const Point& a = corners[i - 1];
    const Point& b = corners[i];
    Rational len2 = dist2(a, b);
    int m = 0;
    while (len2 >= h2) {
      len2 /= Rational(4);
      ++m;
    }
    const Rational parts = pow2(m);
    for (long j = 1; j < (1L << m); ++j) out.push_back(lerp(a, b, Rational(j) / parts));
    out.push_back(b);
  }
  return PLPath::make(std::move(out), true);
}

namespace {

// Carrier points on the vertical line x = x0 (corner points may repeat).
std::vector<Point> line_hits(const PLPath& f, const Rational& x0) {
  std::vector<Point> hits;
  for (std::size_t i = 1; i <= f.piece_count(); ++i) {
    const Segment s = f.piece(i);
    const Point& a = s.a();
    const Point& b = s.b();
    if (a.x == x0) hits.push_back(a);
    if (b.x == x0) hits.push_back(b);
    if (a.x != x0 && b.x != x0 && (a.x < x0) != (b.x < x0)) {
      hits.push_back({x0, a.y + (b.y - a.y) * (x0 - a.x) / (b.x - a.x)});
    }
  }
  return hits;
}

bool vertical_piece_on(const PLPath& f, const Rational& x0) {
  for (std::size_t i = 1; i <= f.piece_count(); ++i) {
    const Segment s = f.piece(i);
    if (s.a().x == x0 && s.b().x == x0) return true;
  }
  return false;
}

const Point& highest(const std::vector<Point>& pts) {
  return *std::max_element(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return p.y < q.y; });
}

const Point& lowest(const std::vector<Point>& pts) {
  return *std::min_element(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return p.y < q.y; });
}

// Part of an open path between two of its carrier points, in path order.
PLPath subpath(const PLPath& f, const Point& u, const Point& v) {
  std::vector<Point> corners = f.corners();
  const auto iu = insert_corner(corners, u);
  if (!iu) throw Error(ErrorCode::Precondition, "subpath point off the path");
  const auto iv = insert_corner(corners, v);
  if (!iv) throw Error(ErrorCode::Precondition, "subpath point off the path");
  // insert_corner may have shifted u's index if v went in before it.
  const std::size_t i = *insert_corner(corners, u);
  const std::size_t j = *iv;
  const auto lo = static_cast<std::ptrdiff_t>(std::min(i, j));
  const auto hi = static_cast<std::ptrdiff_t>(std::max(i, j));
  return PLPath::make(std::vector<Point>(corners.begin() + lo, corners.begin() + hi + 1), false);
}

}  // namespace

SeparationWitness separation_witness(const PLCircuit& f) {
  const PLPath& path = f.path();
  const ExtremePoints ext = extreme_points(path);
  const Point l = ext.leftmost;
  const Point p = ext.rightmost;
  auto [arc_lp, arc_pl] = split_circuit(f, l, p);

  Rational line_x = (l.x + p.x) / Rational(2);
  bool shifted = false;
  if (vertical_piece_on(path, line_x)) {
    line_x += (p.x - l.x) / Rational(4);
    shifted = true;
  }

  const Point a = highest(line_hits(path, line_x));
  const bool a_on_first = arc_lp.path().carrier_contains(a);
  PLArc f1 = a_on_first ? arc_lp : arc_pl;
  PLArc f2 = a_on_first ? arc_pl : arc_lp;
  const Point b = lowest(line_hits(f1.path(), line_x));

  const Rational clearance = dist2(GeomSet{b}, f2.path().carrier());
  const Rational drop2 = min(Rational(1), clearance) / Rational(4);
  Rational t = sqrt_lower(drop2);
  for (unsigned bits = 32; t.is_zero(); bits *= 2) t = sqrt_lower(drop2, bits);

  const Point c{line_x, b.y - t};
  const Point d{l.x - Rational(1), c.y};
  const int pc = parity(c, path);
  const int pd = parity(d, path);
  return SeparationWitness{f, c, d, l, p, a, b, line_x, shifted, std::move(f1), std::move(f2), pc, pd};
}

SeparationWitness witness_from_fields(const PLCircuit& f, const Point& c, const Point& d, const Point& l,
                                      const Point& p, const Point& a, const Point& b, const Rational& line_x,
                                      bool line_shifted, int parity_c, int parity_d) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); };
  if (l == p) fail("witness points l and p coincide");
  if (!f.path().carrier_contains(l) || !f.path().carrier_contains(p)) fail("witness points l, p must lie on the circuit");
  auto [arc_lp, arc_pl] = split_circuit(f, l, p);
  const bool first = arc_lp.path().carrier_contains(a) && a != l && a != p;
  const bool second = arc_pl.path().carrier_contains(a) && a != l && a != p;
  if (!first && !second) fail("witness point a is not interior to a split arc");
  PLArc f1 = first ? arc_lp : arc_pl;
  PLArc f2 = first ? arc_pl : arc_lp;
  return SeparationWitness{f, c, d, l, p, a, b, line_x, line_shifted, std::move(f1), std::move(f2), parity_c, parity_d};
}

std::optional<std::string> witness_defect(const SeparationWitness& w) {
  const PLPath& path = w.circuit.path();
  const ExtremePoints ext = extreme_points(path);
  if (w.l != ext.leftmost) return "l is not the leftmost carrier point";
  if (w.p != ext.rightmost) return "p is not the rightmost carrier point";
  if (!(w.l.x < w.line_x && w.line_x < w.p.x)) return "line_x is not strictly between l_x and p_x";
  if (w.a.x != w.line_x || w.a != highest(line_hits(path, w.line_x))) return "a is not the highest carrier point on the line";
  if (!w.f1.path().carrier_contains(w.a)) return "f1 does not contain a";
  const auto f1_hits = line_hits(w.f1.path(), w.line_x);
  if (w.b.x != w.line_x || f1_hits.empty() || w.b != lowest(f1_hits)) return "b is not the lowest point of f1 on the line";
  if (w.c.x != w.line_x || !(w.c.y < w.b.y)) return "c is not on the line strictly below b";
  if (!(dist2(w.c, w.b) < dist2(GeomSet{w.b}, w.f2.path().carrier()))) return "c is not closer to b than f2 is";
  if (path.carrier_contains(w.c) || path.carrier_contains(w.d)) return "c or d lies on the circuit";
  if (w.parity_c != 1 || parity(w.c, path) != 1) return "parity of c is not 1";
  if (w.parity_d != 0 || parity(w.d, path) != 0) return "parity of d is not 0";
  return std::nullopt;
}

WitnessCheck verify_witness(const SeparationWitness& w, const PLPath& g) {
  if (g.front() != w.c || g.back() != w.d) {
    throw Error(ErrorCode::EndpointMismatch, "path must run from the witness point c to d");
  }
  if (auto hit = first_hit(g, w.circuit.path().carrier())) return CrossingAt{*hit};
  return NoCrossing{};
}

std::pair<BarrierChain, BarrierChain> step3_barriers(const SeparationWitness& w) {
  BarrierChain kappa = BarrierChain::make({VerticalRay{w.c, RayDirection::Down}});
  GeomSet lambda{Segment(w.c, w.b)};
  if (w.a != w.b) {
    for (const auto& item : subpath(w.f1.path(), w.b, w.a).carrier()) lambda.push_back(item);
  }
  lambda.emplace_back(VerticalRay{w.a, RayDirection::Up});
  return {std::move(kappa), BarrierChain::make(std::move(lambda))};
}

Step3Replay replay_step3(const SeparationWitness& w, const Rational& h2) {
  PLPath refined = refine_closed(w.circuit.path(), h2, {w.a, w.b, w.l, w.p});
  std::vector<Point> corners = refined.corners();
  corners.pop_back();
  const auto il = std::find(corners.begin(), corners.end(), w.l);
  std::rotate(corners.begin(), il, corners.end());
  corners.push_back(corners.front());
  const auto ip = std::find(corners.begin(), corners.end(), w.p);
  PLPath f5 = PLPath::make(std::vector<Point>(corners.begin(), ip + 1), false);
  PLPath f6 = PLPath::make(std::vector<Point>(ip, corners.end()), false);

  Step3Replay r{std::move(refined), std::move(f5), std::move(f6), false, Point{}, 0, 0, 0, 0};
  r.f5_contains_a = r.f5.carrier_contains(w.a);
  r.a_above = {w.line_x, w.a.y + Rational(1)};
  r.parity_refined = parity(w.c, r.refined);
  r.parity_f5 = parity(w.c, r.f5);
  r.parity_f6 = parity(w.c, r.f6);
  r.parity_above_f6 = parity(r.a_above, r.f6);
  return r;
}

Claim4Gadget claim4_probe(const PLCircuit& f) {
  const ExtremePoints ext = extreme_points(f.path());
  const Point a = ext.top;
  const Point b = ext.bottom;
  auto [f0, f1] = split_circuit(f, a, b);
  PLArc f2 = outer_detour(f, a, b);
  const Segment chord = horizontal_chord(f0, f1, (a.y + b.y) / Rational(2));
  const Point e = midpoint(chord.a(), chord.b());
  const Segment middle = f2.path().piece(3);
  const Point g = midpoint(middle.a(), middle.b());
  const int pe = parity(e, f.path());
  const int pg = parity(g, f.path());
  return Claim4Gadget{a, b, std::move(f0), std::move(f1), std::move(f2), chord, chord.a(), chord.b(), e, g, pe, pg};
}

}  // namespace pltopo

#include <doctest.h>

#include "corpus.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace pltopo;
using namespace pltopo::testing;

TEST_CASE("make_path") {
  CHECK(open_path({{0, 0}, {1, 0}}).piece_count() == 1);
  CHECK(error_code_of([] { (void)open_path({{0, 0}, {0, 0}, {1, 0}}); }) == ErrorCode::DegeneratePiece);
  CHECK(error_code_of([] { (void)open_path({{0, 0}}); }) == ErrorCode::DegeneratePiece);
  CHECK(error_code_of([] { (void)closed_path({{0, 0}, {4, 0}, {4, 2}}); }) == ErrorCode::NotClosed);
  const PLPath r = closed_path({{0, 0}, {4, 0}, {4, 2}, {0, 2}, {0, 0}});
  CHECK(r.closed());
  CHECK(r.piece_count() == 4);
}

TEST_CASE("evaluation and locations") {
  const PLPath f = open_path({{0, 0}, {4, 0}, {4, 4}});
  CHECK(f.at(R("1/2")) == P(2, 0));
  CHECK(f.at(R("3/2")) == P(4, 2));
  CHECK(f.at(Rational(2)) == P(4, 4));
  const PathLocation loc = f.locate(R("5/4"));
  CHECK(loc.segment_index == 2);
  CHECK(loc.parameter == R("1/4"));
  CHECK(loc.point == P(4, 1));
  CHECK(loc.global_parameter() == R("5/4"));
  CHECK(error_code_of([&] { (void)f.locate(Rational(3)); }) == ErrorCode::Precondition);
  CHECK(f.carrier_contains(P(4, 3)));
  CHECK_FALSE(f.carrier_contains(P(3, 1)));
}

TEST_CASE("concat and reverse") {
  const PLPath g = concat(open_path({{0, 0}, {4, 0}}), open_path({{4, 0}, {4, 4}, {0, 4}}));
  CHECK(g.corners() == pts({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  CHECK(error_code_of([] { (void)concat(open_path({{0, 0}, {1, 0}}), open_path({{2, 0}, {3, 0}})); }) ==
        ErrorCode::EndpointMismatch);
  const PLPath f = open_path({{0, 0}, {1, 0}, {1, 1}});
  const PLPath back = concat(f, reverse(f));
  CHECK(back.piece_count() == 4);
  CHECK(back.front() == back.back());
  CHECK(reverse(f).corners() == pts({{1, 1}, {1, 0}, {0, 0}}));
  CHECK(reverse(reverse(f)) == f);
  const PLPath rect = rectangle().path();
  CHECK(signed_area(reverse(rect)) == -signed_area(rect));
}

TEST_CASE("validate_arc") {
  CHECK_FALSE(validate_arc(open_path({{0, 0}, {2, 0}, {2, 2}})).has_value());
  const auto v = validate_arc(open_path({{0, 0}, {2, 0}, {1, 1}, {1, -1}}));
  REQUIRE(v.has_value());
  CHECK(v->first.point == P(1, 0));
  CHECK(v->second.point == P(1, 0));
  CHECK(v->first.segment_index == 1);
  CHECK(v->second.segment_index == 3);
  CHECK(validate_arc(open_path({{0, 0}, {2, 0}, {1, 0}})).has_value());
  CHECK_THROWS_AS(PLArc::from(open_path({{0, 0}, {2, 0}, {1, 0}})), NotSimpleError);
}

TEST_CASE("validate_circuit") {
  CHECK_FALSE(validate_circuit(rectangle().path()).has_value());
  CHECK_FALSE(validate_circuit(triangle().path()).has_value());
  const auto v = validate_circuit(closed_path({{0, 0}, {2, 2}, {0, 2}, {2, 0}, {0, 0}}));
  REQUIRE(v.has_value());
  CHECK(v->first.point == P(1, 1));
  CHECK(v->first.global_parameter() != v->second.global_parameter());
  // Two pieces retracing each other.
  CHECK(validate_circuit(closed_path({{0, 0}, {1, 0}, {0, 0}})).has_value());
  // A corner touching another piece.
  CHECK(validate_circuit(closed_path({{0, 0}, {4, 0}, {4, 4}, {2, 0}, {0, 4}, {0, 0}})).has_value());
  try {
    (void)PLCircuit::from_corners(pts({{0, 0}, {2, 2}, {0, 2}, {2, 0}, {0, 0}}));
    FAIL("expected NotSimpleError");
  } catch (const NotSimpleError& e) {
    CHECK(e.code() == ErrorCode::NotSimple);
    CHECK(e.violation().first.point == P(1, 1));
  }
}

TEST_CASE("split_circuit") {
  const PLCircuit f = rectangle();
  auto [a, b] = split_circuit(f, P(0, 0), P(4, 2));
  CHECK(a.path().corners() == pts({{0, 0}, {4, 0}, {4, 2}}));
  CHECK(b.path().corners() == pts({{4, 2}, {0, 2}, {0, 0}}));
  auto [c, d] = split_circuit(f, P(2, 0), P(0, 2));
  CHECK(c.path().corners() == pts({{2, 0}, {4, 0}, {4, 2}, {0, 2}}));
  CHECK(d.path().corners() == pts({{0, 2}, {0, 0}, {2, 0}}));
  CHECK(error_code_of([&] { (void)split_circuit(f, P(5, 5), P(0, 0)); }) == ErrorCode::PointNotOnCircuit);
}

TEST_CASE("first_hit and last_hit") {
  const PLPath f = open_path({{0, 0}, {4, 0}});
  const auto h = first_hit(f, GeomSet{Segment(P(2, -1), P(2, 1))});
  REQUIRE(h.has_value());
  CHECK(h->point == P(2, 0));
  CHECK(h->segment_index == 1);
  CHECK_FALSE(first_hit(f, GeomSet{VerticalRay{P(5, 0), RayDirection::Up}}).has_value());
  const PLPath g = open_path({{0, 0}, {4, 0}, {4, 4}});
  const GeomSet line{Segment(P(2, -1), P(2, 5))};
  CHECK(first_hit(g, line)->point == P(2, 0));
  CHECK(last_hit(g, line)->point == P(2, 0));
  const PLPath u = open_path({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  CHECK(first_hit(u, line)->point == P(2, 0));
  CHECK(last_hit(u, line)->point == P(2, 4));
  // Overlap: the first point of the shared stretch.
  const auto o = first_hit(u, GeomSet{Segment(P(4, 1), P(4, 9))});
  CHECK(o->point == P(4, 1));
  CHECK(last_hit(u, GeomSet{Segment(P(4, 1), P(4, 9))})->point == P(4, 4));
}

TEST_CASE("extreme points and area") {
  const ExtremePoints e = extreme_points(rectangle().path());
  CHECK(e.leftmost == P(0, 0));
  CHECK(e.rightmost == P(4, 2));
  CHECK(e.bottom == P(0, 0));
  CHECK(e.top == P(4, 2));
  const ExtremePoints s = extreme_points(open_path({{1, 1}, {3, 3}}));
  CHECK(s.leftmost == P(1, 1));
  CHECK(s.rightmost == P(3, 3));
  CHECK(extreme_points(triangle().path()).top == P(2, 3));
  CHECK(signed_area(rectangle().path()) == Rational(8));
  CHECK(signed_area(closed_path({{0, 0}, {1, 0}, {0, 1}, {0, 0}})) == R("1/2"));
}

TEST_CASE("insert_corner") {
  auto c = pts({{0, 0}, {4, 0}, {4, 2}});
  CHECK(insert_corner(c, P(2, 0)) == std::size_t{1});
  CHECK(c == pts({{0, 0}, {2, 0}, {4, 0}, {4, 2}}));
  CHECK(insert_corner(c, P(4, 0)) == std::size_t{2});
  CHECK(c.size() == 4);
  CHECK_FALSE(insert_corner(c, P(1, 1)).has_value());
}

TEST_CASE("property: corpus circuits are simple and splits reassemble") {
  Rng rng(3);
  for (const PLCircuit& f : circuit_corpus(99, 60)) {
    const PLPath& p = f.path();
    CHECK_FALSE(validate_circuit(p).has_value());
    CHECK(signed_area(p).sign() > 0);
    const auto n = static_cast<long>(p.piece_count());
    const Rational s = uniform_rational(rng, Rational(0), Rational(n), 4);
    Rational t = uniform_rational(rng, Rational(0), Rational(n), 4);
    if (p.at(s) == p.at(t)) continue;
    auto [a, b] = split_circuit(f, p.at(s), p.at(t));
    CHECK(a.path().front() == p.at(s));
    CHECK(a.path().back() == p.at(t));
    const PLPath whole = concat(a.path(), b.path());
    CHECK(whole.front() == whole.back());
    CHECK(std::abs(signed_area(PLPath::make(whole.corners(), true)).to_double() - signed_area(p).to_double()) < 1e-12);
    for (const Point& q : p.corners()) CHECK(whole.carrier_contains(q));
  }
}

TEST_CASE("property: validate_arc agrees with the pairwise drawing oracle") {
  // An open path drawn as a chain of single-piece edges between terminals is
  // a valid drawing exactly when the path is injective.
  Rng rng(17);
  int violations = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<Point> c;
    const long k = uniform_int(rng, 2, 5);
    while (static_cast<long>(c.size()) <= k) {
      Point q = P(uniform_int(rng, 0, 4), uniform_int(rng, 0, 4));
      if (c.empty() || c.back() != q) c.push_back(q);
    }
    bool repeated = false;
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) repeated = repeated || c[a] == c[b];
    }
    if (repeated) continue;  // the oracle needs distinct terminals
    Drawing d;
    for (std::size_t a = 0; a < c.size(); ++a) d.terminals.push_back({std::to_string(a), c[a]});
    for (std::size_t a = 1; a < c.size(); ++a) {
      d.edges.push_back({std::to_string(a - 1), std::to_string(a), PLPath::make({c[a - 1], c[a]}, false)});
    }
    const bool bad = validate_arc(PLPath::make(c, false)).has_value();
    violations += bad ? 1 : 0;
    CAPTURE(i);
    CHECK(bad == !brute_force_drawing_ok(d));
  }
  CHECK(violations > 50);
}

#include "svg.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

namespace pltopo::cli {

namespace {

constexpr const char* kStyle =
    "  <style>\n"
    "    polyline, line, circle { vector-effect: non-scaling-stroke; }\n"
    "    .curve { fill: none; stroke: #1f3b73; stroke-width: 2; }\n"
    "    .arc { fill: none; stroke: #2a7f62; stroke-width: 2; }\n"
    "    .offset { fill: none; stroke: #c47a00; stroke-width: 1.5; }\n"
    "    .chord { fill: none; stroke: #8c2d91; stroke-width: 1.5; }\n"
    "    .ray { stroke: #b22222; stroke-width: 1; }\n"
    "    .component { fill: none; stroke: #b22222; stroke-width: 3; }\n"
    "    .witness-line { stroke: #555555; stroke-width: 1; stroke-dasharray: 6 4; }\n"
    "    .terminal { fill: #000000; }\n"
    "    .query { fill: #b22222; }\n"
    "    .witness-inside { fill: #c0392b; }\n"
    "    .witness-outside { fill: #2471a3; }\n"
    "  </style>\n";

// Exact decimal expansion of num/den when den divides 10^k.
bool exact_decimal(const Rational& r, std::string& out) {
  mpz_class den = r.den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return false;
  const unsigned digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = r.num() * scale / r.den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
  }
  out = (negative ? "-" : "") + s;
  return true;
}

}  // namespace

std::string svg_number(const Rational& r) {
  std::string s;
  if (exact_decimal(r, s)) return s;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
  return buf;
}

void SvgScene::polyline(const std::vector<Point>& pts, const std::string& cls) {
  shapes_.push_back(Shape{Shape::Kind::Polyline, pts, RayDirection::Up, cls});
}

void SvgScene::point(const Point& p, const std::string& cls) {
  shapes_.push_back(Shape{Shape::Kind::Point, {p}, RayDirection::Up, cls});
}

void SvgScene::vertical_line(const Rational& x, const std::string& cls) {
  shapes_.push_back(Shape{Shape::Kind::Line, {Point{x, Rational(0)}}, RayDirection::Up, cls});
}

void SvgScene::vertical_ray(const Point& origin, RayDirection dir, const std::string& cls) {
  shapes_.push_back(Shape{Shape::Kind::Ray, {origin}, dir, cls});
}

std::string SvgScene::render() const {
  std::optional<BoundingBox> box;
  for (const auto& s : shapes_) {
    for (const auto& p : s.pts) {
      // Vertical lines span the picture, so only their x counts.
      const Point q = s.kind == Shape::Kind::Line && box ? Point{p.x, box->y_min} : p;
      if (!box) box = BoundingBox{q.x, q.y, q.x, q.y};
      else box->expand(q);
    }
  }
  if (!box) box = BoundingBox{Rational(0), Rational(0), Rational(0), Rational(0)};
  const Rational w0 = box->x_max - box->x_min;
  const Rational h0 = box->y_max - box->y_min;
  const Rational mx = (w0.is_zero() ? Rational(1) : w0) / Rational(20);
  const Rational my = (h0.is_zero() ? Rational(1) : h0) / Rational(20);
  const Rational x0 = box->x_min - mx;
  const Rational x1 = box->x_max + mx;
  const Rational y0 = box->y_min - my;
  const Rational y1 = box->y_max + my;
  const Rational radius = max(x1 - x0, y1 - y0) / Rational(100);

  auto X = [](const Rational& x) { return svg_number(x); };
  auto Y = [](const Rational& y) { return svg_number(-y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << X(x0) << ' ' << Y(y1) << ' ' << svg_number(x1 - x0)
     << ' ' << svg_number(y1 - y0) << "\">\n";
  os << kStyle;
  for (const auto& s : shapes_) {
    switch (s.kind) {
      case Shape::Kind::Polyline: {
        os << "  <polyline class=\"" << s.cls << "\" points=\"";
        for (std::size_t i = 0; i < s.pts.size(); ++i) {
          os << (i == 0 ? "" : " ") << X(s.pts[i].x) << ',' << Y(s.pts[i].y);
        }
        os << "\"/>\n";
        break;
      }
      case Shape::Kind::Point:
        os << "  <circle class=\"" << s.cls << "\" cx=\"" << X(s.pts[0].x) << "\" cy=\"" << Y(s.pts[0].y)
           << "\" r=\"" << svg_number(radius) << "\"/>\n";
        break;
      case Shape::Kind::Line:
        os << "  <line class=\"" << s.cls << "\" x1=\"" << X(s.pts[0].x) << "\" y1=\"" << Y(y0) << "\" x2=\""
           << X(s.pts[0].x) << "\" y2=\"" << Y(y1) << "\"/>\n";
        break;
      case Shape::Kind::Ray: {
        const Rational& end = s.dir == RayDirection::Up ? y1 : y0;
        os << "  <line class=\"" << s.cls << "\" x1=\"" << X(s.pts[0].x) << "\" y1=\"" << Y(s.pts[0].y) << "\" x2=\""
           << X(s.pts[0].x) << "\" y2=\"" << Y(end) << "\"/>\n";
        break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_for_document(const GeometryDocument& doc) {
  SvgScene scene;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Point>) {
          scene.point(v, "query");
        } else if constexpr (std::is_same_v<T, PLPath>) {
          scene.polyline(v.corners(), v.closed() ? "curve" : "arc");
        } else if constexpr (std::is_same_v<T, PLArc>) {
          scene.polyline(v.path().corners(), "arc");
        } else if constexpr (std::is_same_v<T, PLCircuit>) {
          scene.polyline(v.path().corners(), "curve");
        } else if constexpr (std::is_same_v<T, Drawing>) {
          for (const auto& e : v.edges) scene.polyline(e.arc.corners(), "arc");
          for (const auto& t : v.terminals) scene.point(t.point, "terminal");
        } else {
          scene.polyline(v.circuit.path().corners(), "curve");
          scene.vertical_line(v.line_x, "witness-line");
          scene.point(v.c, "witness-inside");
          scene.point(v.d, "witness-outside");
        }
      },
      doc.payload);
  return scene.render();
}

std::string svg_for_decomposition(const RayDecomposition& dec) {
  SvgScene scene;
  scene.polyline(dec.path.corners(), dec.path.closed() ? "curve" : "arc");
  scene.vertical_ray(dec.query, RayDirection::Up, "ray");
  for (const auto& comp : dec.components) {
    if (comp.is_point()) {
      scene.point(comp.start.point, "query");
    } else if (!comp.wraps) {
      std::vector<Point> pts{comp.start.point};
      for (std::size_t i = comp.start.segment_index; i < comp.end.segment_index; ++i) pts.push_back(dec.path.corners()[i]);
      pts.push_back(comp.end.point);
      scene.polyline(pts, "component");
    } else {
      // Runs through the shared first/last corner.
      const auto& c = dec.path.corners();
      std::vector<Point> pts{comp.start.point};
      for (std::size_t i = comp.start.segment_index; i < c.size(); ++i) pts.push_back(c[i]);
      for (std::size_t i = 1; i < comp.end.segment_index; ++i) pts.push_back(c[i]);
      pts.push_back(comp.end.point);
      scene.polyline(pts, "component");
    }
  }
  scene.point(dec.query, "query");
  return scene.render();
}

std::string svg_for_offset(const PLCircuit& f, const OffsetCycle& offset) {
  SvgScene scene;
  scene.polyline(f.path().corners(), "curve");
  scene.polyline(offset.cycle.corners(), "offset");
  return scene.render();
}

}  // namespace pltopo::cli

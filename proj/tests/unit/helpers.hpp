#pragma once

#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <doctest.h>

#include "pltopo/path.hpp"

namespace pltopo::testing {

inline Rational R(const char* text) { return Rational::parse(text); }

template <typename I, typename = std::enable_if_t<std::is_integral_v<I>>>
Point P(I x, I y) {
  return Point{Rational(static_cast<long>(x)), Rational(static_cast<long>(y))};
}
inline Point P(const char* x, const char* y) { return Point{R(x), R(y)}; }

inline std::vector<Point> pts(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> out;
  for (auto [x, y] : xy) out.push_back(P(x, y));
  return out;
}

inline PLPath open_path(std::initializer_list<std::pair<long, long>> xy) { return PLPath::make(pts(xy), false); }
inline PLPath closed_path(std::initializer_list<std::pair<long, long>> xy) { return PLPath::make(pts(xy), true); }

/// The counterclockwise rectangle (0,0),(4,0),(4,2),(0,2).
inline PLCircuit rectangle() { return PLCircuit::from_corners(pts({{0, 0}, {4, 0}, {4, 2}, {0, 2}, {0, 0}})); }

inline PLCircuit triangle() { return PLCircuit::from_corners(pts({{0, 0}, {4, 0}, {2, 3}, {0, 0}})); }

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Precondition;
}

}  // namespace pltopo::testing

namespace doctest {
template <>
struct StringMaker<pltopo::Rational> {
  static String convert(const pltopo::Rational& r) { return r.to_string().c_str(); }
};
template <>
struct StringMaker<pltopo::Point> {
  static String convert(const pltopo::Point& p) {
    return ("(" + p.x.to_string() + ", " + p.y.to_string() + ")").c_str();
  }
};
}  // namespace doctest

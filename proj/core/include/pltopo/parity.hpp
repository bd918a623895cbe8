#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pltopo/path.hpp"

namespace pltopo {

/// Side of the vertical line through the query point: Left means x < c_x.
enum class Side { Left, Right };

enum class ComponentKind { Simple, Double };

/// One connected component of the preimage of the upward ray from the query
/// point. A point component has start == end. Interval components run over
/// whole pieces lying on the ray; `wraps` marks a closed-path interval that
/// passes through the shared first/last corner, in which case start has the
/// larger parameter and the component runs cyclically through the origin.
struct RayComponent {
  PathLocation start;
  PathLocation end;
  bool wraps = false;
  Side side_before = Side::Left;
  Side side_after = Side::Left;
  ComponentKind kind = ComponentKind::Double;

  bool is_point() const { return start == end; }
};

struct RayDecomposition {
  Point query;
  PLPath path;
  std::vector<RayComponent> components;  // ordered by minimum parameter
  std::size_t simple_count = 0;
  int parity = 0;
  /// Open paths: w_0 = side before the first component (or the side of the
  /// start corner when there is none), w_i = side after component i.
  /// Closed paths: the side after each component, in order.
  std::vector<Side> gap_word;
  /// True when every gap stays on a single side of the vertical line; the
  /// gap word then changes letter exactly at Simple components.
  bool gaps_one_sided = true;
};

/// Open vertical strip between the endpoint verticals of an open path.
struct StripDomain {
  Rational x_min;
  Rational x_max;

  bool contains(const Rational& x) const { return x_min < x && x < x_max; }
};

/// Strip of an open path; nullopt for closed paths (which need no strip).
/// Throws Error(EmptyStrip) when the endpoints share their x-coordinate.
std::optional<StripDomain> strip_domain(const PLPath& f);

/// Decomposes the preimage of the upward vertical ray from c. Throws
/// Error(PointOnCurve), Error(OutsideStrip) or Error(EmptyStrip).
RayDecomposition ray_decomposition(const Point& c, const PLPath& f);

/// Parity of the number of Simple components.
int parity(const Point& c, const PLPath& f);

enum class Location { Inside, Outside, OnCurve };

Location point_in_circuit(const Point& c, const PLCircuit& f);

}  // namespace pltopo

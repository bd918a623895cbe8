#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pltopo/parity.hpp"
#include "pltopo/path.hpp"

namespace pltopo {

/// Side of an oriented circuit: Left of a piece under the stored corner order.
enum class SideLabel { Left, Right };

SideLabel opposite(SideLabel s);

/// Which side of f the point c is joined to, probing along the straight
/// segment loc -> c. Throws Error(CornerProbe) when loc sits at a corner and
/// Error(ProbeCrossesCurve) when the probe meets the carrier elsewhere.
SideLabel side_probe(const PLCircuit& f, const PathLocation& loc, const Point& c);

struct OffsetCertificate {
  bool disjoint_from_circuit = false;
  int uniform_parity = 0;
  /// Every offset piece is joined to its source piece from the requested side
  /// by a straight probe that meets the circuit only at its start.
  bool side_verified = false;
};

/// Closed cycle of corner offsets along the angle bisectors.
struct OffsetCycle {
  Rational requested_delta;
  Rational delta;  // achieved after halvings
  PLPath cycle;
  OffsetCertificate certificate;
  int halvings = 0;
};

inline constexpr int kOffsetRetryBudget = 32;

/// Pushes every corner a distance delta along its bisector to the requested
/// side, then certifies the cycle exactly; halves delta on failure.
/// Throws Error(DeltaExhausted) after kOffsetRetryBudget halvings.
OffsetCycle bisector_offset(const PLCircuit& f, const Rational& delta, SideLabel side);

/// Flood-fill labeling of the closed grid cells that miss the carrier.
///
/// Cell (i, j) is [x0 + i p, x0 + (i+1) p] x [y0 + j p, y0 + (j+1) p]. The
/// grid covers the carrier's bounding box inflated by two cells. Free cells
/// sharing an edge or a corner get one label; a shared corner of two closed
/// free cells is itself off the carrier, so the union is connected.
struct GridLabeling {
  static constexpr std::int32_t kBlocked = -1;

  Rational pitch;
  Point origin;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<std::int32_t> labels;  // row-major: j * nx + i
  std::size_t component_count = 0;

  std::int32_t label(std::size_t i, std::size_t j) const { return labels[j * nx + i]; }
  std::int32_t outside_label() const { return label(0, 0); }
  Point cell_center(std::size_t i, std::size_t j) const;
  BoundingBox bounds() const;

  /// Label of a free cell containing p, or nullopt when every cell containing
  /// p meets the carrier or p is outside the grid.
  std::optional<std::int32_t> label_at(const Point& p) const;
};

inline constexpr std::size_t kMaxGridCells = 40'000'000;

/// Throws Error(Precondition) for a non-positive pitch or an oversized grid.
GridLabeling grid_components(const PLCircuit& f, const Rational& pitch);

struct Separated {
  int parity_u = 0;
  int parity_v = 0;
};

using RouteResult = std::variant<PLArc, Separated>;

/// PL arc from u to v avoiding the carrier, or Separated when u and v have
/// different parity. Throws Error(PointOnCurve) for endpoints on the carrier
/// and Error(RoutingFailed) if the grid search cannot connect them.
RouteResult route_in_complement(const PLCircuit& f, const Point& u, const Point& v);

/// Straight segment on the horizontal line at y from a point of f0's interior
/// (segment start) to a point of f1's interior (segment end) whose open
/// interior misses the carrier. Throws Error(NoChord).
Segment horizontal_chord(const PLArc& f0, const PLArc& f1, const Rational& y);

/// Five-piece rectilinear arc from the top point a around the right of the
/// bounding box to the bottom point b, with unit margins. Throws
/// Error(Precondition) when a or b is not extreme.
PLArc outer_detour(const PLCircuit& f, const Point& a, const Point& b);

/// min over piece lengths and distances between non-adjacent pieces, squared.
Rational min_feature2(const PLPath& f);

}  // namespace pltopo

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pltopo/error.hpp"
#include "pltopo/geometry.hpp"

namespace pltopo {

/// A point of a path together with where it sits in the parameter domain.
/// Pieces are numbered 1..k; piece i covers global parameters [i-1, i].
struct PathLocation {
  std::size_t segment_index = 1;
  Rational parameter;  // in [0, 1] along the piece
  Point point;

  Rational global_parameter() const {
    return Rational(static_cast<long>(segment_index) - 1) + parameter;
  }

  friend bool operator==(const PathLocation&, const PathLocation&) = default;
};

/// PL map encoded by its corners. Consecutive corners are distinct; a closed
/// path repeats its first corner at the end and has at least two pieces.
class PLPath {
 public:
  /// Throws Error(DegeneratePiece) for equal consecutive corners or fewer than
  /// two corners, Error(NotClosed) when closed but first != last.
  static PLPath make(std::vector<Point> corners, bool closed);

  const std::vector<Point>& corners() const { return corners_; }
  bool closed() const { return closed_; }
  std::size_t piece_count() const { return corners_.size() - 1; }

  const Point& front() const { return corners_.front(); }
  const Point& back() const { return corners_.back(); }

  /// Piece i in 1..piece_count().
  Segment piece(std::size_t i) const { return Segment(corners_[i - 1], corners_[i]); }

  /// f(t) for a global parameter t in [0, piece_count()].
  Point at(const Rational& t) const;
  PathLocation locate(const Rational& t) const;

  /// The carrier f[I] as a union of segments.
  GeomSet carrier() const;
  bool carrier_contains(const Point& p) const;
  BoundingBox bounds() const { return bounding_box(corners_); }

  friend bool operator==(const PLPath&, const PLPath&) = default;

 private:
  PLPath(std::vector<Point> corners, bool closed) : corners_(std::move(corners)), closed_(closed) {}

  std::vector<Point> corners_;
  bool closed_ = false;
};

/// Two distinct parameter locations mapped to the same point.
struct Violation {
  PathLocation first;
  PathLocation second;
};

/// nullopt when the open path is injective; otherwise a witness pair.
std::optional<Violation> validate_arc(const PLPath& f);

/// nullopt when the closed path is a simple closed curve.
std::optional<Violation> validate_circuit(const PLPath& f);

/// Error(NotSimple) raised when a path fails arc or circuit validation.
class NotSimpleError : public Error {
 public:
  explicit NotSimpleError(Violation v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// An injective open PL path.
class PLArc {
 public:
  /// Throws NotSimpleError, or Error(Precondition) for a closed path.
  static PLArc from(PLPath path);
  const PLPath& path() const { return path_; }
  operator const PLPath&() const { return path_; }  // NOLINT(implicit)

 private:
  explicit PLArc(PLPath path) : path_(std::move(path)) {}
  PLPath path_;
};

/// A simple closed PL curve.
class PLCircuit {
 public:
  /// Throws NotSimpleError, or Error(Precondition) for an open path.
  static PLCircuit from(PLPath path);
  static PLCircuit from_corners(std::vector<Point> corners);
  const PLPath& path() const { return path_; }
  operator const PLPath&() const { return path_; }  // NOLINT(implicit)

 private:
  explicit PLCircuit(PLPath path) : path_(std::move(path)) {}
  PLPath path_;
};

/// f + g. Both must be open and f's last corner must equal g's first.
PLPath concat(const PLPath& f, const PLPath& g);

PLPath reverse(const PLPath& f);

/// Splits a circuit at two distinct carrier points u, v into the arc u -> v
/// and the arc v -> u (following the circuit's corner order). Points inside
/// pieces become corners. Throws Error(PointNotOnCircuit).
std::pair<PLArc, PLArc> split_circuit(const PLCircuit& f, const Point& u, const Point& v);

/// Splits an open path at an interior carrier point p (first occurrence).
std::pair<PLPath, PLPath> split_path(const PLPath& f, const Point& p);

std::optional<PathLocation> first_hit(const PLPath& f, const GeomSet& x);
std::optional<PathLocation> last_hit(const PLPath& f, const GeomSet& x);

struct ExtremePoints {
  Point leftmost;   // min x, then min y
  Point rightmost;  // max x, then max y
  Point bottom;     // min y, then min x
  Point top;        // max y, then max x
};

ExtremePoints extreme_points(const PLPath& f);

/// Shoelace area of a closed path; positive for counterclockwise.
Rational signed_area(const PLPath& f);

/// Inserts p as a corner of the first piece containing it (no-op when p is
/// already a corner). Returns the corner index of p, or nullopt when p is
/// off the carrier.
std::optional<std::size_t> insert_corner(std::vector<Point>& corners, const Point& p);

}  // namespace pltopo

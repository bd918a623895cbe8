#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pltopo/path.hpp"
#include "pltopo/witness.hpp"

namespace pltopo {

struct Terminal {
  std::string name;
  Point point;

  friend bool operator==(const Terminal&, const Terminal&) = default;
};

struct DrawnEdge {
  std::string u;
  std::string v;
  PLPath arc;  // from terminal u to terminal v

  friend bool operator==(const DrawnEdge&, const DrawnEdge&) = default;
};

struct Drawing {
  std::vector<Terminal> terminals;
  std::vector<DrawnEdge> edges;

  /// Index of the named terminal, or nullopt.
  std::optional<std::size_t> terminal_index(const std::string& name) const;

  friend bool operator==(const Drawing&, const Drawing&) = default;
};

/// Checks the structural rules: distinct terminal names and points, known
/// edge endpoints, no repeated or looped name pair, arcs that are injective
/// and run between their terminals. Throws Error(InvalidDrawing).
void check_structure(const Drawing& d);

struct DrawingOk {};

struct EdgeCrossing {
  std::size_t edge1;
  std::size_t edge2;
  Point point;
};

struct TerminalHit {
  std::size_t edge;
  std::string terminal;
  Point point;
};

using DrawingCheck = std::variant<DrawingOk, EdgeCrossing, TerminalHit>;

/// First violation ordered by edge index, then by parameter along that edge.
/// Two arcs may meet only at a terminal that ends both of them. An arc that
/// touches a terminal other than its own endpoints is a TerminalHit. Overlaps
/// are reported at their midpoint.
DrawingCheck validate_drawing(const Drawing& d);

struct RefutationCertificate {
  std::pair<std::string, std::string> missing_edge;
  std::vector<std::size_t> separating_cycle;  // edge indices, in cycle order
  PLCircuit cycle_circuit;
  int parity_u = 0;
  int parity_v = 0;
};

/// Parities of the missing edge's endpoints against the 4-cycle through the
/// other four terminals. Throws Error(WrongGraph) unless the drawing is
/// K3,3 minus one edge, Error(InvalidDrawing) when validate_drawing fails and
/// Error(CertificateFailure) when the parities agree.
RefutationCertificate k33_certificate(const Drawing& d);

/// The eight realizable arcs of the gadget, with U = {a, b, e} and
/// V = {c, d, g}; the missing edge is e-g.
Drawing claim4_drawing(const Claim4Gadget& gadget);

}  // namespace pltopo

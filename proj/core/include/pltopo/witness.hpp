#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pltopo/complement.hpp"
#include "pltopo/parity.hpp"
#include "pltopo/path.hpp"

namespace pltopo {

/// Connected union of geometric items: consecutive parts share a point.
class BarrierChain {
 public:
  /// Throws Error(EmptyInput) for no parts, Error(NotChained) when two
  /// consecutive parts are disjoint.
  static BarrierChain make(GeomSet parts);
  const GeomSet& parts() const { return parts_; }

 private:
  explicit BarrierChain(GeomSet parts) : parts_(std::move(parts)) {}
  GeomSet parts_;
};

/// Error(NotDisjoint) carrying the contact point of the offending pair.
class NotDisjointError : public Error {
 public:
  NotDisjointError(std::size_t pair_index, Point contact);
  std::size_t pair_index() const { return pair_index_; }
  const Point& contact() const { return contact_; }

 private:
  std::size_t pair_index_;
  Point contact_;
};

/// Minimum squared distance over the listed pairs; each must be disjoint.
Rational clearance_budget(const std::vector<std::pair<GeomSet, GeomSet>>& pairs);

/// Pairs g with f_pieces[0] and barriers[i] with f_pieces[i + 1].
/// Throws Error(Precondition) unless f_pieces has one more entry than barriers.
Rational clearance_budget(const PLPath& g, const std::vector<PLPath>& f_pieces,
                          const std::vector<BarrierChain>& barriers);

/// Subdivides every piece of a closed path into 2^m equal parts so that
/// consecutive corners are closer than sqrt(h2), after inserting the mandatory
/// points as corners. Throws Error(MandatoryOffCurve).
PLPath refine_closed(const PLPath& samples, const Rational& h2, const std::vector<Point>& mandatory);

struct SeparationWitness {
  PLCircuit circuit;
  Point c;  // parity 1
  Point d;  // parity 0
  Point l;  // leftmost carrier point
  Point p;  // rightmost carrier point
  Point a;  // highest carrier point on the line
  Point b;  // lowest point of f1 on the line
  Rational line_x;
  bool line_shifted = false;
  PLArc f1;  // split arc through a
  PLArc f2;  // the other split arc
  int parity_c = 0;
  int parity_d = 0;
};

SeparationWitness separation_witness(const PLCircuit& f);

/// Assembles a witness from stored fields, recovering f1/f2 by splitting the
/// circuit at l and p. Throws Error(ValidationError) when l or p is off the
/// circuit, l == p, or a lies on neither split arc's interior.
SeparationWitness witness_from_fields(const PLCircuit& f, const Point& c, const Point& d, const Point& l,
                                      const Point& p, const Point& a, const Point& b, const Rational& line_x,
                                      bool line_shifted, int parity_c, int parity_d);

/// First violated witness invariant, described in words; nullopt when all
/// hold (parities, extreme points, line position, a, b and the drop of c).
std::optional<std::string> witness_defect(const SeparationWitness& w);

struct NoCrossing {};
struct CrossingAt {
  PathLocation location;
};
using WitnessCheck = std::variant<CrossingAt, NoCrossing>;

/// First point of g on the circuit. g must run from w.c to w.d; otherwise
/// throws Error(EndpointMismatch).
WitnessCheck verify_witness(const SeparationWitness& w, const PLPath& g);

/// The downward half-line from c and the chain c-b, f1 from b to a, upward
/// half-line from a. They miss f1 and f2 respectively.
std::pair<BarrierChain, BarrierChain> step3_barriers(const SeparationWitness& w);

/// Parities along the contradiction chain on a refinement of the circuit.
struct Step3Replay {
  PLPath refined;
  PLPath f5;  // refined arc from l to p
  PLPath f6;  // refined arc from p to l
  bool f5_contains_a = false;
  Point a_above;
  int parity_refined = 0;
  int parity_f5 = 0;
  int parity_f6 = 0;
  int parity_above_f6 = 0;
};

/// Refines the circuit with mandatory corners {a, b, l, p} and splits the
/// result at l and p.
Step3Replay replay_step3(const SeparationWitness& w, const Rational& h2);

struct Claim4Gadget {
  Point a;  // top extreme
  Point b;  // bottom extreme
  PLArc f0;  // a -> b
  PLArc f1;  // b -> a
  PLArc f2;  // outer detour a -> b
  Segment T;  // from c on f0 to d on f1
  Point c;
  Point d;
  Point e;
  Point g;
  int parity_e = 0;
  int parity_g = 0;
};

Claim4Gadget claim4_probe(const PLCircuit& f);

}  // namespace pltopo

#include "pltopo/parity.hpp"

#include <stdexcept>

namespace pltopo {

std::optional<StripDomain> strip_domain(const PLPath& f) {
  if (f.closed()) return std::nullopt;
  const Rational& x0 = f.front().x;
  const Rational& x1 = f.back().x;
  if (x0 == x1) throw Error(ErrorCode::EmptyStrip, "path endpoints lie on one vertical line");
  return StripDomain{min(x0, x1), max(x0, x1)};
}

namespace {

// Closed parameter interval of the preimage, in global parameters.
struct Span {
  Rational lo;
  Rational hi;
};

class Decomposer {
 public:
  Decomposer(const Point& c, const PLPath& f)
      : c_(c), f_(f), k_(static_cast<long>(f.piece_count())) {}

  std::vector<Span> preimage() const {
    const auto& p = f_.corners();
    std::vector<Span> hits;
    for (long i = 0; i < k_; ++i) {
      const Point& a = p[i];
      const Point& b = p[i + 1];
      const bool a_on = a.x == c_.x && a.y > c_.y;
      const bool b_on = b.x == c_.x && b.y > c_.y;
      if (a.x == c_.x && b.x == c_.x) {
        // Vertical piece on the line; c is off the carrier so it is either
        // wholly above or wholly below c.
        if (a_on) hits.push_back({Rational(i), Rational(i + 1)});
        continue;
      }
      if (a_on) hits.push_back({Rational(i), Rational(i)});
      if (b_on) hits.push_back({Rational(i + 1), Rational(i + 1)});
      if (a.x != c_.x && b.x != c_.x && ((a.x < c_.x) != (b.x < c_.x))) {
        const Rational t = (c_.x - a.x) / (b.x - a.x);
        if (a.y + (b.y - a.y) * t > c_.y) hits.push_back({Rational(i) + t, Rational(i) + t});
      }
    }
    std::vector<Span> merged;
    for (auto& h : hits) {
      if (!merged.empty() && h.lo <= merged.back().hi) {
        if (h.hi > merged.back().hi) merged.back().hi = std::move(h.hi);
      } else {
        merged.push_back(std::move(h));
      }
    }
    return merged;
  }

  std::optional<Side> corner_side(long m) const {
    const Point& q = f_.corners()[m];
    if (q.x == c_.x) return std::nullopt;
    return q.x < c_.x ? Side::Left : Side::Right;
  }

  Side strict_side(long m) const {
    auto s = corner_side(m);
    if (!s) throw std::logic_error("ray component neighbour lies on the query line");
    return *s;
  }

  // Side of the path immediately before global parameter t.
  Side side_before(const Rational& t) const {
    if (!t.is_integer()) return strict_side(t.floor().get_si());
    const long m = t.num().get_si();
    return strict_side(m == 0 ? k_ - 1 : m - 1);
  }

  // Side of the path immediately after global parameter t.
  Side side_after(const Rational& t) const {
    if (!t.is_integer()) return strict_side(t.floor().get_si() + 1);
    const long m = t.num().get_si();
    return strict_side(m == k_ ? 1 : m + 1);
  }

  // Whether the path stays strictly on `side` over the open gap (s, e), with
  // e possibly exceeding k for cyclic gaps of a closed path.
  bool gap_on_side(const Rational& s, const Rational& e, Side side) const {
    for (long m = s.floor().get_si() + 1; Rational(m) < e; ++m) {
      const long idx = f_.closed() ? m % k_ : m;
      if (corner_side(idx) != side) return false;
    }
    return true;
  }

 private:
  const Point& c_;
  const PLPath& f_;
  long k_;
};

RayComponent make_component(const PLPath& f, const Decomposer& d, const Rational& lo,
                            const Rational& hi, bool wraps) {
  RayComponent comp;
  comp.start = f.locate(lo);
  comp.end = f.locate(hi);
  comp.wraps = wraps;
  comp.side_before = d.side_before(lo);
  comp.side_after = d.side_after(hi);
  comp.kind = comp.side_before != comp.side_after ? ComponentKind::Simple : ComponentKind::Double;
  return comp;
}

}  // namespace

RayDecomposition ray_decomposition(const Point& c, const PLPath& f) {
  if (auto strip = strip_domain(f); strip && !strip->contains(c.x)) {
    throw Error(ErrorCode::OutsideStrip, "query point is not strictly inside the strip of the open path");
  }
  if (f.carrier_contains(c)) throw Error(ErrorCode::PointOnCurve, "query point lies on the path");

  RayDecomposition out{c, f, {}, 0, 0, {}, true};
  const Decomposer d(c, f);
  std::vector<Span> spans = d.preimage();
  const Rational k(static_cast<long>(f.piece_count()));

  if (f.closed() && !spans.empty() && spans.front().lo.is_zero()) {
    if (spans.size() == 1 && spans.front().hi == k) {
      // The whole closed path lies on the ray; there is no side to leave from.
      RayComponent whole;
      whole.start = f.locate(Rational(0));
      whole.end = f.locate(k);
      whole.wraps = true;
      out.components.push_back(std::move(whole));
      out.gap_word = {Side::Left};
      return out;
    }
    // The preimage touches parameter 0, hence also k: merge cyclically.
    Span first = std::move(spans.front());
    Span last = std::move(spans.back());
    spans.erase(spans.begin());
    spans.pop_back();
    if (first.hi.is_zero() && last.lo == k) {
      out.components.push_back(make_component(f, d, Rational(0), Rational(0), false));
    } else {
      out.components.push_back(make_component(f, d, last.lo, first.hi, true));
    }
    for (const auto& s : spans) out.components.push_back(make_component(f, d, s.lo, s.hi, false));
  } else {
    for (const auto& s : spans) out.components.push_back(make_component(f, d, s.lo, s.hi, false));
  }

  for (const auto& comp : out.components) {
    if (comp.kind == ComponentKind::Simple) ++out.simple_count;
  }
  out.parity = static_cast<int>(out.simple_count % 2);

  // Gap word and one-sidedness of the gaps.
  const auto& comps = out.components;
  if (!f.closed()) {
    if (comps.empty()) {
      const Side s0 = d.strict_side(0);
      out.gap_word = {s0};
      out.gaps_one_sided = d.gap_on_side(Rational(0), k, s0) && d.corner_side(static_cast<long>(f.piece_count())) == s0;
    } else {
      out.gap_word.push_back(comps.front().side_before);
      for (const auto& comp : comps) out.gap_word.push_back(comp.side_after);
      const Side s0 = d.strict_side(0);
      bool ok = s0 == comps.front().side_before &&
                d.gap_on_side(Rational(0), comps.front().start.global_parameter(), s0);
      for (std::size_t i = 0; ok && i + 1 < comps.size(); ++i) {
        ok = comps[i].side_after == comps[i + 1].side_before &&
             d.gap_on_side(comps[i].end.global_parameter(), comps[i + 1].start.global_parameter(),
                           comps[i].side_after);
      }
      if (ok) {
        const Side last = comps.back().side_after;
        ok = d.gap_on_side(comps.back().end.global_parameter(), k, last) &&
             d.corner_side(static_cast<long>(f.piece_count())) == last;
      }
      out.gaps_one_sided = ok;
    }
  } else if (comps.empty()) {
    const auto s0 = d.corner_side(0);
    out.gaps_one_sided = s0 && d.gap_on_side(Rational(0), k, *s0);
  } else {
    bool ok = true;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const RayComponent& cur = comps[i];
      const RayComponent& next = comps[(i + 1) % comps.size()];
      out.gap_word.push_back(cur.side_after);
      Rational from = cur.end.global_parameter();
      Rational to = next.start.global_parameter();
      if (to <= from) to += k;
      if (cur.side_after != next.side_before || !d.gap_on_side(from, to, cur.side_after)) ok = false;
    }
    out.gaps_one_sided = ok;
  }
  return out;
}

int parity(const Point& c, const PLPath& f) { return ray_decomposition(c, f).parity; }

Location point_in_circuit(const Point& c, const PLCircuit& f) {
  if (f.path().carrier_contains(c)) return Location::OnCurve;
  return parity(c, f.path()) == 1 ? Location::Inside : Location::Outside;
}

}  // namespace pltopo

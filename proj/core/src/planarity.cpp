#include "pltopo/planarity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <map>
#include <set>

namespace pltopo {

std::optional<std::size_t> Drawing::terminal_index(const std::string& name) const {
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    if (terminals[i].name == name) return i;
  }
  return std::nullopt;
}

void check_structure(const Drawing& d) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidDrawing, msg); };
  std::set<std::string> names;
  std::set<Point> points;
  for (const auto& t : d.terminals) {
    if (!names.insert(t.name).second) fail("duplicate terminal name '" + t.name + "'");
    if (!points.insert(t.point).second) fail("terminal '" + t.name + "' shares its point with another terminal");
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const DrawnEdge& e = d.edges[i];
    const std::string label = "edge " + std::to_string(i);
    const auto iu = d.terminal_index(e.u);
    const auto iv = d.terminal_index(e.v);
    if (!iu || !iv) fail(label + " names an unknown terminal");
    if (e.u == e.v) fail(label + " is a loop");
    if (!pairs.insert(std::minmax(e.u, e.v)).second) fail(label + " repeats a terminal pair");
    if (e.arc.closed()) fail(label + " is closed");
    if (e.arc.front() != d.terminals[*iu].point || e.arc.back() != d.terminals[*iv].point) {
      fail(label + " does not run between its terminals");
    }
    if (validate_arc(e.arc)) fail(label + " is not injective");
  }
}

namespace {

Rational parameter_on(const PLPath& f, const Point& p) {
  for (std::size_t i = 1; i <= f.piece_count(); ++i) {
    const Segment s = f.piece(i);
    if (contains_point(s, p)) return Rational(static_cast<long>(i) - 1) + parameter_of(s, p);
  }
  throw std::logic_error("point is off the path");
}

bool is_end(const PLPath& f, const Point& p) { return f.front() == p || f.back() == p; }

}  // namespace

DrawingCheck validate_drawing(const Drawing& d) {
  std::set<Point> terminal_points;
  for (const auto& t : d.terminals) terminal_points.insert(t.point);

  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const PLPath& fi = d.edges[i].arc;
    std::optional<std::pair<Rational, DrawingCheck>> best;
    auto offer = [&](const Point& p, DrawingCheck v) {
      Rational t = parameter_on(fi, p);
      if (!best || t < best->first) best.emplace(std::move(t), std::move(v));
    };

    for (const auto& t : d.terminals) {
      if (!is_end(fi, t.point) && fi.carrier_contains(t.point)) offer(t.point, TerminalHit{i, t.name, t.point});
    }
    for (std::size_t j = i + 1; j < d.edges.size(); ++j) {
      const PLPath& fj = d.edges[j].arc;
      for (std::size_t si = 1; si <= fi.piece_count(); ++si) {
        const Segment s = fi.piece(si);
        for (std::size_t sj = 1; sj <= fj.piece_count(); ++sj) {
          const SegIntersection hit = seg_intersection(s, fj.piece(sj));
          if (const auto* p = std::get_if<Point>(&hit)) {
            if (is_end(fi, *p) && is_end(fj, *p)) continue;
            // Terminals met in an interior are TerminalHits of that edge.
            if (terminal_points.count(*p) != 0) continue;
            offer(*p, EdgeCrossing{i, j, *p});
          } else if (const auto* o = std::get_if<Segment>(&hit)) {
            const Point m = midpoint(o->a(), o->b());
            offer(m, EdgeCrossing{i, j, m});
          }
        }
      }
    }
    if (best) return std::move(best->second);
  }
  return DrawingOk{};
}

RefutationCertificate k33_certificate(const Drawing& d) {
  check_structure(d);
  auto wrong = [](const std::string& msg) { throw Error(ErrorCode::WrongGraph, msg); };
  const std::size_t n = d.terminals.size();
  if (n != 6 || d.edges.size() != 8) wrong("expected six terminals and eight edges");

  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : d.edges) {
    const std::size_t u = *d.terminal_index(e.u);
    const std::size_t v = *d.terminal_index(e.v);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> colour(n, -1);
  colour[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t w : adj[queue[q]]) {
      if (colour[w] < 0) {
        colour[w] = 1 - colour[queue[q]];
        queue.push_back(w);
      } else if (colour[w] == colour[queue[q]]) {
        wrong("graph is not bipartite");
      }
    }
  }
  if (queue.size() != n) wrong("graph is not connected");
  std::array<std::vector<std::size_t>, 2> parts;
  for (std::size_t i = 0; i < n; ++i) parts[static_cast<std::size_t>(colour[i])].push_back(i);
  if (parts[0].size() != 3) wrong("parts are not of size three");

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    const std::size_t u = *d.terminal_index(d.edges[k].u);
    const std::size_t v = *d.terminal_index(d.edges[k].v);
    edge_of[std::minmax(u, v)] = k;
  }
  std::optional<std::pair<std::size_t, std::size_t>> missing;
  for (std::size_t u : parts[0]) {
    for (std::size_t v : parts[1]) {
      if (edge_of.count(std::minmax(u, v)) == 0) missing = {u, v};
    }
  }
  const auto [mu, mv] = *missing;

  if (!std::holds_alternative<DrawingOk>(validate_drawing(d))) {
    throw Error(ErrorCode::InvalidDrawing, "drawn arcs cross or pass through terminals");
  }

  std::vector<std::size_t> us, vs;
  for (std::size_t u : parts[0]) {
    if (u != mu) us.push_back(u);
  }
  for (std::size_t v : parts[1]) {
    if (v != mv) vs.push_back(v);
  }
  const std::array<std::size_t, 5> walk{us[0], vs[0], us[1], vs[1], us[0]};
  std::vector<std::size_t> cycle;
  std::optional<PLPath> loop;
  for (std::size_t s = 0; s + 1 < walk.size(); ++s) {
    const std::size_t k = edge_of.at(std::minmax(walk[s], walk[s + 1]));
    cycle.push_back(k);
    const DrawnEdge& e = d.edges[k];
    PLPath leg = e.u == d.terminals[walk[s]].name ? e.arc : reverse(e.arc);
    loop = loop ? concat(*loop, leg) : leg;
  }
  PLCircuit circuit = PLCircuit::from(PLPath::make(loop->corners(), true));
  const int pu = parity(d.terminals[mu].point, circuit.path());
  const int pv = parity(d.terminals[mv].point, circuit.path());
  RefutationCertificate cert{{d.terminals[mu].name, d.terminals[mv].name}, std::move(cycle), std::move(circuit), pu, pv};
  if (cert.parity_u == cert.parity_v) {
    throw Error(ErrorCode::CertificateFailure, "missing-edge endpoints have equal parity against the 4-cycle");
  }
  return cert;
}

Drawing claim4_drawing(const Claim4Gadget& gadget) {
  Drawing d;
  d.terminals = {{"a", gadget.a}, {"b", gadget.b}, {"e", gadget.e},
                 {"c", gadget.c}, {"d", gadget.d}, {"g", gadget.g}};
  auto [f0_head, f0_tail] = split_path(gadget.f0.path(), gadget.c);  // a..c, c..b
  auto [f1_head, f1_tail] = split_path(gadget.f1.path(), gadget.d);  // b..d, d..a
  auto [f2_head, f2_tail] = split_path(gadget.f2.path(), gadget.g);  // a..g, g..b
  d.edges = {
      {"e", "c", PLPath::make({gadget.e, gadget.c}, false)},
      {"e", "d", PLPath::make({gadget.e, gadget.d}, false)},
      {"a", "c", std::move(f0_head)},
      {"b", "c", reverse(f0_tail)},
      {"a", "d", reverse(f1_tail)},
      {"b", "d", std::move(f1_head)},
      {"a", "g", std::move(f2_head)},
      {"b", "g", reverse(f2_tail)},
  };
  return d;
}

}  // namespace pltopo

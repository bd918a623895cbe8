#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "pltopo/complement.hpp"
#include "pltopo/parity.hpp"
#include "pltopo/planarity.hpp"
#include "pltopo/witness.hpp"
#include "svg.hpp"

namespace pltopo::cli {

namespace {

struct Options {
  std::string file;
  std::vector<std::string> point;
  bool decomposition = false;
  std::string svg;
  std::string out;
  std::string pitch;
  std::string delta;
  std::string side;
  std::vector<std::string> from;
  std::vector<std::string> to;
  std::string y;
  std::string h2;
  std::vector<std::string> mandatory;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Precondition, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw Error(ErrorCode::Precondition, "cannot write " + path);
  o << text;
}

Rational number(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, what + " \"" + text + "\" is not an integer or p/q rational");
  }
}

Point point_arg(const std::vector<std::string>& xy, const std::string& what) {
  return Point{number(xy.at(0), what), number(xy.at(1), what)};
}

GeometryDocument load(const Options& o) { return parse_document(read_file(o.file)); }

const PLPath& path_of(const GeometryDocument& doc) {
  switch (doc.kind) {
    case DocumentKind::Path: return std::get<PLPath>(doc.payload);
    case DocumentKind::Arc: return std::get<PLArc>(doc.payload).path();
    case DocumentKind::Circuit: return std::get<PLCircuit>(doc.payload).path();
    case DocumentKind::Witness: return std::get<SeparationWitness>(doc.payload).circuit.path();
    default: throw Error(ErrorCode::Precondition, "expected a path, arc, circuit or witness document");
  }
}

PLCircuit circuit_of(const GeometryDocument& doc) {
  switch (doc.kind) {
    case DocumentKind::Circuit: return std::get<PLCircuit>(doc.payload);
    case DocumentKind::Witness: return std::get<SeparationWitness>(doc.payload).circuit;
    case DocumentKind::Path: {
      const auto& p = std::get<PLPath>(doc.payload);
      if (!p.closed()) break;
      try {
        return PLCircuit::from(p);
      } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, e.what());
      }
    }
    default: break;
  }
  throw Error(ErrorCode::Precondition, "expected a circuit document");
}

const Drawing& drawing_of(const GeometryDocument& doc) {
  if (doc.kind != DocumentKind::Drawing) throw Error(ErrorCode::Precondition, "expected a drawing document");
  return std::get<Drawing>(doc.payload);
}

// Writes a document to --out when given, otherwise to stdout.
void deliver(const Options& o, std::ostream& out, const GeometryDocument& doc) {
  const std::string text = emit_document(doc);
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

char side_letter(Side s) { return s == Side::Left ? 'L' : 'R'; }

std::string edge_label(const Drawing& d, std::size_t i) {
  return std::to_string(i) + " (" + d.edges[i].u + "-" + d.edges[i].v + ")";
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream&) {
  GeometryDocument doc;
  try {
    doc = load(o);
  } catch (const ParseFailure&) {
    throw;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ValidationError) throw;
    out << "invalid: " << e.what() << '\n';
    return kExitNegative;
  }
  if (doc.kind == DocumentKind::Path) {
    const auto& p = std::get<PLPath>(doc.payload);
    if (auto v = p.closed() ? validate_circuit(p) : validate_arc(p)) {
      out << "not simple: point " << v->first.point << " at parameters " << v->first.global_parameter() << " and "
          << v->second.global_parameter() << '\n';
      return kExitNegative;
    }
  }
  out << "valid " << to_string(doc.kind) << '\n';
  return kExitOk;
}

int cmd_parity(const Options& o, std::ostream& out, std::ostream&) {
  const auto doc = load(o);
  const Point c = point_arg(o.point, "--point");
  const RayDecomposition dec = ray_decomposition(c, path_of(doc));
  out << "parity " << dec.parity << '\n';
  if (o.decomposition) {
    out << "components " << dec.components.size() << " simple " << dec.simple_count << '\n';
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      const auto& k = dec.components[i];
      out << "  " << (k.kind == ComponentKind::Simple ? "simple" : "double") << ' '
          << (k.is_point() ? "point" : (k.wraps ? "interval-wrapping" : "interval")) << " t=["
          << k.start.global_parameter() << ", " << k.end.global_parameter() << "] " << k.start.point;
      if (!k.is_point()) out << " - " << k.end.point;
      out << ' ' << side_letter(k.side_before) << "->" << side_letter(k.side_after) << '\n';
    }
    out << "gap word ";
    for (Side s : dec.gap_word) out << side_letter(s);
    out << (dec.gaps_one_sided ? "" : " (gaps cross the line)") << '\n';
  }
  if (!o.svg.empty()) write_file(o.svg, svg_for_decomposition(dec));
  return kExitOk;
}

int cmd_inside(const Options& o, std::ostream& out, std::ostream&) {
  const auto f = circuit_of(load(o));
  switch (point_in_circuit(point_arg(o.point, "--point"), f)) {
    case Location::Inside: out << "inside\n"; break;
    case Location::Outside: out << "outside\n"; break;
    case Location::OnCurve: out << "on-curve\n"; break;
  }
  return kExitOk;
}

int cmd_components(const Options& o, std::ostream& out, std::ostream&) {
  const auto f = circuit_of(load(o));
  const GridLabeling g = grid_components(f, number(o.pitch, "--pitch"));
  out << "components " << g.component_count << '\n';
  out << "grid " << g.nx << " x " << g.ny << " pitch " << g.pitch << '\n';
  out << "outside label " << g.outside_label() << '\n';
  return kExitOk;
}

int cmd_offset(const Options& o, std::ostream& out, std::ostream& err) {
  const auto f = circuit_of(load(o));
  if (o.side != "left" && o.side != "right") throw Error(ErrorCode::Precondition, "--side must be left or right");
  const SideLabel side = o.side == "left" ? SideLabel::Left : SideLabel::Right;
  const Rational delta = number(o.delta, "--delta");
  std::optional<OffsetCycle> found;
  try {
    found = bisector_offset(f, delta, side);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DeltaExhausted) throw;
    out << "no certified offset: " << e.what() << '\n';
    return kExitNegative;
  }
  const OffsetCycle& cyc = *found;
  std::ostream& info = o.out.empty() ? err : out;
  info << "delta " << cyc.delta << " halvings " << cyc.halvings << " parity " << cyc.certificate.uniform_parity
       << '\n';
  deliver(o, out, make_document(cyc.cycle));
  if (!o.svg.empty()) write_file(o.svg, svg_for_offset(f, cyc));
  return kExitOk;
}

int cmd_route(const Options& o, std::ostream& out, std::ostream& err) {
  const auto f = circuit_of(load(o));
  const RouteResult r = route_in_complement(f, point_arg(o.from, "--from"), point_arg(o.to, "--to"));
  if (const auto* s = std::get_if<Separated>(&r)) {
    out << "separated: parity " << s->parity_u << " vs " << s->parity_v << '\n';
    return kExitNegative;
  }
  const PLArc& arc = std::get<PLArc>(r);
  std::ostream& info = o.out.empty() ? err : out;
  info << "route " << arc.path().piece_count() << " pieces\n";
  deliver(o, out, make_document(arc));
  return kExitOk;
}

int cmd_chord(const Options& o, std::ostream& out, std::ostream&) {
  const auto f = circuit_of(load(o));
  const ExtremePoints ext = extreme_points(f.path());
  const auto [f0, f1] = split_circuit(f, ext.top, ext.bottom);
  try {
    const Segment t = horizontal_chord(f0, f1, number(o.y, "--y"));
    out << "chord " << t.a() << " -> " << t.b() << '\n';
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoChord) throw;
    out << "no chord: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream&) {
  const auto f = circuit_of(load(o));
  const SeparationWitness w = separation_witness(f);
  out << "c " << w.c << " parity " << w.parity_c << '\n';
  out << "d " << w.d << " parity " << w.parity_d << '\n';
  out << "line x = " << w.line_x << (w.line_shifted ? " (shifted)" : "") << '\n';
  const auto doc = make_document(w);
  if (!o.out.empty()) write_file(o.out, emit_document(doc));
  if (!o.svg.empty()) write_file(o.svg, svg_for_document(doc));
  return kExitOk;
}

int cmd_claim4(const Options& o, std::ostream& out, std::ostream&) {
  const auto f = circuit_of(load(o));
  const Claim4Gadget g = claim4_probe(f);
  out << "chord " << g.T.a() << " -> " << g.T.b() << '\n';
  out << "e " << g.e << " parity " << g.parity_e << '\n';
  out << "g " << g.g << " parity " << g.parity_g << '\n';
  const Drawing d = claim4_drawing(g);
  const bool ok = std::holds_alternative<DrawingOk>(validate_drawing(d));
  out << "drawing " << (ok ? "valid" : "invalid") << '\n';
  if (!o.out.empty()) write_file(o.out, emit_document(make_document(d)));
  return ok && g.parity_e != g.parity_g ? kExitOk : kExitNegative;
}

int cmd_refine(const Options& o, std::ostream& out, std::ostream& err) {
  const auto doc = load(o);
  const PLPath& p = path_of(doc);
  if (o.mandatory.size() % 2 != 0) throw Error(ErrorCode::Precondition, "--mandatory takes x y pairs");
  std::vector<Point> mandatory;
  for (std::size_t i = 0; i < o.mandatory.size(); i += 2) {
    mandatory.push_back(point_arg({o.mandatory[i], o.mandatory[i + 1]}, "--mandatory"));
  }
  const PLPath r = refine_closed(p, number(o.h2, "--h2"), mandatory);
  std::ostream& info = o.out.empty() ? err : out;
  info << "refined " << p.piece_count() << " -> " << r.piece_count() << " pieces\n";
  deliver(o, out, make_document(r));
  return kExitOk;
}

int cmd_drawing_check(const Options& o, std::ostream& out, std::ostream&) {
  const auto doc = load(o);
  const Drawing& d = drawing_of(doc);
  const DrawingCheck c = validate_drawing(d);
  if (const auto* x = std::get_if<EdgeCrossing>(&c)) {
    out << "crossing: edges " << edge_label(d, x->edge1) << " and " << edge_label(d, x->edge2) << " meet at "
        << x->point << '\n';
    return kExitNegative;
  }
  if (const auto* t = std::get_if<TerminalHit>(&c)) {
    out << "terminal hit: edge " << edge_label(d, t->edge) << " passes through terminal " << t->terminal << " at "
        << t->point << '\n';
    return kExitNegative;
  }
  out << "ok\n";
  return kExitOk;
}

int cmd_k33_cert(const Options& o, std::ostream& out, std::ostream&) {
  const auto doc = load(o);
  const Drawing& d = drawing_of(doc);
  try {
    const RefutationCertificate cert = k33_certificate(d);
    out << "missing edge " << cert.missing_edge.first << '-' << cert.missing_edge.second << '\n';
    out << "cycle";
    for (std::size_t i : cert.separating_cycle) out << ' ' << d.edges[i].u << '-' << d.edges[i].v;
    out << '\n';
    out << "parity " << cert.missing_edge.first << ' ' << cert.parity_u << '\n';
    out << "parity " << cert.missing_edge.second << ' ' << cert.parity_v << '\n';
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidDrawing && e.code() != ErrorCode::CertificateFailure) throw;
    out << "no certificate: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_svg(const Options& o, std::ostream&, std::ostream&) {
  write_file(o.out, svg_for_document(load(o)));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact piecewise-linear plane topology", "pltopo"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&, std::ostream&)> action;

  auto sub = [&](const std::string& name, const std::string& help, int (*fn)(const Options&, std::ostream&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", o.file, "Geometry document")->required();
    s->callback([&action, fn] { action = fn; });
    return s;
  };
  auto point_opt = [](CLI::App* s, const std::string& flag, std::vector<std::string>& dst, const std::string& help) {
    return s->add_option(flag, dst, help)->expected(2)->allow_extra_args(false)->required();
  };

  sub("validate", "Parse and validate a document", cmd_validate);

  auto* parity_cmd = sub("parity", "Parity of a point against a path", cmd_parity);
  point_opt(parity_cmd, "--point", o.point, "Query point X Y");
  parity_cmd->add_flag("--decomposition", o.decomposition, "Print the ray preimage components");
  parity_cmd->add_option("--svg", o.svg, "Write an SVG figure of the decomposition");

  auto* inside_cmd = sub("inside", "Locate a point relative to a circuit", cmd_inside);
  point_opt(inside_cmd, "--point", o.point, "Query point X Y");

  auto* comp_cmd = sub("components", "Grid flood-fill component count", cmd_components);
  comp_cmd->add_option("--pitch", o.pitch, "Cell size")->required();

  auto* off_cmd = sub("offset", "Certified bisector offset", cmd_offset);
  off_cmd->add_option("--delta", o.delta, "Initial offset distance")->required();
  off_cmd->add_option("--side", o.side, "left or right")->required();
  off_cmd->add_option("--out", o.out, "Write the offset cycle here");
  off_cmd->add_option("--svg", o.svg, "Write an SVG figure");

  auto* route_cmd = sub("route", "Path between two points avoiding the circuit", cmd_route);
  point_opt(route_cmd, "--from", o.from, "Start X Y");
  point_opt(route_cmd, "--to", o.to, "End X Y");
  route_cmd->add_option("--out", o.out, "Write the route here");

  auto* chord_cmd = sub("chord", "Horizontal chord between the top-bottom split arcs", cmd_chord);
  chord_cmd->add_option("--y", o.y, "Height of the chord")->required();

  auto* wit_cmd = sub("witness", "Separation witness of a circuit", cmd_witness);
  wit_cmd->add_option("--out", o.out, "Write the witness document here");
  wit_cmd->add_option("--svg", o.svg, "Write an SVG figure");

  auto* c4_cmd = sub("claim4", "Chord gadget and its eight-arc drawing", cmd_claim4);
  c4_cmd->add_option("--out", o.out, "Write the drawing document here");

  auto* ref_cmd = sub("refine", "Subdivide a closed path", cmd_refine);
  ref_cmd->add_option("--h2", o.h2, "Bound on squared corner spacing")->required();
  ref_cmd->add_option("--mandatory", o.mandatory, "Points X Y ... to keep as corners");
  ref_cmd->add_option("--out", o.out, "Write the refined path here");

  sub("drawing-check", "Check a drawing for crossings", cmd_drawing_check);
  sub("k33-cert", "Refutation certificate for a K3,3-minus-edge drawing", cmd_k33_cert);

  auto* svg_cmd = sub("svg", "Render a document as SVG", cmd_svg);
  svg_cmd->add_option("--out", o.out, "Output file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    for (const CLI::App* s : app.get_subcommands()) {
      if (s->parsed()) err << s->help();
    }
    return kExitUsage;
  }

  try {
    return action(o, out, err);
  } catch (const ParseFailure& e) {
    err << o.file << ": " << e.what() << '\n';
  } catch (const Error& e) {
    err << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace pltopo::cli

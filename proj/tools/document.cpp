#include "document.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iterator>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pltopo::cli {

namespace {

// Forward iterator over the text that records how many characters the JSON
// lexer has consumed, so SAX callbacks can be mapped back to positions.
class CountingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, const char* base, std::size_t* consumed) : p_(p), base_(base), consumed_(consumed) {}

  reference operator*() const {
    const auto n = static_cast<std::size_t>(p_ - base_) + 1;
    if (consumed_ != nullptr && n > *consumed_) *consumed_ = n;
    return *p_;
  }
  CountingIterator& operator++() {
    ++p_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++p_;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const CountingIterator& a, const CountingIterator& b) { return a.p_ != b.p_; }

 private:
  const char* p_ = nullptr;
  const char* base_ = nullptr;
  std::size_t* consumed_ = nullptr;
};

struct Node {
  enum class Type { Null, Bool, Integer, Float, String, Array, Object };
  Type type = Type::Null;
  bool boolean = false;
  std::int64_t integer = 0;
  bool integer_fits = true;
  std::string text;
  std::vector<Node> items;
  std::vector<std::pair<std::string, Node>> members;
  std::size_t offset = 0;  // token start
  std::vector<std::size_t> key_offsets;
  std::string pending_key;  // while building an object
  std::size_t pending_key_offset = 0;
};

std::string_view type_name(Node::Type t) {
  switch (t) {
    case Node::Type::Null: return "null";
    case Node::Type::Bool: return "boolean";
    case Node::Type::Integer: return "number";
    case Node::Type::Float: return "number";
    case Node::Type::String: return "string";
    case Node::Type::Array: return "array";
    case Node::Type::Object: return "object";
  }
  return "value";
}

class PositionMap {
 public:
  explicit PositionMap(std::string_view text) : text_(text) {}

  std::pair<std::size_t, std::size_t> line_column(std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  // Start of the token whose last character (or one-character lookahead) was
  // the consumed-th character.
  std::size_t token_start(std::size_t consumed) const {
    if (consumed == 0 || text_.empty()) return 0;
    std::size_t i = std::min(consumed, text_.size()) - 1;
    auto is_delim = [](char ch) {
      return std::isspace(static_cast<unsigned char>(ch)) != 0 || ch == ',' || ch == ']' || ch == '}' || ch == ':';
    };
    while (i > 0 && is_delim(text_[i])) --i;
    if (text_[i] == '"') {
      std::size_t j = i;
      while (j > 0) {
        --j;
        if (text_[j] == '"' && (j == 0 || text_[j - 1] != '\\')) return j;
      }
      return 0;
    }
    while (i > 0 && !is_delim(text_[i - 1]) && text_[i - 1] != '[' && text_[i - 1] != '{') --i;
    return i;
  }

  std::size_t size() const { return text_.size(); }

  ParseFailure failure(std::size_t offset, const std::string& message) const {
    const auto [line, column] = line_column(offset);
    return ParseFailure(line, column, message);
  }

 private:
  std::string_view text_;
};

class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  TreeBuilder(const PositionMap& map, const std::size_t* consumed) : map_(map), consumed_(consumed) {}

  Node take_root() { return std::move(root_); }

  bool null() override { return add(Node{}); }
  bool boolean(bool v) override {
    Node n;
    n.type = Node::Type::Bool;
    n.boolean = v;
    return add(std::move(n));
  }
  bool number_integer(number_integer_t v) override {
    Node n;
    n.type = Node::Type::Integer;
    n.integer = v;
    return add(std::move(n));
  }
  bool number_unsigned(number_unsigned_t v) override {
    Node n;
    n.type = Node::Type::Integer;
    n.integer_fits = v <= static_cast<number_unsigned_t>(INT64_MAX);
    n.integer = n.integer_fits ? static_cast<std::int64_t>(v) : 0;
    return add(std::move(n));
  }
  bool number_float(number_float_t, const string_t& s) override {
    Node n;
    n.type = Node::Type::Float;
    n.text = s;
    return add(std::move(n));
  }
  bool string(string_t& s) override {
    Node n;
    n.type = Node::Type::String;
    n.text = s;
    return add(std::move(n));
  }
  bool binary(binary_t&) override { return false; }
  bool start_object(std::size_t) override {
    Node n;
    n.type = Node::Type::Object;
    n.offset = here();
    stack_.push_back(std::move(n));
    return true;
  }
  bool key(string_t& k) override {
    Node& obj = stack_.back();
    const std::size_t at = here();
    for (const auto& [name, value] : obj.members) {
      if (name == k) throw map_.failure(at, "duplicate field \"" + k + "\"");
    }
    obj.pending_key = k;
    obj.pending_key_offset = at;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override {
    Node n;
    n.type = Node::Type::Array;
    n.offset = here();
    stack_.push_back(std::move(n));
    return true;
  }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t position, const std::string& last_token,
                   const nlohmann::detail::exception& ex) override {
    // Point at the first character of the offending token.
    std::size_t at = position > last_token.size() ? position - last_token.size() : 0;
    if (position > map_.size()) at = map_.size();
    std::string what = ex.what();
    // Strip the library's "[json.exception.parse_error.101] parse error at line x, column y: " prefix.
    if (const auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw map_.failure(at, "malformed JSON: " + what);
  }

 private:
  std::size_t here() const { return map_.token_start(*consumed_); }

  bool add(Node n) {
    n.offset = here();
    return attach(std::move(n));
  }

  bool attach(Node n) {
    if (stack_.empty()) {
      root_ = std::move(n);
      return true;
    }
    Node& parent = stack_.back();
    if (parent.type == Node::Type::Array) {
      parent.items.push_back(std::move(n));
    } else {
      parent.members.emplace_back(parent.pending_key, std::move(n));
      parent.key_offsets.push_back(parent.pending_key_offset);
    }
    return true;
  }

  bool close() {
    Node n = std::move(stack_.back());
    stack_.pop_back();
    return attach(std::move(n));
  }

  const PositionMap& map_;
  const std::size_t* consumed_;
  std::vector<Node> stack_;
  Node root_;
};

// Typed access to the node tree; every failure is a ParseFailure at the node.
class Reader {
 public:
  explicit Reader(const PositionMap& map) : map_(map) {}

  [[noreturn]] void fail(const Node& n, const std::string& msg) const { throw map_.failure(n.offset, msg); }

  void expect(const Node& n, Node::Type t, std::string_view what) const {
    if (n.type != t) fail(n, std::string(what) + " must be a " + std::string(type_name(t)) + ", got " + std::string(type_name(n.type)));
  }

  const Node* field(const Node& obj, std::string_view key) const {
    for (const auto& [name, value] : obj.members) {
      if (name == key) return &value;
    }
    return nullptr;
  }

  const Node& required(const Node& obj, std::string_view key) const {
    if (const Node* n = field(obj, key)) return *n;
    fail(obj, "missing field \"" + std::string(key) + "\"");
  }

  void only_fields(const Node& obj, std::initializer_list<std::string_view> allowed) const {
    for (std::size_t i = 0; i < obj.members.size(); ++i) {
      bool known = false;
      for (auto a : allowed) known = known || obj.members[i].first == a;
      if (!known) throw map_.failure(obj.key_offsets[i], "unknown field \"" + obj.members[i].first + "\"");
    }
  }

  Rational rational(const Node& n, std::string_view what) const {
    expect(n, Node::Type::String, what);
    try {
      return Rational::parse(n.text);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ZeroDenominator) fail(n, std::string(what) + " \"" + n.text + "\": zero denominator");
      fail(n, std::string(what) + " \"" + n.text + "\" is not an integer or p/q rational");
    }
  }

  Point point(const Node& n) const {
    expect(n, Node::Type::Array, "point");
    if (n.items.size() != 2) fail(n, "point must have exactly two coordinates");
    return Point{rational(n.items[0], "coordinate"), rational(n.items[1], "coordinate")};
  }

  std::vector<Point> corners(const Node& n) const {
    expect(n, Node::Type::Array, "corners");
    std::vector<Point> out;
    out.reserve(n.items.size());
    for (const auto& item : n.items) out.push_back(point(item));
    return out;
  }

  bool flag(const Node& n, std::string_view what) const {
    expect(n, Node::Type::Bool, what);
    return n.boolean;
  }

  int bit(const Node& n, std::string_view what) const {
    expect(n, Node::Type::Integer, what);
    if (!n.integer_fits || (n.integer != 0 && n.integer != 1)) fail(n, std::string(what) + " must be 0 or 1");
    return static_cast<int>(n.integer);
  }

  std::string text(const Node& n, std::string_view what) const {
    expect(n, Node::Type::String, what);
    return n.text;
  }

 private:
  const PositionMap& map_;
};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); }

std::string describe(const Error& e) {
  if (const auto* ns = dynamic_cast<const NotSimpleError*>(&e)) {
    std::ostringstream os;
    os << "not simple: point " << ns->violation().first.point << " is reached at parameters "
       << ns->violation().first.global_parameter() << " and " << ns->violation().second.global_parameter();
    return os.str();
  }
  return e.what();
}

// Runs a module constructor and reports its failure as a ValidationError.
template <typename F>
auto validated(F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const Error& e) {
    invalid(describe(e));
  }
}

DocumentKind kind_from(const Reader& r, const Node& n) {
  const std::string k = r.text(n, "kind");
  if (k == "point") return DocumentKind::Point;
  if (k == "path") return DocumentKind::Path;
  if (k == "arc") return DocumentKind::Arc;
  if (k == "circuit") return DocumentKind::Circuit;
  if (k == "drawing") return DocumentKind::Drawing;
  if (k == "witness") return DocumentKind::Witness;
  r.fail(n, "unknown kind \"" + k + "\"");
}

Drawing read_drawing(const Reader& r, const Node& root) {
  Drawing d;
  const Node& terms = r.required(root, "terminals");
  r.expect(terms, Node::Type::Array, "terminals");
  for (const auto& t : terms.items) {
    r.expect(t, Node::Type::Object, "terminal");
    r.only_fields(t, {"name", "point"});
    d.terminals.push_back(Terminal{r.text(r.required(t, "name"), "terminal name"), r.point(r.required(t, "point"))});
  }
  const Node& edges = r.required(root, "edges");
  r.expect(edges, Node::Type::Array, "edges");
  std::vector<std::vector<Point>> arcs;
  for (const auto& e : edges.items) {
    r.expect(e, Node::Type::Object, "edge");
    r.only_fields(e, {"u", "v", "corners"});
    arcs.push_back(r.corners(r.required(e, "corners")));
    d.edges.push_back(DrawnEdge{r.text(r.required(e, "u"), "edge end"), r.text(r.required(e, "v"), "edge end"),
                                PLPath::make({Point{0, 0}, Point{1, 0}}, false)});
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    d.edges[i].arc = validated([&] { return PLPath::make(std::move(arcs[i]), false); });
  }
  validated([&] {
    check_structure(d);
    return 0;
  });
  return d;
}

SeparationWitness read_witness(const Reader& r, const Node& root) {
  auto pt = [&](std::string_view key) { return r.point(r.required(root, key)); };
  const auto corners = r.corners(r.required(root, "corners"));
  const Point c = pt("c"), d = pt("d"), l = pt("l"), p = pt("p"), a = pt("a"), b = pt("b");
  const Rational line_x = r.rational(r.required(root, "line_x"), "line_x");
  const bool shifted = r.flag(r.required(root, "line_shifted"), "line_shifted");
  const int pc = r.bit(r.required(root, "parity_c"), "parity_c");
  const int pd = r.bit(r.required(root, "parity_d"), "parity_d");
  const PLCircuit f = validated([&] { return PLCircuit::from_corners(corners); });
  SeparationWitness w = validated([&] { return witness_from_fields(f, c, d, l, p, a, b, line_x, shifted, pc, pd); });
  if (auto defect = witness_defect(w)) invalid("invalid witness: " + *defect);
  return w;
}

using OJson = nlohmann::ordered_json;

OJson point_json(const Point& p) { return OJson::array({p.x.to_string(), p.y.to_string()}); }

OJson corners_json(const std::vector<Point>& pts) {
  OJson a = OJson::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

// Two-space indented JSON with scalar-only arrays (points) kept on one line.
void dump(const OJson& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + OJson(it.key()).dump() + ": ";
      dump(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const OJson& e) { return e.is_structured(); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i == 0 ? "" : ", ") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

ParseFailure::ParseFailure(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Point: return "point";
    case DocumentKind::Path: return "path";
    case DocumentKind::Arc: return "arc";
    case DocumentKind::Circuit: return "circuit";
    case DocumentKind::Drawing: return "drawing";
    case DocumentKind::Witness: return "witness";
  }
  return "unknown";
}

GeometryDocument parse_document(std::string_view text) {
  const PositionMap map(text);
  std::size_t consumed = 0;
  TreeBuilder builder(map, &consumed);
  const CountingIterator first(text.data(), text.data(), &consumed);
  const CountingIterator last(text.data() + text.size(), text.data(), &consumed);
  if (!nlohmann::json::sax_parse(first, last, &builder)) throw map.failure(0, "malformed JSON");
  const Node root = builder.take_root();
  const Reader r(map);
  r.expect(root, Node::Type::Object, "document");

  GeometryDocument doc;
  doc.kind = kind_from(r, r.required(root, "kind"));
  if (const Node* n = r.field(root, "name")) doc.name = r.text(*n, "name");

  switch (doc.kind) {
    case DocumentKind::Point:
      r.only_fields(root, {"kind", "name", "point"});
      doc.payload = r.point(r.required(root, "point"));
      break;
    case DocumentKind::Path: {
      r.only_fields(root, {"kind", "name", "closed", "corners"});
      const bool closed = r.flag(r.required(root, "closed"), "closed");
      auto corners = r.corners(r.required(root, "corners"));
      doc.payload = validated([&] { return PLPath::make(std::move(corners), closed); });
      break;
    }
    case DocumentKind::Arc: {
      r.only_fields(root, {"kind", "name", "corners"});
      auto corners = r.corners(r.required(root, "corners"));
      doc.payload = validated([&] { return PLArc::from(PLPath::make(std::move(corners), false)); });
      break;
    }
    case DocumentKind::Circuit: {
      r.only_fields(root, {"kind", "name", "corners"});
      auto corners = r.corners(r.required(root, "corners"));
      doc.payload = validated([&] { return PLCircuit::from_corners(std::move(corners)); });
      break;
    }
    case DocumentKind::Drawing:
      r.only_fields(root, {"kind", "name", "terminals", "edges"});
      doc.payload = read_drawing(r, root);
      break;
    case DocumentKind::Witness:
      r.only_fields(root, {"kind", "name", "corners", "c", "d", "l", "p", "a", "b", "line_x", "line_shifted",
                           "parity_c", "parity_d"});
      doc.payload = read_witness(r, root);
      break;
  }
  return doc;
}

std::string emit_document(const GeometryDocument& doc) {
  OJson j;
  j["kind"] = std::string(to_string(doc.kind));
  if (doc.name) j["name"] = *doc.name;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Point>) {
          j["point"] = point_json(v);
        } else if constexpr (std::is_same_v<T, PLPath>) {
          j["closed"] = v.closed();
          j["corners"] = corners_json(v.corners());
        } else if constexpr (std::is_same_v<T, PLArc> || std::is_same_v<T, PLCircuit>) {
          j["corners"] = corners_json(v.path().corners());
        } else if constexpr (std::is_same_v<T, Drawing>) {
          OJson terms = OJson::array();
          for (const auto& t : v.terminals) {
            OJson o;
            o["name"] = t.name;
            o["point"] = point_json(t.point);
            terms.push_back(std::move(o));
          }
          OJson edges = OJson::array();
          for (const auto& e : v.edges) {
            OJson o;
            o["u"] = e.u;
            o["v"] = e.v;
            o["corners"] = corners_json(e.arc.corners());
            edges.push_back(std::move(o));
          }
          j["terminals"] = std::move(terms);
          j["edges"] = std::move(edges);
        } else {
          j["corners"] = corners_json(v.circuit.path().corners());
          j["c"] = point_json(v.c);
          j["d"] = point_json(v.d);
          j["l"] = point_json(v.l);
          j["p"] = point_json(v.p);
          j["a"] = point_json(v.a);
          j["b"] = point_json(v.b);
          j["line_x"] = v.line_x.to_string();
          j["line_shifted"] = v.line_shifted;
          j["parity_c"] = v.parity_c;
          j["parity_d"] = v.parity_d;
        }
      },
      doc.payload);
  std::string text;
  dump(j, 0, text);
  return text + "\n";
}

GeometryDocument make_document(Payload payload, std::optional<std::string> name) {
  GeometryDocument doc;
  doc.kind = static_cast<DocumentKind>(payload.index());
  doc.payload = std::move(payload);
  doc.name = std::move(name);
  return doc;
}

}  // namespace pltopo::cli

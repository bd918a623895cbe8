#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pltopo/planarity.hpp"
#include "pltopo/witness.hpp"

namespace pltopo::cli {

enum class DocumentKind { Point, Path, Arc, Circuit, Drawing, Witness };

std::string_view to_string(DocumentKind kind);

using Payload = std::variant<Point, PLPath, PLArc, PLCircuit, Drawing, SeparationWitness>;

/// One JSON geometry document. Coordinates are stored as "p" or "p/q" strings.
struct GeometryDocument {
  DocumentKind kind = DocumentKind::Point;
  std::optional<std::string> name;
  Payload payload;
};

/// Error(ParseError) with the 1-based position of the offending token.
class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses and validates a document. Malformed JSON, unknown or missing
/// fields and bad rationals throw ParseFailure; geometry that parses but
/// breaks a simplicity or witness invariant throws Error(ValidationError).
GeometryDocument parse_document(std::string_view text);

/// Canonical JSON, two-space indented, fields in a fixed order.
std::string emit_document(const GeometryDocument& doc);

GeometryDocument make_document(Payload payload, std::optional<std::string> name = std::nullopt);

}  // namespace pltopo::cli

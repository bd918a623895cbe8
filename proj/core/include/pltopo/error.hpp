#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pltopo {

enum class ErrorCode {
  EmptyInput,
  ZeroDenominator,
  DegeneratePiece,
  NotClosed,
  EndpointMismatch,
  NotSimple,
  PointNotOnCircuit,
  PointOnCurve,
  OutsideStrip,
  EmptyStrip,
  CornerProbe,
  ProbeCrossesCurve,
  DeltaExhausted,
  RoutingFailed,
  NoChord,
  NotDisjoint,
  NotChained,
  MandatoryOffCurve,
  WrongGraph,
  InvalidDrawing,
  CertificateFailure,
  Precondition,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Base of every exception thrown by the library. The code identifies the
/// failure category; the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pltopo

#include "pltopo/rational.hpp"

#include <cmath>
#include <ostream>

#include "pltopo/error.hpp"

namespace pltopo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DegeneratePiece: return "DegeneratePiece";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::PointNotOnCircuit: return "PointNotOnCircuit";
    case ErrorCode::PointOnCurve: return "PointOnCurve";
    case ErrorCode::OutsideStrip: return "OutsideStrip";
    case ErrorCode::EmptyStrip: return "EmptyStrip";
    case ErrorCode::CornerProbe: return "CornerProbe";
    case ErrorCode::ProbeCrossesCurve: return "ProbeCrossesCurve";
    case ErrorCode::DeltaExhausted: return "DeltaExhausted";
    case ErrorCode::RoutingFailed: return "RoutingFailed";
    case ErrorCode::NoChord: return "NoChord";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotChained: return "NotChained";
    case ErrorCode::MandatoryOffCurve: return "MandatoryOffCurve";
    case ErrorCode::WrongGraph: return "WrongGraph";
    case ErrorCode::InvalidDrawing: return "InvalidDrawing";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '-') {
    if (text.size() == 1) return false;
    i = 1;
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') return false;
  }
  return out.set_str(std::string(text), 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
    }
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() || den_text[0] == '-' ||
        !parse_integer(den_text, den)) {
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow2(int e) {
  mpz_class p = 1;
  if (e >= 0) {
    p <<= e;
    return Rational(p);
  }
  p <<= -e;
  return Rational(mpz_class(1), p);
}

Rational sqrt_lower(const Rational& r, unsigned bits) {
  if (r.sign() < 0) throw Error(ErrorCode::Precondition, "sqrt of negative rational");
  if (r.is_zero()) return Rational(0);
  const mpz_class num = r.num();
  const mpz_class den = r.den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
  }
  // floor(sqrt(r * 4^m)) / 2^m with r * 4^m >= 4^bits.
  const mpz_class threshold = mpz_class(1) << (2 * bits);
  unsigned m = 0;
  mpz_class scaled = num / den;
  while (scaled < threshold) {
    ++m;
    scaled = (num << (2 * m)) / den;
  }
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Rational(root, mpz_class(1) << m);
}

Rational from_double(double v, int scale_bits) {
  const double scaled = std::ldexp(v, scale_bits);
  mpz_class n(std::nearbyint(scaled));
  if (scale_bits >= 0) return Rational(n, mpz_class(1) << scale_bits);
  return Rational(mpz_class(n << -scale_bits));
}

}  // namespace pltopo

#include "jslope/error.hpp"
#include "jslope/rational.hpp"

namespace jslope {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InadmissibleColoring: return "InadmissibleColoring";
    case ErrorKind::NonRealPhase: return "NonRealPhase";
    case ErrorKind::FractionalExponent: return "FractionalExponent";
    case ErrorKind::BelowThreshold: return "BelowThreshold";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::NoQuadraticFit: return "NoQuadraticFit";
    case ErrorKind::UnsupportedEdgepath: return "UnsupportedEdgepath";
    case ErrorKind::ConstructionFault: return "ConstructionFault";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    fail(ErrorKind::InvalidArgument, "not a rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::InvalidArgument, "integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

}  // namespace jslope

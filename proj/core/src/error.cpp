#include "quadlab/error.hpp"

namespace quadlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::MissingOrDoubleArc: return "MissingOrDoubleArc";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EmptyVertexSet: return "EmptyVertexSet";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::InvalidSymbol: return "InvalidSymbol";
    case Errc::EvenOrTooSmall: return "EvenOrTooSmall";
    case Errc::NotPrime: return "NotPrime";
    case Errc::WrongResidueClass: return "WrongResidueClass";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotSquare: return "NotSquare";
    case Errc::UnsupportedK: return "UnsupportedK";
    case Errc::HypothesisNotSatisfied: return "HypothesisNotSatisfied";
    case Errc::NotRegular: return "NotRegular";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace quadlab

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadlab {

enum class Errc {
  SelfLoop,
  MissingOrDoubleArc,
  DimensionMismatch,
  VertexOutOfRange,
  EmptyVertexSet,
  SizeLimitExceeded,
  InvalidSymbol,
  EvenOrTooSmall,
  NotPrime,
  WrongResidueClass,
  TooSmall,
  NotSquare,
  UnsupportedK,
  HypothesisNotSatisfied,
  NotRegular,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every precondition violation in the library is reported as an Error
/// carrying one of the codes above. The message names the offending
/// vertex, pair or bound.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quadlab

#pragma once

#include <stdexcept>
#include <string>

namespace grassmetric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape / input errors.
struct NonSquare : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct OrderExceedsDimension : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct MixedSpaces : Error { using Error::Error; };
struct FullSpace : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct NotOrthonormal : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Mathematical failures (a conforming form never raises these).
struct NegativeSquare : Error { using Error::Error; };
struct DegenerateSubspace : Error { using Error::Error; };
struct InequalityViolated : Error { using Error::Error; };

}  // namespace grassmetric

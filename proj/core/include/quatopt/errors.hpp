#pragma once

#include <stdexcept>

namespace quatopt {

// Common base so callers can catch anything raised by this library with a
// single handler while still being able to branch on the concrete type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteValue : Error { using Error::Error; };
struct ZeroRotator : Error { using Error::Error; };
struct ZeroDivisor : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotAdjointStructured : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotRealResult : Error { using Error::Error; };
struct GradientMismatch : Error { using Error::Error; };
struct ZeroDirection : Error { using Error::Error; };
struct NotPD : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct ZeroSteering : Error { using Error::Error; };
struct NotCertifiedConvex : Error { using Error::Error; };
struct Diverged : Error { using Error::Error; };
struct BadScenario : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace quatopt

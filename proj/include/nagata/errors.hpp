#ifndef NAGATA_ERRORS_HPP
#define NAGATA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nagata {

enum class ErrorCode {
  DivisionByZero,
  ZeroElement,
  PoleHit,
  NotAnAutomorphism,
  DecompositionFailed,
  SandwichPresent,
  ZeroCommutator,
  NotPolynomialInput,
  NotACoordinate,
  SplitHypothesisFailed,
  NonUnitDeterminant,
  SyntaxError,
  NoncommutativeDivision,
  NegativeLetterPower,
  InvalidArgument,
  JsonError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error division_by_zero(const std::string& what) {
  return Error(ErrorCode::DivisionByZero, "division by zero: " + what);
}

// Parse errors carry the 0-based position of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(size_t position, const std::string& msg)
      : Error(ErrorCode::SyntaxError,
              msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

}  // namespace nagata

#endif

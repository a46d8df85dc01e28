#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spread {

enum class Errc {
  NotDivisible,
  DivisionByZero,
  ParityViolation,
  RadicandMismatch,
  NonUnit,
  PalindromeViolation,
  UnknownIdentity,
  InvalidBounds,
  OutOfDomain,
};

std::string_view to_string(Errc code) noexcept;

/// Failure of an algebraic precondition. The code identifies which one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace spread

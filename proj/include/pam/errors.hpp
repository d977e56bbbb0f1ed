#pragma once

#include <stdexcept>
#include <string>

namespace pam {

/// Malformed textual input. `position` is the 1-based index of the
/// offending token (0 when the error is not tied to one token).
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument(position == 0 ? message
                                            : "position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input is well formed but outside the domain of the operation, e.g. a
/// Schroeder path with a low peak handed to phi.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed-form evaluation that must be integral was not. Always a bug in
/// the formula transcription, never a user error.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pam

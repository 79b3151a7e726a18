#ifndef EULERPHASE_ERRORS_HPP
#define EULERPHASE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eulerphase {

// Evaluation requested at (or too close to) a pole of the function.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Argument outside the supported domain (disk cutoff, nonpositive gamma
// argument, zero radicand, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Weight family cannot be handled by the requested operation.
struct UnsupportedFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A truncation / refinement loop failed to meet its tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The point sits on a phase boundary; no single-phase estimate applies.
struct BoundaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed configuration / family spec string.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace eulerphase

#endif

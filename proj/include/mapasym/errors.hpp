#ifndef MAPASYM_ERRORS_HPP
#define MAPASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mapasym {

// State or parameter outside the region where an operation is defined.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameter outside the supported range (e.g. the lambda <= 4 cap).
struct RangeError : std::range_error {
  using std::range_error::range_error;
};

// Evaluation would leave the representable range of a double.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Iterative solver failed to converge.
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric Van Dyke limit check disagreed with the expected constant.
struct MatchFailureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested expansion order is not supported.
struct OrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Degenerate input to a least-squares fit.
struct FitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace mapasym

#endif

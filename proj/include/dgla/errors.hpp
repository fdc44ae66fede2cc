#pragma once

#include <stdexcept>

namespace dgla {

// Mismatched tables/truncations, unknown generators, bad model wiring.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input outside an operation's mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Violated internal invariant. Indicates a bug, not a caller error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dgla

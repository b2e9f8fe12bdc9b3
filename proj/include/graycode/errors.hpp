#pragma once

#include <stdexcept>
#include <string>

namespace graycode {

// Bad input: out-of-range order, malformed transposition, wrong endpoint.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A recipe produced an unexpected junction; always a bug, never user error.
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace graycode

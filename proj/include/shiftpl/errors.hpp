#pragma once

#include <stdexcept>
#include <string>

namespace shiftpl {

/// A coefficient was requested for a word the truncation window does not certify.
struct window_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Multiplicative or plethystic inverse requested for a non-invertible series.
struct not_invertible : std::domain_error {
    using std::domain_error::domain_error;
};

/// An argument violates an operation's precondition.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A self-check that cannot fail on correct window arithmetic did fail.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace shiftpl

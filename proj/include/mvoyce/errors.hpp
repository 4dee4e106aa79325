#pragma once

#include <stdexcept>

namespace mvoyce {

/// An internal consistency check failed: two routes that must agree exactly
/// did not, or a proven bound was violated. Always indicates a bug.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mvoyce

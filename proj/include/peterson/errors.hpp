#pragma once

#include <stdexcept>

namespace peterson {

/// A size guard (reduced-word or polynomial-term cap) was hit.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal self-check failed: an identity that must hold pointwise did not.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace peterson

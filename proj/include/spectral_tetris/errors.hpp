#pragma once

#include <stdexcept>
#include <string>

namespace stetris {

/// Raised when caller-supplied data violates an operation's precondition
/// (dimension mismatch, non-integer trace, correction factor out of range, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The reference dimensions do not majorize the requested dimensions.
///
/// For tight spectra with M >= 2N this certifies that no spectral tetris
/// fusion frame with the requested dimensions exists. Everywhere else it only
/// means the rebalancing construction cannot produce one.
class MajorizationFailed : public std::runtime_error {
public:
    MajorizationFailed(const std::string& what, bool certified)
        : std::runtime_error(what), certified_(certified) {}

    bool certified_nonexistence() const noexcept { return certified_; }

private:
    bool certified_;
};

}  // namespace stetris

#ifndef MONO_ERRORS_HPP
#define MONO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mono {

// Base for all library errors so the C boundary can map them to codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input: mismatched variables, nonpositive parameter, zero polynomial, ...
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// exact_div found a nonzero remainder.
struct DivisibilityError : Error {
    explicit DivisibilityError(const std::string& msg) : Error(msg) {}
};

// An interval claimed to be isolating turned out not to be, or a
// refinement budget was exhausted before a property could be certified.
struct CertificationError : Error {
    explicit CertificationError(const std::string& msg) : Error(msg) {}
};

// Parameter point sits on a bifurcation boundary (multiple root of a
// cycle polynomial, or a vanishing cycle factor).
struct NonHyperbolicError : Error {
    explicit NonHyperbolicError(const std::string& msg) : Error(msg) {}
};

// A probe point annihilates the border polynomial; solution counts are
// not invariant there.
struct DegenerateProbeError : Error {
    explicit DegenerateProbeError(const std::string& msg) : Error(msg) {}
};

// Trajectory window too short for the requested period detection.
struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& msg) : Error(msg) {}
};

// Internal invariant violated (signals a bug, not bad input).
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace mono

#endif

#ifndef PIERCING_ERRORS_HPP
#define PIERCING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace piercing {

/// canonical_witness was asked for a point of an empty intersection.
class EmptySystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A direction triple has empty plus-intersection but bounds no triangle of
/// positive area. Only reachable when the family is not pairwise intersecting.
class DegenerateTriple : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (template, family, file).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// pierce_t2 was given a template outside the horizontal/vertical/positive-slope class.
class NotSpecialClass : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GenerationExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AuditFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A step of a piercing construction did not deliver the property it relies
/// on. `claim` is a stable identifier (e.g. "t1.midpoint_partition") written
/// into counterexample artifacts.
class ClaimViolation : public std::runtime_error {
public:
    ClaimViolation(std::string claim, const std::string& detail)
        : std::runtime_error(claim + ": " + detail), claim_(std::move(claim)), detail_(detail) {}

    const std::string& claim() const { return claim_; }
    const std::string& detail() const { return detail_; }

private:
    std::string claim_;
    std::string detail_;
};

} // namespace piercing

#endif

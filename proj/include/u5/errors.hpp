#pragma once

#include <stdexcept>
#include <string>

namespace u5 {

/// Malformed user-facing input: bad parameters, bad files, bad pair maps.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition was violated by the caller.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// A theorem-backed consistency check failed during a construction.
/// On inputs satisfying the construction's hypotheses this is a bug; the
/// recognizer also uses it as the failure signal when a hypothesis it could
/// not afford to pre-check (pattern-freeness) turns out false.
struct ClaimViolation : std::logic_error {
    explicit ClaimViolation(const std::string& what);
};

/// A state that no input can legally produce. Always a bug trap.
struct InternalInvariantViolation : std::logic_error {
    explicit InternalInvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Number of ClaimViolation throws since the last reset, for test harnesses
/// that need to assert a run never tripped a claim check.
std::uint64_t claim_violations_observed();
void reset_claim_violation_counter();

} // namespace u5

#pragma once

#include <stdexcept>
#include <string>

namespace chores {

/// Base class for all errors raised by this library.
struct ChoresError : std::runtime_error {
    explicit ChoresError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid input document. `path` names the offending field.
struct ParseError : ChoresError {
    std::string path;
    ParseError(std::string path_, const std::string& what)
        : ChoresError(path_.empty() ? what : path_ + ": " + what), path(std::move(path_)) {}
};

/// A solver-produced certificate failed to verify. Signals a solver defect,
/// never a user error.
struct CertificateViolation : ChoresError {
    int agent = -1;
    int chore = -1;
    CertificateViolation(const std::string& what, int agent_ = -1, int chore_ = -1)
        : ChoresError(what), agent(agent_), chore(chore_) {}
};

/// An integral allocation assigns a chore off the consumption graph.
struct NotARounding : ChoresError {
    int agent = -1;
    int chore = -1;
    NotARounding(const std::string& what, int agent_, int chore_)
        : ChoresError(what), agent(agent_), chore(chore_) {}
};

/// Enumeration size exceeds the configured budget.
struct BudgetExceeded : ChoresError {
    using ChoresError::ChoresError;
};

/// An allocation leaves some chore unassigned where a complete one is required.
struct IncompleteAllocation : ChoresError {
    using ChoresError::ChoresError;
};

/// A chore with degree != 2 reached a routine that requires degree exactly 2.
struct ChoreDegreeViolation : ChoresError {
    using ChoresError::ChoresError;
};

/// A documented precondition was not met by the caller.
struct PreconditionViolation : ChoresError {
    using ChoresError::ChoresError;
};

/// Invariant the solver guarantees mathematically was observed broken.
struct InternalError : ChoresError {
    using ChoresError::ChoresError;
};

}  // namespace chores

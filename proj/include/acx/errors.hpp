#pragma once

#include <stdexcept>
#include <string>

namespace acx {

// Malformed graph input.
struct SelfLoopError : std::invalid_argument {
    explicit SelfLoopError(const std::string& what) : std::invalid_argument(what) {}
};
struct DuplicateEdgeError : std::invalid_argument {
    explicit DuplicateEdgeError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidParamsError : std::invalid_argument {
    explicit InvalidParamsError(const std::string& what) : std::invalid_argument(what) {}
};

struct AnchorNotOnCycleError : std::invalid_argument {
    explicit AnchorNotOnCycleError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact search refused because the instance exceeds the hard size guard.
struct RefuseTooLargeError : std::invalid_argument {
    explicit RefuseTooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

// A combinatorial bound guaranteed by construction was violated; implementation bug.
struct BoundViolatedError : std::logic_error {
    explicit BoundViolatedError(const std::string& what) : std::logic_error(what) {}
};

// Root finding could not bracket a sign change; implementation bug.
struct NoRootInBracketError : std::logic_error {
    explicit NoRootInBracketError(const std::string& what) : std::logic_error(what) {}
};

// A halting run produced a coloring that fails verification; implementation bug.
struct VerificationFailedError : std::runtime_error {
    explicit VerificationFailedError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace acx

#pragma once

#include <stdexcept>
#include <string>

namespace wb {

// Resolvable domain errors. The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotATrace : DomainError {
    explicit NotATrace(const std::string& why) : DomainError("not a trace: " + why) {}
};

struct TraceTooLarge : DomainError {
    TraceTooLarge() : DomainError("trace code would exceed the size guard") {}
};

struct PsiDiverged : DomainError {
    PsiDiverged() : DomainError("psi did not halt on the constructed index within budget") {}
};

struct NotWellFounded : DomainError {
    explicit NotWellFounded(const std::string& witness)
        : DomainError("relation is not well-founded: " + witness) {}
};

struct StepDiverged : DomainError {
    explicit StepDiverged(const std::string& at)
        : DomainError("step functional did not resolve at " + at) {}
};

struct NotALimit : DomainError {
    NotALimit() : DomainError("ordinal is zero or a successor") {}
};

struct OrdinalTooLarge : DomainError {
    OrdinalTooLarge() : DomainError("ordinal exceeds the configured notation bound") {}
};

struct CodeTooLarge : DomainError {
    CodeTooLarge() : DomainError("notation code would exceed the size guard") {}
};

struct DepthTooLarge : DomainError {
    DepthTooLarge() : DomainError("level enumeration depth exceeds the guard") {}
};

struct LevelTooLarge : DomainError {
    LevelTooLarge() : DomainError("jump iteration level exceeds the guard") {}
};

struct UnresolvedAt : DomainError {
    std::uint64_t x;
    explicit UnresolvedAt(std::uint64_t x_)
        : DomainError("value unresolved within budget at x=" + std::to_string(x_)), x(x_) {}
};

struct ParseError : DomainError {
    using DomainError::DomainError;
};

}  // namespace wb

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace randgraph {

/// Base for typed library errors. Carries a stable machine-readable code
/// (printed by the CLI as `error=<code>`) and the process exit status the
/// CLI maps the error to.
class Error : public std::runtime_error {
public:
    Error(const char* code, int exit_status, const std::string& what)
        : std::runtime_error(what), code_(code), exit_status_(exit_status) {}

    const char* code() const noexcept { return code_; }
    int exit_status() const noexcept { return exit_status_; }

private:
    const char* code_;
    int exit_status_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error("usage", 2, what) {}
};

class InvalidParameterError : public Error {
public:
    explicit InvalidParameterError(const std::string& what)
        : Error("invalid-parameter", 2, what) {}
};

class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& what)
        : Error("invalid-input", 2, what) {}
};

class RecipeInfeasibleError : public Error {
public:
    explicit RecipeInfeasibleError(const std::string& what)
        : Error("recipe-infeasible", 3, what) {}
};

class TooManyAttemptsError : public Error {
public:
    TooManyAttemptsError(std::int64_t attempts, const std::string& what)
        : Error("too-many-attempts", 4, what), attempts_(attempts) {}
    std::int64_t attempts() const noexcept { return attempts_; }

private:
    std::int64_t attempts_;
};

class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& what)
        : Error("non-convergence", 5, what) {}
};

}  // namespace randgraph

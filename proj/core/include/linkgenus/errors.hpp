#pragma once

#include <stdexcept>
#include <string>

namespace linkgenus {

// Malformed or inconsistent user input: bad documents, invalid windows or
// covers, unknown knot labels. CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well formed but a mathematical precondition fails, e.g. solving
// the norm-one equation for an idele whose norm is nonzero. CLI exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition or internal invariant failed; always a bug. CLI exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

} // namespace linkgenus

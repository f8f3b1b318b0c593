#pragma once

// Error taxonomy shared by the whole library.
//
// ValidationError: the input (file, matrix, complex, filtration, flag) is
// malformed or violates a documented precondition.  The CLI maps this to
// exit status 1.
//
// InternalError: a library invariant that should hold for every valid input
// was observed to fail (for example the two essential-birth procedures
// disagreeing).  The CLI maps this to exit status 2.

#include <stdexcept>
#include <string>

namespace pershom {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

// Raises InternalError when an invariant check fails.
inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

// Raises ValidationError when an input check fails.
inline void validate(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

}  // namespace pershom

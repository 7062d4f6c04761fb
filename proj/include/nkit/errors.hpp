#ifndef NKIT_ERRORS_HPP
#define NKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nkit {

/* Error taxonomy shared by the whole library.  The CLI maps DomainError
 * (and its subclasses) to exit code 2 and ResourceError to exit code 3. */

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct IndexError : DomainError {
    explicit IndexError(const std::string& what) : DomainError(what) {}
};

struct DivisionByZero : DomainError {
    explicit DivisionByZero(const std::string& what) : DomainError(what) {}
};

struct NotAMorphism : DomainError {
    explicit NotAMorphism(const std::string& what) : DomainError(what) {}
};

/* Raised when a computation exceeds a documented size or precision cap. */
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nkit

#endif

#ifndef NUMERO_ERRORS_HPP
#define NUMERO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace numero {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation preconditions violated at runtime: division by zero, empty
// conditioning event, nonpositive beta, horizon too small, size bounds.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Operands belong to different ground models (or different finite universes).
class ModelMismatchError : public Error {
public:
    explicit ModelMismatchError(const std::string& msg) : Error(msg) {}
};

// Structurally malformed event data (e.g. interval with a >= b).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace numero

#endif

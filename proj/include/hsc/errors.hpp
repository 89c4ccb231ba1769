#pragma once

#include <stdexcept>
#include <string>

namespace hsc {

// Argument outside a function's domain (pole, negative sqrt, division by zero).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Decimal conversion asked for more digits than the representation carries.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Expression cannot be evaluated in exact rational arithmetic.
struct NotExactError : std::runtime_error {
    explicit NotExactError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hsc

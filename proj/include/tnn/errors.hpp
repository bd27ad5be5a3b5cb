#pragma once

#include <stdexcept>
#include <string>

namespace tnn {

// Precondition on a domain value was violated (bad index, wrong shape,
// zero denominator, data that is not in the required cell, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An exhaustive sweep was requested on a shape that exceeds its guard.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Malformed textual input (matrix files, diagram files, scheme files).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Two independent decision paths disagreed. Always an implementation bug.
class InternalInconsistency : public std::logic_error {
public:
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tnn

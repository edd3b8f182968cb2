#pragma once

#include <stdexcept>
#include <string>

namespace coverhom {

/// Thrown when a constructed object violates one of its structural
/// invariants (face closure, shape mismatch, delta-squared != 0, ...).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an input document cannot be interpreted (bad JSON shape,
/// unknown primitive type, malformed number).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown for requests outside the supported exact range (e.g. more than
/// two quadratic forms in the stratification).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coverhom

#pragma once

#include <stdexcept>
#include <string>

namespace neile {

/// Input outside the domain of an operation (point off the disk, off the
/// variety, non-colinear tangent vector, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A mixed interpolation problem whose data cannot be interpolated.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, double margin)
        : std::runtime_error(what), margin_(margin) {}

    double margin() const noexcept { return margin_; }

private:
    double margin_;
};

/// Malformed textual input (complex literals, function specs, point files).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical construction failed a self-check it is required to pass.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace neile

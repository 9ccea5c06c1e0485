#pragma once

#include <stdexcept>
#include <string>

namespace coadj {

/// Malformed user input: bad roots, non-closed ideals in strict mode,
/// mismatched minor specs, roots outside S.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction invariant failed (e.g. |I| != |J|, non-extremal minor).
/// Signals a defect in the construction, not in the caller's input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace coadj

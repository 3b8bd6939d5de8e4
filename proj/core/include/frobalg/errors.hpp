#pragma once

#include <stdexcept>
#include <string>

namespace frobalg {

/// Bad user-supplied parameter (non-prime modulus, p < 3, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands that cannot be combined, e.g. elements built over different parameters.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The field has no element of the requested multiplicative order.
class NoRootOfUnity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The field cannot host the requested construction (e.g. BCH denominators vanish).
class UnsupportedField : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal invariant failed. Always an engine defect or a violated hypothesis.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace frobalg

#ifndef CHB_ERRORS_HPP
#define CHB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chb {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on the inputs was violated (wrong range, wrong ordering, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A required divisibility relation between inputs does not hold.
class DivisibilityError : public Error {
public:
    explicit DivisibilityError(const std::string& what) : Error(what) {}
};

/// A quantity that must evaluate to an integer came out fractional.
/// Signals a formula misuse; values are never silently rounded.
class IntegralityError : public Error {
public:
    explicit IntegralityError(const std::string& what) : Error(what) {}
};

/// The numerical regime under which a bound is asserted does not hold.
class RegimeError : public Error {
public:
    explicit RegimeError(const std::string& what) : Error(what) {}
};

} // namespace chb

#endif

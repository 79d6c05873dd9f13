#pragma once

#include <stdexcept>
#include <string>

namespace johnsonlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char *kind() const noexcept { return "Error"; }
};

#define JOHNSONLAB_ERROR(Name)                                             \
    class Name : public Error {                                            \
    public:                                                                \
        using Error::Error;                                                \
        const char *kind() const noexcept override { return #Name; }       \
    };

JOHNSONLAB_ERROR(InvalidGenerator)
JOHNSONLAB_ERROR(Incompatible)
JOHNSONLAB_ERROR(NotAUnit)
JOHNSONLAB_ERROR(OutOfRange)
JOHNSONLAB_ERROR(BudgetExceeded)
JOHNSONLAB_ERROR(NotInLevel2)
JOHNSONLAB_ERROR(NotInFiltration)
JOHNSONLAB_ERROR(InvariantViolation)
JOHNSONLAB_ERROR(NotLevelP)
JOHNSONLAB_ERROR(NotQHSAtP)
JOHNSONLAB_ERROR(ParseError)
JOHNSONLAB_ERROR(InvalidArgument)

#undef JOHNSONLAB_ERROR

} // namespace johnsonlab

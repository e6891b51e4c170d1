#pragma once

#include <stdexcept>
#include <string>

namespace zm {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid request: bad argument, unsupported range or combination.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Numerical or algorithmic failure during a valid request.
class ComputationError : public Error {
public:
    using Error::Error;
};

#define ZM_ERROR(NAME, BASE)            \
    class NAME : public BASE {          \
    public:                             \
        using BASE::BASE;               \
    };

ZM_ERROR(DomainError, ConfigurationError)
ZM_ERROR(ShapeTooWide, ConfigurationError)
ZM_ERROR(ComplementUndefined, ConfigurationError)
ZM_ERROR(CoincidentShifts, ConfigurationError)
ZM_ERROR(InconsistentInterpolation, ComputationError)
ZM_ERROR(NoConvergence, ComputationError)
ZM_ERROR(PrecisionExceeded, ComputationError)
ZM_ERROR(NonzeroConstant, ComputationError)
ZM_ERROR(TailFitSingular, ComputationError)
ZM_ERROR(MissingShape, ComputationError)
ZM_ERROR(PoleHit, ComputationError)

#undef ZM_ERROR

}  // namespace zm

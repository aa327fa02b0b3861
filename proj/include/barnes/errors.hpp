#pragma once

#include <stdexcept>
#include <string>

namespace barnes {

// Base class for all domain errors thrown by this library. Everything that is
// a usage error (bad parameters, out-of-region evaluation, blown budgets)
// derives from this; genuine programming errors use std::logic_error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define BARNES_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

BARNES_DEFINE_ERROR(NonPositiveParameter);
BARNES_DEFINE_ERROR(InvalidScale);
BARNES_DEFINE_ERROR(DomainError);
BARNES_DEFINE_ERROR(RegionError);
BARNES_DEFINE_ERROR(PoleProximity);
BARNES_DEFINE_ERROR(HeightViolation);
BARNES_DEFINE_ERROR(BudgetExceeded);
BARNES_DEFINE_ERROR(QuadratureFailure);
BARNES_DEFINE_ERROR(CutoffTooSmall);
BARNES_DEFINE_ERROR(InsufficientSignal);

#undef BARNES_DEFINE_ERROR

} // namespace barnes

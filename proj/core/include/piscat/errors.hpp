#pragma once

#include <stdexcept>
#include <string>

namespace piscat {

// Base for all toolkit errors; specific types carry the contract name of the
// failure so callers and reports can dispatch on it.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PISCAT_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                         \
    public:                                                              \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// geometry
PISCAT_DEFINE_ERROR(SeparationViolated);
PISCAT_DEFINE_ERROR(QuadratureFailure);

// forward_time
PISCAT_DEFINE_ERROR(SeriesNotConverged);
PISCAT_DEFINE_ERROR(DegenerateWindow);

// forward_freq
PISCAT_DEFINE_ERROR(TailNotResolved);
PISCAT_DEFINE_ERROR(IterationDiverged);
PISCAT_DEFINE_ERROR(FitUnstable);

// phase_retrieval
PISCAT_DEFINE_ERROR(ContinuationUnreliable);
PISCAT_DEFINE_ERROR(ZeroOnGrid);
PISCAT_DEFINE_ERROR(TailMismatch);
PISCAT_DEFINE_ERROR(ResidueDegenerate);
PISCAT_DEFINE_ERROR(ZeroMismatch);
PISCAT_DEFINE_ERROR(ContourThroughZero);

// volterra
PISCAT_DEFINE_ERROR(StepTooLarge);
PISCAT_DEFINE_ERROR(LeadingValueZero);
PISCAT_DEFINE_ERROR(WindowEmpty);

// radon
PISCAT_DEFINE_ERROR(InsufficientCoverage);

#undef PISCAT_DEFINE_ERROR

}  // namespace piscat

#pragma once

#include <stdexcept>
#include <string>

namespace fhent {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DegenerateSymbolError : Error { using Error::Error; };
struct ClassConstraintError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct SpectrumRangeError : Error { using Error::Error; };
struct MissingCoefficientError : Error { using Error::Error; };
struct CostError : Error { using Error::Error; };
struct NearSingularError : Error { using Error::Error; };
struct BranchCutError : Error { using Error::Error; };
struct RecurrenceBreakdownError : Error { using Error::Error; };
struct StencilError : Error { using Error::Error; };
struct InsufficientDataError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace fhent

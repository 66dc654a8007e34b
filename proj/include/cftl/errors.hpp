#pragma once

#include <stdexcept>

namespace cftl {

// Error taxonomy shared across the library. The CLI maps these to process
// exit codes: input/parse errors -> 2, leakage -> 3, numerical failures -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct SplitError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct FitError : Error { using Error::Error; };
struct EnsembleError : Error { using Error::Error; };
struct DenominatorError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct OrderError : Error { using Error::Error; };
struct SampleError : Error { using Error::Error; };
struct WindowError : Error { using Error::Error; };
struct LeakageError : Error { using Error::Error; };

}  // namespace cftl

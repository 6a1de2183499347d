#ifndef GAPDEC_ERRORS_HPP
#define GAPDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gapdec {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// signal model
struct WindowTooLong : Error { using Error::Error; };

// spectral
struct TooFewSamples : Error { using Error::Error; };
struct SingularNormalMatrix : Error { using Error::Error; };
struct AllFrequenciesSingular : Error { using Error::Error; };
struct InvalidFraction : Error { using Error::Error; };

// features
struct EmptyBand : Error { using Error::Error; };
struct NonPositivePower : Error { using Error::Error; };

// dae / svm
struct NonFiniteLoss : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct SingleClassData : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// eval
struct EmptyInput : Error { using Error::Error; };
struct TrialWithNoValidWindows : Error { using Error::Error; };
struct MissingCounterpart : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

}  // namespace gapdec

#endif

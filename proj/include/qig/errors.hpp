#pragma once

#include <stdexcept>
#include <string>

namespace qig {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// matcore
struct NotSquare : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// states / channels
struct BadDimension : Error { using Error::Error; };

// gentropy
struct NotNormalized : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };

// verify
struct StepTooLarge : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// cli
struct UnknownFlag : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct BadValue : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace qig

#pragma once

#include <stdexcept>
#include <string>

namespace kam {

// Base for all library errors; CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// The small divisor of some retained mode fell below its gate; the parameter
// point lies outside the current nonresonance set and must be excluded.
struct SmallDivisorViolation : Error {
    std::string offending_mode;
    double divisor_abs = 0.0;
    double gate = 0.0;
    SmallDivisorViolation(const std::string& msg, std::string mode, double value, double g)
        : Error(msg), offending_mode(std::move(mode)), divisor_abs(value), gate(g) {}
};

struct AdmissibilityFailed : Error {
    using Error::Error;
};

struct NewtonDiverged : Error {
    using Error::Error;
};

struct BorderedSingular : Error {
    using Error::Error;
};

struct NoNonsingularMinor : Error {
    using Error::Error;
};

struct ZeroMode : Error {
    using Error::Error;
};

struct StepTooLarge : Error {
    using Error::Error;
};

struct LevelSetOpen : Error {
    using Error::Error;
};

struct OutsideChart : Error {
    using Error::Error;
};

struct NoPeak : Error {
    using Error::Error;
};

struct NormOverflow : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace kam

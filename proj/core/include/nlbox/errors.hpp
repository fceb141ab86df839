#pragma once

#include <stdexcept>
#include <string>

namespace nlbox {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands of mismatched bit length, or a length outside the supported range.
class LengthError : public Error {
public:
    using Error::Error;
};

// A numeric argument outside its admissible interval (n range, |E| > 1, p outside [0,1]).
class RangeError : public Error {
public:
    using Error::Error;
};

// A vector violates the parity constraint required by its role.
class ParityError : public Error {
public:
    using Error::Error;
};

// The request is exact but too large for the exhaustive mode that guarantees it.
class FeasibilityError : public Error {
public:
    using Error::Error;
};

// The input pair is not admissible for a box model.
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

// Measurement settings violate a precondition; the message names the constraint.
class SettingsError : public Error {
public:
    using Error::Error;
};

// Text could not be parsed; file variants carry the 1-based line number.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A fixture file parsed but violates a load-time invariant; the message names the check.
class FixtureError : public Error {
public:
    using Error::Error;
};

} // namespace nlbox

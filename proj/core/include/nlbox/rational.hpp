#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nlbox/errors.hpp"

namespace nlbox {

// All probabilities, correlations and bounds are kept as exact rationals until a
// report is rendered. Denominators grow past 64 bits in the tradeoff curve
// (sixth powers of the step count), hence arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Canonical exact rendering, always "numerator/denominator".
std::string rational_str(const Rational& r);

// Parses "3/4", "0.75", "-1", "1e-3" style literals into an exact rational.
Rational parse_rational(const std::string& text);

// Fixed significant-digit rendering of a double ("%.<digits>g").
std::string format_sig(double value, int digits);

} // namespace nlbox

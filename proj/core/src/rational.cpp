#include "nlbox/rational.hpp"

#include "nlbox/errors.hpp"

#include <cctype>
#include <cstdio>
#include <string>

namespace nlbox {

std::string rational_str(const Rational& r)
{
    // Always "num/den", including integers ("8/1"), so reports are unambiguous.
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

// Parses an optionally signed decimal literal with optional fractional part
// and optional exponent ("0.75", "-1", "1e-3", "2.5E2") into an exact value.
Rational parse_decimal(const std::string& s)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = (s[pos] == '-');
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    std::size_t int_len = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        digits += s[pos];
        ++pos;
        ++int_len;
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos];
            ++pos;
            ++frac_digits;
        }
    }
    if (int_len == 0 && frac_digits == 0)
        throw ParseError("invalid rational literal \"" + s + "\"");
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        std::string exp;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            exp += s[pos];
            ++pos;
        }
        std::size_t exp_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            exp += s[pos];
            ++pos;
        }
        if (pos == exp_start)
            throw ParseError("invalid rational literal \"" + s + "\"");
        exponent = std::stol(exp);
    }
    if (pos != s.size())
        throw ParseError("invalid rational literal \"" + s + "\"");

    BigInt mantissa(digits.empty() ? "0" : digits);
    if (negative)
        mantissa = -mantissa;
    long net = exponent - frac_digits;
    Rational value(mantissa);
    BigInt ten(10);
    if (net > 0) {
        for (long i = 0; i < net; ++i)
            value *= ten;
    } else {
        for (long i = 0; i < -net; ++i)
            value /= ten;
    }
    return value;
}

} // namespace

Rational parse_rational(const std::string& s)
{
    std::size_t begin = s.find_first_not_of(" \t");
    std::size_t end = s.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw ParseError("empty rational literal");
    std::string t = s.substr(begin, end - begin + 1);

    std::size_t slash = t.find('/');
    if (slash != std::string::npos) {
        std::string num = t.substr(0, slash);
        std::string den = t.substr(slash + 1);
        std::string num_digits = num;
        if (!num_digits.empty() && (num_digits[0] == '+' || num_digits[0] == '-'))
            num_digits.erase(0, 1);
        if (!is_all_digits(num_digits) || !is_all_digits(den))
            throw ParseError("invalid rational literal \"" + t + "\"");
        BigInt d(den);
        if (d == 0)
            throw ParseError("zero denominator in \"" + t + "\"");
        return Rational(BigInt(num), d);
    }
    return parse_decimal(t);
}

std::string format_sig(double value, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return std::string(buf);
}

} // namespace nlbox

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <sstream>
#include <string>

#include "coverhom/errors.hpp"

namespace coverhom {

/// Exact rational scalar. Kept in lowest terms with positive denominator by
/// the underlying GMP representation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Parses "7", "-3/4" or a plain decimal like "0.25" into an exact rational.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Integer num(text.substr(0, slash));
            Integer den(text.substr(slash + 1));
            if (den == 0) throw input_error("zero denominator in '" + text + "'");
            return Rational(num) / Rational(den);
        }
        const auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            const std::size_t frac_len = text.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+")
                throw input_error("malformed rational literal '" + text + "'");
            Integer scale = 1;
            for (std::size_t i = 0; i < frac_len; ++i) scale *= 10;
            return Rational(Integer(digits)) / Rational(scale);
        }
        return Rational(Integer(text));
    } catch (const std::runtime_error& e) {
        throw input_error("malformed rational literal '" + text + "'");
    }
}

inline int sign(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace coverhom

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "coadj/errors.hpp"

namespace coadj {

/// Exact rational number, always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p" or "p/q" with an optional sign.
inline Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational '" + text + "'");
    }
}

}  // namespace coadj

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace loophom {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" for integers, "p/q" otherwise; the form every report serializer uses.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

} // namespace loophom

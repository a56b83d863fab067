#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace delpezzo {

// Exact rational scalar. boost keeps it in lowest terms with positive
// denominator, which is exactly the normal form the toolkit requires.
// Expression templates are off so values behave like plain scalars.
using Int = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Parses "n", "-n" or "n/d"; throws std::runtime_error on malformed input.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::runtime_error("rational with zero denominator: " + text);
    return Rational(num) / Rational(den);
}

}  // namespace delpezzo

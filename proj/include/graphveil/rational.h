#ifndef GRAPHVEIL_RATIONAL_H_
#define GRAPHVEIL_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace graphveil {

using Rational = boost::rational<std::int64_t>;

// Accepts "7", "7/2", "-3/4" and finite decimals such as "3.25" (converted
// exactly). Throws std::invalid_argument.
Rational ParseRational(std::string_view text);

// "7" for integers, otherwise "7/2".
std::string FormatRational(const Rational& r);

double ToDouble(const Rational& r);

// Smallest integer >= r.
std::int64_t Ceil(const Rational& r);

}  // namespace graphveil

#endif  // GRAPHVEIL_RATIONAL_H_

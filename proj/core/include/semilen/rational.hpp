#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace semilen {

using Rational = boost::rational<std::int64_t>;

/// Parses "3", "3/2", "0.25" or "-1.5" into an exact rational.
/// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// "3" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// value < r, evaluated without rounding.
bool less_than(std::uint64_t value, const Rational& r);

/// ceil(value * r) for r > 0, exact.
std::uint64_t ceil_mul(std::uint64_t value, const Rational& r);

}  // namespace semilen

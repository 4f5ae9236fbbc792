#include "semilen/rational.hpp"

#include <charconv>
#include <limits>

#include "semilen/error.hpp"

namespace semilen {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InputError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative) int_part.remove_prefix(1);
    if (frac_part.empty() || frac_part.size() > 17) {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    std::int64_t frac = parse_int(frac_part, text);
    if (whole < 0 || frac < 0) {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    if (whole > (std::numeric_limits<std::int64_t>::max() - frac) / den) {
      throw InputError("rational out of range: '" + std::string(text) + "'");
    }
    Rational r(whole * den + frac, den);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

bool less_than(std::uint64_t value, const Rational& r) {
  // value < p/q  <=>  value*q < p  (q > 0 after normalisation)
  using wide = __int128;
  return static_cast<wide>(value) * r.denominator() < static_cast<wide>(r.numerator());
}

std::uint64_t ceil_mul(std::uint64_t value, const Rational& r) {
  using wide = unsigned __int128;
  wide num = static_cast<wide>(value) * static_cast<wide>(r.numerator());
  wide den = static_cast<wide>(r.denominator());
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

}  // namespace semilen

#include "graphveil/rational.h"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace graphveil {
namespace {

std::int64_t ParseInt(std::string_view s) {
  std::int64_t value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a number: " + std::string(s));
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = ParseInt(text.substr(0, slash));
    const std::int64_t den = ParseInt(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) {
      throw std::invalid_argument("unsupported decimal: " + std::string(text));
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = whole.empty() ? 0 : ParseInt(whole);
    const std::int64_t f = ParseInt(frac);
    if (f < 0 || w < 0) throw std::invalid_argument("malformed decimal");
    Rational r = Rational(w) + Rational(f, scale);
    return negative ? -r : r;
  }
  return Rational(ParseInt(text));
}

std::string FormatRational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

std::int64_t Ceil(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  // Truncation toward zero; bump positive remainders up.
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) return q + 1;
  return q;
}

}  // namespace graphveil

#include "lieob/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lieob {

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + text +
                                "' (expected p or p/q with q > 0)");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return fail();
  Integer num(text.substr(num_begin, pos - num_begin));
  if (negative) num = -num;
  if (pos == text.size()) return Rational(num);
  if (text[pos] != '/') return fail();
  ++pos;
  std::size_t den_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == den_begin || pos != text.size()) return fail();
  Integer den(text.substr(den_begin));
  if (den == 0) return fail();
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_zero_vector(const Element& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Element zero_vector(std::size_t n) { return Element(n, Rational(0)); }

} // namespace lieob

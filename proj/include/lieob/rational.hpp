#ifndef LIEOB_RATIONAL_HPP
#define LIEOB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace lieob {

// Exact rational scalar; always canonical (positive denominator, reduced).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Coordinate vector of a Lie algebra element.
using Element = std::vector<Rational>;

/// Parses "p" or "p/q" with optional leading sign; q must be positive.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

bool is_zero_vector(const Element& v);
Element zero_vector(std::size_t n);

} // namespace lieob

#endif

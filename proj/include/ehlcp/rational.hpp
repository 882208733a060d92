#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ehlcp {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. The backend keeps values in lowest terms with a
// positive denominator, so every comparison and arithmetic result is exact.
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rational>;

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q" (whitespace-trimmed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Vec& v);

// Componentwise helpers shared by the checkers.
bool all_nonneg(const Vec& v);
bool all_positive(const Vec& v);
bool is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
Vec min(const Vec& a, const Vec& b);
Vec hadamard(const Vec& a, const Vec& b);

}  // namespace ehlcp

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kptrop {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

int sign_of(const Rational& q);

/// Parse "num/den", an integer string, or an exact decimal ("-5.7" == -57/10).
/// Decimal form is meant for CLI coordinates; model parameters should use
/// the first two forms.
std::optional<Rational> parse_rational(std::string_view text);

/// "num/den" when den != 1, plain integer string otherwise.
std::string to_string(const Rational& q);

/// q^e for integer e (e < 0 requires q != 0).
Rational pow_rational(const Rational& q, long e);

double to_double(const Rational& q);

std::vector<Rational> parse_rational_list(std::string_view csv);

}  // namespace kptrop

#ifndef PALSTAR_DECIMAL_HPP
#define PALSTAR_DECIMAL_HPP

#include <string>

#include <gmpxx.h>

namespace palstar {

enum class Rounding { down, up };

/// 10^-places as an exact rational.
mpq_class decimal_ulp(unsigned places);

/// q rounded to a multiple of 10^-places, toward -inf or +inf.
mpq_class round_decimal(const mpq_class& q, unsigned places, Rounding mode);

/// Fixed-point rendering with exactly `places` fractional digits.
std::string to_decimal(const mpq_class& q, unsigned places,
                       Rounding mode = Rounding::down);

/// Exact parse of "123.456", "-0.5" or "7". Throws std::invalid_argument.
mpq_class parse_decimal(const std::string& text);

}  // namespace palstar

#endif  // PALSTAR_DECIMAL_HPP

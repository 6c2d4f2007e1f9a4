#include "palstar/decimal.hpp"

#include <stdexcept>

namespace palstar {

namespace {

mpz_class pow10(unsigned places) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, places);
  return p;
}

// floor or ceil of q * 10^places.
mpz_class scaled_integer(const mpq_class& q, unsigned places, Rounding mode) {
  const mpz_class num = q.get_num() * pow10(places);
  mpz_class out;
  if (mode == Rounding::down) {
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  } else {
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  }
  return out;
}

}  // namespace

mpq_class decimal_ulp(unsigned places) {
  mpq_class ulp(mpz_class(1), pow10(places));
  ulp.canonicalize();
  return ulp;
}

mpq_class round_decimal(const mpq_class& q, unsigned places, Rounding mode) {
  mpq_class out(scaled_integer(q, places, mode), pow10(places));
  out.canonicalize();
  return out;
}

std::string to_decimal(const mpq_class& q, unsigned places, Rounding mode) {
  mpz_class scaled = scaled_integer(q, places, mode);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

mpq_class parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  const auto dot = s.find('.');
  std::string int_part = s.substr(0, dot);
  std::string frac_part = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("empty decimal: '" + text + "'");
  }
  for (char c : int_part + frac_part) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed decimal: '" + text + "'");
    }
  }
  const std::string all = (int_part.empty() ? "0" : int_part) + frac_part;
  mpq_class out(mpz_class(all, 10),
                pow10(static_cast<unsigned>(frac_part.size())));
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

}  // namespace palstar

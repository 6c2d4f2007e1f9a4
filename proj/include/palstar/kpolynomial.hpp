#ifndef PALSTAR_KPOLYNOMIAL_HPP
#define PALSTAR_KPOLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace palstar {

/// Polynomial with integer coefficients in the alphabet size k.
/// coefficient(i) multiplies k^i; trailing zeros are never stored.
class KPolynomial {
 public:
  KPolynomial() = default;
  explicit KPolynomial(std::vector<mpz_class> coefficients);
  KPolynomial(std::initializer_list<long> coefficients);

  static KPolynomial constant(const mpz_class& c);
  /// The indeterminate k itself.
  static KPolynomial k();

  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept {
    return static_cast<int>(coefficients_.size()) - 1;
  }
  const std::vector<mpz_class>& coefficients() const noexcept {
    return coefficients_;
  }
  /// Coefficient of k^i; zero beyond the degree.
  mpz_class coefficient(std::size_t i) const;
  mpz_class leading_coefficient() const;

  mpz_class evaluate(const mpz_class& k) const;

  KPolynomial& operator+=(const KPolynomial& rhs);
  KPolynomial& operator-=(const KPolynomial& rhs);
  friend KPolynomial operator+(KPolynomial lhs, const KPolynomial& rhs) {
    return lhs += rhs;
  }
  friend KPolynomial operator-(KPolynomial lhs, const KPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend KPolynomial operator*(const KPolynomial& lhs, const KPolynomial& rhs);

  friend bool operator==(const KPolynomial& lhs, const KPolynomial& rhs) {
    return lhs.coefficients_ == rhs.coefficients_;
  }

  /// e.g. "8k^4 - 8k^3 + k".
  std::string to_string() const;

 private:
  void trim();

  std::vector<mpz_class> coefficients_;
};

}  // namespace palstar

#endif  // PALSTAR_KPOLYNOMIAL_HPP

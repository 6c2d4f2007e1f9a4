#include "palstar/kpolynomial.hpp"

#include <algorithm>

namespace palstar {

KPolynomial::KPolynomial(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

KPolynomial::KPolynomial(std::initializer_list<long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

KPolynomial KPolynomial::constant(const mpz_class& c) {
  return KPolynomial(std::vector<mpz_class>{c});
}

KPolynomial KPolynomial::k() { return KPolynomial{0, 1}; }

void KPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

mpz_class KPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : mpz_class(0);
}

mpz_class KPolynomial::leading_coefficient() const {
  return coefficients_.empty() ? mpz_class(0) : coefficients_.back();
}

mpz_class KPolynomial::evaluate(const mpz_class& k) const {
  mpz_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * k + *it;
  }
  return acc;
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] += rhs.coefficients_[i];
  }
  trim();
  return *this;
}

KPolynomial& KPolynomial::operator-=(const KPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] -= rhs.coefficients_[i];
  }
  trim();
  return *this;
}

KPolynomial operator*(const KPolynomial& lhs, const KPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> out(lhs.coefficients_.size() +
                             rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    if (lhs.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coefficients_[i].get_mpz_t(),
                 rhs.coefficients_[j].get_mpz_t());
    }
  }
  return KPolynomial(std::move(out));
}

std::string KPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const mpz_class& c = coefficients_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) out += magnitude.get_str();
    if (i >= 1) out += "k";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace palstar

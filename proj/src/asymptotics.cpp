#include "palstar/asymptotics.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "palstar/counting.hpp"

namespace palstar {

namespace {

// First `terms` coefficients of num / den as power series; den[0] != 0.
std::vector<mpq_class> divide_series(const std::vector<mpq_class>& num,
                                     const std::vector<mpq_class>& den,
                                     std::size_t terms) {
  std::vector<mpq_class> q(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    mpq_class acc = i < num.size() ? num[i] : mpq_class(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) {
      acc -= den[j] * q[i - j];
    }
    q[i] = acc / den[0];
  }
  return q;
}

// f_m(t) with p_k(m) = k^m f_m(1/k): coefficients of p_poly reversed.
std::vector<mpq_class> reversed_in_t(const KPolynomial& p, std::size_t m) {
  std::vector<mpq_class> f(m + 1);
  for (std::size_t j = 0; j <= m; ++j) f[j] = p.coefficient(m - j);
  return f;
}

InverseKSeries ratio_from_polys(const std::vector<KPolynomial>& polys,
                                std::size_t n, std::size_t terms) {
  return InverseKSeries(-1, divide_series(reversed_in_t(polys[n], n),
                                          reversed_in_t(polys[n + 1], n + 1),
                                          terms));
}

std::string power_of_k(int power) {
  return power == 1 ? "k" : "k^" + std::to_string(power);
}

}  // namespace

InverseKSeries::InverseKSeries(int leading_power,
                               std::vector<mpq_class> coefficients)
    : leading_power_(leading_power), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.front() == 0) {
    throw std::domain_error("series needs a nonzero leading coefficient");
  }
}

InverseKSeries InverseKSeries::truncated(std::size_t terms) const {
  if (terms == 0 || terms > coefficients_.size()) {
    throw std::out_of_range("cannot truncate a series of order " +
                            std::to_string(coefficients_.size()) + " to " +
                            std::to_string(terms) + " terms");
  }
  return InverseKSeries(
      leading_power_,
      std::vector<mpq_class>(coefficients_.begin(),
                             coefficients_.begin() +
                                 static_cast<std::ptrdiff_t>(terms)));
}

InverseKSeries operator*(const InverseKSeries& lhs, const InverseKSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  std::vector<mpq_class> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; i + j < order; ++j) {
      out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return InverseKSeries(lhs.leading_power_ + rhs.leading_power_,
                        std::move(out));
}

std::string InverseKSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const mpq_class& c = coefficients_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const mpz_class num = abs(c.get_num());
    const mpz_class& den = c.get_den();
    const int p = power(i);
    if (p > 0) {
      if (num != 1) out += num.get_str();
      out += power_of_k(p);
      if (den != 1) out += "/" + den.get_str();
    } else if (p == 0) {
      out += num.get_str();
      if (den != 1) out += "/" + den.get_str();
    } else {
      out += num.get_str() + "/";
      out += den == 1 ? power_of_k(-p)
                      : "(" + den.get_str() + power_of_k(-p) + ")";
    }
  }
  return out;
}

InverseKSeries ratio_expansion(std::size_t n, std::size_t terms) {
  if (n < 1) throw std::invalid_argument("ratio_expansion needs n >= 1");
  if (terms < 1) throw std::invalid_argument("ratio_expansion needs terms >= 1");
  return ratio_from_polys(p_poly(n + 1), n, terms);
}

StabilizedSeries alpha_inv_series(std::size_t terms, std::size_t max_n) {
  if (terms < 1) throw std::invalid_argument("alpha_inv_series needs terms >= 1");
  // A single pair of agreeing orders is not enough: the 4-term expansion
  // agrees at n = 4 and 5, then changes at n = 6. Demand a run instead.
  constexpr std::size_t kAgreeingOrders = 4;
  std::vector<KPolynomial> polys;
  std::optional<InverseKSeries> candidate;
  std::size_t candidate_n = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (polys.size() < n + 2) {
      polys = p_poly(std::min(max_n + 1, std::max<std::size_t>(2 * n, 16)));
    }
    InverseKSeries current = ratio_from_polys(polys, n, terms);
    if (!candidate || !(*candidate == current)) {
      candidate = std::move(current);
      candidate_n = n;
    } else if (n + 1 - candidate_n == kAgreeingOrders) {
      return {std::move(*candidate), candidate_n};
    }
  }
  throw NoStabilization("no stable " + std::to_string(terms) +
                        "-term expansion up to n=" + std::to_string(max_n));
}

InverseKSeries series_reciprocal(const InverseKSeries& s) {
  if (s.coefficients().front() == 0) {
    throw std::domain_error("reciprocal of a series with zero leading term");
  }
  return InverseKSeries(-s.leading_power(),
                        divide_series({mpq_class(1)}, s.coefficients(),
                                      s.order()));
}

mpq_class series_eval(const InverseKSeries& s, int k) {
  if (k < 2) {
    throw std::invalid_argument("series_eval needs k >= 2, got " +
                                std::to_string(k));
  }
  mpq_class total = 0;
  for (std::size_t i = 0; i < s.order(); ++i) {
    const int p = s.power(i);
    mpz_class k_pow;
    mpz_ui_pow_ui(k_pow.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(p < 0 ? -p : p));
    if (p >= 0) {
      total += s.coefficients()[i] * k_pow;
    } else {
      total += s.coefficients()[i] / k_pow;
    }
  }
  return total;
}

}  // namespace palstar

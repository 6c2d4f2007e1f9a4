#ifndef PALSTAR_ASYMPTOTICS_HPP
#define PALSTAR_ASYMPTOTICS_HPP

// Expansions of rho_k = 1/alpha_k and alpha_k in descending powers of the
// alphabet size k, obtained from the exact ratio p_k(n) / p_k(n+1) with k
// kept symbolic.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace palstar {

/// No order n up to the ceiling produced two consecutive identical
/// expansions.
class NoStabilization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated series sum_i coefficients[i] * k^(leading_power - i).
class InverseKSeries {
 public:
  InverseKSeries(int leading_power, std::vector<mpq_class> coefficients);

  int leading_power() const noexcept { return leading_power_; }
  const std::vector<mpq_class>& coefficients() const noexcept {
    return coefficients_;
  }
  /// Number of retained terms.
  std::size_t order() const noexcept { return coefficients_.size(); }
  /// Power of k carried by term i.
  int power(std::size_t i) const noexcept {
    return leading_power_ - static_cast<int>(i);
  }

  /// The first `terms` terms. Throws std::out_of_range beyond order().
  InverseKSeries truncated(std::size_t terms) const;

  /// Product truncated to the smaller order.
  friend InverseKSeries operator*(const InverseKSeries& lhs,
                                  const InverseKSeries& rhs);

  friend bool operator==(const InverseKSeries&,
                         const InverseKSeries&) = default;

  /// e.g. "2k - 1/2 - 1/(4k) - 3/(32k^2)".
  std::string to_string() const;

 private:
  int leading_power_;
  std::vector<mpq_class> coefficients_;
};

/// (1/k) * f_n(t) / f_{n+1}(t) to `terms` coefficients, where t = 1/k and
/// p_k(m) = k^m f_m(t). Throws std::invalid_argument for n < 1 or terms < 1.
InverseKSeries ratio_expansion(std::size_t n, std::size_t terms);

struct StabilizedSeries {
  InverseKSeries series;
  /// Smallest n with ratio_expansion(n) == ratio_expansion(n + 1).
  std::size_t stabilized_at;
};

/// Expansion of 1/alpha_k, stopping at the first n from which four
/// consecutive ratio expansions agree on all `terms` coefficients;
/// stabilized_at is the first n of that run. Throws NoStabilization when
/// no run completes by max_n.
StabilizedSeries alpha_inv_series(std::size_t terms,
                                  std::size_t max_n = 256);

/// Multiplicative inverse; the leading power changes sign.
/// Throws std::domain_error on a zero leading coefficient.
InverseKSeries series_reciprocal(const InverseKSeries& s);

/// Exact value of the truncated series at an integer k >= 2.
mpq_class series_eval(const InverseKSeries& s, int k);

}  // namespace palstar

#endif  // PALSTAR_ASYMPTOTICS_HPP

#ifndef PALSTAR_GF_ANALYSIS_HPP
#define PALSTAR_GF_ANALYSIS_HPP

// Certified analysis of U_k(X) = sum u_k(n) X^n near its dominant root.
//
// rho_k is the unique positive root of U_k(X) = 2, alpha_k = 1/rho_k is the
// growth rate of palstar counts, and C_k = U_k'(rho_k) is the amplitude in
// p_k(n) ~ alpha_k^(n+1) / C_k. Everything except circle_scan is exact
// rational arithmetic: a truncated sum is a certified lower bound for U_k
// (all u_k(n) >= 0) and the geometric tail (kx)^(N+1)/(1-kx) bounds the rest,
// since u_k(n) <= k^n.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace palstar {

/// Raised when a tail bound is requested at x >= 1/k, where the bounding
/// geometric series diverges.
class DivergentTail : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a certified computation exceeds its term ceiling.
class ComputationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lo <= true value <= hi, proven when certified is set.
struct RationalEnclosure {
  mpq_class lo;
  mpq_class hi;
  bool certified = false;
  std::size_t terms_used = 0;

  mpq_class width() const { return hi - lo; }
  mpq_class midpoint() const { return (lo + hi) / 2; }
  bool contains(const mpq_class& q) const { return lo <= q && q <= hi; }
  bool intersects(const RationalEnclosure& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
};

/// U_k truncated after degree N.
class TruncatedSeries {
 public:
  TruncatedSeries(int k, std::size_t N);

  int k() const noexcept { return k_; }
  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  std::span<const mpz_class> coefficients() const noexcept {
    return coefficients_;
  }

  /// Upper bound on the discarded sum_{n>N} u_k(n) x^n.
  mpq_class tail_bound(const mpq_class& x) const;

 private:
  int k_;
  std::vector<mpz_class> coefficients_;
};

/// Exact Horner evaluation of the truncated series. Requires x >= 0.
mpq_class eval_series(const TruncatedSeries& s, const mpq_class& x);

/// Exact value of the derivative of the truncated series,
/// sum_{n=1..N} n u_k(n) x^(n-1). Requires x >= 0.
mpq_class eval_derivative(const TruncatedSeries& s, const mpq_class& x);

/// (kx)^(N+1) / (1 - kx). Throws DivergentTail unless 0 < x < 1/k.
mpq_class tail_bound(int k, std::size_t N, const mpq_class& x);

enum class RootSide { below, above, unknown };

/// Where U_k(x) sits relative to 2, decided from the truncated sum and its
/// tail bound: below means U_k(x) < 2 (so x < rho_k), above means
/// U_k(x) > 2. unknown when the truncation cannot decide.
RootSide locate_against_two(const TruncatedSeries& s, const mpq_class& x);

struct SolveOptions {
  /// Lower limit for the truncation degree; 0 picks it from `digits`.
  std::size_t min_terms = 0;
  /// Escalation stops with ComputationLimit beyond this degree.
  std::size_t max_terms = std::size_t{1} << 16;
};

/// Certified enclosure of rho_k of width <= 10^-digits, by bisection on
/// [1/(2k - 1/2), 1/(2k - 1)].
RationalEnclosure solve_rho(int k, int digits, SolveOptions options = {});

/// Bisects an existing certified enclosure of rho_k down to 10^-digits.
/// Throws std::invalid_argument if [lo, hi] does not bracket the root.
RationalEnclosure refine_rho(int k, const RationalEnclosure& rho, int digits,
                             SolveOptions options = {});

/// [1/hi, 1/lo]. Throws std::domain_error unless lo > 0.
RationalEnclosure alpha_from_rho(const RationalEnclosure& rho);

/// Certified enclosure of C_k = U_k'(rho_k) of width <= 10^-digits. The
/// root enclosure is refined internally when it is too wide.
RationalEnclosure compute_C(int k, const RationalEnclosure& rho, int digits,
                            SolveOptions options = {});

/// Both closed-form inequalities that bracket rho_k:
///   2 < (2k-1)(4k^2-6k+1) / ((k-1)^2 (4k-1))   (bound on U_k(1/(2k-1)))
///   (16k^2-12k+1) / ((4k-1)(2k-1)) < 2          (bound on U_k(1/(2k-1/2)))
bool check_bounds(int k);

/// The two rational sides of check_bounds, for reporting.
struct BoundValues {
  mpq_class at_upper_bracket;  // lower bound on U_k(1/(2k-1)); exceeds 2
  mpq_class at_lower_bracket;  // upper bound on U_k(1/(2k-1/2)); below 2
};
BoundValues bound_values(int k);

/// Closed forms sandwiching U_k(x) for 0 < x < 1/k:
///   lower = (1 - 2kx^2) / ((kx - 1)(kx^2 - 1)),  upper = (kx^2 - 1)/(kx - 1).
struct Envelope {
  mpq_class lower;
  mpq_class upper;
};

/// Throws std::domain_error outside 0 < x < 1/k or at the pole kx^2 = 1.
Envelope bound_series_envelope(int k, const mpq_class& x);

/// lower <= S_N(x) and S_N(x) + tail <= upper, exactly.
bool envelope_contains_series(int k, const mpq_class& x, std::size_t N);

struct CircleScanOptions {
  /// Grid points with |psi| below this are skipped.
  double exclusion = 0.1;
  /// Passing threshold for min |U_k - 2|. For k = 2 on 360 samples the
  /// observed minimum is 0.1942, at the edge of the excluded arc.
  double margin = 0.1;
  /// Truncation degree; 0 picks one with tail below 1e-15.
  std::size_t terms = 0;
};

struct CircleScanReport {
  double rho = 0;
  std::size_t terms = 0;
  std::vector<double> psi;       // evaluated angles
  std::vector<double> distance;  // |U_k(rho e^{i psi}) - 2|
  double min_distance = 0;
  double argmin_psi = 0;
  double distance_at_pi = 0;
  bool passed = false;
};

/// Floating-point scan of |U_k - 2| on the circle |X| = rho_k, over the grid
/// psi_j = -pi + 2 pi j / samples. Evidence that rho_k is the only root on
/// that circle, not a proof. OpenMP-parallel over grid points.
CircleScanReport circle_scan(int k, int samples, CircleScanOptions options = {});

namespace serial {
CircleScanReport circle_scan(int k, int samples, CircleScanOptions options = {});
}  // namespace serial

/// |p_k(n) C_k / alpha_k^(n+1) - 1| for each n in [first, last], using
/// enclosure midpoints.
std::vector<double> amplitude_errors(int k, const RationalEnclosure& alpha,
                                     const RationalEnclosure& C,
                                     std::size_t first, std::size_t last);

}  // namespace palstar

#endif  // PALSTAR_GF_ANALYSIS_HPP

#include "palstar/gf_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "palstar/counting.hpp"
#include "palstar/decimal.hpp"

namespace palstar {

namespace {

void require_alphabet(int k) {
  if (k < 2) {
    throw std::invalid_argument("alphabet size must be at least 2, got k=" +
                                std::to_string(k));
  }
}

void require_digits(int digits) {
  if (digits < 1) {
    throw std::invalid_argument("digits must be at least 1, got " +
                                std::to_string(digits));
  }
}

// Returns sum_j c_j a^j b^(deg - j) and stores b^deg in *b_pow, so that the
// polynomial's value at a/b is the quotient of the two.
mpz_class horner_scaled(std::span<const mpz_class> c, const mpz_class& a,
                        const mpz_class& b, mpz_class& b_pow) {
  b_pow = 1;
  if (c.empty()) return 0;
  mpz_class acc = c.back();
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    b_pow *= b;
    acc *= a;
    mpz_addmul(acc.get_mpz_t(), c[j].get_mpz_t(), b_pow.get_mpz_t());
  }
  return acc;
}

mpq_class horner(std::span<const mpz_class> c, const mpq_class& x) {
  mpz_class b_pow;
  mpq_class out(horner_scaled(c, x.get_num(), x.get_den(), b_pow), b_pow);
  out.canonicalize();
  return out;
}

void require_tail_domain(int k, const mpq_class& x) {
  if (x <= 0 || k * x >= 1) {
    throw DivergentTail("tail bound needs 0 < x < 1/k; got x=" + x.get_str() +
                        " with k=" + std::to_string(k));
  }
}

// Upper bound on sum_{n>N} n u_k(n) x^(n-1) <= k sum_{n>N} n q^(n-1), q = kx.
mpq_class derivative_tail_bound(int k, std::size_t N, const mpq_class& x) {
  require_tail_domain(k, x);
  const mpq_class q = k * x;
  mpq_class q_pow = 1;
  for (std::size_t i = 0; i < N; ++i) q_pow *= q;
  const mpq_class one_minus_q = 1 - q;
  const mpq_class nq(static_cast<unsigned long>(N));
  return k * q_pow * (nq + 1 - nq * q) / (one_minus_q * one_minus_q);
}

// Degree whose geometric tail at ratio k*hi0 is about 10^-digits.
std::size_t initial_terms(int k, int digits, const SolveOptions& options) {
  const double ratio = static_cast<double>(2 * k - 1) / k;
  const auto guess = static_cast<std::size_t>(
      std::ceil(digits * std::log(10.0) / std::log(ratio)));
  const std::size_t N = std::max({guess, std::size_t{8}, options.min_terms});
  if (N > options.max_terms) {
    throw ComputationLimit(std::to_string(digits) + " digits need about " +
                           std::to_string(N) + " terms, above the ceiling of " +
                           std::to_string(options.max_terms));
  }
  return N;
}

void grow(std::size_t& N, const SolveOptions& options) {
  N *= 2;
  if (N > options.max_terms) {
    throw ComputationLimit("certification needs more than " +
                           std::to_string(options.max_terms) + " terms");
  }
}

RationalEnclosure bisect(int k, mpq_class lo, mpq_class hi, int digits,
                         std::size_t N, const SolveOptions& options) {
  TruncatedSeries series(k, N);
  for (;;) {
    const RootSide lo_side = locate_against_two(series, lo);
    const RootSide hi_side = locate_against_two(series, hi);
    if (lo_side == RootSide::above || hi_side == RootSide::below) {
      throw std::invalid_argument("interval [" + lo.get_str() + ", " +
                                  hi.get_str() + "] does not bracket rho_" +
                                  std::to_string(k));
    }
    if (lo_side == RootSide::below && hi_side == RootSide::above) break;
    grow(N, options);
    series = TruncatedSeries(k, N);
  }

  // Trial points as fractions of the current width; the off-centre ones
  // rescue steps where the midpoint is too close to the root to decide.
  static const mpq_class kTrials[] = {mpq_class(1, 2), mpq_class(3, 8),
                                      mpq_class(5, 8)};
  const mpq_class target = decimal_ulp(static_cast<unsigned>(digits));
  while (hi - lo > target) {
    bool moved = false;
    for (const mpq_class& f : kTrials) {
      const mpq_class x = lo + (hi - lo) * f;
      const RootSide side = locate_against_two(series, x);
      if (side == RootSide::below) {
        lo = x;
      } else if (side == RootSide::above) {
        hi = x;
      } else {
        continue;
      }
      moved = true;
      break;
    }
    if (!moved) {
      grow(N, options);
      series = TruncatedSeries(k, N);
    }
  }
  return {std::move(lo), std::move(hi), true, N};
}

}  // namespace

TruncatedSeries::TruncatedSeries(int k, std::size_t N)
    : k_(k), coefficients_(u_sequence(k, N).terms) {}

mpq_class TruncatedSeries::tail_bound(const mpq_class& x) const {
  return palstar::tail_bound(k_, degree(), x);
}

mpq_class eval_series(const TruncatedSeries& s, const mpq_class& x) {
  if (x < 0) {
    throw std::domain_error("eval_series needs x >= 0, got " + x.get_str());
  }
  return horner(s.coefficients(), x);
}

mpq_class eval_derivative(const TruncatedSeries& s, const mpq_class& x) {
  if (x < 0) {
    throw std::domain_error("eval_derivative needs x >= 0, got " + x.get_str());
  }
  const auto c = s.coefficients();
  std::vector<mpz_class> derivative(c.size() - 1);
  for (std::size_t n = 1; n < c.size(); ++n) {
    derivative[n - 1] = c[n] * static_cast<unsigned long>(n);
  }
  return horner(derivative, x);
}

mpq_class tail_bound(int k, std::size_t N, const mpq_class& x) {
  require_tail_domain(k, x);
  const mpq_class q = k * x;
  mpq_class q_pow = q;
  for (std::size_t i = 0; i < N; ++i) q_pow *= q;
  return q_pow / (1 - q);
}

RootSide locate_against_two(const TruncatedSeries& s, const mpq_class& x) {
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class b_pow;
  const mpz_class sum = horner_scaled(s.coefficients(), a, b, b_pow);
  // With B = b^N: U(x) >= sum/B, and U(x) <= sum/B + (ka)^(N+1)/(B (b - ka)).
  const mpz_class excess = sum - 2 * b_pow;
  if (excess > 0) return RootSide::above;
  require_tail_domain(s.k(), x);
  const mpz_class ka = s.k() * a;
  mpz_class tail_num;
  mpz_pow_ui(tail_num.get_mpz_t(), ka.get_mpz_t(),
             static_cast<unsigned long>(s.degree() + 1));
  if (excess * (b - ka) + tail_num < 0) return RootSide::below;
  return RootSide::unknown;
}

RationalEnclosure solve_rho(int k, int digits, SolveOptions options) {
  require_alphabet(k);
  require_digits(digits);
  const mpq_class lo(2, 4 * k - 1);
  const mpq_class hi(1, 2 * k - 1);
  return bisect(k, lo, hi, digits, initial_terms(k, digits, options), options);
}

RationalEnclosure refine_rho(int k, const RationalEnclosure& rho, int digits,
                             SolveOptions options) {
  require_alphabet(k);
  require_digits(digits);
  if (rho.width() <= decimal_ulp(static_cast<unsigned>(digits)) &&
      rho.certified) {
    return rho;
  }
  const std::size_t N =
      std::max(rho.terms_used, initial_terms(k, digits, options));
  return bisect(k, rho.lo, rho.hi, digits, N, options);
}

RationalEnclosure alpha_from_rho(const RationalEnclosure& rho) {
  if (rho.lo <= 0) {
    throw std::domain_error("reciprocal enclosure needs lo > 0, got " +
                            rho.lo.get_str());
  }
  return {1 / rho.hi, 1 / rho.lo, rho.certified, rho.terms_used};
}

RationalEnclosure compute_C(int k, const RationalEnclosure& rho, int digits,
                            SolveOptions options) {
  require_alphabet(k);
  require_digits(digits);
  if (!rho.certified) {
    throw std::invalid_argument("compute_C needs a certified root enclosure");
  }
  const mpq_class target = decimal_ulp(static_cast<unsigned>(digits));
  const auto places = static_cast<unsigned>(digits) + 10;

  int rho_digits = digits + 2;
  RationalEnclosure root = refine_rho(k, rho, rho_digits, options);
  std::size_t N = std::max(root.terms_used, initial_terms(k, digits, options));
  for (;;) {
    const TruncatedSeries series(k, N);
    // U' is increasing on (0, 1/k): evaluate at both ends of the root box.
    const mpq_class at_lo = eval_derivative(series, root.lo);
    const mpq_class at_hi = eval_derivative(series, root.hi);
    const mpq_class tail = derivative_tail_bound(k, N, root.hi);

    RationalEnclosure out{round_decimal(at_lo, places, Rounding::down),
                          round_decimal(at_hi + tail, places, Rounding::up),
                          true, N};
    if (out.width() <= target) return out;

    if (tail * 4 > target) grow(N, options);
    if ((at_hi - at_lo) * 2 > target) {
      rho_digits += 3;
      root = refine_rho(k, root, rho_digits, options);
      N = std::max(N, root.terms_used);
    }
  }
}

BoundValues bound_values(int k) {
  require_alphabet(k);
  const mpz_class kz(k);
  mpq_class lower((2 * kz - 1) * (4 * kz * kz - 6 * kz + 1),
                  (kz - 1) * (kz - 1) * (4 * kz - 1));
  mpq_class upper(16 * kz * kz - 12 * kz + 1, (4 * kz - 1) * (2 * kz - 1));
  lower.canonicalize();
  upper.canonicalize();
  return {lower, upper};
}

bool check_bounds(int k) {
  const BoundValues v = bound_values(k);
  return v.at_upper_bracket > 2 && v.at_lower_bracket < 2;
}

Envelope bound_series_envelope(int k, const mpq_class& x) {
  require_alphabet(k);
  if (x <= 0 || k * x >= 1) {
    throw std::domain_error("envelope needs 0 < x < 1/k, got x=" + x.get_str());
  }
  const mpq_class kx = k * x;
  const mpq_class kx2 = kx * x;
  if (kx2 == 1) {
    throw std::domain_error("envelope pole at kx^2 = 1");
  }
  return {(1 - 2 * kx2) / ((kx - 1) * (kx2 - 1)), (kx2 - 1) / (kx - 1)};
}

bool envelope_contains_series(int k, const mpq_class& x, std::size_t N) {
  const Envelope env = bound_series_envelope(k, x);
  const TruncatedSeries s(k, N);
  const mpq_class sum = eval_series(s, x);
  return env.lower <= sum && sum + s.tail_bound(x) <= env.upper;
}

namespace {

struct CircleSetup {
  double rho = 0;
  std::vector<double> scaled;  // u_k(n) rho^n
  std::vector<double> psi;
};

CircleSetup prepare_circle(int k, int samples, const CircleScanOptions& options) {
  require_alphabet(k);
  if (samples < 8) {
    throw std::invalid_argument("circle scan needs at least 8 samples");
  }
  CircleSetup setup;
  setup.rho = solve_rho(k, 17).midpoint().get_d();
  const double q = k * setup.rho;

  std::size_t terms = options.terms;
  if (terms == 0) {
    terms = 1;
    while (std::pow(q, static_cast<double>(terms + 1)) / (1 - q) >= 1e-15) {
      ++terms;
    }
  }
  const CountSequence u = u_sequence(k, terms);
  mpz_class k_pow = 1;
  setup.scaled.resize(terms + 1);
  for (std::size_t n = 0; n <= terms; ++n) {
    // u_k(n) rho^n = (u_k(n) / k^n) (k rho)^n keeps every factor in range.
    const mpq_class density(u.terms[n], k_pow);
    setup.scaled[n] = density.get_d() * std::pow(q, static_cast<double>(n));
    k_pow *= k;
  }

  const double pi = std::numbers::pi;
  for (int j = 0; j < samples; ++j) {
    const double psi = -pi + 2 * pi * j / samples;
    if (std::abs(psi) >= options.exclusion) setup.psi.push_back(psi);
  }
  return setup;
}

std::complex<double> eval_on_circle(const std::vector<double>& scaled,
                                    double psi) {
  const std::complex<double> w = std::polar(1.0, psi);
  std::complex<double> acc = 0;
  for (auto it = scaled.rbegin(); it != scaled.rend(); ++it) {
    acc = acc * w + *it;
  }
  return acc;
}

CircleScanReport finish_scan(CircleSetup setup, std::vector<double> distance,
                             double at_pi, const CircleScanOptions& options) {
  CircleScanReport report;
  report.rho = setup.rho;
  report.terms = setup.scaled.size() - 1;
  report.distance_at_pi = at_pi;
  report.min_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < distance.size(); ++i) {
    if (distance[i] < report.min_distance) {
      report.min_distance = distance[i];
      report.argmin_psi = setup.psi[i];
    }
  }
  report.psi = std::move(setup.psi);
  report.distance = std::move(distance);
  report.passed = !report.distance.empty() &&
                  report.min_distance > options.margin;
  return report;
}

}  // namespace

CircleScanReport circle_scan(int k, int samples, CircleScanOptions options) {
  CircleSetup setup = prepare_circle(k, samples, options);
  std::vector<double> distance(setup.psi.size());
  const auto count = static_cast<std::int64_t>(setup.psi.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    distance[idx] = std::abs(eval_on_circle(setup.scaled, setup.psi[idx]) - 2.0);
  }
  const double at_pi =
      std::abs(eval_on_circle(setup.scaled, std::numbers::pi) - 2.0);
  return finish_scan(std::move(setup), std::move(distance), at_pi, options);
}

namespace serial {

CircleScanReport circle_scan(int k, int samples, CircleScanOptions options) {
  CircleSetup setup = prepare_circle(k, samples, options);
  // Direct term-by-term sum, independent of the Horner path above.
  auto direct = [&](double psi) {
    std::complex<double> acc = 0;
    for (std::size_t n = 0; n < setup.scaled.size(); ++n) {
      acc += std::polar(setup.scaled[n], static_cast<double>(n) * psi);
    }
    return std::abs(acc - 2.0);
  };
  std::vector<double> distance;
  distance.reserve(setup.psi.size());
  for (double psi : setup.psi) distance.push_back(direct(psi));
  const double at_pi = direct(std::numbers::pi);
  return finish_scan(std::move(setup), std::move(distance), at_pi, options);
}

}  // namespace serial

std::vector<double> amplitude_errors(int k, const RationalEnclosure& alpha,
                                     const RationalEnclosure& C,
                                     std::size_t first, std::size_t last) {
  if (first > last) return {};
  const CountSequence p = p_sequence(k, last);
  const mpq_class a = round_decimal(alpha.midpoint(), 80, Rounding::down);
  const mpq_class c = round_decimal(C.midpoint(), 80, Rounding::down);
  mpq_class a_pow = a;  // alpha^(n+1)
  for (std::size_t n = 0; n < first; ++n) a_pow *= a;
  std::vector<double> errors;
  for (std::size_t n = first; n <= last; ++n) {
    const mpq_class r = p.terms[n] * c / a_pow;
    errors.push_back(std::abs(mpq_class(r - 1).get_d()));
    a_pow *= a;
  }
  return errors;
}

}  // namespace palstar

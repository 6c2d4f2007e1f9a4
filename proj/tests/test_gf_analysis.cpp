#include <doctest.h>

#include <cmath>
#include <string>

#include "palstar/counting.hpp"
#include "palstar/decimal.hpp"
#include "palstar/gf_analysis.hpp"
#include "palstar/reference_data.hpp"

using namespace palstar;

namespace {

mpq_class q(long num, long den = 1) {
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpq_class parse(std::string_view text) { return parse_decimal(std::string(text)); }

}  // namespace

TEST_CASE("decimal helpers") {
  CHECK(to_decimal(q(1, 3), 5) == "0.33333");
  CHECK(to_decimal(q(1, 3), 5, Rounding::up) == "0.33334");
  CHECK(to_decimal(q(-1, 3), 2) == "-0.34");
  CHECK(to_decimal(q(7), 0) == "7");
  CHECK(to_decimal(q(1, 40), 3) == "0.025");
  CHECK(parse_decimal("-0.25") == q(-1, 4));
  CHECK(parse_decimal("3") == 3);
  CHECK_THROWS_AS(parse_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
  CHECK(round_decimal(q(2, 3), 2, Rounding::down) == q(66, 100));
}

TEST_CASE("eval_series") {
  const TruncatedSeries s(2, 4);
  CHECK(eval_series(s, 0) == 1);
  // Direct sum of u_2(n) / 4^n for n = 0..4, independent of Horner.
  const mpq_class direct = q(1) + q(2, 4) + q(2, 16) + q(4, 64) + q(6, 256);
  CHECK(eval_series(s, q(1, 4)) == direct);
  CHECK(eval_series(TruncatedSeries(2, 30), q(1, 2)) > 0);
  CHECK_THROWS_AS(eval_series(s, q(-1, 4)), std::domain_error);
}

TEST_CASE("eval_derivative at zero is u_k(1) = k") {
  for (int k : {2, 3, 9}) {
    CHECK(eval_derivative(TruncatedSeries(k, 10), 0) == k);
  }
  CHECK(eval_derivative(TruncatedSeries(2, 2), q(1, 2)) == 2 + 2 * 2 * q(1, 2));
}

TEST_CASE("tail_bound") {
  CHECK(tail_bound(2, 10, q(1, 4)) == q(1, 1024));
  CHECK(TruncatedSeries(2, 10).tail_bound(q(1, 4)) == q(1, 1024));
  CHECK(tail_bound(2, 10, q(1, 1000000)) < q(1, 1000000000));
  CHECK_THROWS_AS(tail_bound(2, 10, q(1, 2)), DivergentTail);
  CHECK_THROWS_AS(tail_bound(3, 10, q(1, 2)), DivergentTail);
  CHECK_THROWS_AS(tail_bound(2, 10, 0), DivergentTail);
}

TEST_CASE("tail bound dominates the true discarded terms") {
  const CountSequence u = u_sequence(3, 80);
  const mpq_class x = q(1, 4);
  for (std::size_t N : {5u, 10u, 20u}) {
    mpq_class discarded = 0;
    mpq_class x_pow = 1;
    for (std::size_t n = 0; n <= 80; ++n) {
      if (n > N) discarded += u.terms[n] * x_pow;
      x_pow *= x;
    }
    CHECK(discarded < tail_bound(3, N, x));
  }
}

TEST_CASE("solve_rho for k=2 to 50 digits") {
  const RationalEnclosure rho = solve_rho(2, 50);
  CHECK(rho.certified);
  CHECK(rho.width() <= decimal_ulp(50));
  CHECK(rho.contains(parse(reference::kRho2)));
  CHECK(rho.lo > q(2, 7));
  CHECK(rho.hi < q(1, 3));
  CHECK(to_decimal(rho.lo, 50) ==
        "0.29983821359352690506155111814579603919303182364781");
}

TEST_CASE("solve_rho stays inside the closed-form bracket") {
  const RationalEnclosure rho3 = solve_rho(3, 10);
  CHECK(rho3.lo > q(2, 11));
  CHECK(rho3.hi < q(1, 5));
  CHECK_THROWS_AS(solve_rho(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(solve_rho(2, 0), std::invalid_argument);
}

TEST_CASE("refine_rho") {
  const RationalEnclosure coarse = solve_rho(2, 5);
  const RationalEnclosure fine = refine_rho(2, coarse, 20);
  CHECK(fine.width() <= decimal_ulp(20));
  CHECK(fine.lo >= coarse.lo);
  CHECK(fine.hi <= coarse.hi);
  RationalEnclosure wrong{q(1, 10), q(1, 5), true, 0};
  CHECK_THROWS_AS(refine_rho(2, wrong, 10), std::invalid_argument);
}

TEST_CASE("alpha_from_rho") {
  const RationalEnclosure alpha = alpha_from_rho(solve_rho(2, 50));
  CHECK(alpha.contains(parse(reference::kAlpha2)));
  const RationalEnclosure half{q(1, 2), q(1, 2), true, 0};
  const RationalEnclosure two = alpha_from_rho(half);
  CHECK(two.lo == 2);
  CHECK(two.hi == 2);
  const RationalEnclosure alpha4 = alpha_from_rho(solve_rho(4, 10));
  CHECK(alpha4.lo > 7);
  CHECK(alpha4.hi < q(15, 2));
  CHECK_THROWS_AS(alpha_from_rho({q(0), q(1), true, 0}), std::domain_error);
}

TEST_CASE("compute_C") {
  const RationalEnclosure rho = solve_rho(2, 20);
  const RationalEnclosure C = compute_C(2, rho, 30);
  CHECK(C.certified);
  CHECK(C.width() <= decimal_ulp(30));
  CHECK(C.contains(parse(reference::kC2)));
  CHECK(C.lo <= C.hi);
  CHECK_THROWS_AS(compute_C(2, {rho.lo, rho.hi, false, 0}, 10),
                  std::invalid_argument);
  for (int k : {3, 5}) {
    CHECK(compute_C(k, solve_rho(k, 10), 10).lo > 0);
  }
}

TEST_CASE("check_bounds") {
  const BoundValues v = bound_values(2);
  CHECK(v.at_upper_bracket == q(15, 7));
  CHECK(v.at_lower_bracket == q(41, 21));
  CHECK(check_bounds(2));
  CHECK(check_bounds(3));
  CHECK(check_bounds(1000));
  CHECK_THROWS_AS(check_bounds(1), std::invalid_argument);
}

TEST_CASE("bound_series_envelope") {
  const Envelope e = bound_series_envelope(2, q(1, 4));
  CHECK(e.upper == q(7, 4));
  CHECK(e.lower == q(12, 7));
  const Envelope tiny = bound_series_envelope(2, q(1, 1000000));
  CHECK(abs(tiny.lower - 1) < q(1, 100000));
  CHECK(abs(tiny.upper - 1) < q(1, 100000));
  CHECK_THROWS_AS(bound_series_envelope(2, q(1, 2)), std::domain_error);
  CHECK_THROWS_AS(bound_series_envelope(2, 0), std::domain_error);
}

TEST_CASE("envelope sandwiches the certified series interval") {
  for (int k : {2, 3}) {
    const mpq_class rho = solve_rho(k, 20).lo;
    for (const mpq_class& x : {q(1, 10), q(1, 5), q(1, 4), rho}) {
      if (k * x >= 1) continue;
      CHECK_MESSAGE(envelope_contains_series(k, x, 80),
                    "k=" << k << " x=" << x.get_str());
    }
  }
}

TEST_CASE("the closed-form bracket is certified for k = 2..64") {
  for (int k = 2; k <= 64; ++k) {
    const mpq_class lo(2, 4 * k - 1);
    const mpq_class hi(1, 2 * k - 1);
    RootSide lo_side = RootSide::unknown;
    RootSide hi_side = RootSide::unknown;
    for (std::size_t N = 16; N <= 4096 && (lo_side == RootSide::unknown ||
                                          hi_side == RootSide::unknown);
         N *= 2) {
      const TruncatedSeries s(k, N);
      lo_side = locate_against_two(s, lo);
      hi_side = locate_against_two(s, hi);
    }
    CHECK_MESSAGE(lo_side == RootSide::below, "k=" << k);
    CHECK_MESSAGE(hi_side == RootSide::above, "k=" << k);
  }
}

TEST_CASE("alpha_k enclosures are strictly inside (2k-1, 2k-1/2)") {
  for (int k = 2; k <= 16; ++k) {
    const RationalEnclosure alpha = alpha_from_rho(solve_rho(k, 12));
    CHECK(alpha.lo > 2 * k - 1);
    CHECK(alpha.hi < mpq_class(4 * k - 1, 2));
  }
}

TEST_CASE("doubling the truncation keeps enclosures consistent") {
  for (int k : {2, 3, 6}) {
    const RationalEnclosure first = solve_rho(k, 25);
    SolveOptions doubled;
    doubled.min_terms = 2 * first.terms_used;
    const RationalEnclosure second = solve_rho(k, 25, doubled);
    CHECK(second.terms_used >= 2 * first.terms_used);
    CHECK(first.intersects(second));
  }
}

TEST_CASE("term ceiling surfaces as ComputationLimit") {
  SolveOptions tight;
  tight.max_terms = 4;
  CHECK_THROWS_AS(solve_rho(2, 30, tight), ComputationLimit);
}

TEST_CASE("circle_scan") {
  const CircleScanReport report = circle_scan(2, 360);
  CHECK(report.passed);
  CHECK(report.min_distance > 0.1);
  CHECK(report.min_distance == doctest::Approx(0.1942).epsilon(1e-3));
  CHECK(report.distance_at_pi > 0);
  CHECK(report.psi.size() == report.distance.size());
  for (double psi : report.psi) CHECK(std::abs(psi) >= 0.1);

  SUBCASE("values at psi and -psi agree") {
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < report.psi.size(); ++i) {
      for (std::size_t j = 0; j < report.psi.size(); ++j) {
        if (std::abs(report.psi[i] + report.psi[j]) < 1e-12) {
          CHECK(report.distance[i] == doctest::Approx(report.distance[j]).epsilon(1e-12));
          ++pairs;
        }
      }
    }
    CHECK(pairs > 300);
  }
  SUBCASE("parallel matches the serial reference") {
    const CircleScanReport ref = serial::circle_scan(2, 360);
    REQUIRE(ref.distance.size() == report.distance.size());
    for (std::size_t i = 0; i < ref.distance.size(); ++i) {
      CHECK(report.distance[i] == doctest::Approx(ref.distance[i]).epsilon(1e-12));
    }
    CHECK(ref.min_distance == doctest::Approx(report.min_distance).epsilon(1e-12));
  }
  CHECK_THROWS_AS(circle_scan(2, 4), std::invalid_argument);
  CHECK(circle_scan(3, 90).passed);
}

TEST_CASE("p_2(n) C_2 / alpha_2^(n+1) approaches 1 monotonically") {
  const RationalEnclosure rho = solve_rho(2, 40);
  const RationalEnclosure alpha = alpha_from_rho(rho);
  const RationalEnclosure C = compute_C(2, rho, 30);
  const std::vector<double> errors = amplitude_errors(2, alpha, C, 10, 40);
  REQUIRE(errors.size() == 31);
  for (std::size_t i = 1; i < errors.size(); ++i) CHECK(errors[i] < errors[i - 1]);
  CHECK(errors.back() < 1e-3);
}

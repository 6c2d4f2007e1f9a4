#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "palstar/counting.hpp"
#include "palstar/factorizer.hpp"
#include "palstar/reference_data.hpp"
#include "palstar/words.hpp"

using namespace palstar;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> values) {
  std::vector<mpz_class> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("u_sequence") {
  CHECK(u_sequence(2, 4).terms == ints({1, 2, 2, 4, 6}));
  CHECK(u_sequence(3, 3).terms == ints({1, 3, 6, 18}));
  const mpz_class brute = count_unbordered_bruteforce(Alphabet(2), 7);
  CHECK(brute == 40);
  CHECK(u_sequence(2, 7).terms[7] == brute);
  CHECK(u_sequence(5, 0).terms == ints({1}));
  CHECK(u_sequence(2, 4).kind == SequenceKind::unbordered);
  CHECK_THROWS_AS(u_sequence(1, 4), std::invalid_argument);
}

TEST_CASE("p_sequence reproduces the published table") {
  for (std::size_t row = 0; row < reference::kTableAlphabets.size(); ++row) {
    const CountSequence p = p_sequence(reference::kTableAlphabets[row], 10);
    CHECK(p.kind == SequenceKind::palstar);
    for (std::size_t n = 0; n <= 10; ++n) {
      CHECK(p.terms[n] == mpz_class(std::string(reference::kPalstarTable[row][n])));
    }
  }
  CHECK(p_sequence(3, 5).terms.back() == 2349);
  CHECK(p_sequence(4, 10).terms[10] == 258971536);
  CHECK_THROWS_AS(p_sequence(0, 3), std::invalid_argument);
}

TEST_CASE("sequence invariants") {
  for (int k = 2; k <= 6; ++k) {
    for (const CountSequence& s : {u_sequence(k, 40), p_sequence(k, 40)}) {
      CHECK(s.terms[0] == 1);
      CHECK(s.terms[1] == k);
      CHECK(s.degree() == 40);
      for (const mpz_class& t : s.terms) CHECK(t > 0);
    }
  }
}

TEST_CASE("symbolic sequences") {
  const std::vector<KPolynomial> u = u_poly(4);
  const std::vector<KPolynomial> p = p_poly(4);
  CHECK(p[0] == KPolynomial{1});
  CHECK(p[1] == KPolynomial{0, 1});
  CHECK(p[2] == KPolynomial{0, -1, 2});
  CHECK(p[3] == KPolynomial{0, 0, -3, 4});
  CHECK(p[4] == KPolynomial{0, 1, 0, -8, 8});
  CHECK(p[4].to_string() == "8k^4 - 8k^3 + k");
  CHECK(u[2] == KPolynomial{0, -1, 1});
  CHECK(u[3] == KPolynomial{0, 0, -1, 1});
  CHECK(u[4] == KPolynomial{0, 1, -1, -1, 1});
  CHECK(u[4].to_string() == "k^4 - k^3 - k^2 + k");
  CHECK(u_poly(0).size() == 1);
}

TEST_CASE("symbolic sequences evaluate to the integer ones") {
  const std::vector<KPolynomial> u = u_poly(30);
  const std::vector<KPolynomial> p = p_poly(30);
  for (int k = 2; k <= 5; ++k) {
    const CountSequence ui = u_sequence(k, 30);
    const CountSequence pi = p_sequence(k, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      CHECK(u[n].evaluate(k) == ui.terms[n]);
      CHECK(p[n].evaluate(k) == pi.terms[n]);
    }
  }
}

TEST_CASE("p_poly(n) has degree n and leading coefficient 2^(n-1)") {
  const std::vector<KPolynomial> p = p_poly(20);
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(p[n].degree() == static_cast<int>(n));
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, n - 1);
    CHECK(p[n].leading_coefficient() == expected);
  }
}

TEST_CASE("consecutive ratios lie strictly between 2k-1 and 2k-1/2") {
  for (int k = 2; k <= 10; ++k) {
    const CountSequence p = p_sequence(k, 50);
    for (std::size_t n = 5; n <= 49; ++n) {
      CHECK((2 * k - 1) * p.terms[n] < p.terms[n + 1]);
      CHECK(2 * p.terms[n + 1] < (4 * k - 1) * p.terms[n]);
    }
  }
}

TEST_CASE("small oracle equivalence") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(u_sequence(2, 10).terms[n] == count_unbordered_bruteforce(Alphabet(2), n));
  }
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(p_sequence(2, 5).terms[n] == count_palstars_bruteforce(Alphabet(2), n));
  }
}

TEST_CASE("verify_gf_identity") {
  CHECK(verify_gf_identity(2, 200));
  CHECK(verify_gf_identity(3, 100));
  CHECK(verify_gf_identity(7, 0));
  const CountSequence u = u_sequence(2, 0);
  const CountSequence p = p_sequence(2, 0);
  CHECK(u.terms[0] * p.terms[0] == 2 * p.terms[0] - 1);
}

TEST_CASE("cauchy_product: parallel matches serial") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<mpz_class> a(1 + rng() % 60), b(1 + rng() % 60);
    for (auto& x : a) x = mpz_class(std::to_string(rng())) * (rng() % 2 ? 1 : -1);
    for (auto& x : b) x = mpz_class(std::to_string(rng())) * mpz_class(std::to_string(rng()));
    const std::size_t N = rng() % 130;
    CHECK(cauchy_product(a, b, N) == serial::cauchy_product(a, b, N));
  }
  CHECK(cauchy_product(ints({1, 1}), ints({1, 1}), 3) == ints({1, 2, 1, 0}));
}

TEST_CASE("KPolynomial arithmetic") {
  const KPolynomial k = KPolynomial::k();
  const KPolynomial one{1};
  CHECK((k - one) * (k + one) == KPolynomial{-1, 0, 1});
  CHECK((k - k).is_zero());
  CHECK((k - k).degree() == -1);
  CHECK(KPolynomial{0, 0, 0}.is_zero());
  CHECK(KPolynomial{-1, 0, 1}.to_string() == "k^2 - 1");
  CHECK(KPolynomial{0, -2}.to_string() == "-2k");
  CHECK(KPolynomial{}.to_string() == "0");
  CHECK(KPolynomial{3, 0, 1}.evaluate(10) == 103);
  CHECK(KPolynomial{3, 0, 1}.coefficient(7) == 0);
}

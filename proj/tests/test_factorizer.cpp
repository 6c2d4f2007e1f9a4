#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "palstar/enumeration.hpp"
#include "palstar/factorizer.hpp"
#include "palstar/oracles.hpp"

using namespace palstar;

namespace {

Word w(const char* letters) { return Word::from_letters(letters); }

std::vector<std::string> factor_letters(const char* letters) {
  std::vector<std::string> out;
  for (const Word& f : factor_palstar(w(letters)).factors) {
    out.push_back(f.to_letters());
  }
  return out;
}

}  // namespace

TEST_CASE("is_even_palindrome") {
  CHECK(is_even_palindrome(w("abba")));
  CHECK_FALSE(is_even_palindrome(w("radar")));
  CHECK_FALSE(is_even_palindrome(w("ab")));
  CHECK_FALSE(is_even_palindrome(SymbolSpan{}));
  CHECK(is_even_palindrome(w("aa")));
}

TEST_CASE("even-palindrome table answers every window like a direct check") {
  auto window_mismatch = [](SymbolSpan x) {
    const EvenPalindromeTable table(x);
    for (std::size_t i = 0; i <= x.size(); ++i) {
      for (std::size_t j = i; j <= x.size(); ++j) {
        if (table.is_even_palindrome(i, j) !=
            is_even_palindrome(x.subspan(i, j - i))) {
          return true;
        }
      }
    }
    return false;
  };
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(count_words_if(Alphabet(2), n, window_mismatch) == 0);
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<Symbol> symbols(rng() % 40);
    for (Symbol& s : symbols) s = rng() % k;
    CHECK_FALSE(window_mismatch(symbols));
  }
}

TEST_CASE("is_palstar") {
  CHECK(is_palstar(w("appall")));
  CHECK(is_palstar(w("noon")));
  CHECK(is_palstar(w("assailli")));
  CHECK_FALSE(is_palstar(w("ab")));
  CHECK(is_palstar(SymbolSpan{}));
  CHECK_FALSE(is_palstar(w("radar")));
}

TEST_CASE("odd-length words are never palstars, k=2") {
  for (std::size_t n = 1; n <= 11; n += 2) {
    CHECK(count_words_if(Alphabet(2), n,
                         [](SymbolSpan x) { return is_palstar(x); }) == 0);
  }
}

TEST_CASE("is_palstar agrees with the definitional recursion") {
  auto mismatch = [](SymbolSpan x) {
    return is_palstar(x) != oracle::is_palstar_naive(x);
  };
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK_MESSAGE(count_words_if(Alphabet(2), n, mismatch) == 0, "k=2 n=" << n);
  }
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK_MESSAGE(count_words_if(Alphabet(3), n, mismatch) == 0, "k=3 n=" << n);
  }
}

TEST_CASE("factor_palstar") {
  CHECK(factor_letters("assailli") == std::vector<std::string>{"assa", "illi"});
  CHECK(oracle::count_prime_factorizations(w("assailli")) == 1);
  CHECK(factor_letters("noon") == std::vector<std::string>{"noon"});
  CHECK(factor_letters("appall") == std::vector<std::string>{"appa", "ll"});
  CHECK(factor_palstar(Word(Alphabet(2))).factors.empty());
  CHECK(factor_palstar(w("assailli")).to_string() == "assa|illi");
}

TEST_CASE("factor_palstar rejects non-palstars") {
  CHECK_THROWS_AS(factor_palstar(w("ab")), NotAPalstar);
  CHECK_THROWS_AS(factor_palstar(w("aabc")), NotAPalstar);
  CHECK_THROWS_AS(factor_palstar(w("radar")), NotAPalstar);
  CHECK_THROWS_AS(factor_palstar(w("aab")), NotAPalstar);
}

TEST_CASE("is_prime_palstar") {
  CHECK(is_prime_palstar(w("noon")));
  CHECK_FALSE(is_prime_palstar(w("appall")));
  CHECK(is_prime_palstar(w("abba")));
  CHECK(oracle::is_prime_palstar_naive(w("abba")));
  CHECK_FALSE(is_prime_palstar(SymbolSpan{}));
  CHECK_FALSE(is_prime_palstar(w("ab")));
  CHECK_FALSE(is_prime_palstar(w("aaaa")));
}

TEST_CASE("prime does not mean unbordered") {
  CHECK(is_prime_palstar(w("noon")));
  CHECK_FALSE(is_unbordered(w("noon")));
}

TEST_CASE("is_prime_palstar agrees with the definitional check, k=2, n <= 12") {
  for (std::size_t n = 0; n <= 12; n += 2) {
    CHECK(count_words_if(Alphabet(2), n, [](SymbolSpan x) {
            return is_prime_palstar(x) != oracle::is_prime_palstar_naive(x);
          }) == 0);
  }
}

TEST_CASE("brute-force palstar counts") {
  CHECK(count_palstars_bruteforce(Alphabet(2), 3) == 20);
  CHECK(count_palstars_bruteforce(Alphabet(3), 2) == 15);
  CHECK(count_palstars_bruteforce(Alphabet(2), 0) == 1);
  CHECK_THROWS_AS(count_palstars_bruteforce(Alphabet(2), 20, {1'000'000}),
                  BudgetExceeded);
}

TEST_CASE("brute-force prime palstar counts") {
  CHECK(count_prime_palstars_bruteforce(Alphabet(2), 4) == 6);
  CHECK(count_prime_palstars_bruteforce(Alphabet(2), 1) == 2);
  CHECK(count_prime_palstars_bruteforce(Alphabet(3), 2) == 6);
  CHECK(count_prime_palstars_bruteforce(Alphabet(2), 0) == 0);
}

TEST_CASE("prime palstars of length 2n are as many as unbordered words of length n") {
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK_MESSAGE(count_prime_palstars_bruteforce(Alphabet(2), n) ==
                      count_unbordered_bruteforce(Alphabet(2), n),
                  "k=2 n=" << n);
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK_MESSAGE(count_prime_palstars_bruteforce(Alphabet(3), n) ==
                      count_unbordered_bruteforce(Alphabet(3), n),
                  "k=3 n=" << n);
  }
}

TEST_CASE("parallel palstar counts match the serial kernel") {
  for (int k : {2, 3}) {
    for (std::size_t n = 0; n <= (k == 2 ? 5u : 3u); ++n) {
      const auto serial_count = serial::count_words_if(
          Alphabet(k), 2 * n, [](SymbolSpan x) { return is_palstar(x); });
      CHECK(count_palstars_bruteforce(Alphabet(k), n) ==
            mpz_class(std::to_string(serial_count)));
    }
  }
}

TEST_CASE("structure: round trip, unique factorization, prefix code, k=2") {
  const oracle::StructureReport report = oracle::check_structure(Alphabet(2), 12);
  CHECK(report.round_trip_failures == 0);
  CHECK(report.uniqueness_failures == 0);
  CHECK(report.prefix_failures == 0);
  // Palstars of lengths 0, 2, ..., 12: 1+2+6+20+66+220+732.
  CHECK(report.palstars_checked == 1047);
  // Prime palstars of lengths 2..12 are counted by u_2(1..6) = 2,2,4,6,12,20.
  CHECK(report.primes_checked == 46);
}

TEST_CASE("round trip on random palstars over larger alphabets") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    std::vector<Symbol> symbols;
    const int pieces = static_cast<int>(rng() % 5);
    for (int p = 0; p < pieces; ++p) {
      std::vector<Symbol> half(1 + rng() % 4);
      for (Symbol& s : half) s = rng() % k;
      symbols.insert(symbols.end(), half.begin(), half.end());
      symbols.insert(symbols.end(), half.rbegin(), half.rend());
    }
    const Word word(Alphabet(k), symbols);
    REQUIRE(is_palstar(word));
    const Factorization f = factor_palstar(word);
    std::vector<Symbol> joined;
    for (const Word& factor : f.factors) {
      CHECK(is_prime_palstar(factor));
      CHECK(oracle::is_prime_palstar_naive(factor));
      joined.insert(joined.end(), factor.symbols().begin(),
                    factor.symbols().end());
    }
    CHECK(joined == symbols);
    CHECK(oracle::count_prime_factorizations(word) == 1);
  }
}

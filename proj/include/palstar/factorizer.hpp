#ifndef PALSTAR_FACTORIZER_HPP
#define PALSTAR_FACTORIZER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "palstar/words.hpp"

namespace palstar {

/// Raised by factor_palstar when the word is not a concatenation of even
/// palindromes.
class NotAPalstar : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// O(1) queries "is w[first, last) a nonempty even palindrome" after a
/// linear-time Manacher pass over w.
class EvenPalindromeTable {
 public:
  explicit EvenPalindromeTable(SymbolSpan w);

  bool is_even_palindrome(std::size_t first, std::size_t last) const noexcept;

  /// radius(c): half-length of the longest even palindrome centred between
  /// positions c-1 and c.
  std::size_t radius(std::size_t c) const noexcept { return radius_[c]; }

 private:
  std::vector<std::size_t> radius_;
};

/// Member of P: nonempty, even length, equal to its reversal.
bool is_even_palindrome(SymbolSpan w) noexcept;

/// Membership in P*. The empty word is a palstar.
bool is_palstar(SymbolSpan w);

bool is_prime_palstar(SymbolSpan w);

/// Lengths of the prime-palstar factors of w, left to right.
/// Throws NotAPalstar if w is not a palstar.
std::vector<std::size_t> prime_factor_lengths(SymbolSpan w);

/// The unique factorization of a palstar into prime palstars.
struct Factorization {
  std::vector<Word> factors;

  /// Factors joined by sep, e.g. "assa|illi". Empty for the empty word.
  std::string to_string(char sep = '|') const;
};

/// Greedy factorization: repeatedly strips the shortest nonempty palstar
/// prefix, which is always prime since prime palstars form a prefix code.
Factorization factor_palstar(const Word& w);

/// Palstars of length 2n, by exhaustive enumeration.
mpz_class count_palstars_bruteforce(Alphabet a, std::size_t n,
                                    EnumerationBudget budget = {});

/// Prime palstars of length 2n, by exhaustive enumeration.
mpz_class count_prime_palstars_bruteforce(Alphabet a, std::size_t n,
                                          EnumerationBudget budget = {});

}  // namespace palstar

#endif  // PALSTAR_FACTORIZER_HPP

#ifndef PALSTAR_ORACLES_HPP
#define PALSTAR_ORACLES_HPP

// Definitional (slow) checks used to validate the fast paths. None of these
// call into the failure function, the Manacher table or greedy stripping.

#include <cstddef>
#include <cstdint>

#include "palstar/words.hpp"

namespace palstar::oracle {

/// Longest-border lengths by comparing every prefix with every suffix.
BorderArray border_array_naive(SymbolSpan w);

/// Length of the shortest border of w, or 0 if unbordered.
std::size_t shortest_border(SymbolSpan w);

/// Membership in P* by memoized recursion over even-palindrome prefixes,
/// each tested by direct reversal.
bool is_palstar_naive(SymbolSpan w);

/// Nonempty palstar admitting no split into two nonempty palstars.
bool is_prime_palstar_naive(SymbolSpan w);

/// Number of distinct ways to write w as a concatenation of prime palstars
/// (1 for the empty word).
std::uint64_t count_prime_factorizations(SymbolSpan w);

struct StructureReport {
  std::uint64_t palstars_checked = 0;
  std::uint64_t primes_checked = 0;
  /// Greedy factorization does not concatenate back to the word, or has a
  /// factor that is not prime.
  std::uint64_t round_trip_failures = 0;
  /// Palstars with a number of prime factorizations other than one, or
  /// whose unique factorization differs from the greedy one.
  std::uint64_t uniqueness_failures = 0;
  /// Prime palstars having a proper prefix that is also a prime palstar.
  std::uint64_t prefix_failures = 0;

  StructureReport& operator+=(const StructureReport& other) noexcept {
    palstars_checked += other.palstars_checked;
    primes_checked += other.primes_checked;
    round_trip_failures += other.round_trip_failures;
    uniqueness_failures += other.uniqueness_failures;
    prefix_failures += other.prefix_failures;
    return *this;
  }

  std::uint64_t violations() const noexcept {
    return round_trip_failures + uniqueness_failures + prefix_failures;
  }
};

/// Exhaustive structure check over every even length 0..max_length.
StructureReport check_structure(Alphabet a, std::size_t max_length,
                                EnumerationBudget budget = {});

}  // namespace palstar::oracle

#endif  // PALSTAR_ORACLES_HPP

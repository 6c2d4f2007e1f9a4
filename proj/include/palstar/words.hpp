#ifndef PALSTAR_WORDS_HPP
#define PALSTAR_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace palstar {

using Symbol = std::uint32_t;
using SymbolSpan = std::span<const Symbol>;

/// A finite alphabet {0, 1, ..., k-1}. Always has at least two letters.
class Alphabet {
 public:
  explicit Alphabet(int k);

  int size() const noexcept { return k_; }
  bool contains(Symbol s) const noexcept {
    return s < static_cast<Symbol>(k_);
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int k_;
};

/// Finite sequence of symbols drawn from an alphabet.
///
/// Letters 'a', 'b', ... map onto 0, 1, ... for human-readable input and
/// output; the alphabet size caps which letters are accepted.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Symbol> symbols);

  /// Parses lowercase ASCII letters. Throws std::invalid_argument on any
  /// character outside 'a' .. 'a'+k-1.
  static Word from_letters(std::string_view letters, Alphabet alphabet);

  /// Uses the smallest alphabet (at least 2) covering every letter.
  static Word from_letters(std::string_view letters);

  std::string to_letters() const;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  SymbolSpan symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  operator SymbolSpan() const noexcept { return symbols_; }  // NOLINT

  /// Subword [first, first + count).
  Word slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

std::string to_letters(SymbolSpan w);

/// values[i] is the length of the longest border of the prefix of length i+1.
struct BorderArray {
  std::vector<std::size_t> values;

  friend bool operator==(const BorderArray&, const BorderArray&) = default;
};

/// Failure function, linear time.
BorderArray border_array(SymbolSpan w);

/// True iff w has no border. Throws std::domain_error for the empty word.
bool is_unbordered(SymbolSpan w);

bool is_palindrome(SymbolSpan w) noexcept;

/// Refusal raised by exhaustive enumeration when k^n exceeds the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cap on the number of candidate words an oracle may enumerate.
struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultMaxWords = 100'000'000;

  std::uint64_t max_words = kDefaultMaxWords;

  /// Reads PALSTAR_BUDGET from the environment, falling back to the default.
  static EnumerationBudget from_environment();

  /// Returns k^n, or throws BudgetExceeded if it exceeds max_words.
  std::uint64_t admit(const Alphabet& a, std::size_t n) const;
};

/// All k^n words of length n in lexicographic order, as a forward range.
///
/// Dereferencing yields a span valid until the iterator is advanced.
class WordRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SymbolSpan;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = SymbolSpan;

    iterator() = default;
    iterator(Symbol k, std::size_t n) : k_(k), current_(n, 0) {}

    SymbolSpan operator*() const noexcept { return current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    Symbol k_ = 2;
    std::vector<Symbol> current_;
    bool done_ = false;
  };

  WordRange(Alphabet a, std::size_t n) : alphabet_(a), length_(n) {}

  iterator begin() const {
    return iterator(static_cast<Symbol>(alphabet_.size()), length_);
  }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  Alphabet alphabet_;
  std::size_t length_;
};

WordRange enumerate_words(Alphabet a, std::size_t n);

/// Exact number of unbordered words of length n, by exhaustive enumeration.
/// Requires n >= 1 and k^n within budget.
mpz_class count_unbordered_bruteforce(
    Alphabet a, std::size_t n, EnumerationBudget budget = {});

}  // namespace palstar

#endif  // PALSTAR_WORDS_HPP

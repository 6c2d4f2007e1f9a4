#include "palstar/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "palstar/enumeration.hpp"

namespace palstar {

Alphabet::Alphabet(int k) : k_(k) {
  if (k < 2) {
    throw std::invalid_argument("alphabet needs at least 2 letters, got k=" +
                                std::to_string(k));
  }
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  for (Symbol s : symbols_) {
    if (!alphabet_.contains(s)) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_.size()));
    }
  }
}

Word Word::from_letters(std::string_view letters, Alphabet alphabet) {
  std::vector<Symbol> symbols;
  symbols.reserve(letters.size());
  for (char c : letters) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument(std::string("not a lowercase letter: '") +
                                  c + "'");
    }
    symbols.push_back(static_cast<Symbol>(c - 'a'));
  }
  return Word(alphabet, std::move(symbols));
}

Word Word::from_letters(std::string_view letters) {
  int k = 2;
  for (char c : letters) {
    if (c >= 'a' && c <= 'z') k = std::max(k, c - 'a' + 1);
  }
  return from_letters(letters, Alphabet(k));
}

std::string to_letters(SymbolSpan w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) {
    out.push_back(s < 26 ? static_cast<char>('a' + s) : '?');
  }
  return out;
}

std::string Word::to_letters() const { return palstar::to_letters(symbols_); }

Word Word::slice(std::size_t first, std::size_t count) const {
  if (first > symbols_.size() || count > symbols_.size() - first) {
    throw std::out_of_range("Word::slice out of range");
  }
  auto begin = symbols_.begin() + static_cast<std::ptrdiff_t>(first);
  return Word(alphabet_, std::vector<Symbol>(
                             begin, begin + static_cast<std::ptrdiff_t>(count)));
}

BorderArray border_array(SymbolSpan w) {
  BorderArray result;
  result.values.assign(w.size(), 0);
  std::size_t border = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (border > 0 && w[i] != w[border]) {
      border = result.values[border - 1];
    }
    if (w[i] == w[border]) ++border;
    result.values[i] = border;
  }
  return result;
}

bool is_unbordered(SymbolSpan w) {
  if (w.empty()) {
    throw std::domain_error("borderedness is undefined for the empty word");
  }
  return border_array(w).values.back() == 0;
}

bool is_palindrome(SymbolSpan w) noexcept {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                    w.rbegin());
}

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget budget;
  if (const char* env = std::getenv("PALSTAR_BUDGET")) {
    std::uint64_t value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) {
      budget.max_words = value;
    }
  }
  return budget;
}

std::uint64_t EnumerationBudget::admit(const Alphabet& a, std::size_t n) const {
  const auto k = static_cast<std::uint64_t>(a.size());
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (words > max_words / k) {
      throw BudgetExceeded("enumerating " + std::to_string(a.size()) + "^" +
                           std::to_string(n) + " words exceeds budget of " +
                           std::to_string(max_words));
    }
    words *= k;
  }
  if (words > max_words) {
    throw BudgetExceeded("enumeration exceeds budget of " +
                         std::to_string(max_words));
  }
  return words;
}

WordRange::iterator& WordRange::iterator::operator++() {
  if (!detail::advance_suffix(current_, 0, k_)) done_ = true;
  return *this;
}

WordRange enumerate_words(Alphabet a, std::size_t n) { return WordRange(a, n); }

mpz_class count_unbordered_bruteforce(Alphabet a, std::size_t n,
                                      EnumerationBudget budget) {
  if (n == 0) {
    throw std::invalid_argument("unbordered counts start at length 1");
  }
  budget.admit(a, n);
  const std::uint64_t count = count_words_if(
      a, n, [](SymbolSpan w) { return border_array(w).values.back() == 0; });
  return mpz_class(std::to_string(count));
}

}  // namespace palstar

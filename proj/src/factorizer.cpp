#include "palstar/factorizer.hpp"

#include <algorithm>

#include "palstar/enumeration.hpp"

namespace palstar {

EvenPalindromeTable::EvenPalindromeTable(SymbolSpan w)
    : radius_(w.size() + 1, 0) {
  const auto n = static_cast<std::ptrdiff_t>(w.size());
  // [left, right] is the rightmost even palindrome found so far.
  std::ptrdiff_t left = 0;
  std::ptrdiff_t right = -1;
  for (std::ptrdiff_t c = 0; c < n; ++c) {
    std::ptrdiff_t r = 0;
    if (c <= right) {
      r = std::min(static_cast<std::ptrdiff_t>(radius_[left + right - c + 1]),
                   right - c + 1);
    }
    while (c + r < n && c - r - 1 >= 0 && w[c + r] == w[c - r - 1]) ++r;
    radius_[c] = static_cast<std::size_t>(r);
    if (c + r - 1 > right) {
      left = c - r;
      right = c + r - 1;
    }
  }
}

bool EvenPalindromeTable::is_even_palindrome(std::size_t first,
                                             std::size_t last) const noexcept {
  if (last <= first || last >= radius_.size()) return false;
  const std::size_t len = last - first;
  if (len % 2 != 0) return false;
  return radius_[first + len / 2] >= len / 2;
}

bool is_even_palindrome(SymbolSpan w) noexcept {
  return !w.empty() && w.size() % 2 == 0 && is_palindrome(w);
}

bool is_palstar(SymbolSpan w) {
  if (w.size() % 2 != 0) return false;
  const EvenPalindromeTable table(w);
  std::vector<char> reachable(w.size() + 1, 0);
  reachable[0] = 1;
  for (std::size_t j = 2; j <= w.size(); j += 2) {
    for (std::size_t i = 0; i < j; i += 2) {
      if (reachable[i] && table.is_even_palindrome(i, j)) {
        reachable[j] = 1;
        break;
      }
    }
  }
  return reachable[w.size()] != 0;
}

namespace {

// Length of the shortest nonempty palstar prefix of w[from, n), or 0. Its
// first even-palindrome piece is itself a palstar prefix, so it is the
// shortest even-palindrome prefix.
std::size_t shortest_palstar_prefix(const EvenPalindromeTable& table,
                                    std::size_t from, std::size_t n) {
  for (std::size_t j = from + 2; j <= n; j += 2) {
    if (table.is_even_palindrome(from, j)) return j - from;
  }
  return 0;
}

}  // namespace

std::vector<std::size_t> prime_factor_lengths(SymbolSpan w) {
  const EvenPalindromeTable table(w);
  std::vector<std::size_t> lengths;
  std::size_t pos = 0;
  while (pos < w.size()) {
    const std::size_t len =
        w.size() % 2 == 0
            ? shortest_palstar_prefix(table, pos, w.size())
            : 0;
    if (len == 0) {
      throw NotAPalstar("not a palstar: no even-palindrome factorization of '" +
                        to_letters(w.subspan(pos)) + "'");
    }
    lengths.push_back(len);
    pos += len;
  }
  return lengths;
}

bool is_prime_palstar(SymbolSpan w) {
  if (w.empty() || !is_palstar(w)) return false;
  return prime_factor_lengths(w).size() == 1;
}

std::string Factorization::to_string(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += factors[i].to_letters();
  }
  return out;
}

Factorization factor_palstar(const Word& w) {
  Factorization result;
  std::size_t pos = 0;
  for (std::size_t len : prime_factor_lengths(w)) {
    result.factors.push_back(w.slice(pos, len));
    pos += len;
  }
  return result;
}

mpz_class count_palstars_bruteforce(Alphabet a, std::size_t n,
                                    EnumerationBudget budget) {
  budget.admit(a, 2 * n);
  const std::uint64_t count =
      count_words_if(a, 2 * n, [](SymbolSpan w) { return is_palstar(w); });
  return mpz_class(std::to_string(count));
}

mpz_class count_prime_palstars_bruteforce(Alphabet a, std::size_t n,
                                          EnumerationBudget budget) {
  budget.admit(a, 2 * n);
  const std::uint64_t count = count_words_if(
      a, 2 * n, [](SymbolSpan w) { return is_prime_palstar(w); });
  return mpz_class(std::to_string(count));
}

}  // namespace palstar

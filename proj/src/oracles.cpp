#include "palstar/oracles.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "palstar/enumeration.hpp"
#include "palstar/factorizer.hpp"

namespace palstar::oracle {

namespace {

bool equal_parts(SymbolSpan w, std::size_t len) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len),
                    w.end() - static_cast<std::ptrdiff_t>(len));
}

bool is_even_palindrome_direct(SymbolSpan w) {
  if (w.empty() || w.size() % 2 != 0) return false;
  std::vector<Symbol> reversed(w.rbegin(), w.rend());
  return std::equal(w.begin(), w.end(), reversed.begin());
}

// palstar[i][j] for every even-length window w[i, j).
class PalstarWindows {
 public:
  explicit PalstarWindows(SymbolSpan w) : n_(w.size()), table_((n_ + 1) * (n_ + 1), 0) {
    for (std::size_t len = 0; len <= n_; len += 2) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        bool ok = len == 0;
        for (std::size_t m = i + 2; !ok && m <= j; m += 2) {
          ok = is_even_palindrome_direct(w.subspan(i, m - i)) && at(m, j);
        }
        table_[i * (n_ + 1) + j] = ok;
      }
    }
  }

  bool at(std::size_t i, std::size_t j) const {
    return table_[i * (n_ + 1) + j] != 0;
  }

  bool prime(std::size_t i, std::size_t j) const {
    if (j <= i || !at(i, j)) return false;
    for (std::size_t m = i + 2; m < j; m += 2) {
      if (at(i, m) && at(m, j)) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<char> table_;
};

// Lengths of the unique prime factorization, or nullopt when there are zero
// or several.
std::optional<std::vector<std::size_t>> unique_prime_factorization(
    SymbolSpan w) {
  const PalstarWindows windows(w);
  const std::size_t n = w.size();
  std::vector<std::uint64_t> ways(n + 1, 0);
  std::vector<std::size_t> last_cut(n + 1, 0);
  ways[0] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (ways[i] > 0 && windows.prime(i, j)) {
        ways[j] += ways[i];
        last_cut[j] = i;
      }
    }
  }
  if (ways[n] != 1) return std::nullopt;
  std::vector<std::size_t> lengths;
  for (std::size_t j = n; j > 0; j = last_cut[j]) {
    lengths.push_back(j - last_cut[j]);
  }
  std::reverse(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

BorderArray border_array_naive(SymbolSpan w) {
  BorderArray result;
  result.values.assign(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const SymbolSpan prefix = w.first(i + 1);
    for (std::size_t len = i; len > 0; --len) {
      if (equal_parts(prefix, len)) {
        result.values[i] = len;
        break;
      }
    }
  }
  return result;
}

std::size_t shortest_border(SymbolSpan w) {
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (equal_parts(w, len)) return len;
  }
  return 0;
}

bool is_palstar_naive(SymbolSpan w) {
  if (w.size() % 2 != 0) return false;
  return PalstarWindows(w).at(0, w.size());
}

bool is_prime_palstar_naive(SymbolSpan w) {
  if (w.empty() || w.size() % 2 != 0) return false;
  return PalstarWindows(w).prime(0, w.size());
}

std::uint64_t count_prime_factorizations(SymbolSpan w) {
  const PalstarWindows windows(w);
  std::vector<std::uint64_t> ways(w.size() + 1, 0);
  ways[0] = 1;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (ways[i] > 0 && windows.prime(i, j)) ways[j] += ways[i];
    }
  }
  return ways[w.size()];
}

StructureReport check_structure(Alphabet a, std::size_t max_length,
                                EnumerationBudget budget) {
  StructureReport total;
  for (std::size_t len = 0; len <= max_length; len += 2) {
    budget.admit(a, len);
    total += transform_reduce_words<StructureReport>(
        a, len, [](SymbolSpan w) {
          StructureReport r;
          const PalstarWindows windows(w);
          const bool palstar = windows.at(0, w.size());
          std::optional<std::vector<std::size_t>> greedy;
          try {
            greedy = prime_factor_lengths(w);
          } catch (const NotAPalstar&) {
          }
          if (!palstar) {
            if (greedy) ++r.round_trip_failures;
            return r;
          }
          ++r.palstars_checked;
          if (!greedy) {
            ++r.round_trip_failures;
            return r;
          }

          std::size_t pos = 0;
          bool factors_ok = true;
          for (std::size_t len : *greedy) {
            factors_ok = factors_ok && windows.prime(pos, pos + len);
            pos += len;
          }
          if (!factors_ok || pos != w.size()) ++r.round_trip_failures;

          const auto unique = unique_prime_factorization(w);
          if (!unique || *unique != *greedy) ++r.uniqueness_failures;

          if (windows.prime(0, w.size())) {
            ++r.primes_checked;
            for (std::size_t m = 2; m < w.size(); m += 2) {
              if (windows.prime(0, m)) {
                ++r.prefix_failures;
                break;
              }
            }
          }
          return r;
        });
  }
  return total;
}

}  // namespace palstar::oracle

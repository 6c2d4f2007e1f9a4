#ifndef PALSTAR_ENUMERATION_HPP
#define PALSTAR_ENUMERATION_HPP

// Exhaustive word-counting kernels. The OpenMP kernel partitions the k^n
// words by a fixed-length prefix; each prefix block is enumerated by one
// thread, so the total is independent of scheduling. The serial kernel walks
// WordRange directly and is kept as the reference the parallel one is tested
// against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "palstar/words.hpp"

namespace palstar {

namespace detail {

/// Advances w[from..] as a base-k odometer. Returns false on wrap-around.
inline bool advance_suffix(std::vector<Symbol>& w, std::size_t from,
                           Symbol k) noexcept {
  for (std::size_t i = w.size(); i > from; --i) {
    if (++w[i - 1] < k) return true;
    w[i - 1] = 0;
  }
  return false;
}

inline constexpr std::uint64_t kMinPrefixBlocks = 256;

}  // namespace detail

/// Sum of map(w) over all words of length n, OpenMP-parallel. T must be
/// default-constructible with a commutative, associative +=, so the result
/// does not depend on how blocks land on threads.
template <class T, class Map>
T transform_reduce_words(Alphabet a, std::size_t n, Map map) {
  const auto k = static_cast<Symbol>(a.size());

  std::size_t prefix_len = 0;
  std::uint64_t blocks = 1;
  while (prefix_len < n && blocks < detail::kMinPrefixBlocks) {
    blocks *= k;
    ++prefix_len;
  }
  const auto block_count = static_cast<std::int64_t>(blocks);

  T total{};
#pragma omp parallel
  {
    T local{};
    std::vector<Symbol> w(n, 0);
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t block = 0; block < block_count; ++block) {
      auto rest = static_cast<std::uint64_t>(block);
      for (std::size_t i = prefix_len; i > 0; --i) {
        w[i - 1] = static_cast<Symbol>(rest % k);
        rest /= k;
      }
      std::fill(w.begin() + static_cast<std::ptrdiff_t>(prefix_len), w.end(),
                Symbol{0});
      do {
        local += map(SymbolSpan(w));
      } while (detail::advance_suffix(w, prefix_len, k));
    }
#pragma omp critical(palstar_transform_reduce)
    total += local;
  }
  return total;
}

/// Number of words of length n over a satisfying pred, OpenMP-parallel.
/// pred is called concurrently from several threads and must be pure.
template <class Pred>
std::uint64_t count_words_if(Alphabet a, std::size_t n, Pred pred) {
  return transform_reduce_words<std::uint64_t>(
      a, n, [&pred](SymbolSpan w) -> std::uint64_t { return pred(w) ? 1 : 0; });
}

namespace serial {

/// Reference implementation of palstar::count_words_if.
template <class Pred>
std::uint64_t count_words_if(Alphabet a, std::size_t n, Pred pred) {
  std::uint64_t total = 0;
  for (SymbolSpan w : enumerate_words(a, n)) {
    if (pred(w)) ++total;
  }
  return total;
}

/// Reference implementation of palstar::transform_reduce_words.
template <class T, class Map>
T transform_reduce_words(Alphabet a, std::size_t n, Map map) {
  T total{};
  for (SymbolSpan w : enumerate_words(a, n)) total += map(w);
  return total;
}

}  // namespace serial

}  // namespace palstar

#endif  // PALSTAR_ENUMERATION_HPP

#ifndef PALSTAR_COUNTING_HPP
#define PALSTAR_COUNTING_HPP

// Exact counts of unbordered words u_k(n) and palstars of length 2n, p_k(n),
// for a fixed alphabet size (big integers) and for symbolic k (polynomials).
//
// Both sequences carry the generating-function convention terms[0] = 1.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "palstar/kpolynomial.hpp"

namespace palstar {

enum class SequenceKind { unbordered, palstar };

struct CountSequence {
  SequenceKind kind;
  int k;
  std::vector<mpz_class> terms;  // indices 0..N

  std::size_t degree() const noexcept { return terms.size() - 1; }
};

/// u_k(0..N) by the border recurrence
///   u(1) = k, u(2m) = k u(2m-1) - u(m), u(2m+1) = k u(2m).
CountSequence u_sequence(int k, std::size_t N);

/// p_k(0..N) from p(n) = sum_{i=1..n} u(i) p(n-i).
CountSequence p_sequence(int k, std::size_t N);

/// Same recurrences with k kept as an indeterminate.
std::vector<KPolynomial> u_poly(std::size_t N);
std::vector<KPolynomial> p_poly(std::size_t N);

/// Coefficients 0..N of the product of two power series, OpenMP-parallel
/// over output degree. Missing input coefficients count as zero.
std::vector<mpz_class> cauchy_product(std::span<const mpz_class> a,
                                      std::span<const mpz_class> b,
                                      std::size_t N);

namespace serial {
std::vector<mpz_class> cauchy_product(std::span<const mpz_class> a,
                                      std::span<const mpz_class> b,
                                      std::size_t N);
}  // namespace serial

/// U_k P_k == 2 P_k - 1 coefficient-wise through degree N, exactly.
bool verify_gf_identity(int k, std::size_t N);

}  // namespace palstar

#endif  // PALSTAR_COUNTING_HPP

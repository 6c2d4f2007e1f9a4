#include "palstar/counting.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace palstar {

namespace {

void require_alphabet(int k) {
  if (k < 2) {
    throw std::invalid_argument("alphabet size must be at least 2, got k=" +
                                std::to_string(k));
  }
}

// Shared by the integer and polynomial versions: T needs +, -, and a
// multiplication by "k".
template <class T, class TimesK>
std::vector<T> unbordered_recurrence(std::size_t N, T one, T k_value,
                                     TimesK times_k) {
  std::vector<T> u(N + 1);
  u[0] = one;
  if (N >= 1) u[1] = k_value;
  for (std::size_t n = 2; n <= N; ++n) {
    if (n % 2 == 0) {
      u[n] = times_k(u[n - 1]) - u[n / 2];
    } else {
      u[n] = times_k(u[n - 1]);
    }
  }
  return u;
}

template <class T>
std::vector<T> palstar_recurrence(const std::vector<T>& u, T one) {
  std::vector<T> p(u.size());
  p[0] = one;
  for (std::size_t n = 1; n < u.size(); ++n) {
    T sum{};
    for (std::size_t i = 1; i <= n; ++i) sum += u[i] * p[n - i];
    p[n] = std::move(sum);
  }
  return p;
}

}  // namespace

CountSequence u_sequence(int k, std::size_t N) {
  require_alphabet(k);
  const mpz_class kz(k);
  return {SequenceKind::unbordered, k,
          unbordered_recurrence<mpz_class>(
              N, mpz_class(1), kz,
              [&](const mpz_class& x) { return mpz_class(x * kz); })};
}

CountSequence p_sequence(int k, std::size_t N) {
  CountSequence u = u_sequence(k, N);
  std::vector<mpz_class> p(N + 1);
  p[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    mpz_class& sum = p[n];
    for (std::size_t i = 1; i <= n; ++i) {
      mpz_addmul(sum.get_mpz_t(), u.terms[i].get_mpz_t(),
                 p[n - i].get_mpz_t());
    }
  }
  return {SequenceKind::palstar, k, std::move(p)};
}

std::vector<KPolynomial> u_poly(std::size_t N) {
  const KPolynomial k = KPolynomial::k();
  return unbordered_recurrence<KPolynomial>(
      N, KPolynomial{1}, k, [&](const KPolynomial& x) { return x * k; });
}

std::vector<KPolynomial> p_poly(std::size_t N) {
  return palstar_recurrence(u_poly(N), KPolynomial{1});
}

std::vector<mpz_class> cauchy_product(std::span<const mpz_class> a,
                                      std::span<const mpz_class> b,
                                      std::size_t N) {
  std::vector<mpz_class> out(N + 1);
  const auto degree = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t n = 0; n <= degree; ++n) {
    const auto un = static_cast<std::size_t>(n);
    mpz_class& sum = out[un];
    for (std::size_t i = 0; i <= un && i < a.size(); ++i) {
      if (un - i < b.size()) {
        mpz_addmul(sum.get_mpz_t(), a[i].get_mpz_t(), b[un - i].get_mpz_t());
      }
    }
  }
  return out;
}

namespace serial {

std::vector<mpz_class> cauchy_product(std::span<const mpz_class> a,
                                      std::span<const mpz_class> b,
                                      std::size_t N) {
  std::vector<mpz_class> out(N + 1);
  for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace serial

bool verify_gf_identity(int k, std::size_t N) {
  const CountSequence u = u_sequence(k, N);
  const CountSequence p = p_sequence(k, N);
  const std::vector<mpz_class> product = cauchy_product(u.terms, p.terms, N);
  for (std::size_t n = 0; n <= N; ++n) {
    const mpz_class expected = 2 * p.terms[n] - (n == 0 ? 1 : 0);
    if (product[n] != expected) return false;
  }
  return true;
}

}  // namespace palstar

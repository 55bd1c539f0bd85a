#ifndef HECKE_TEST_HELPERS_HPP
#define HECKE_TEST_HELPERS_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "hecke/eigenvalues.hpp"
#include "hecke/newform.hpp"
#include "hecke/primes.hpp"

namespace hecke::testing {

// Multiplicative table from prescribed a(p) values (default 1), prime powers
// by the usual recurrence (or a(p)^m at p | level). Satisfies every
// structural invariant by construction; not a genuine eigenform.
inline Newform make_multiplicative_form(unsigned weight, std::uint64_t level,
                                        const std::map<std::uint64_t, Int>& ap,
                                        std::uint64_t X) {
  Newform f;
  f.weight = weight;
  f.level = level;
  f.level_square_free = true;
  {
    std::uint64_t n = level;
    for (std::uint64_t p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) f.level_square_free = false;
  }
  f.label = "synthetic";
  f.source = FormSource::File;
  f.coeffs.assign(X + 1, Int(0));
  if (X >= 1) f.coeffs[1] = 1;
  auto spf = smallest_factor_table(X);
  for (std::uint64_t p = 2; p <= X; ++p) {
    if (spf[p] != p) continue;
    Int a_p = ap.count(p) ? ap.at(p) : Int(1);
    std::uint64_t pm = p;
    unsigned m = 1;
    while (pm <= X) {
      f.coeffs[pm] = coeff_prime_power(a_p, p, weight, m, f.ramified(p));
      if (pm > X / p) break;
      pm *= p;
      ++m;
    }
  }
  for (std::uint64_t n = 2; n <= X; ++n) {
    std::uint64_t p = spf[n], pe = 1, rest = n;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    if (rest != 1) f.coeffs[n] = f.coeffs[pe] * f.coeffs[rest];
  }
  return f;
}

// Plain quadratic-time polynomial product, independent of the library path.
inline std::vector<Int> naive_mul(const std::vector<Int>& a,
                                  const std::vector<Int>& b,
                                  std::size_t max_exp) {
  std::vector<Int> c(max_exp + 1, Int(0));
  for (std::size_t i = 0; i < a.size() && i <= max_exp; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= max_exp; ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

inline bool is_squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

// Trial-division oracle for the B-free predicate.
inline bool bfree_by_trial_division(std::uint64_t n,
                                    const std::vector<std::uint64_t>& P) {
  if (!is_squarefree(n)) return false;
  for (std::uint64_t p : P)
    if (n % p == 0) return false;
  return true;
}

}  // namespace hecke::testing

#endif

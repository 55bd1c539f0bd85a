#ifndef HECKE_PRIMES_HPP
#define HECKE_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace hecke {

// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_factor_table(std::uint64_t limit);

// Divisor-count table d(0..limit), d(0) = 0.
std::vector<std::uint32_t> divisor_count_table(std::uint64_t limit);

struct PrimePower {
  std::uint64_t p;
  unsigned e;
};

// Factorization of n via a smallest-prime-factor table covering n.
std::vector<PrimePower> factor_with_table(std::uint64_t n,
                                          const std::vector<std::uint32_t>& spf);

}  // namespace hecke

#endif

#ifndef HECKE_BFREE_HPP
#define HECKE_BFREE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/ints.hpp"
#include "hecke/newform.hpp"

namespace hecke {

// Sorted set of excluded primes. The sieve excludes multiples of members and
// multiples of p^2 for non-members, so survivors are exactly the square-free
// integers coprime to every member.
struct PrimeSet {
  std::vector<std::uint64_t> members;  // sorted, deduplicated, all prime
  std::uint64_t limit = 0;             // membership is known through here

  bool contains(std::uint64_t p) const;
  static PrimeSet from_list(std::vector<std::uint64_t> ps);
  static PrimeSet all_primes(std::uint64_t limit);
};

// Piecewise interval-length exponent for unconditional short-interval counts.
// Exact rational arithmetic; branch boundaries half-open as stated.
Rat theta_exponent(const Rat& rho);

// Progression variant; only defined for 190/323 < rho <= 1.
Rat psi_exponent(const Rat& rho);

// {p <= x : a_f(p) = 0} union {p <= x : p | level}, exact tests.
PrimeSet prime_zero_set(const Newform& f, std::uint64_t x);

struct BfreeSieve {
  std::uint64_t lo = 0, hi = 0;  // integers in (x, x+y] are [lo, hi]
  std::vector<bool> free_flag;   // free_flag[n - lo]

  bool is_free(std::uint64_t n) const { return free_flag[n - lo]; }
  std::uint64_t count() const;
};

// Segmented sieve over (x, x+y].
BfreeSieve sieve_bfree(const PrimeSet& P, double x, double y);

struct BFreeCount {
  double x = 0, y = 0;
  std::uint64_t count = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> ap;  // residue, modulus
  double density = 0;  // count*q/y with a progression, count/y otherwise
};

BFreeCount count_bfree(const PrimeSet& P, double x, double y);
BFreeCount count_bfree_in_ap(const PrimeSet& P, double x, double y,
                             std::uint64_t a, std::uint64_t q);

// Symmetric-power coefficient at square-free n coprime to the level:
// the product over p | n of lambda(p^m).
double sympower_coeff(const Newform& f, unsigned m, std::uint64_t n);
bool sympower_zero(const Newform& f, unsigned m, std::uint64_t n);  // exact

struct CorollaryResult {
  BFreeCount count;
  std::uint64_t zero_set_size = 0;
  std::uint64_t survivors_verified = 0;  // each checked nonzero, exactly
  double rho_hat = 0;                    // fitted counting exponent of the set
  double guidance_exponent = 0;          // theta(rho_hat), as a double
};

// Sieve with the excluded set {p : p | lcm of levels or
// lambda_f(p^m) lambda_g(p^m) = 0} and re-verify every survivor.
CorollaryResult corollary_verify(
    const Newform& f, const Newform& g, unsigned m, double x, double y,
    std::optional<std::pair<std::uint64_t, std::uint64_t>> ap = std::nullopt);

struct RhoFit {
  double rho = 0;
  double eta = 0;
  double r2 = 0;
  std::size_t points = 0;
};

// log C(x) ~ const + rho log x - eta log log x over the grid.
RhoFit rho_fit(const PrimeSet& P, const std::vector<double>& x_grid);

}  // namespace hecke

#endif

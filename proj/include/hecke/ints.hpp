#ifndef HECKE_INTS_HPP
#define HECKE_INTS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

// Exact arbitrary-precision integer and rational. All coefficient tables and
// sieve exponents are kept exact; doubles are derived views only.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a requested horizon or allocation exceeds what the tool is
// willing to attempt (hard cap) or what the machine can hold.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when ingested data violates a structural relation (multiplicativity,
// prime-power recurrence, coefficient bounds). Maps to exit code 2 in the CLI.
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// Largest coefficient horizon any command will attempt.
inline constexpr std::uint64_t kHorizonCap = 100000000;  // 1e8

inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

inline Int pow_ui(std::uint64_t base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// Reduced "num/den" rendering used by reports (exact, no float loss).
inline std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace hecke

#endif

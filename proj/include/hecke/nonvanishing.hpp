#ifndef HECKE_NONVANISHING_HPP
#define HECKE_NONVANISHING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/ints.hpp"
#include "hecke/newform.hpp"

namespace hecke {

struct NonvanishReport {
  std::optional<std::uint64_t> first_n;  // smallest n > 1 with both nonzero
  std::uint64_t scanned_to = 0;
  double bound = 0;                      // (2 log N)^4
  bool within_bound = false;
  bool hypothesis_ok = false;            // requires lcm of levels > 3
  std::optional<std::string> warning;
};

NonvanishReport first_simultaneous_nonvanishing(const Newform& f,
                                                const Newform& g,
                                                std::uint64_t X);

// Smallest prime not dividing N. For N above e^{5/2} the result is checked
// against the 2 log N bound from the primorial growth estimate.
std::uint64_t smallest_coprime_prime(std::uint64_t N);

// Zero tests for lambda(p^m) along one form at one prime. Exact when backed
// by an integer a(p); synthetic angle inputs resolve through the recognized
// rational-angle cases and otherwise fall back to a scaled float threshold.
class PrimePowerSequence {
 public:
  PrimePowerSequence(Int a_p, std::uint64_t p, unsigned weight);
  explicit PrimePowerSequence(double lambda_p);

  bool zero_at(unsigned m) const;  // lambda(p^m) == 0
  bool lambda_is(int v) const;     // exact test of lambda(p) == v, v in {-2..2}
  double lambda1() const { return lambda_p_; }
  // denominator s when the angle is (r/s) pi with 2cos in the recognized set
  std::optional<unsigned> tag_denominator() const { return tag_s_; }

 private:
  bool exact_ = false;
  Int a_p_;
  std::uint64_t p_ = 0;
  unsigned weight_ = 0;
  double lambda_p_ = 0;
  std::optional<unsigned> tag_s_;
};

enum class PrimePowerBranch {
  BothNonzeroAt1,
  Case1BothAnglesHalfPi,
  Case2OneZero,
  Case2ThirdAngle,
  Unresolved,
};

const char* to_string(PrimePowerBranch b);

struct PrimePowerCase {
  std::uint64_t prime = 0;
  std::optional<unsigned> m_star;  // minimal m in [1,4] with both nonzero
  PrimePowerBranch branch = PrimePowerBranch::Unresolved;
};

PrimePowerCase classify_prime_power(const PrimePowerSequence& sf,
                                    const PrimePowerSequence& sg);

// Integer-exact version for two forms at an unramified prime.
PrimePowerCase prime_power_first_nonvanish(const Newform& f, const Newform& g,
                                           std::uint64_t p);

enum class DensityCase {
  BothEndpoint,      // both angles at 0 or pi
  OneEndpoint,       // exactly one at 0 or pi
  EqualInterior,     // equal angles strictly inside (0, pi)
  DistinctInterior,  // distinct interior angles
};

const char* to_string(DensityCase c);

struct DensityRecord {
  std::uint64_t prime = 0;
  std::uint64_t M = 0;
  double empirical_density = 0;
  std::optional<Rat> exact_density;
  DensityCase case_label = DensityCase::DistinctInterior;
};

// Density over m <= M of a_f(p^m) a_g(p^m) != 0; exact closed form attached
// when both angles resolve to recognized rational multiples of pi.
DensityRecord density_at_prime(const Newform& f, const Newform& g,
                               std::uint64_t p, std::uint64_t M);

// Same scan for synthetic lambda values (used for angle-pair studies).
DensityRecord density_from_lambdas(double lf, double lg, std::uint64_t M);

// 1 - 1/s1 - 1/s2 + 1/lcm with absent (s = 1 or untagged) terms dropped.
Rat exact_pair_density(std::optional<unsigned> s1, std::optional<unsigned> s2);

struct Thm4Scan {
  double x = 0;
  unsigned M = 0;
  std::uint64_t primes_checked = 0;
  std::uint64_t primes_good = 0;
  double density = 0;
  std::vector<std::uint64_t> exceptional;  // zero eigenvalue somewhere m <= M
};

// Fraction of unramified p <= x with lambda_f(p^m) != 0 and
// lambda_g(p^m') != 0 for all m, m' <= M (exact integer tests).
Thm4Scan thm4_prime_scan(const Newform& f, const Newform& g, double x,
                         unsigned M);

struct GapResult {
  std::uint64_t gap = 0;   // max m with a(n+j) = 0 for all 0 < j <= m
  bool truncated = false;  // the zero run reached the horizon
};

GapResult gap_function(const Newform& f, std::uint64_t n, std::uint64_t X);

}  // namespace hecke

#endif

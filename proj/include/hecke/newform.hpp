#ifndef HECKE_NEWFORM_HPP
#define HECKE_NEWFORM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hecke/ints.hpp"

namespace hecke {

enum class FormSource { EtaDelta, LevelOneBasis, File, Http, EllipticCurve };

const char* to_string(FormSource s);

// A normalized Hecke eigenform given by an exact coefficient table a(1..X).
// coeffs[0] is unused and kept at zero; horizon() == X.
struct Newform {
  unsigned weight = 0;        // k >= 2
  std::uint64_t level = 1;    // N >= 1
  bool level_square_free = true;
  std::string label;
  FormSource source = FormSource::File;
  std::vector<Int> coeffs;

  std::uint64_t horizon() const {
    return coeffs.empty() ? 0 : coeffs.size() - 1;
  }
  const Int& a(std::uint64_t n) const;
  bool ramified(std::uint64_t p) const { return level % p == 0; }
};

// n-th Bernoulli number, exact (B(1) = -1/2 convention).
Rat bernoulli(unsigned n);

// Exact tau(1..X) via the pentagonal-number series raised to the 24th power.
std::vector<Int> expand_eta_delta(std::uint64_t X);

// Discriminant-form newform of weight 12, level 1.
Newform delta_form(std::uint64_t X);

// The unique normalized eigenform of weight k in {12,16,18,20,22,26}, level 1.
// Built as the weight-12 form times the normalized Eisenstein series of
// weight k-12 (exact rational Bernoulli constant, exact divisor sums).
Newform level_one_eigenform(unsigned k, std::uint64_t X);

// sigma_{power}(n) for n <= X as exact integers (index 0 unused).
std::vector<Int> divisor_power_sums(std::uint64_t X, unsigned power);

// Trace of Frobenius a_p for y^2 = x^3 + Ax + B over F_p, p an odd prime not
// dividing 4A^3+27B^2, by summing quadratic characters over x. Asserts the
// |a_p| <= 2 sqrt(p) bound.
Int elliptic_ap(long long A, long long B, std::uint64_t p);

// Weight-2 coefficient table for the curve y^2 = x^3 + Ax + B: good primes
// via point counts and the usual recurrence, bad primes (p = 2 or p dividing
// 4A^3+27B^2) pinned to a_p = 0; such primes divide the stored level, which
// is |4A^3+27B^2| (same prime support as the conductor), so downstream zero
// sets pick them up through the p | N clause either way.
Newform elliptic_curve_form(long long A, long long B, std::uint64_t X);

// Violations found by the structural checks. Empty message fields never occur;
// `index` is the offending n (or p^m).
struct HeckeViolation {
  enum class Kind { Normalization, Multiplicativity, PrimePower, RamifiedPower, DeligneBound };
  Kind kind;
  std::uint64_t index = 0;
  std::string message;
};

// Checks a(1) = 1, a(mn) = a(m)a(n) for coprime pairs, the unramified
// prime-power recurrence and the ramified a(p^m) = a(p)^m rule over the whole
// table. Violations are returned as data, never thrown.
std::vector<HeckeViolation> verify_hecke_relations(const Newform& f);

// Text format: header "# weight <k> level <N> [label <text>]" then lines
// "<n> <a_n>" with n = 1,2,3,...; '#' comment lines allowed after the header.
Newform load_coefficients(const std::string& path);
Newform parse_coefficients(std::istream& in, const std::string& origin);
void save_coefficients(const Newform& f, const std::string& path);
void write_coefficients(const Newform& f, std::ostream& out);

}  // namespace hecke

#endif

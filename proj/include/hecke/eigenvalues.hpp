#ifndef HECKE_EIGENVALUES_HPP
#define HECKE_EIGENVALUES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/ints.hpp"
#include "hecke/newform.hpp"

namespace hecke {

// lambda(n) = a(n) / n^{(k-1)/2} as doubles, plus exact zero flags taken from
// the integer table (zero tests never go through floating point).
struct EigenvalueSeries {
  unsigned weight = 0;
  std::uint64_t level = 1;
  std::vector<double> lambda;    // index n, size X+1
  std::vector<bool> zero;        // zero[n] iff a(n) == 0 exactly
  std::shared_ptr<const std::vector<Int>> exact;  // the integer table

  std::uint64_t horizon() const {
    return lambda.empty() ? 0 : lambda.size() - 1;
  }
};

EigenvalueSeries normalize(const Newform& f);

// lambda(p^m) from lambda(p) by the degree-m recurrence (unramified) or the
// m-th power rule (ramified, square-free level). Throws if an unramified
// lambda(p) lands outside [-2,2] beyond rounding slack.
double lambda_prime_power(double lambda_p, unsigned m, bool ramified);

// Exact a(p^m) from a(p): unramified recurrence with p^{k-1}, or a(p)^m when
// ramified. Exact zero tests at prime powers go through this.
Int coeff_prime_power(const Int& a_p, std::uint64_t p, unsigned weight,
                      unsigned m, bool ramified);

enum class AngleStatus { ExactRational, ProvedIrrational, Undetermined };

struct SatakeAngle {
  double angle = 0;  // in [0, pi]
  // reduced r/s with angle = (r/s)*pi; only the cases where 2cos(angle) is
  // one of 0, +-1, +-2, +-sqrt(2), +-sqrt(3) are ever tagged
  std::optional<std::pair<unsigned, unsigned>> rational_tag;
  AngleStatus status = AngleStatus::Undetermined;
};

SatakeAngle satake_angle(double lambda_p);

// |lambda(n)| <= d(n) checks for n coprime to N, with 1e-9 slack.
std::vector<HeckeViolation> deligne_verify(const EigenvalueSeries& s,
                                           std::uint64_t level);

}  // namespace hecke

#endif

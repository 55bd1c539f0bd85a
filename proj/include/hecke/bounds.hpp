#ifndef HECKE_BOUNDS_HPP
#define HECKE_BOUNDS_HPP

#include <complex>
#include <cstdint>

#include "hecke/eigenvalues.hpp"

namespace hecke {

struct ZetaPartial {
  std::complex<double> value;
  double tail_bound = 0;  // crude bound on the dropped Euler factors
};

// Euler product over p <= P, p not dividing N; refuses Re(s) < 1.05.
ZetaPartial zeta_N_partial(std::complex<double> s, std::uint64_t N,
                           std::uint64_t P);

enum class Smoothing { None, LogSquared, LogPower };

const char* to_string(Smoothing s);

// sum_{n <= x, (n,N)=1} lambda_f(n) lambda_g(n) w(n), compensated summation.
// w = 1, log^2(x/n) or log^J(x/n).
double rankin_partial_sum(const EigenvalueSeries& f, const EigenvalueSeries& g,
                          std::uint64_t N, double x, Smoothing sm,
                          unsigned J = 2);

struct PrimeSquareSum {
  double sum = 0;
  double ratio = 0;  // sum / (x / log x)
  std::uint64_t primes_used = 0;
};

PrimeSquareSum prime_square_sum(const EigenvalueSeries& f, std::uint64_t N,
                                double x);

struct BoundQuery {
  double sigma = 0.75;
  double t = 0;
  std::uint64_t N = 1;   // lcm of the levels
  std::uint64_t M = 1;   // gcd of the levels (recorded, not in the formula)
  unsigned k1 = 2, k2 = 2;
  double eps = 0.01;
  double C = 1.0;
};

// N^{1-sigma+eps} (1+(k2-k1)/2)^{1-sigma+eps} ((k1+k2)/2)^{1-sigma+eps}
// (3+|t|)^{2(1-sigma)+eps}, scaled by C. Valid for 1/2 < sigma < 1.
double convexity_rhs(BoundQuery q);

// C |1+it|^B N^{1/2 - 1/80 + eps}.
double subconvexity_rhs(std::uint64_t N, double t, double B, double eps,
                        double C);

}  // namespace hecke

#endif

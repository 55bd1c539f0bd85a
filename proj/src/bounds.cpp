#include "hecke/bounds.hpp"

#include <cmath>
#include <numeric>

#include "hecke/primes.hpp"

namespace hecke {

ZetaPartial zeta_N_partial(std::complex<double> s, std::uint64_t N,
                           std::uint64_t P) {
  if (s.real() < 1.05)
    throw std::domain_error(
        "Euler product evaluated only for Re(s) >= 1.05 (divergence region "
        "refused)");
  ZetaPartial out;
  out.value = 1.0;
  for (std::uint64_t p : primes_up_to(P)) {
    if (N % p == 0) continue;
    std::complex<double> factor =
        1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    out.value /= factor;
  }
  // |log factor| <= 2 p^{-sigma} for p^{-sigma} <= 1/2; integral tail bound
  double sigma = s.real();
  double Pd = static_cast<double>(std::max<std::uint64_t>(P, 2));
  out.tail_bound = 2.0 * std::pow(Pd, 1.0 - sigma) / (sigma - 1.0);
  return out;
}

const char* to_string(Smoothing s) {
  switch (s) {
    case Smoothing::None: return "none";
    case Smoothing::LogSquared: return "log2";
    case Smoothing::LogPower: return "logJ";
  }
  return "?";
}

double rankin_partial_sum(const EigenvalueSeries& f, const EigenvalueSeries& g,
                          std::uint64_t N, double x, Smoothing sm, unsigned J) {
  std::uint64_t xi = static_cast<std::uint64_t>(std::floor(x));
  if (xi > f.horizon() || xi > g.horizon())
    throw std::domain_error("partial sum bound " + std::to_string(xi) +
                            " exceeds a series horizon");
  double sum = 0, comp = 0;  // Kahan
  for (std::uint64_t n = 1; n <= xi; ++n) {
    if (std::gcd(n, N) != 1) continue;
    double w = 1.0;
    if (sm == Smoothing::LogSquared) {
      double l = std::log(x / static_cast<double>(n));
      w = l * l;
    } else if (sm == Smoothing::LogPower) {
      w = std::pow(std::log(x / static_cast<double>(n)), static_cast<double>(J));
    }
    double term = f.lambda[n] * g.lambda[n] * w;
    double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

PrimeSquareSum prime_square_sum(const EigenvalueSeries& f, std::uint64_t N,
                                double x) {
  std::uint64_t xi = static_cast<std::uint64_t>(std::floor(x));
  if (xi > f.horizon())
    throw std::domain_error("prime sum bound exceeds the series horizon");
  PrimeSquareSum out;
  for (std::uint64_t p : primes_up_to(xi)) {
    if (N % p == 0) continue;
    out.sum += f.lambda[p] * f.lambda[p];
    ++out.primes_used;
  }
  out.ratio = out.sum / (x / std::log(x));
  return out;
}

double convexity_rhs(BoundQuery q) {
  if (!(q.sigma > 0.5 && q.sigma < 1.0))
    throw std::domain_error("convexity bound valid for 1/2 < sigma < 1");
  if (q.eps <= 0) throw std::domain_error("epsilon must be positive");
  if (q.C <= 0) throw std::domain_error("constant must be positive");
  unsigned k1 = std::min(q.k1, q.k2), k2 = std::max(q.k1, q.k2);
  double e1 = 1.0 - q.sigma + q.eps;
  double e2 = 2.0 * (1.0 - q.sigma) + q.eps;
  return q.C * std::pow(static_cast<double>(q.N), e1) *
         std::pow(1.0 + (k2 - k1) / 2.0, e1) *
         std::pow((k1 + k2) / 2.0, e1) * std::pow(3.0 + std::abs(q.t), e2);
}

double subconvexity_rhs(std::uint64_t N, double t, double B, double eps,
                        double C) {
  if (N < 1 || C <= 0 || B < 0 || eps < 0)
    throw std::domain_error("inputs must be positive");
  double mod = std::sqrt(1.0 + t * t);  // |1 + it|
  return C * std::pow(mod, B) *
         std::pow(static_cast<double>(N), 0.5 - 1.0 / 80.0 + eps);
}

}  // namespace hecke

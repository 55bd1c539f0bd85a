#include "hecke/eigenvalues.hpp"

#include <cmath>
#include <numeric>

#include "hecke/primes.hpp"

namespace hecke {

EigenvalueSeries normalize(const Newform& f) {
  EigenvalueSeries s;
  s.weight = f.weight;
  s.level = f.level;
  std::uint64_t X = f.horizon();
  s.lambda.assign(X + 1, 0.0);
  s.zero.assign(X + 1, true);
  s.exact = std::make_shared<const std::vector<Int>>(f.coeffs);
  double half = (f.weight - 1) / 2.0;
  for (std::uint64_t n = 1; n <= X; ++n) {
    bool z = sign_of(f.coeffs[n]) == 0;
    s.zero[n] = z;
    s.lambda[n] = z ? 0.0
                    : mpz_get_d(f.coeffs[n].get_mpz_t()) *
                          std::pow(static_cast<double>(n), -half);
  }
  return s;
}

double lambda_prime_power(double lambda_p, unsigned m, bool ramified) {
  if (ramified) return std::pow(lambda_p, static_cast<double>(m));
  if (std::abs(lambda_p) > 2.0 + 1e-9)
    throw std::domain_error("unramified lambda(p) = " + std::to_string(lambda_p) +
                            " violates the |lambda(p)| <= 2 bound");
  double prev = 1.0, cur = lambda_p;
  if (m == 0) return prev;
  for (unsigned i = 1; i < m; ++i) {
    double next = lambda_p * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Int coeff_prime_power(const Int& a_p, std::uint64_t p, unsigned weight,
                      unsigned m, bool ramified) {
  if (m == 0) return Int(1);
  if (ramified) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a_p.get_mpz_t(), m);
    return r;
  }
  Int pk = pow_ui(p, weight - 1);
  Int prev(1), cur = a_p;
  for (unsigned i = 1; i < m; ++i) {
    Int next = a_p * cur - pk * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

SatakeAngle satake_angle(double lambda_p) {
  SatakeAngle out;
  double c = lambda_p / 2.0;
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  out.angle = std::acos(c);

  const double tol = 1e-9;
  auto tag = [&](unsigned r, unsigned s) {
    out.rational_tag = {r, s};
    out.status = AngleStatus::ExactRational;
    out.angle = M_PI * static_cast<double>(r) / static_cast<double>(s);
  };
  if (std::abs(lambda_p - 2.0) <= tol) tag(0, 1);
  else if (std::abs(lambda_p - 1.0) <= tol) tag(1, 3);
  else if (std::abs(lambda_p) <= tol) tag(1, 2);
  else if (std::abs(lambda_p + 1.0) <= tol) tag(2, 3);
  else if (std::abs(lambda_p + 2.0) <= tol) tag(1, 1);
  else if (std::abs(lambda_p * lambda_p - 2.0) <= tol) tag(lambda_p > 0 ? 1 : 3, 4);
  else if (std::abs(lambda_p * lambda_p - 3.0) <= tol) tag(lambda_p > 0 ? 1 : 5, 6);
  return out;
}

std::vector<HeckeViolation> deligne_verify(const EigenvalueSeries& s,
                                           std::uint64_t level) {
  std::vector<HeckeViolation> v;
  std::uint64_t X = s.horizon();
  if (X == 0) return v;
  std::vector<std::uint32_t> d = divisor_count_table(X);
  for (std::uint64_t n = 1; n <= X; ++n) {
    if (std::gcd(n, level) != 1) continue;
    if (std::abs(s.lambda[n]) > static_cast<double>(d[n]) + 1e-9) {
      v.push_back({HeckeViolation::Kind::DeligneBound, n,
                   "|lambda(" + std::to_string(n) + ")| = " +
                       std::to_string(std::abs(s.lambda[n])) + " exceeds d(n) = " +
                       std::to_string(d[n])});
    }
  }
  return v;
}

}  // namespace hecke

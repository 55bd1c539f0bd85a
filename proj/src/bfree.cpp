#include "hecke/bfree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hecke/eigenvalues.hpp"
#include "hecke/fit.hpp"
#include "hecke/primes.hpp"

namespace hecke {

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

PrimeSet PrimeSet::from_list(std::vector<std::uint64_t> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (std::uint64_t p : ps)
    if (!is_prime(p))
      throw std::invalid_argument(std::to_string(p) + " is not prime");
  PrimeSet out;
  out.limit = ps.empty() ? 0 : ps.back();
  out.members = std::move(ps);
  return out;
}

PrimeSet PrimeSet::all_primes(std::uint64_t limit) {
  PrimeSet out;
  out.members = primes_up_to(limit);
  out.limit = limit;
  return out;
}

Rat theta_exponent(const Rat& rho) {
  if (rho < 0 || rho > 1)
    throw std::domain_error("theta exponent defined for 0 <= rho <= 1");
  Rat r;
  if (rho <= Rat(1, 3)) r = Rat(1, 4);
  else if (rho <= Rat(9, 17)) r = (10 * rho) / (19 * rho + 7);
  else if (rho <= Rat(15, 28)) r = (3 * rho) / (4 * rho + 3);
  else if (rho <= Rat(5, 8)) r = Rat(5, 16);
  else if (rho <= Rat(9, 10)) r = (22 * rho) / (24 * rho + 29);
  else r = (7 * rho) / (9 * rho + 8);
  r.canonicalize();
  return r;
}

Rat psi_exponent(const Rat& rho) {
  if (!(rho > Rat(190, 323) && rho <= 1))
    throw std::domain_error(
        "psi exponent defined only for 190/323 < rho <= 1");
  Rat r;
  if (rho <= Rat(166, 173)) r = (29 * rho) / (46 * rho + 19);
  else r = (17 * rho) / (26 * rho + 12);
  r.canonicalize();
  return r;
}

PrimeSet prime_zero_set(const Newform& f, std::uint64_t x) {
  if (f.horizon() < x)
    throw std::domain_error("horizon too small: need coefficients to " +
                            std::to_string(x));
  PrimeSet out;
  out.limit = x;
  for (std::uint64_t p : primes_up_to(x))
    if (sign_of(f.coeffs[p]) == 0 || f.level % p == 0) out.members.push_back(p);
  return out;
}

std::uint64_t BfreeSieve::count() const {
  std::uint64_t c = 0;
  for (bool b : free_flag) c += b;
  return c;
}

BfreeSieve sieve_bfree(const PrimeSet& P, double x, double y) {
  if (x < 0 || y < 1) throw std::domain_error("need x >= 0 and y >= 1");
  double hi_d = x + y;
  if (hi_d > 4e18) throw capacity_error("interval endpoint too large");
  BfreeSieve out;
  out.lo = static_cast<std::uint64_t>(std::floor(x)) + 1;
  out.hi = static_cast<std::uint64_t>(std::floor(hi_d));
  if (out.hi < out.lo) {
    out.free_flag.clear();
    return out;
  }
  std::uint64_t len = out.hi - out.lo + 1;
  if (len > (std::uint64_t(1) << 31))
    throw capacity_error("interval length beyond sieve capacity");
  out.free_flag.assign(len, true);

  std::vector<std::uint64_t> base = primes_up_to(isqrt(out.hi));

  const std::uint64_t seg = 1 << 20;
  for (std::uint64_t blo = out.lo; blo <= out.hi; blo += seg) {
    std::uint64_t bhi = std::min(out.hi, blo + seg - 1);
    // members: strike every multiple
    for (std::uint64_t p : P.members) {
      if (p > bhi) break;
      std::uint64_t start = ((blo + p - 1) / p) * p;
      for (std::uint64_t n = start; n <= bhi; n += p)
        out.free_flag[n - out.lo] = false;
    }
    // non-members: strike multiples of p^2
    for (std::uint64_t p : base) {
      if (p * p > bhi) break;
      if (P.contains(p)) continue;
      std::uint64_t p2 = p * p;
      std::uint64_t start = ((blo + p2 - 1) / p2) * p2;
      for (std::uint64_t n = start; n <= bhi; n += p2)
        out.free_flag[n - out.lo] = false;
    }
  }
  return out;
}

BFreeCount count_bfree(const PrimeSet& P, double x, double y) {
  BfreeSieve s = sieve_bfree(P, x, y);
  BFreeCount c;
  c.x = x;
  c.y = y;
  c.count = s.count();
  c.density = static_cast<double>(c.count) / y;
  return c;
}

BFreeCount count_bfree_in_ap(const PrimeSet& P, double x, double y,
                             std::uint64_t a, std::uint64_t q) {
  if (q < 1 || a < 1 || a > q) throw std::domain_error("need 1 <= a <= q");
  if (std::gcd(a, q) != 1)
    throw std::domain_error("residue and modulus must be coprime");
  BfreeSieve s = sieve_bfree(P, x, y);
  BFreeCount c;
  c.x = x;
  c.y = y;
  c.ap = {a, q};
  for (std::uint64_t n = s.lo; n <= s.hi && s.hi >= s.lo; ++n)
    if (n % q == a % q && s.is_free(n)) ++c.count;
  c.density = static_cast<double>(c.count) * static_cast<double>(q) / y;
  return c;
}

namespace {

std::vector<PrimePower> factor_squarefree_checked(const Newform& f, unsigned,
                                                  std::uint64_t n) {
  if (n == 0) throw std::domain_error("index must be >= 1");
  if (std::gcd(n, f.level) != 1)
    throw std::domain_error(std::to_string(n) + " shares a factor with the level");
  std::vector<PrimePower> fac;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      unsigned e = 0;
      while (rest % d == 0) {
        rest /= d;
        ++e;
      }
      if (e > 1) throw std::domain_error(std::to_string(n) + " is not square-free");
      fac.push_back({d, 1});
    }
  }
  if (rest > 1) fac.push_back({rest, 1});
  return fac;
}

}  // namespace

double sympower_coeff(const Newform& f, unsigned m, std::uint64_t n) {
  auto fac = factor_squarefree_checked(f, m, n);
  double half = (f.weight - 1) / 2.0;
  double prod = 1.0;
  for (const auto& pp : fac) {
    if (sign_of(coeff_prime_power(f.a(pp.p), pp.p, f.weight, m, false)) == 0)
      return 0.0;
    double lp = mpz_get_d(f.a(pp.p).get_mpz_t()) *
                std::pow(static_cast<double>(pp.p), -half);
    prod *= lambda_prime_power(lp, m, false);
  }
  return prod;
}

bool sympower_zero(const Newform& f, unsigned m, std::uint64_t n) {
  auto fac = factor_squarefree_checked(f, m, n);
  for (const auto& pp : fac)
    if (sign_of(coeff_prime_power(f.a(pp.p), pp.p, f.weight, m, false)) == 0)
      return true;
  return false;
}

CorollaryResult corollary_verify(
    const Newform& f, const Newform& g, unsigned m, double x, double y,
    std::optional<std::pair<std::uint64_t, std::uint64_t>> ap) {
  std::uint64_t hi = static_cast<std::uint64_t>(std::floor(x + y));
  if (f.horizon() < hi || g.horizon() < hi)
    throw std::domain_error("zero sets need coefficients to " + std::to_string(hi));
  std::uint64_t N = std::lcm(f.level, g.level);

  PrimeSet P;
  P.limit = hi;
  for (std::uint64_t p : primes_up_to(hi)) {
    bool excluded = (N % p == 0);
    if (!excluded) {
      excluded =
          sign_of(coeff_prime_power(f.a(p), p, f.weight, m, false)) == 0 ||
          sign_of(coeff_prime_power(g.a(p), p, g.weight, m, false)) == 0;
    }
    if (excluded) P.members.push_back(p);
  }

  CorollaryResult res;
  res.zero_set_size = P.members.size();
  res.count = ap ? count_bfree_in_ap(P, x, y, ap->first, ap->second)
                 : count_bfree(P, x, y);

  BfreeSieve sieve = sieve_bfree(P, x, y);
  for (std::uint64_t n = sieve.lo; n <= sieve.hi && sieve.hi >= sieve.lo; ++n) {
    if (!sieve.is_free(n)) continue;
    if (n == 1) continue;
    if (sympower_zero(f, m, n) || sympower_zero(g, m, n))
      throw std::logic_error("survivor " + std::to_string(n) +
                             " has a vanishing symmetric-power product");
    ++res.survivors_verified;
  }

  // guidance: fit the excluded set's counting exponent, then theta
  if (P.members.size() >= 8) {
    std::vector<double> grid;
    for (double t = 10; t <= static_cast<double>(hi); t *= 2) grid.push_back(t);
    if (grid.size() >= 3) {
      RhoFit rf = rho_fit(P, grid);
      res.rho_hat = std::clamp(rf.rho, 0.0, 1.0);
    }
  }
  long num = std::lround(res.rho_hat * 1000);
  res.guidance_exponent =
      theta_exponent(Rat(num, 1000)).get_d();
  return res;
}

RhoFit rho_fit(const PrimeSet& P, const std::vector<double>& x_grid) {
  std::vector<std::vector<double>> rows;
  std::vector<double> ys;
  for (double x : x_grid) {
    if (x < 3) continue;
    auto it = std::upper_bound(P.members.begin(), P.members.end(),
                               static_cast<std::uint64_t>(x));
    std::size_t cnt = static_cast<std::size_t>(it - P.members.begin());
    if (cnt == 0) continue;
    rows.push_back({1.0, std::log(x), -std::log(std::log(x))});
    ys.push_back(std::log(static_cast<double>(cnt)));
  }
  if (rows.size() < 3)
    throw std::domain_error("counting-exponent fit needs >= 3 usable grid points");
  MultiFit fit = fit_ols(rows, ys);
  RhoFit out;
  out.points = rows.size();
  if (fit.ok) {
    out.rho = fit.coeffs[1];
    out.eta = fit.coeffs[2];
    out.r2 = fit.r2;
  } else {
    // nearly collinear regressors: drop the log log term
    std::vector<double> lx(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) lx[i] = rows[i][1];
    LineFit lf = fit_line(lx, ys);
    out.rho = lf.slope;
    out.eta = 0;
    out.r2 = lf.r2;
  }
  return out;
}

}  // namespace hecke

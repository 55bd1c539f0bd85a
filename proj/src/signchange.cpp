#include "hecke/signchange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hecke/eigenvalues.hpp"
#include "hecke/fit.hpp"
#include "hecke/primes.hpp"

namespace hecke {

double thm1_bound(unsigned k1, unsigned k2, std::uint64_t N, double eps,
                  double C) {
  if (k1 < 2 || k1 > k2) throw std::domain_error("need 2 <= k1 <= k2");
  if (N < 1) throw std::domain_error("level must be >= 1");
  if (eps < 0) throw std::domain_error("epsilon must be >= 0");
  if (C <= 0) throw std::domain_error("constant multiplier must be positive");
  double base = static_cast<double>(N) * (1.0 + (k2 - k1) / 2.0) * ((k1 + k2) / 2.0);
  return C * std::pow(base, 1.0 + eps);
}

double thmK_bound(std::uint64_t N1, double eps, double C) {
  if (N1 < 1 || C <= 0) throw std::domain_error("level and constant must be positive");
  if (eps < 0) throw std::domain_error("epsilon must be >= 0");
  return C * std::pow(static_cast<double>(N1), 1.0 - 1.0 / 40.0 + eps);
}

SignChangeReport first_simultaneous_sign_change(const Newform& f,
                                                const Newform& g,
                                                std::uint64_t X, double eps,
                                                double C) {
  std::uint64_t limit = std::min({X, f.horizon(), g.horizon()});
  bool identical = f.horizon() == g.horizon();
  if (identical) {
    for (std::uint64_t n = 1; n <= limit && identical; ++n)
      identical = (f.coeffs[n] == g.coeffs[n]);
  }
  if (identical)
    throw std::invalid_argument(
        "identical coefficient tables: the sign-change bound requires two "
        "distinct forms");

  std::uint64_t N = std::lcm(f.level, g.level);
  unsigned k1 = std::min(f.weight, g.weight);
  unsigned k2 = std::max(f.weight, g.weight);

  SignChangeReport r;
  r.scanned_to = limit;
  r.bound_value = thm1_bound(k1, k2, N, eps, C);
  r.pair_labels = f.label + "|" + g.label;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (sign_of(f.coeffs[n]) * sign_of(g.coeffs[n]) < 0) {
      r.first_negative_n = n;
      r.ratio = static_cast<double>(n) / r.bound_value;
      break;
    }
  }
  return r;
}

Int coeff_via_factorization(const Newform& f, std::uint64_t n,
                            const std::vector<std::uint32_t>& spf) {
  if (n == 0) throw std::domain_error("coefficient index must be >= 1");
  Int out(1);
  while (n > 1) {
    std::uint64_t p = n < spf.size() ? spf[n] : 0;
    if (p == 0) {
      // n itself prime and beyond the spf table
      p = n;
      for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) { p = q; break; }
    }
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out *= coeff_prime_power(f.a(p), p, f.weight, e, f.ramified(p));
  }
  return out;
}

WindowScanResult scan_fg2_windows(const Newform& f, const Newform& g,
                                  double delta,
                                  const std::vector<double>& x_grid,
                                  std::uint64_t X) {
  WindowScanResult out;
  if (delta <= 17.0 / 18.0 || delta >= 1.0)
    out.warnings.push_back("delta outside (17/18, 1); the short-interval "
                           "guarantee does not apply");

  std::uint64_t max_n = 0;
  for (double x : x_grid) {
    if (x < 2) throw std::domain_error("window start must be >= 2");
    max_n = std::max(max_n, static_cast<std::uint64_t>(std::floor(x + std::pow(x, delta))));
  }
  if (max_n > X) max_n = X;
  if (f.horizon() < max_n)
    throw std::domain_error("f horizon " + std::to_string(f.horizon()) +
                            " below scan end " + std::to_string(max_n));
  if (g.horizon() < max_n)
    throw std::domain_error("insufficient g horizon " + std::to_string(g.horizon()) +
                            " for prime factors up to " + std::to_string(max_n));

  std::vector<std::uint32_t> spf = smallest_factor_table(max_n);

  for (double x : x_grid) {
    WindowScan w;
    w.x = x;
    w.delta = delta;
    w.n_lo = static_cast<std::uint64_t>(std::floor(x)) + 1;
    w.n_hi = std::min(static_cast<std::uint64_t>(std::floor(x + std::pow(x, delta))), X);
    int prev_sign = 0;
    for (std::uint64_t n = w.n_lo; n <= w.n_hi; ++n) {
      int sf = sign_of(f.coeffs[n]);
      if (sf == 0) continue;
      // sign of a_g(n^2) from the factorization of n
      int sg = 1;
      std::uint64_t rest = n;
      bool zero = false;
      while (rest > 1 && !zero) {
        std::uint64_t p = spf[rest];
        unsigned e = 0;
        while (rest % p == 0) {
          rest /= p;
          ++e;
        }
        Int apm = coeff_prime_power(g.a(p), p, g.weight, 2 * e, g.ramified(p));
        int s = sign_of(apm);
        if (s == 0) zero = true;
        else sg *= s;
      }
      if (zero) continue;
      int term_sign = sf * sg;
      ++w.nonzero_terms;
      if (prev_sign != 0 && term_sign != prev_sign) ++w.changes;
      prev_sign = term_sign;
    }
    out.windows.push_back(w);
  }
  return out;
}

Lemma41Fit lemma41_probe(const std::function<double(std::uint64_t)>& a,
                         const std::function<double(std::uint64_t)>& b,
                         const std::vector<double>& x_grid) {
  if (x_grid.size() < 3) throw std::domain_error("need at least 3 grid points");
  std::vector<double> grid = x_grid;
  std::sort(grid.begin(), grid.end());
  std::uint64_t max_x = static_cast<std::uint64_t>(std::floor(grid.back()));

  std::vector<double> log_x, log_abssum, log_maxterm, sum_sq, xs;
  double S = 0, T = 0, maxterm = 0;
  std::size_t gi = 0;
  for (std::uint64_t n = 1; n <= max_x; ++n) {
    double an = a(n), bn = b(n);
    double t = an * bn;
    S += t;
    T += t * t;
    maxterm = std::max(maxterm, std::abs(t));
    while (gi < grid.size() && static_cast<double>(n + 1) > grid[gi]) {
      xs.push_back(grid[gi]);
      log_x.push_back(std::log(grid[gi]));
      log_abssum.push_back(std::log(std::abs(S) + 1.0));
      log_maxterm.push_back(std::log(maxterm + 1e-12));
      sum_sq.push_back(T);
      ++gi;
    }
  }

  Lemma41Fit fit;
  LineFit beta = fit_line(log_x, log_abssum);
  fit.beta = beta.slope;
  fit.beta_r2 = beta.r2;
  fit.alpha_sum = fit_line(log_x, log_maxterm).slope;

  // c from least squares through the origin, then the remainder exponent
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += xs[i] * xs[i];
    sxy += xs[i] * sum_sq[i];
  }
  fit.c = sxx > 0 ? sxy / sxx : 0;
  std::vector<double> log_rem(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    log_rem[i] = std::log(std::abs(sum_sq[i] - fit.c * xs[i]) + 1.0);
  LineFit gamma = fit_line(log_x, log_rem);
  fit.gamma = gamma.slope;
  fit.gamma_r2 = gamma.r2;
  return fit;
}

}  // namespace hecke

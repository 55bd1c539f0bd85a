#ifndef HECKE_SIGNCHANGE_HPP
#define HECKE_SIGNCHANGE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hecke/newform.hpp"

namespace hecke {

// First n with a_f(n) a_g(n) < 0, against the explicit level/weight bound.
struct SignChangeReport {
  std::optional<std::uint64_t> first_negative_n;
  std::uint64_t scanned_to = 0;
  double bound_value = 0;
  double ratio = 0;  // first_negative_n / bound_value when found
  std::string pair_labels;
};

// [N (1 + (k2-k1)/2) ((k1+k2)/2)]^{1+eps}, scaled by the user constant C.
double thm1_bound(unsigned k1, unsigned k2, std::uint64_t N, double eps,
                  double C = 1.0);

// C * N1^{1 - 1/40 + eps}.
double thmK_bound(std::uint64_t N1, double eps, double C);

// Exact integer sign scan. Rejects identical coefficient tables.
SignChangeReport first_simultaneous_sign_change(const Newform& f,
                                                const Newform& g,
                                                std::uint64_t X,
                                                double eps = 1.0,
                                                double C = 1.0);

struct WindowScan {
  double x = 0;
  double delta = 0;
  std::uint64_t n_lo = 0, n_hi = 0;  // scanned n in (x, x + x^delta]
  std::uint64_t changes = 0;          // adjacent nonzero sign flips
  std::uint64_t nonzero_terms = 0;
};

struct WindowScanResult {
  std::vector<WindowScan> windows;
  std::vector<std::string> warnings;
};

// Sign changes of lambda_f(n) lambda_g(n^2) inside each (x, x+x^delta].
// a_g(n^2) is evaluated exactly from the factorization of n, so g's table
// only has to reach the largest n scanned, not its square.
WindowScanResult scan_fg2_windows(const Newform& f, const Newform& g,
                                  double delta,
                                  const std::vector<double>& x_grid,
                                  std::uint64_t X);

// a(n) for n beyond (or within) the table via multiplicativity; every prime
// divisor of n must be within the table. spf must cover the largest prime
// factor queried, not n itself.
Int coeff_via_factorization(const Newform& f, std::uint64_t n,
                            const std::vector<std::uint32_t>& spf);

struct Lemma41Fit {
  double alpha_sum = 0;  // growth of the largest term seen so far
  double beta = 0;       // growth of |sum a_n b_n|
  double beta_r2 = 0;
  double c = 0;          // linear coefficient of sum a_n^2 b_n^2
  double gamma = 0;      // growth of the remainder after subtracting c x
  double gamma_r2 = 0;
};

// Diagnostic fits for the two partial-sum conditions of the sign-change
// criterion, on the diagonal sequence a_n b_n.
Lemma41Fit lemma41_probe(const std::function<double(std::uint64_t)>& a,
                         const std::function<double(std::uint64_t)>& b,
                         const std::vector<double>& x_grid);

}  // namespace hecke

#endif

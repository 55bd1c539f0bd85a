#include <doctest.h>

#include <cmath>

#include "hecke/signchange.hpp"
#include "hecke/primes.hpp"
#include "helpers.hpp"

using namespace hecke;

TEST_CASE("thm1_bound") {
  CHECK(thm1_bound(12, 12, 1, 0.0) == doctest::Approx(12.0));
  CHECK(thm1_bound(12, 16, 1, 0.0) == doctest::Approx(42.0));
  // 110^1.1, cross-checked by hand: exp(1.1 * ln 110) = 176.0172...
  CHECK(thm1_bound(2, 2, 55, 0.1) == doctest::Approx(176.017).epsilon(1e-4));
  CHECK(thm1_bound(2, 2, 55, 0.1, 2.0) == doctest::Approx(2 * 176.017).epsilon(1e-4));
  CHECK_THROWS_AS(thm1_bound(16, 12, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(thm1_bound(1, 12, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(thm1_bound(12, 12, 1, -0.1), std::domain_error);
  CHECK_THROWS_AS(thm1_bound(12, 12, 0, 0.0), std::domain_error);
}

TEST_CASE("thmK_bound") {
  CHECK(thmK_bound(1, 0.01, 1.0) == doctest::Approx(1.0));
  // 10^3.9 = 7943.282...
  CHECK(thmK_bound(10000, 0.0, 1.0) == doctest::Approx(7943.282).epsilon(1e-5));
  CHECK(thmK_bound(123, 0.2, 2.0) == doctest::Approx(2 * thmK_bound(123, 0.2, 1.0)));
  CHECK_THROWS_AS(thmK_bound(0, 0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(thmK_bound(5, 0.1, 0.0), std::domain_error);
}

namespace {

// independent coefficient oracle: naive eta product, no shared multiply code
std::vector<Int> naive_tau(std::uint64_t X) {
  std::vector<Int> p{Int(1)};
  for (std::uint64_t n = 1; n <= X; ++n) {
    std::vector<Int> f(n + 1, Int(0));
    f[0] = 1;
    f[n] = -1;
    p = hecke::testing::naive_mul(p, f, X);
  }
  std::vector<Int> p24{Int(1)};
  for (int i = 0; i < 24; ++i) p24 = hecke::testing::naive_mul(p24, p, X);
  std::vector<Int> tau(X + 1, Int(0));
  for (std::uint64_t n = 1; n <= X; ++n) tau[n] = p24[n - 1];
  return tau;
}

}  // namespace

TEST_CASE("first simultaneous sign change") {
  Newform f = delta_form(300);
  Newform g = level_one_eigenform(16, 300);

  SUBCASE("delta vs weight 16 changes at n=2, by brute force oracle") {
    auto tau = naive_tau(20);
    // weight-16 oracle: tau * (1 + 240 sum sigma_3(n) q^n)
    std::vector<Int> e4(21, Int(0));
    e4[0] = 1;
    for (std::uint64_t n = 1; n <= 20; ++n) {
      Int s3(0);
      for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) s3 += Int(static_cast<unsigned long>(d * d * d));
      e4[n] = 240 * s3;
    }
    auto a16 = hecke::testing::naive_mul(tau, e4, 20);
    std::uint64_t expected = 0;
    for (std::uint64_t n = 2; n <= 20; ++n)
      if (sign_of(tau[n]) * sign_of(a16[n]) < 0) { expected = n; break; }
    REQUIRE(expected == 2);

    SignChangeReport r = first_simultaneous_sign_change(f, g, 300);
    REQUIRE(r.first_negative_n.has_value());
    CHECK(*r.first_negative_n == expected);
    CHECK(r.bound_value == doctest::Approx(thm1_bound(12, 16, 1, 1.0)));
    CHECK(r.ratio == doctest::Approx(2.0 / r.bound_value));
  }

  SUBCASE("identical tables are rejected") {
    CHECK_THROWS_AS(first_simultaneous_sign_change(f, f, 300), std::invalid_argument);
  }

  SUBCASE("nonnegative products give not-found; scaling preserves the scan") {
    Newform scaled = f;
    for (auto& c : scaled.coeffs) c *= 7;  // positive scaling flips no signs
    SignChangeReport r = first_simultaneous_sign_change(f, scaled, 300);
    CHECK(!r.first_negative_n.has_value());
    CHECK(r.scanned_to == 300);

    // argsign invariance on a pair that does change sign
    Newform gs = g;
    for (auto& c : gs.coeffs) c *= 1000003;
    SignChangeReport r1 = first_simultaneous_sign_change(f, g, 300);
    SignChangeReport r2 = first_simultaneous_sign_change(f, gs, 300);
    CHECK(r1.first_negative_n == r2.first_negative_n);
  }

  SUBCASE("monotone in the horizon") {
    SignChangeReport small = first_simultaneous_sign_change(f, g, 50);
    SignChangeReport large = first_simultaneous_sign_change(f, g, 300);
    REQUIRE(small.first_negative_n.has_value());
    CHECK(*small.first_negative_n == *large.first_negative_n);
  }
}

TEST_CASE("weak smoke bound over all level-one pairs") {
  std::vector<Newform> forms;
  for (unsigned k : {12u, 16u, 18u, 20u, 22u, 26u})
    forms.push_back(level_one_eigenform(k, 2000));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      SignChangeReport r = first_simultaneous_sign_change(forms[i], forms[j], 2000);
      REQUIRE(r.first_negative_n.has_value());
      CHECK(static_cast<double>(*r.first_negative_n) <=
            thm1_bound(forms[i].weight, forms[j].weight, 1, 1.0));
    }
  }
}

TEST_CASE("window scans of a_f(n) a_g(n^2)") {
  Newform f = delta_form(1200);
  Newform g = level_one_eigenform(16, 1200);

  SUBCASE("window with fewer than 2 nonzero terms has no changes") {
    WindowScanResult r = scan_fg2_windows(f, g, 0.01, {4.0}, 1200);
    REQUIRE(r.windows.size() == 1);
    CHECK(r.windows[0].nonzero_terms <= 1);
    CHECK(r.windows[0].changes == 0);
    CHECK(!r.warnings.empty());  // delta outside the theorem range only warns
  }

  SUBCASE("library window count equals a direct per-window scan") {
    WindowScanResult r = scan_fg2_windows(f, g, 0.95, {100.0, 500.0}, 1200);
    auto spf = smallest_factor_table(1200);
    for (const auto& w : r.windows) {
      std::uint64_t changes = 0, nonzero = 0;
      int prev = 0;
      for (std::uint64_t n = w.n_lo; n <= w.n_hi; ++n) {
        int sf = sign_of(f.coeffs[n]);
        Int ag2 = coeff_via_factorization(g, n * n, spf);
        int sg = sign_of(ag2);
        if (sf * sg == 0) continue;
        ++nonzero;
        if (prev != 0 && sf * sg != prev) ++changes;
        prev = sf * sg;
      }
      CHECK(w.changes == changes);
      CHECK(w.nonzero_terms == nonzero);
    }
  }

  SUBCASE("delta vs weight 16 at x=1000 delta=0.95 has a change") {
    WindowScanResult r = scan_fg2_windows(f, g, 0.95, {1000.0}, 1200);
    REQUIRE(r.windows.size() == 1);
    CHECK(r.windows[0].changes >= 1);
    CHECK(r.warnings.empty());
  }

  SUBCASE("insufficient horizons are refused") {
    Newform small = delta_form(50);
    CHECK_THROWS_WITH_AS(scan_fg2_windows(f, small, 0.95, {1000.0}, 1200),
                         doctest::Contains("insufficient g horizon"),
                         std::domain_error);
    CHECK_THROWS_AS(scan_fg2_windows(small, g, 0.95, {1000.0}, 1200),
                    std::domain_error);
  }
}

TEST_CASE("coeff_via_factorization matches tables") {
  Newform g = level_one_eigenform(18, 400);
  auto spf = smallest_factor_table(400);
  for (std::uint64_t n = 1; n <= 400; ++n)
    CHECK(coeff_via_factorization(g, n, spf) == g.coeffs[n]);
  // beyond the table via factored arguments
  CHECK(coeff_via_factorization(g, 4 * 9, spf) == g.coeffs[4] * g.coeffs[9]);
}

TEST_CASE("lemma41_probe diagnostics") {
  auto ones = [](std::uint64_t) { return 1.0; };
  auto alt = [](std::uint64_t n) { return n % 2 ? -1.0 : 1.0; };
  std::vector<double> grid{100, 300, 1000, 3000, 10000};

  SUBCASE("constant sequences have linear square sums") {
    Lemma41Fit fit = lemma41_probe(ones, ones, grid);
    CHECK(fit.c == doctest::Approx(1.0).epsilon(0.01));
    CHECK(fit.gamma <= 0.1);
  }
  SUBCASE("alternating sequence has bounded partial sums") {
    Lemma41Fit fit = lemma41_probe(alt, ones, grid);
    CHECK(std::abs(fit.beta) <= 0.05);
  }
  SUBCASE("grid must have 3 points") {
    CHECK_THROWS_AS(lemma41_probe(ones, ones, {10.0, 20.0}), std::domain_error);
  }
}

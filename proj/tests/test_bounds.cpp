#include <doctest.h>

#include <cmath>

#include "hecke/bounds.hpp"
#include "hecke/primes.hpp"
#include "helpers.hpp"

using namespace hecke;

TEST_CASE("restricted Euler products") {
  SUBCASE("full product at s=2 approaches zeta(2)") {
    // independent oracle: direct series summation with an integral tail
    double zeta2 = 0;
    for (std::uint64_t n = 1000000; n >= 1; --n) zeta2 += 1.0 / (double(n) * n);
    zeta2 += 1.0 / 1000000.5;  // midpoint tail estimate
    ZetaPartial z = zeta_N_partial({2.0, 0.0}, 1, 100000);
    CHECK(std::abs(z.value.real() - zeta2) <= 1e-4);
    CHECK(std::abs(z.value.real() - M_PI * M_PI / 6) <= 1e-4);
    CHECK(std::abs(z.value.imag()) <= 1e-15);
    CHECK(z.tail_bound < 1e-3);
  }
  SUBCASE("removing the p=2 factor") {
    ZetaPartial z1 = zeta_N_partial({2.0, 0.0}, 1, 100000);
    ZetaPartial z2 = zeta_N_partial({2.0, 0.0}, 2, 100000);
    CHECK(z2.value.real() == doctest::Approx(0.75 * z1.value.real()).epsilon(1e-10));
  }
  SUBCASE("P=2, N=1, s=2 is exactly (1 - 1/4)^{-1}") {
    ZetaPartial z = zeta_N_partial({2.0, 0.0}, 1, 2);
    CHECK(z.value.real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("divergence region refused") {
    CHECK_THROWS_AS(zeta_N_partial({1.0, 0.0}, 1, 100), std::domain_error);
  }
}

TEST_CASE("eigenvalue-product partial sums") {
  Newform df = delta_form(10000);
  Newform dg = level_one_eigenform(16, 10000);
  EigenvalueSeries f = normalize(df), g = normalize(dg);

  SUBCASE("x < 2 keeps only the n=1 term") {
    CHECK(rankin_partial_sum(f, g, 1, 1.5, Smoothing::None) == doctest::Approx(1.0));
    double l = std::log(1.5);
    CHECK(rankin_partial_sum(f, g, 1, 1.5, Smoothing::LogSquared) ==
          doctest::Approx(l * l));
    CHECK(rankin_partial_sum(f, g, 1, 1.5, Smoothing::LogPower, 3) ==
          doctest::Approx(l * l * l));
  }
  SUBCASE("diagonal sum grows at least like x/(2 log^2 x)") {
    double s = rankin_partial_sum(f, f, 1, 10000, Smoothing::None);
    double lg = std::log(10000.0);
    CHECK(s > 0);
    CHECK(s >= 10000.0 / (2 * lg * lg));
  }
  SUBCASE("step-function semantics between integers") {
    double a = rankin_partial_sum(f, g, 1, 100.25, Smoothing::None);
    double b = rankin_partial_sum(f, g, 1, 100.75, Smoothing::None);
    CHECK(a == b);
  }
  SUBCASE("summation order is compensated") {
    double forward = rankin_partial_sum(f, g, 1, 10000, Smoothing::None);
    double reverse = 0;
    for (std::uint64_t n = 10000; n >= 1; --n) reverse += f.lambda[n] * g.lambda[n];
    CHECK(std::abs(forward - reverse) <=
          1e-6 * std::max(1.0, std::abs(forward)));
  }
  SUBCASE("horizon guard") {
    CHECK_THROWS_AS(rankin_partial_sum(f, g, 1, 20000, Smoothing::None),
                    std::domain_error);
  }
}

TEST_CASE("prime square sums") {
  Newform df = delta_form(10000);
  EigenvalueSeries f = normalize(df);
  SUBCASE("x=2 is the single term lambda(2)^2") {
    PrimeSquareSum s = prime_square_sum(f, 1, 2);
    CHECK(s.sum == doctest::Approx(f.lambda[2] * f.lambda[2]));
    CHECK(s.primes_used == 1);
  }
  SUBCASE("ratio approaches 1 already at 1e4") {
    PrimeSquareSum s = prime_square_sum(f, 1, 10000);
    CHECK(s.ratio > 0.6);
    CHECK(s.ratio < 1.5);
  }
  SUBCASE("per-prime square identity, exactly in integers") {
    Newform dg = level_one_eigenform(20, 100);
    for (std::uint64_t p : primes_up_to(97)) {
      Int af = df.coeffs[p], ag = dg.coeffs[p];
      Int pf = pow_ui(p, df.weight - 1), pg = pow_ui(p, dg.weight - 1);
      Int lhs = coeff_prime_power(af, p, df.weight, 2, false) *
                coeff_prime_power(ag, p, dg.weight, 2, false);
      // (af ag)^2 - af^2 p^{k2-1} - ag^2 p^{k1-1} + p^{k1+k2-2}
      Int rhs = af * af * ag * ag - af * af * pg - ag * ag * pf + pf * pg;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("convexity-shape bound evaluator") {
  SUBCASE("sigma = 3/4 exponent behavior") {
    BoundQuery base{0.75, 0.0, 1, 1, 12, 12, 1e-12, 1.0};
    BoundQuery n16 = base;
    n16.N = 16;
    // quadrupling ... N^(1/4): 16^(1/4) = 2
    CHECK(convexity_rhs(n16) / convexity_rhs(base) == doctest::Approx(2.0).epsilon(1e-6));
    BoundQuery t1 = base;
    t1.t = 13.0;  // (3+13)^(1/2) / 3^(1/2) = 4/sqrt(3)
    CHECK(convexity_rhs(t1) / convexity_rhs(base) ==
          doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-6));
  }
  SUBCASE("N=1, k1=k2, t=0, small eps: k^(1/4) sqrt(3)") {
    BoundQuery q{0.75, 0.0, 1, 1, 16, 16, 1e-12, 1.0};
    CHECK(convexity_rhs(q) ==
          doctest::Approx(std::pow(16.0, 0.25) * std::sqrt(3.0)).epsilon(1e-6));
  }
  SUBCASE("doubling the constant doubles the output") {
    BoundQuery q{0.8, 2.0, 15, 1, 12, 16, 0.05, 1.0};
    BoundQuery q2 = q;
    q2.C = 2.0;
    CHECK(convexity_rhs(q2) == doctest::Approx(2 * convexity_rhs(q)));
  }
  SUBCASE("weights are reordered, sigma is range-checked") {
    BoundQuery q{0.75, 0.0, 5, 1, 16, 12, 0.01, 1.0};
    BoundQuery swapped = q;
    swapped.k1 = 12;
    swapped.k2 = 16;
    CHECK(convexity_rhs(q) == convexity_rhs(swapped));
    BoundQuery bad = q;
    bad.sigma = 0.5;
    CHECK_THROWS_AS(convexity_rhs(bad), std::domain_error);
    bad.sigma = 1.0;
    CHECK_THROWS_AS(convexity_rhs(bad), std::domain_error);
  }
  SUBCASE("monotone in N, |t|, eps, C") {
    BoundQuery q{0.75, 1.0, 7, 1, 12, 16, 0.01, 1.0};
    auto bump = [&](auto mod) {
      BoundQuery b = q;
      mod(b);
      CHECK(convexity_rhs(b) >= convexity_rhs(q));
    };
    bump([](BoundQuery& b) { b.N = 8; });
    bump([](BoundQuery& b) { b.t = 2.0; });
    bump([](BoundQuery& b) { b.eps = 0.02; });
    bump([](BoundQuery& b) { b.C = 1.5; });
  }
}

TEST_CASE("subconvexity-shape bound evaluator") {
  CHECK(subconvexity_rhs(1, 0.0, 2.0, 0.0, 1.0) == doctest::Approx(1.0));
  CHECK(subconvexity_rhs(1, 1.0, 2.0, 0.0, 3.0) ==
        doctest::Approx(3.0 * 2.0));  // |1+i|^2 = 2
  // 10^(4 * 39/80) = 10^1.95 = 89.12509...
  CHECK(subconvexity_rhs(10000, 0.0, 1.0, 0.0, 1.0) ==
        doctest::Approx(89.1251).epsilon(1e-5));
  CHECK(subconvexity_rhs(10000, 0.0, 1.0, 0.01, 1.0) >
        subconvexity_rhs(10000, 0.0, 1.0, 0.0, 1.0));
  CHECK_THROWS_AS(subconvexity_rhs(0, 0.0, 1.0, 0.0, 1.0), std::domain_error);
}

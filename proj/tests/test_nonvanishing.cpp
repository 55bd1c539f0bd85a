#include <doctest.h>

#include <cmath>

#include "hecke/nonvanishing.hpp"
#include "hecke/primes.hpp"
#include "helpers.hpp"

using namespace hecke;
using hecke::testing::make_multiplicative_form;

TEST_CASE("first simultaneous nonvanishing") {
  SUBCASE("delta vs weight 16: first_n = 2, bound vacuous at level 1") {
    Newform f = delta_form(100);
    Newform g = level_one_eigenform(16, 100);
    NonvanishReport r = first_simultaneous_nonvanishing(f, g, 100);
    REQUIRE(r.first_n.has_value());
    CHECK(*r.first_n == 2);
    CHECK(!r.hypothesis_ok);  // lcm = 1 <= 3
  }
  SUBCASE("zeros at 2 and 3 push the first index up") {
    Newform f = make_multiplicative_form(12, 1, {{2, Int(0)}, {3, Int(0)}}, 100);
    Newform g = delta_form(100);
    // brute scan oracle
    std::uint64_t expected = 0;
    for (std::uint64_t n = 2; n <= 100; ++n)
      if (sign_of(f.coeffs[n]) != 0 && sign_of(g.coeffs[n]) != 0) {
        expected = n;
        break;
      }
    REQUIRE(expected == 4);  // a_f(4) = -2^11 != 0
    NonvanishReport r = first_simultaneous_nonvanishing(f, g, 100);
    REQUIRE(r.first_n.has_value());
    CHECK(*r.first_n == expected);
  }
  SUBCASE("level pair above 3 activates the bound") {
    Newform f = make_multiplicative_form(2, 11, {{2, Int(-2)}}, 100);
    Newform g = make_multiplicative_form(2, 5, {{2, Int(-1)}}, 100);
    NonvanishReport r = first_simultaneous_nonvanishing(f, g, 100);
    CHECK(r.hypothesis_ok);  // lcm = 55
    double expected_bound = std::pow(2.0 * std::log(55.0), 4.0);
    CHECK(r.bound == doctest::Approx(expected_bound));
    REQUIRE(r.first_n.has_value());
    CHECK(*r.first_n == 2);
    CHECK(r.within_bound);
    CHECK(r.warning.has_value());  // horizon 100 < bound ~ 4194
  }
}

TEST_CASE("smallest_coprime_prime") {
  CHECK(smallest_coprime_prime(1) == 2);
  CHECK(smallest_coprime_prime(6) == 5);
  CHECK(smallest_coprime_prime(30030) == 17);
  CHECK(17.0 <= 2.0 * std::log(30030.0));  // 2 log N ~ 20.62
  CHECK(smallest_coprime_prime(2) == 3);
}

TEST_CASE("prime power case analysis") {
  SUBCASE("both lambda(p) zero: m=2") {
    Newform f = make_multiplicative_form(12, 1, {{3, Int(0)}}, 100);
    Newform g = make_multiplicative_form(16, 1, {{3, Int(0)}}, 100);
    PrimePowerCase c = prime_power_first_nonvanish(f, g, 3);
    REQUIRE(c.m_star.has_value());
    CHECK(*c.m_star == 2);
    CHECK(c.branch == PrimePowerBranch::Case1BothAnglesHalfPi);
    // the m=2 product is p^{k1+k2-2}
    Int prod = coeff_prime_power(Int(0), 3, 12, 2, false) *
               coeff_prime_power(Int(0), 3, 16, 2, false);
    CHECK(prod == pow_ui(3, 12 + 16 - 2));
  }
  SUBCASE("one zero, other nonzero at p^2: m=2") {
    Newform f = make_multiplicative_form(12, 1, {{5, Int(0)}}, 100);
    Newform g = delta_form(100);
    PrimePowerCase c = prime_power_first_nonvanish(f, g, 5);
    REQUIRE(c.m_star.has_value());
    CHECK(*c.m_star == 2);
    CHECK(c.branch == PrimePowerBranch::Case2OneZero);
  }
  SUBCASE("synthetic third-angle case: m=4") {
    // integral even-weight tables cannot reach lambda(p) = 1 (that needs
    // a(p)^2 = p^{k-1} with k even), so probe the branch on angle data
    PrimePowerSequence sf(0.0);   // alpha = pi/2
    PrimePowerSequence sg(1.0);   // beta = pi/3
    PrimePowerCase c = classify_prime_power(sf, sg);
    REQUIRE(c.m_star.has_value());
    CHECK(*c.m_star == 4);
    CHECK(c.branch == PrimePowerBranch::Case2ThirdAngle);
    // oracle: zeros of sin((m+1)a)/sin(a) at a = pi/2 and pi/3
    for (unsigned m = 1; m <= 3; ++m) {
      double prod = std::sin((m + 1) * M_PI / 2) * std::sin((m + 1) * M_PI / 3);
      CHECK(std::abs(prod) <= 1e-12);
    }
    CHECK(std::abs(std::sin(5 * M_PI / 2) * std::sin(5 * M_PI / 3)) > 0.5);
  }
  SUBCASE("both nonzero: m=1") {
    Newform f = delta_form(100);
    Newform g = level_one_eigenform(16, 100);
    PrimePowerCase c = prime_power_first_nonvanish(f, g, 2);
    REQUIRE(c.m_star.has_value());
    CHECK(*c.m_star == 1);
    CHECK(c.branch == PrimePowerBranch::BothNonzeroAt1);
  }
  SUBCASE("ramified primes are rejected") {
    Newform f = make_multiplicative_form(2, 11, {}, 100);
    Newform g = delta_form(100);
    CHECK_THROWS_AS(prime_power_first_nonvanish(f, g, 11), std::domain_error);
  }
  SUBCASE("every unramified p <= 200 over a built-in pair has m <= 4") {
    Newform f = delta_form(250);
    Newform g = level_one_eigenform(20, 250);
    for (std::uint64_t p : primes_up_to(200)) {
      PrimePowerCase c = prime_power_first_nonvanish(f, g, p);
      REQUIRE(c.m_star.has_value());
      CHECK(*c.m_star <= 4);
    }
  }
}

TEST_CASE("densities along prime powers") {
  SUBCASE("both angles pi/2: density 1/2") {
    Newform f = make_multiplicative_form(12, 1, {{7, Int(0)}}, 100);
    Newform g = make_multiplicative_form(16, 1, {{7, Int(0)}}, 100);
    DensityRecord rec = density_at_prime(f, g, 7, 1000);
    CHECK(rec.empirical_density == doctest::Approx(0.5).epsilon(1e-9));
    REQUIRE(rec.exact_density.has_value());
    CHECK(*rec.exact_density == Rat(1, 2));
  }
  SUBCASE("endpoint against pi/3: density 2/3") {
    DensityRecord rec = density_from_lambdas(2.0, 1.0, 9000);
    REQUIRE(rec.exact_density.has_value());
    CHECK(*rec.exact_density == Rat(2, 3));
    CHECK(rec.case_label == DensityCase::OneEndpoint);
    CHECK(std::abs(rec.empirical_density - 2.0 / 3.0) <= 2.0 / 9000 + 2e-4);
  }
  SUBCASE("pi/2 against pi/3: inclusion-exclusion gives 1/3") {
    DensityRecord rec = density_from_lambdas(0.0, 1.0, 10000);
    REQUIRE(rec.exact_density.has_value());
    CHECK(*rec.exact_density == Rat(1, 3));
    // brute force oracle via the sine quotient zeros
    std::uint64_t nonzero = 0;
    for (std::uint64_t m = 1; m <= 10000; ++m) {
      bool zf = (m + 1) % 2 == 0;  // sin((m+1)pi/2) = 0 iff m odd
      bool zg = (m + 1) % 3 == 0;
      if (!zf && !zg) ++nonzero;
    }
    CHECK(rec.empirical_density == doctest::Approx(nonzero / 10000.0));
    CHECK(std::abs(rec.empirical_density - 1.0 / 3.0) <=
          2.0 / 10000 + 2.0 * (0.5 + 1.0 / 3.0) / 10000);
  }
  SUBCASE("convergence is Cauchy in M") {
    for (std::uint64_t M : {500u, 1000u, 2000u}) {
      DensityRecord a = density_from_lambdas(0.0, 1.0, M);
      DensityRecord b = density_from_lambdas(0.0, 1.0, 2 * M);
      CHECK(std::abs(a.empirical_density - b.empirical_density) <= 4.0 / M);
    }
  }
  SUBCASE("case labels") {
    CHECK(density_from_lambdas(2.0, -2.0, 100).case_label == DensityCase::BothEndpoint);
    CHECK(density_from_lambdas(0.7, 0.7, 100).case_label == DensityCase::EqualInterior);
    CHECK(density_from_lambdas(0.7, -0.3, 100).case_label == DensityCase::DistinctInterior);
    CHECK(!density_from_lambdas(0.7, -0.3, 100).exact_density.has_value());
  }
  SUBCASE("exact pair density corner cases") {
    CHECK(exact_pair_density(std::nullopt, std::nullopt) == Rat(1));
    CHECK(exact_pair_density(1u, 3u) == Rat(2, 3));  // endpoint term drops
    CHECK(exact_pair_density(2u, 4u) == Rat(1, 2));
    CHECK(exact_pair_density(3u, 3u) == Rat(2, 3));
  }
}

TEST_CASE("prime scan for simultaneous nonvanishing at all powers") {
  Newform f = delta_form(2000);
  Newform g = level_one_eigenform(16, 2000);
  Thm4Scan scan = thm4_prime_scan(f, g, 2000, 20);
  CHECK(scan.primes_checked == primes_up_to(2000).size());
  CHECK(scan.density == 1.0);  // no vanishing prime powers observed
  CHECK(scan.exceptional.empty());

  SUBCASE("M=1 reduces to the product of first eigenvalues") {
    Newform z = make_multiplicative_form(12, 1, {{5, Int(0)}}, 2000);
    Thm4Scan m1 = thm4_prime_scan(z, g, 2000, 1);
    std::uint64_t direct = 0;
    for (std::uint64_t p : primes_up_to(2000))
      if (sign_of(z.coeffs[p]) != 0 && sign_of(g.coeffs[p]) != 0) ++direct;
    CHECK(m1.primes_good == direct);
    // a prime with lambda_f(p) = 0 is exceptional for every M >= 1
    CHECK(std::find(m1.exceptional.begin(), m1.exceptional.end(), 5) !=
          m1.exceptional.end());
    Thm4Scan m5 = thm4_prime_scan(z, g, 2000, 5);
    CHECK(std::find(m5.exceptional.begin(), m5.exceptional.end(), 5) !=
          m5.exceptional.end());
  }
  SUBCASE("x below 2 is refused") {
    CHECK_THROWS_AS(thm4_prime_scan(f, g, 1.5, 3), std::domain_error);
  }
}

TEST_CASE("gap function") {
  SUBCASE("prescribed zero run") {
    Newform f;
    f.weight = 12;
    f.level = 1;
    f.coeffs = {Int(0), Int(1), Int(5), Int(0), Int(0), Int(3), Int(0)};
    GapResult r = gap_function(f, 2, 6);
    CHECK(r.gap == 2);  // a(3) = a(4) = 0, a(5) != 0
    CHECK(!r.truncated);
    GapResult tail = gap_function(f, 5, 6);
    CHECK(tail.gap == 1);
    CHECK(tail.truncated);  // the run hit the horizon
    GapResult none = gap_function(f, 1, 6);
    CHECK(none.gap == 0);
  }
  SUBCASE("delta has no gaps in the first 1e4") {
    Newform f = delta_form(10000);
    std::uint64_t max_gap = 0;
    for (std::uint64_t n = 1; n < 10000; n += 97)
      max_gap = std::max(max_gap, gap_function(f, n, 10000).gap);
    CHECK(max_gap == 0);
  }
  SUBCASE("n >= X is refused") {
    Newform f = delta_form(10);
    CHECK_THROWS_AS(gap_function(f, 10, 10), std::domain_error);
  }
}

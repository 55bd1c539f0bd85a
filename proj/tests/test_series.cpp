#include <doctest.h>

#include <random>

#include "hecke/newform.hpp"
#include "hecke/series.hpp"
#include "helpers.hpp"

using namespace hecke;

TEST_CASE("pentagonal series matches a naive product of (1-q^n)") {
  const std::size_t X = 200;
  std::vector<Int> prod{Int(1)};
  for (std::size_t n = 1; n <= X; ++n) {
    std::vector<Int> factor(n + 1, Int(0));
    factor[0] = 1;
    factor[n] = -1;
    prod = testing::naive_mul(prod, factor, X);
  }
  Series pent = pentagonal_series(X);
  REQUIRE(pent.size() == prod.size());
  for (std::size_t i = 0; i <= X; ++i) CHECK(pent[i] == prod[i]);
}

TEST_CASE("tau values from the eta expansion") {
  auto tau = expand_eta_delta(12);
  CHECK(tau[1] == 1);

  // brute-force oracle: multiply out (1-q)(1-q^2) to order 1, 24th power
  {
    std::vector<Int> f{Int(1), Int(-1), Int(-1)};
    std::vector<Int> p24{Int(1)};
    for (int i = 0; i < 24; ++i) p24 = testing::naive_mul(p24, f, 1);
    CHECK(tau[2] == p24[1]);  // a(2) is the q^1 coefficient of the product
    CHECK(tau[2] == -24);
  }

  CHECK(tau[6] == tau[2] * tau[3]);  // multiplicativity at coprime 2, 3
  CHECK(tau[3] == 252);
  CHECK(tau[4] == -1472);

  auto one = expand_eta_delta(1);
  CHECK(one[1] == 1);
}

TEST_CASE("horizon guards") {
  CHECK_THROWS_AS(expand_eta_delta(0), std::domain_error);
  CHECK_THROWS_AS(expand_eta_delta(kHorizonCap + 1), capacity_error);
}

TEST_CASE("packed multiply agrees with schoolbook on random signed operands") {
  std::mt19937_64 rng(7);
  auto random_poly = [&](std::size_t len, int bits) {
    Series s(len);
    for (auto& c : s) {
      Int v(static_cast<unsigned long>(rng() >> (64 - bits)));
      v <<= static_cast<unsigned>(rng() % 70);  // multi-limb values
      if (rng() & 1) v = -v;
      if (rng() % 7 == 0) v = 0;
      c = v;
    }
    return s;
  };

  // dense operands above both the schoolbook and sparse cutoffs
  Series a = random_poly(2100, 30);
  Series b = random_poly(2100, 30);
  for (std::size_t cut : {std::size_t(2099), std::size_t(2600), std::size_t(4198)}) {
    Series fast = mul_truncate(a, b, cut);
    Series slow = mul_schoolbook(a, b, cut);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i] == slow[i]);
  }
}

TEST_CASE("sparse route agrees with schoolbook") {
  std::mt19937_64 rng(11);
  Series a(1500, Int(0)), b(1500, Int(0));
  for (int i = 0; i < 40; ++i) {
    a[rng() % a.size()] = Int(static_cast<long>(rng() % 2000) - 1000);
    b[rng() % b.size()] = Int(static_cast<long>(rng() % 2000) - 1000);
  }
  Series fast = mul_truncate(a, b, 2000);
  Series slow = mul_schoolbook(a, b, 2000);
  REQUIRE(fast.size() == slow.size());
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
}

TEST_CASE("pow_truncate is iterated multiplication") {
  Series base{Int(1), Int(-1), Int(2)};
  Series by_pow = pow_truncate(base, 5, 8);
  std::vector<Int> by_mul{Int(1)};
  for (int i = 0; i < 5; ++i) by_mul = testing::naive_mul(by_mul, base, 8);
  for (std::size_t i = 0; i <= 8; ++i) CHECK(by_pow[i] == by_mul[i]);
  Series id = pow_truncate(base, 0, 4);
  CHECK(id.size() == 1);
  CHECK(id[0] == 1);
}

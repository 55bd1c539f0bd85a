#include "hecke/nonvanishing.hpp"

#include <cmath>
#include <numeric>

#include "hecke/eigenvalues.hpp"
#include "hecke/primes.hpp"

namespace hecke {

NonvanishReport first_simultaneous_nonvanishing(const Newform& f,
                                                const Newform& g,
                                                std::uint64_t X) {
  NonvanishReport r;
  std::uint64_t N = std::lcm(f.level, g.level);
  double logN = std::log(static_cast<double>(N));
  r.bound = std::pow(2.0 * logN, 4.0);
  r.hypothesis_ok = N > 3;

  std::uint64_t limit = std::min({X, f.horizon(), g.horizon()});
  r.scanned_to = limit;
  if (r.hypothesis_ok && static_cast<double>(X) < r.bound)
    r.warning = "horizon " + std::to_string(X) +
                " below the (2 log N)^4 bound " + std::to_string(r.bound);

  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (sign_of(f.coeffs[n]) != 0 && sign_of(g.coeffs[n]) != 0) {
      r.first_n = n;
      break;
    }
  }
  if (r.first_n && r.hypothesis_ok)
    r.within_bound = static_cast<double>(*r.first_n) <= r.bound;
  return r;
}

std::uint64_t smallest_coprime_prime(std::uint64_t N) {
  std::uint64_t p = 2;
  while (N % p == 0) {
    do { ++p; } while (!is_prime(p));
  }
  double bound = 2.0 * std::log(static_cast<double>(N));
  if (static_cast<double>(N) > std::exp(2.5) && static_cast<double>(p) > bound)
    throw std::logic_error("coprime prime " + std::to_string(p) +
                           " exceeds 2 log N = " + std::to_string(bound));
  return p;
}

PrimePowerSequence::PrimePowerSequence(Int a_p, std::uint64_t p, unsigned weight)
    : exact_(true), a_p_(std::move(a_p)), p_(p), weight_(weight) {
  lambda_p_ = mpz_get_d(a_p_.get_mpz_t()) *
              std::pow(static_cast<double>(p), -(static_cast<double>(weight) - 1.0) / 2.0);
  // exact recognition of the rational-angle cases: lambda^2 in {0,1,2,3,4}
  // means a(p)^2 = c * p^{k-1} for c in that set
  Int pk = pow_ui(p, weight - 1);
  Int sq = a_p_ * a_p_;
  for (unsigned c = 0; c <= 4; ++c) {
    if (sq == Int(c) * pk) {
      bool pos = sign_of(a_p_) > 0;
      switch (c) {
        case 0: tag_s_ = 2; break;                 // lambda = 0
        case 1: tag_s_ = 3; break;                 // lambda = +-1 -> pi/3, 2pi/3
        case 2: tag_s_ = 4; break;                 // +-sqrt(2)
        case 3: tag_s_ = 6; break;                 // +-sqrt(3)
        case 4: tag_s_ = 1; break;                 // lambda = +-2: endpoint, no zeros
      }
      lambda_p_ = (c == 0) ? 0.0 : (pos ? 1 : -1) * std::sqrt(static_cast<double>(c));
      break;
    }
  }
}

PrimePowerSequence::PrimePowerSequence(double lambda_p) : lambda_p_(lambda_p) {
  SatakeAngle ang = satake_angle(lambda_p);
  if (ang.rational_tag) tag_s_ = ang.rational_tag->second;
}

bool PrimePowerSequence::zero_at(unsigned m) const {
  if (exact_)
    return sign_of(coeff_prime_power(a_p_, p_, weight_, m, false)) == 0;
  if (tag_s_) return *tag_s_ >= 2 && (m + 1) % *tag_s_ == 0;
  double v = lambda_prime_power(lambda_p_, m, false);
  return std::abs(v) <= 1e-8 * (m + 1);
}

bool PrimePowerSequence::lambda_is(int v) const {
  if (exact_) {
    if (v == 0) return sign_of(a_p_) == 0;
    Int pk = pow_ui(p_, weight_ - 1);
    return a_p_ * a_p_ == Int(v) * Int(v) * pk &&
           ((v > 0) == (sign_of(a_p_) > 0));
  }
  return std::abs(lambda_p_ - v) <= 1e-9;
}

const char* to_string(PrimePowerBranch b) {
  switch (b) {
    case PrimePowerBranch::BothNonzeroAt1: return "both-nonzero-at-1";
    case PrimePowerBranch::Case1BothAnglesHalfPi: return "case1-both-angles-half-pi";
    case PrimePowerBranch::Case2OneZero: return "case2-one-zero";
    case PrimePowerBranch::Case2ThirdAngle: return "case2-third-angle";
    case PrimePowerBranch::Unresolved: return "unresolved";
  }
  return "?";
}

PrimePowerCase classify_prime_power(const PrimePowerSequence& sf,
                                    const PrimePowerSequence& sg) {
  PrimePowerCase out;
  for (unsigned m = 1; m <= 4; ++m) {
    if (!sf.zero_at(m) && !sg.zero_at(m)) {
      out.m_star = m;
      break;
    }
  }
  bool zf = sf.zero_at(1), zg = sg.zero_at(1);
  if (!zf && !zg) {
    out.branch = PrimePowerBranch::BothNonzeroAt1;
  } else if (zf && zg) {
    out.branch = PrimePowerBranch::Case1BothAnglesHalfPi;
  } else {
    const PrimePowerSequence& other = zf ? sg : sf;
    out.branch = other.zero_at(2) ? PrimePowerBranch::Case2ThirdAngle
                                  : PrimePowerBranch::Case2OneZero;
  }
  if (!out.m_star) out.branch = PrimePowerBranch::Unresolved;
  return out;
}

PrimePowerCase prime_power_first_nonvanish(const Newform& f, const Newform& g,
                                           std::uint64_t p) {
  if (f.ramified(p) || g.ramified(p))
    throw std::domain_error("prime " + std::to_string(p) +
                            " divides a level; the case analysis needs an "
                            "unramified prime");
  PrimePowerSequence sf(f.a(p), p, f.weight);
  PrimePowerSequence sg(g.a(p), p, g.weight);
  PrimePowerCase out = classify_prime_power(sf, sg);
  out.prime = p;
  return out;
}

const char* to_string(DensityCase c) {
  switch (c) {
    case DensityCase::BothEndpoint: return "both-endpoint";
    case DensityCase::OneEndpoint: return "one-endpoint";
    case DensityCase::EqualInterior: return "equal-interior";
    case DensityCase::DistinctInterior: return "distinct-interior";
  }
  return "?";
}

Rat exact_pair_density(std::optional<unsigned> s1, std::optional<unsigned> s2) {
  Rat d(1);
  bool t1 = s1 && *s1 >= 2, t2 = s2 && *s2 >= 2;
  if (t1) d -= Rat(1, *s1);
  if (t2) d -= Rat(1, *s2);
  if (t1 && t2) d += Rat(1, std::lcm(*s1, *s2));
  d.canonicalize();
  return d;
}

namespace {

DensityRecord density_scan(const PrimePowerSequence& sf,
                           const PrimePowerSequence& sg, std::uint64_t M) {
  DensityRecord rec;
  rec.M = M;
  std::uint64_t nonzero = 0;
  for (std::uint64_t m = 1; m <= M; ++m) {
    if (!sf.zero_at(static_cast<unsigned>(m)) &&
        !sg.zero_at(static_cast<unsigned>(m)))
      ++nonzero;
  }
  rec.empirical_density = M ? static_cast<double>(nonzero) / static_cast<double>(M) : 0;

  bool f_end = sf.lambda_is(2) || sf.lambda_is(-2);
  bool g_end = sg.lambda_is(2) || sg.lambda_is(-2);
  if (f_end && g_end) rec.case_label = DensityCase::BothEndpoint;
  else if (f_end || g_end) rec.case_label = DensityCase::OneEndpoint;
  else if (std::abs(sf.lambda1() - sg.lambda1()) <= 1e-12)
    rec.case_label = DensityCase::EqualInterior;
  else rec.case_label = DensityCase::DistinctInterior;

  if (sf.tag_denominator() && sg.tag_denominator())
    rec.exact_density = exact_pair_density(sf.tag_denominator(), sg.tag_denominator());
  return rec;
}

}  // namespace

DensityRecord density_at_prime(const Newform& f, const Newform& g,
                               std::uint64_t p, std::uint64_t M) {
  if (f.ramified(p) || g.ramified(p))
    throw std::domain_error("prime " + std::to_string(p) + " is ramified");
  PrimePowerSequence sf(f.a(p), p, f.weight);
  PrimePowerSequence sg(g.a(p), p, g.weight);
  DensityRecord rec = density_scan(sf, sg, M);
  rec.prime = p;
  return rec;
}

DensityRecord density_from_lambdas(double lf, double lg, std::uint64_t M) {
  return density_scan(PrimePowerSequence(lf), PrimePowerSequence(lg), M);
}

Thm4Scan thm4_prime_scan(const Newform& f, const Newform& g, double x,
                         unsigned M) {
  if (x < 2) throw std::domain_error("prime scan needs x >= 2");
  std::uint64_t xi = static_cast<std::uint64_t>(std::floor(x));
  if (f.horizon() < xi || g.horizon() < xi)
    throw std::domain_error("horizon below prime scan bound");

  Thm4Scan scan;
  scan.x = x;
  scan.M = M;
  for (std::uint64_t p : primes_up_to(xi)) {
    if (f.ramified(p) || g.ramified(p)) continue;
    ++scan.primes_checked;
    PrimePowerSequence sf(f.a(p), p, f.weight);
    PrimePowerSequence sg(g.a(p), p, g.weight);
    bool good = true;
    for (unsigned m = 1; m <= M && good; ++m)
      good = !sf.zero_at(m) && !sg.zero_at(m);
    if (good) ++scan.primes_good;
    else scan.exceptional.push_back(p);
  }
  scan.density = scan.primes_checked
                     ? static_cast<double>(scan.primes_good) / scan.primes_checked
                     : 0;
  return scan;
}

GapResult gap_function(const Newform& f, std::uint64_t n, std::uint64_t X) {
  if (X > f.horizon()) X = f.horizon();
  if (n >= X) throw std::domain_error("gap function needs n < X");
  GapResult r;
  std::uint64_t j = n + 1;
  while (j <= X && sign_of(f.coeffs[j]) == 0) {
    ++r.gap;
    ++j;
  }
  r.truncated = (j > X);
  return r;
}

}  // namespace hecke

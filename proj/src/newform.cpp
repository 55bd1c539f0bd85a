#include "hecke/newform.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <new>
#include <numeric>
#include <sstream>

#include "hecke/primes.hpp"
#include "hecke/series.hpp"

namespace hecke {

const char* to_string(FormSource s) {
  switch (s) {
    case FormSource::EtaDelta: return "eta-delta";
    case FormSource::LevelOneBasis: return "level-one-basis";
    case FormSource::File: return "file";
    case FormSource::Http: return "http";
    case FormSource::EllipticCurve: return "elliptic-curve";
  }
  return "?";
}

const Int& Newform::a(std::uint64_t n) const {
  if (n >= coeffs.size())
    throw std::out_of_range("coefficient a(" + std::to_string(n) +
                            ") beyond horizon " + std::to_string(horizon()));
  return coeffs[n];
}

Rat bernoulli(unsigned n) {
  // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
  std::vector<Rat> B(n + 1);
  B[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rat acc = 0;
    for (unsigned k = 0; k < m; ++k) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      acc += Rat(binom) * B[k];
    }
    B[m] = -acc / Rat(m + 1);
    B[m].canonicalize();
  }
  return B[n];
}

namespace {

void check_horizon(std::uint64_t X) {
  if (X < 1) throw std::domain_error("horizon must be >= 1");
  if (X > kHorizonCap)
    throw capacity_error("horizon " + std::to_string(X) + " exceeds cap " +
                         std::to_string(kHorizonCap));
}

bool is_squarefree_u64(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

std::vector<Int> expand_eta_delta(std::uint64_t X) {
  check_horizon(X);
  try {
    Series pent = pentagonal_series(X - 1);
    Series p24 = pow_truncate(pent, 24, X - 1);
    std::vector<Int> a(X + 1, Int(0));
    for (std::uint64_t n = 1; n <= X; ++n) a[n] = p24[n - 1];
    return a;
  } catch (const std::bad_alloc&) {
    throw capacity_error("allocation failed expanding eta product to " +
                         std::to_string(X) + " terms");
  }
}

Newform delta_form(std::uint64_t X) {
  Newform f;
  f.weight = 12;
  f.level = 1;
  f.level_square_free = true;
  f.label = "delta";
  f.source = FormSource::EtaDelta;
  f.coeffs = expand_eta_delta(X);
  return f;
}

std::vector<Int> divisor_power_sums(std::uint64_t X, unsigned power) {
  std::vector<Int> sig(X + 1, Int(0));
  for (std::uint64_t d = 1; d <= X; ++d) {
    Int dp = pow_ui(d, power);
    for (std::uint64_t n = d; n <= X; n += d)
      sig[n] += dp;
  }
  return sig;
}

Newform level_one_eigenform(unsigned k, std::uint64_t X) {
  static const unsigned allowed[] = {12, 16, 18, 20, 22, 26};
  if (std::find(std::begin(allowed), std::end(allowed), k) == std::end(allowed))
    throw std::domain_error("unsupported weight " + std::to_string(k) +
                            " (one-dimensional level-one weights only)");
  check_horizon(X);

  Newform f;
  f.weight = k;
  f.level = 1;
  f.level_square_free = true;
  f.label = "k" + std::to_string(k);
  f.source = FormSource::LevelOneBasis;

  if (k == 12) {
    f.coeffs = expand_eta_delta(X);
    return f;
  }

  unsigned w = k - 12;
  Rat c = Rat(-2 * static_cast<long>(w)) / bernoulli(w);
  c.canonicalize();
  assert(c.get_den() == 1);

  Series eis(X + 1, Int(0));
  eis[0] = 1;
  std::vector<Int> sig = divisor_power_sums(X, w - 1);
  for (std::uint64_t n = 1; n <= X; ++n) eis[n] = c.get_num() * sig[n];

  Series ds(X + 1, Int(0));
  {
    std::vector<Int> tau = expand_eta_delta(X);
    for (std::uint64_t n = 1; n <= X; ++n) ds[n] = tau[n];
  }

  Series prod = mul_truncate(ds, eis, X);
  f.coeffs.assign(X + 1, Int(0));
  for (std::uint64_t n = 1; n <= X && n < prod.size(); ++n) f.coeffs[n] = prod[n];
  return f;
}

Int elliptic_ap(long long A, long long B, std::uint64_t p) {
  if (p == 2) throw std::domain_error("p = 2 unsupported for point counts");
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  Int disc = Int(4) * Int(static_cast<long>(A)) * Int(static_cast<long>(A)) * Int(static_cast<long>(A)) + Int(27) * Int(static_cast<long>(B)) * Int(static_cast<long>(B));
  if (mpz_divisible_ui_p(disc.get_mpz_t(), p))
    throw std::domain_error("curve is singular mod " + std::to_string(p));

  auto reduce = [p](long long v) -> std::uint64_t {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
  };
  std::uint64_t a = reduce(A), b = reduce(B);

  // quadratic character table: chi[t] = 1 for nonzero squares, -1 otherwise
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t t = 1; t <= (p - 1) / 2; ++t)
    chi[(t * t) % p] = 1;

  long s = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t fx = ((x * x) % p * x + (a * x) % p + b) % p;
    s += chi[fx];
  }
  Int ap(-s);

  Int bound = Int(4) * Int(static_cast<unsigned long>(p));  // a_p^2 <= 4p
  if (ap * ap > bound)
    throw std::logic_error("Hasse bound violated at p=" + std::to_string(p));
  return ap;
}

Newform elliptic_curve_form(long long A, long long B, std::uint64_t X) {
  check_horizon(X);
  Int disc = Int(4) * Int(static_cast<long>(A)) * Int(static_cast<long>(A)) * Int(static_cast<long>(A)) + Int(27) * Int(static_cast<long>(B)) * Int(static_cast<long>(B));
  if (sign_of(disc) == 0) throw std::domain_error("curve has zero discriminant");
  Int level_z = abs(disc);
  if (mpz_odd_p(level_z.get_mpz_t())) level_z *= 2;  // 2 is always a bad model prime
  if (!level_z.fits_ulong_p())
    throw capacity_error("curve discriminant does not fit a machine level");
  std::uint64_t level = level_z.get_ui();

  Newform f;
  f.weight = 2;
  f.level = level;
  f.level_square_free = is_squarefree_u64(level);
  {
    std::ostringstream lbl;
    lbl << "ec_" << A << "_" << B;
    f.label = lbl.str();
  }
  f.source = FormSource::EllipticCurve;
  f.coeffs.assign(X + 1, Int(0));
  if (X >= 1) f.coeffs[1] = 1;

  std::vector<std::uint32_t> spf = smallest_factor_table(X);
  for (std::uint64_t p = 2; p <= X; ++p) {
    if (spf[p] != p) continue;  // composite
    bool bad = (p == 2) || (level % p == 0);
    Int ap = bad ? Int(0) : elliptic_ap(A, B, p);
    // fill a(p^m) upward: recurrence for good p, a(p)^m (= 0) for bad p
    Int prev(1), cur = ap;
    std::uint64_t pm = p;
    while (pm <= X) {
      f.coeffs[pm] = cur;
      if (pm > X / p) break;
      Int next = bad ? Int(0) : Int(ap * cur - Int(static_cast<unsigned long>(p)) * prev);
      prev = cur;
      cur = next;
      pm *= p;
    }
  }
  // multiplicative fill
  for (std::uint64_t n = 2; n <= X; ++n) {
    std::uint64_t p = spf[n];
    std::uint64_t pe = 1, m = n;
    while (m % p == 0) {
      m /= p;
      pe *= p;
    }
    if (m != 1) f.coeffs[n] = f.coeffs[pe] * f.coeffs[m];
  }
  return f;
}

std::vector<HeckeViolation> verify_hecke_relations(const Newform& f) {
  std::vector<HeckeViolation> v;
  std::uint64_t X = f.horizon();
  if (X == 0) return v;

  if (f.coeffs[1] != 1) {
    v.push_back({HeckeViolation::Kind::Normalization, 1,
                 "a(1) = " + f.coeffs[1].get_str() + ", expected 1"});
  }

  // a(mn) = a(m) a(n) for coprime m < n
  for (std::uint64_t m = 2; m * m <= X; ++m) {
    for (std::uint64_t n = m + 1; m * n <= X; ++n) {
      if (std::gcd(m, n) != 1) continue;
      if (f.coeffs[m * n] != f.coeffs[m] * f.coeffs[n]) {
        v.push_back({HeckeViolation::Kind::Multiplicativity, m * n,
                     "a(" + std::to_string(m * n) + ") != a(" +
                         std::to_string(m) + ")a(" + std::to_string(n) + ")"});
      }
    }
  }

  for (std::uint64_t p : primes_up_to(X)) {
    if (!f.ramified(p)) {
      Int pk = pow_ui(p, f.weight - 1);
      // a(p)a(p^m) = a(p^{m+1}) + p^{k-1} a(p^{m-1})
      std::uint64_t pm = p, pm_prev = 1;
      unsigned m = 1;
      while (pm <= X / p) {
        std::uint64_t pm_next = pm * p;
        if (f.coeffs[p] * f.coeffs[pm] != f.coeffs[pm_next] + pk * f.coeffs[pm_prev]) {
          // named by the highest power entering the relation
          v.push_back({HeckeViolation::Kind::PrimePower, pm_next,
                       "recurrence fails at p=" + std::to_string(p) +
                           ", m=" + std::to_string(m + 1)});
        }
        pm_prev = pm;
        pm = pm_next;
        ++m;
      }
    } else {
      Int power = f.coeffs[p];
      std::uint64_t pm = p;
      unsigned m = 1;
      while (pm <= X / p) {
        pm *= p;
        ++m;
        power *= f.coeffs[p];
        if (f.coeffs[pm] != power) {
          v.push_back({HeckeViolation::Kind::RamifiedPower, pm,
                       "a(p^m) != a(p)^m at p=" + std::to_string(p) +
                           ", m=" + std::to_string(m)});
        }
      }
    }
  }
  return v;
}

namespace {

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line,
                             const std::string& what) {
  throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Newform parse_coefficients(std::istream& in, const std::string& origin) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) parse_fail(origin, 1, "missing header line");
  ++lineno;

  std::istringstream hs(line);
  std::string hash, key;
  unsigned k = 0;
  std::uint64_t N = 0;
  hs >> hash >> key;
  if (hash != "#" || key != "weight")
    parse_fail(origin, lineno, "missing header (expected '# weight <k> level <N>')");
  if (!(hs >> k)) parse_fail(origin, lineno, "bad weight in header");
  hs >> key;
  if (key != "level" || !(hs >> N))
    parse_fail(origin, lineno, "bad level in header");
  std::string label;
  if (hs >> key) {
    if (key != "label") parse_fail(origin, lineno, "unexpected header field '" + key + "'");
    std::getline(hs, label);
    if (!label.empty() && label.front() == ' ') label.erase(0, 1);
  }
  if (k < 2) parse_fail(origin, lineno, "weight must be >= 2");
  if (N < 1) parse_fail(origin, lineno, "level must be >= 1");

  std::vector<Int> coeffs(1, Int(0));
  std::uint64_t expected = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::uint64_t n;
    std::string value;
    if (!(ls >> n >> value)) parse_fail(origin, lineno, "expected '<n> <a_n>'");
    if (n != expected)
      parse_fail(origin, lineno,
                 "coefficient index " + std::to_string(n) + " out of order (expected " +
                     std::to_string(expected) + ")");
    Int a;
    if (mpz_set_str(a.get_mpz_t(), value.c_str(), 10) != 0)
      parse_fail(origin, lineno, "bad integer '" + value + "'");
    coeffs.push_back(a);
    ++expected;
  }
  if (coeffs.size() < 2) parse_fail(origin, lineno + 1, "no coefficients");

  Newform f;
  f.weight = k;
  f.level = N;
  f.level_square_free = is_squarefree_u64(N);
  f.label = label.empty() ? origin : label;
  f.source = FormSource::File;
  f.coeffs = std::move(coeffs);

  auto violations = verify_hecke_relations(f);
  if (!violations.empty()) {
    throw invariant_error(origin + ": " + violations.front().message + " (" +
                          std::to_string(violations.size()) + " violation(s) total)");
  }
  return f;
}

Newform load_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_coefficients(in, path);
}

void write_coefficients(const Newform& f, std::ostream& out) {
  out << "# weight " << f.weight << " level " << f.level;
  if (!f.label.empty()) out << " label " << f.label;
  out << "\n";
  for (std::uint64_t n = 1; n <= f.horizon(); ++n)
    out << n << " " << f.coeffs[n].get_str() << "\n";
}

void save_coefficients(const Newform& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_coefficients(f, out);
}

}  // namespace hecke

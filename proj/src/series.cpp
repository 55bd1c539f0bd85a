#include "hecke/series.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdint>
#include <future>

namespace hecke {

Series pentagonal_series(std::size_t max_exp) {
  // prod (1-q^n) = sum_{j in Z} (-1)^j q^{j(3j-1)/2}
  Series out(max_exp + 1, Int(0));
  out[0] = 1;
  for (long j = 1;; ++j) {
    unsigned long long e1 = static_cast<unsigned long long>(j) * (3 * j - 1) / 2;
    unsigned long long e2 = static_cast<unsigned long long>(j) * (3 * j + 1) / 2;
    if (e1 > max_exp && e2 > max_exp) break;
    int s = (j % 2 == 0) ? 1 : -1;
    if (e1 <= max_exp) out[e1] += s;
    if (e2 <= max_exp) out[e2] += s;
  }
  return out;
}

Series mul_schoolbook(const Series& a, const Series& b, std::size_t max_exp) {
  Series c(std::min(max_exp, a.empty() || b.empty() ? std::size_t(0)
                                                    : a.size() + b.size() - 2) +
               1,
           Int(0));
  if (a.empty() || b.empty()) return Series{};
  for (std::size_t i = 0; i < a.size() && i <= max_exp; ++i) {
    if (sign_of(a[i]) == 0) continue;
    std::size_t jmax = std::min(b.size() - 1, max_exp - i);
    for (std::size_t j = 0; j <= jmax; ++j) {
      if (sign_of(b[j]) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

namespace {

std::vector<std::size_t> nonzero_indices(const Series& s, std::size_t max_exp) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < s.size() && i <= max_exp; ++i)
    if (sign_of(s[i]) != 0) idx.push_back(i);
  return idx;
}

std::size_t max_coeff_bits(const Series& s) {
  std::size_t bits = 1;
  for (const Int& v : s)
    if (sign_of(v) != 0)
      bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
  return bits;
}

// Writes the |value| of matching-sign coefficients into word-aligned slots.
void pack_slots(const Series& s, std::size_t nterms, int want_sign,
                std::size_t limbs_per_slot, Int& out) {
  std::vector<mp_limb_t> buf(nterms * limbs_per_slot, 0);
  for (std::size_t i = 0; i < nterms && i < s.size(); ++i) {
    if (sign_of(s[i]) != want_sign) continue;
    size_t count = 0;
    mpz_export(&buf[i * limbs_per_slot], &count, -1, sizeof(mp_limb_t), 0, 0,
               s[i].get_mpz_t());
  }
  mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0,
             buf.data());
}

void unpack_slots(const Int& packed, std::size_t nslots,
                  std::size_t limbs_per_slot, std::vector<Int>& out) {
  // mpz_export writes the whole number; size for it even when we only read
  // the first nslots slots (truncated products carry extra high slots)
  std::size_t limbs = mpz_size(packed.get_mpz_t());
  std::vector<mp_limb_t> buf(std::max(limbs, nslots * limbs_per_slot) + 1, 0);
  size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0,
             packed.get_mpz_t());
  out.assign(nslots, Int(0));
  for (std::size_t i = 0; i < nslots; ++i) {
    mpz_import(out[i].get_mpz_t(), limbs_per_slot, -1, sizeof(mp_limb_t), 0, 0,
               &buf[i * limbs_per_slot]);
  }
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t b = 0;
  while ((std::size_t(1) << b) < n) ++b;
  return b;
}

// Packs each operand into one big integer (split into positive/negative
// parts so slot values stay nonnegative) and recovers the product from two
// integer multiplications per part. Slot width is padded so no column sum
// can overflow into its neighbor.
Series mul_packed(const Series& a, const Series& b, std::size_t max_exp) {
  std::size_t na = std::min(a.size(), max_exp + 1);
  std::size_t nb = std::min(b.size(), max_exp + 1);
  std::size_t bits =
      max_coeff_bits(a) + max_coeff_bits(b) + ceil_log2(std::min(na, nb)) + 2;
  std::size_t lps = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  Int apos, aneg, bpos, bneg;
  pack_slots(a, na, 1, lps, apos);
  pack_slots(a, na, -1, lps, aneg);
  pack_slots(b, nb, 1, lps, bpos);
  pack_slots(b, nb, -1, lps, bneg);

  Int same, cross;
  auto task = std::async(std::launch::async, [&] {
    Int t = apos * bpos;
    t += aneg * bneg;
    return t;
  });
  cross = apos * bneg;
  cross += aneg * bpos;
  same = task.get();

  std::size_t nslots = std::min(na + nb - 1, max_exp + 1);
  std::vector<Int> u, v;
  unpack_slots(same, nslots, lps, u);
  unpack_slots(cross, nslots, lps, v);

  Series c(nslots);
  for (std::size_t i = 0; i < nslots; ++i) c[i] = u[i] - v[i];
  return c;
}

}  // namespace

Series mul_truncate(const Series& a, const Series& b, std::size_t max_exp) {
  if (a.empty() || b.empty()) return Series{};
  std::size_t na = std::min(a.size(), max_exp + 1);
  std::size_t nb = std::min(b.size(), max_exp + 1);
  if (std::min(na, nb) < 1024) return mul_schoolbook(a, b, max_exp);

  auto ia = nonzero_indices(a, max_exp);
  auto ib = nonzero_indices(b, max_exp);
  if (ia.empty() || ib.empty())
    return Series(std::min(na + nb - 1, max_exp + 1), Int(0));

  // Sparse pentagonal-style operands: direct accumulation beats packing.
  if (ia.size() * ib.size() <= (std::size_t(1) << 22)) {
    Series c(std::min(na + nb - 1, max_exp + 1), Int(0));
    for (std::size_t i : ia) {
      if (i > max_exp) break;
      for (std::size_t j : ib) {
        if (i + j > max_exp) break;
        mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      }
    }
    return c;
  }

  return mul_packed(a, b, max_exp);
}

Series pow_truncate(const Series& a, unsigned exp, std::size_t max_exp) {
  Series result(1, Int(1));
  if (exp == 0) return result;
  Series base = a;
  if (base.size() > max_exp + 1) base.resize(max_exp + 1);
  // square-and-multiply over truncated products
  bool result_is_one = true;
  while (exp > 0) {
    if (exp & 1u) {
      if (result_is_one) {
        result = base;
        result_is_one = false;
      } else {
        result = mul_truncate(result, base, max_exp);
      }
    }
    exp >>= 1;
    if (exp > 0) base = mul_truncate(base, base, max_exp);
  }
  return result;
}

}  // namespace hecke

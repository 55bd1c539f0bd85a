// Regenerates the bundled weight-2 sample coefficient files in data/ from
// their eta-product expansions, then re-verifies every structural relation.
//
//   level 11: q prod (1-q^n)^2 (1-q^{11n})^2
//   level 15: q prod (1-q^n)(1-q^{3n})(1-q^{5n})(1-q^{15n})

#include <iostream>

#include "hecke/eigenvalues.hpp"
#include "hecke/newform.hpp"
#include "hecke/series.hpp"

using namespace hecke;

namespace {

Series dilate(const Series& s, std::size_t m, std::size_t max_exp) {
  Series out(max_exp + 1, Int(0));
  for (std::size_t i = 0; i * m <= max_exp && i < s.size(); ++i)
    out[i * m] = s[i];
  return out;
}

Newform eta_product_form(const std::vector<std::pair<unsigned, unsigned>>& factors,
                         unsigned level, const std::string& label,
                         std::uint64_t X) {
  Series acc(1, Int(1));
  Series pent = pentagonal_series(X - 1);
  for (auto [m, e] : factors) {
    Series dil = dilate(pent, m, X - 1);
    for (unsigned i = 0; i < e; ++i) acc = mul_truncate(acc, dil, X - 1);
  }
  Newform f;
  f.weight = 2;
  f.level = level;
  f.level_square_free = true;
  f.label = label;
  f.source = FormSource::File;
  f.coeffs.assign(X + 1, Int(0));
  for (std::uint64_t n = 1; n <= X; ++n) f.coeffs[n] = acc[n - 1];
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t X = argc > 1 ? std::stoull(argv[1]) : 12000;

  Newform f11 = eta_product_form({{1, 2}, {11, 2}}, 11, "level11weight2", X);
  Newform f15 = eta_product_form({{1, 1}, {3, 1}, {5, 1}, {15, 1}}, 15,
                                 "level15weight2", X);

  for (const Newform* f : {&f11, &f15}) {
    auto hv = verify_hecke_relations(*f);
    auto dv = deligne_verify(normalize(*f), f->level);
    std::cout << f->label << ": hecke violations " << hv.size()
              << ", deligne violations " << dv.size() << "\n";
    for (const auto& v : hv) std::cout << "  " << v.message << "\n";
    for (std::uint64_t n = 1; n <= 12; ++n)
      std::cout << "  a(" << n << ") = " << f->coeffs[n].get_str() << "\n";
    if (!hv.empty() || !dv.empty()) return 1;
  }

  save_coefficients(f11, "data/level11_weight2.txt");
  save_coefficients(f15, "data/level15_weight2.txt");
  std::cout << "wrote data/level11_weight2.txt and data/level15_weight2.txt\n";
  return 0;
}

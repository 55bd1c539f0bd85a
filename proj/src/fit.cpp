#include "hecke/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace hecke {

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_line needs >= 2 matched points");
  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (f.slope * xs[i] + f.intercept);
    ss_res += e * e;
  }
  f.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

MultiFit fit_ols(const std::vector<std::vector<double>>& rows,
                 const std::vector<double>& ys) {
  MultiFit out;
  if (rows.empty() || rows.size() != ys.size()) return out;
  std::size_t k = rows.front().size();
  if (rows.size() < k) return out;

  // normal equations A^T A b = A^T y, solved by Gaussian elimination
  std::vector<std::vector<double>> m(k, std::vector<double>(k + 1, 0.0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) m[r][c] += rows[i][r] * rows[i][c];
      m[r][k] += rows[i][r] * ys[i];
    }
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    if (std::fabs(m[piv][col]) < 1e-12) return out;  // singular
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  out.coeffs.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.coeffs[i] = m[i][k] / m[i][i];

  double sy = 0;
  for (double y : ys) sy += y;
  double mean = sy / static_cast<double>(ys.size());
  double ss_tot = 0, ss_res = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double pred = 0;
    for (std::size_t c = 0; c < k; ++c) pred += out.coeffs[c] * rows[i][c];
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - mean) * (ys[i] - mean);
  }
  out.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  out.ok = true;
  return out;
}

}  // namespace hecke

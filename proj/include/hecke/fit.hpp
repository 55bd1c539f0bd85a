#ifndef HECKE_FIT_HPP
#define HECKE_FIT_HPP

#include <vector>

namespace hecke {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

struct MultiFit {
  std::vector<double> coeffs;
  double r2 = 0;
  bool ok = false;
};

// Ordinary least squares via normal equations; rows[i] are the regressors for
// observation i. ok = false when the system is singular.
MultiFit fit_ols(const std::vector<std::vector<double>>& rows,
                 const std::vector<double>& ys);

}  // namespace hecke

#endif

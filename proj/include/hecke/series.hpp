#ifndef HECKE_SERIES_HPP
#define HECKE_SERIES_HPP

#include <cstddef>
#include <vector>

#include "hecke/ints.hpp"

namespace hecke {

// Truncated integer power series: coeffs[i] is the coefficient of q^i.
using Series = std::vector<Int>;

// Euler's pentagonal-number expansion of prod_{n>=1}(1 - q^n), truncated to
// degree max_exp inclusive.
Series pentagonal_series(std::size_t max_exp);

// a*b truncated to degree max_exp. Small or sparse operands are multiplied by
// direct accumulation over nonzero terms; large dense operands are packed into
// single big integers so the product runs through one integer multiplication.
Series mul_truncate(const Series& a, const Series& b, std::size_t max_exp);

// Plain double loop, kept as the independent reference path for tests.
Series mul_schoolbook(const Series& a, const Series& b, std::size_t max_exp);

// a^exp truncated to degree max_exp, by repeated squaring of truncated series.
Series pow_truncate(const Series& a, unsigned exp, std::size_t max_exp);

}  // namespace hecke

#endif

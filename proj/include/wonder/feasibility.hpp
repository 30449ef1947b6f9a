#pragma once

#include <optional>
#include <vector>

#include "wonder/rational.hpp"

namespace wonder {

/// Outcome of maximizing c.x over { A x = b, x >= 0 } with exact rational
/// pivoting (two-phase, Bland's rule).
struct LpResult {
  bool feasible = false;
  Rational objective;
  std::vector<Rational> solution;
};

LpResult lp_maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

/// Positive weights a_D making every row-combination sum nonnegative:
/// exists a > 0 with sum_D a_D rows[D][j] >= 0 for all j. Decided by
/// maximizing the minimum weight under the normalization sum a_D = 1.
/// Returns the exact certificate, or nullopt.
std::optional<std::vector<Rational>> positive_combination_certificate(
    const std::vector<std::vector<int>>& rows, int ncols);

/// Nonnegative column weights n with rows * n > 0 strictly in every row;
/// the affine-open ("reductive") criterion. Returns the certificate or
/// nullopt. With no rows the empty certificate is returned; with rows but
/// no columns there is none.
std::optional<std::vector<Rational>> strict_positive_image_certificate(
    const std::vector<std::vector<int>>& rows, int ncols);

}  // namespace wonder

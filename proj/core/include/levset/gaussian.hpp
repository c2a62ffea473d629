#pragma once

namespace levset {

double norm_pdf(double x);

/// Standard normal cdf, evaluated through erfc so both tails keep full
/// relative precision (absolute error well under 1e-14).
double norm_cdf(double x);

/// Inverse of norm_cdf on (0, 1); Newton refinement to ~1e-15.
double norm_quantile(double p);

/// P(X <= h, Y <= k) for standard bivariate normal with correlation rho.
/// Single-integral form with the sin substitution; the equal-threshold case
/// is smooth for every rho including +-1, unequal thresholds near |rho| = 1
/// are handled by dyadic panels toward the corner. Absolute error <= 1e-12.
double bvn_cdf(double h, double k, double rho);

}  // namespace levset

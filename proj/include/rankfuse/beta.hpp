#pragma once

namespace rankfuse {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
/// x in [0, 1], evaluated with Lentz's continued fraction (relative error
/// around 1e-14 in the bulk of the domain). Equals the Beta(a, b) CDF at x.
///
/// Throws InvalidConfig on out-of-domain arguments and NoConvergence if the
/// continued fraction fails to settle.
double regularized_incomplete_beta(double a, double b, double x);

inline double beta_cdf(double x, double a, double b) {
  return regularized_incomplete_beta(a, b, x);
}

}  // namespace rankfuse

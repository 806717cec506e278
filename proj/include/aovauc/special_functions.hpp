#pragma once

namespace aovauc {

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in
// [0, 1]. Continued fraction with modified Lentz evaluation, switching to
// the symmetric form when x > (a+1)/(a+b+2). Absolute accuracy is better
// than 1e-12 for a, b <= 500.
double regularized_incomplete_beta(double a, double b, double x);

// Upper tail P(F_{d1,d2} > x) of the F distribution, evaluated as
// I_{d2/(d2 + d1 x)}(d2/2, d1/2). Equals 1 at x = 0.
double f_survival(double x, double d1, double d2);

// Lower tail P(F_{d1,d2} <= x), computed directly (not as 1 - survival) so
// both tails keep full relative accuracy.
double f_cdf(double x, double d1, double d2);

// Standard normal CDF.
double normal_cdf(double z);

// Standard normal quantile for p in (0, 1). Rational approximation refined
// by one Halley step on the CDF; inverse of normal_cdf to within 1e-9.
double normal_quantile(double p);

}  // namespace aovauc

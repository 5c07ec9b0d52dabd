// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef HICRP_MATH_UTIL_HPP
#define HICRP_MATH_UTIL_HPP

#include <cmath>
#include <span>
#include <vector>

namespace hicrp {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(sum_i exp(x[i])), accumulated in index order.
double log_sum_exp(std::span<const double> x);

inline double logit(double p) { return std::log(p / (1.0 - p)); }
inline double expit(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// log density of a standard normal at x, up to the additive constant
// -log(2*pi)/2 (kept; callers may rely on proper normalization).
inline double log_normal_pdf(double x) {
  return -0.5 * x * x - 0.9189385332046727;
}

double digamma(double x);

// Inverse standard normal CDF (Wichura's AS 241, double precision).
double norm_ppf(double p);

// Regularized incomplete gamma functions P(a,x), Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-squared distribution with `dof` degrees of freedom.
inline double chi2_sf(double x, double dof) { return gamma_q(0.5 * dof, 0.5 * x); }

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Linear-interpolation quantile of a sorted sample, q in [0,1].
double quantile_sorted(std::span<const double> sorted, double q);

double mean(std::span<const double> x);
double sample_variance(std::span<const double> x);  // n-1 denominator

}  // namespace hicrp

#endif

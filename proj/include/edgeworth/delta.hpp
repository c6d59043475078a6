#pragma once

// Delta-method reduction of a smooth function of sample means to its
// truncated mean, variance, skewness and excess kurtosis.

#include <array>
#include <functional>
#include <string>

#include "edgeworth/moments.hpp"
#include "edgeworth/series.hpp"

namespace edgeworth {

/// A monotone map G applied to the statistic, with its derivatives at the
/// expansion point.
struct OuterTransform {
  std::string name;
  double g0 = 0.0;  // G(rho)
  double g1 = 1.0;  // G'(rho)
  double g2 = 0.0;  // G''(rho)
  double g3 = 0.0;  // G'''(rho)
  std::function<double(double)> forward;
  std::function<double(double)> derivative;

  static OuterTransform identity(double rho);
  static OuterTransform arctanh(double rho);
  // G(x) = offset + slope * x
  static OuterTransform affine(double offset, double slope, double rho);
  // G(x) = x + x^3
  static OuterTransform cubic(double rho);
};

/// Truncated coefficients of m, V, Gamma3 and Gamma4 in powers of 1/n:
///   m = m0 + m1/n,  V = v1/n + v2/n^2,  Gamma3 = g3coef/sqrt(n),  Gamma4 = g4coef/n.
struct SummaryStats {
  double m0 = 0.0;
  double m1 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double g3coef = 0.0;
  double g4coef = 0.0;
};

/// E[(H - H0)^p] for p = 1..4 as polynomials in 1/n.
using PowerMoments = std::array<InvNPoly, 4>;

/// Cap-3 expansion of Pearson's r in the five sample-mean deviations
/// (X-bar, Y-bar, mean(X^2)-1, mean(Y^2)-1, mean(XY)-rho).
TruncatedTaylor pearson_r_expansion(double rho);

/// G(s) expanded about the constant term of s to s's cap (at most 3).
TruncatedTaylor apply_outer_transform(const TruncatedTaylor& s, const OuterTransform& t);

/// Expected powers of s minus its constant term. The p-th power keeps
/// monomials up to degree 2, 4, 4, 6 for p = 1, 2, 3, 4.
PowerMoments raw_power_moments(const TruncatedTaylor& s, const MeanMomentTable& mean_moments);

/// Same quantity as raw_power_moments(apply_outer_transform(base, t), ...),
/// assembled from the expected powers of the base deviation instead. The
/// large derivatives of G then multiply a handful of well-scaled moments
/// rather than every monomial, which keeps near-unit |rho| accurate.
PowerMoments transformed_power_moments(const TruncatedTaylor& base, const OuterTransform& t,
                                       const MeanMomentTable& mean_moments);

/// Central moments from raw power moments, then leading terms of the
/// standardized cumulants by series division.
SummaryStats summarize(double h0, const PowerMoments& powers);

/// Skewness functional of G(r) for bivariate-normal sampling:
/// 3 G' ((1 - rho^2) G'' - 2 rho G').
/// Its zero set is the family of skew-free transforms. It equals the
/// standardized coefficient g3coef only when G' = 1 or the bracket vanishes;
/// in general g3coef = gamma3_functional / G'^2.
double gamma3_functional(double g1, double g2, double rho);

/// Generic path: statistic expansion plus cumulants of one observation.
SummaryStats summarize_statistic(const TruncatedTaylor& statistic, const CumulantTable& cumulants);

/// Pearson r under bivariate-normal sampling with the given outer transform.
SummaryStats pearson_summary(const OuterTransform& transform, double rho);

/// As above, but every cumulant above `max_cumulant_order` is dropped first.
SummaryStats pearson_summary(const OuterTransform& transform, double rho, int max_cumulant_order);

}  // namespace edgeworth

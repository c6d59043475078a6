#pragma once

// Numerical CDFs on a grid over (-1, 1) and distances between them.

#include <functional>
#include <span>
#include <vector>

namespace edgeworth {

inline constexpr int kDefaultGridPoints = 4001;
inline constexpr double kDefaultClip = 1e-6;

struct CdfGrid {
  std::vector<double> abscissae;
  std::vector<double> values;

  // Linear interpolation; 0 below the grid, the last value above it.
  double operator()(double x) const;
};

/// Uniform grid of `points` abscissae on [-1 + clip, 1 - clip].
std::vector<double> uniform_grid(int points, double clip);

/// Cumulative integral of `pdf` from -1 + clip by composite Simpson's rule
/// on a uniform grid (odd nodes closed with the matching three-point rule).
CdfGrid cdf_on_grid(const std::function<double(double)>& pdf, int points = kDefaultGridPoints,
                    double clip = kDefaultClip);

struct IntervalError {
  double error = 0.0;
  double a = 0.0;  // abscissa where approx - exact is smallest
  double b = 0.0;  // abscissa where approx - exact is largest
};

/// Largest |P_approx(I) - P_exact(I)| over intervals I with grid endpoints,
/// i.e. the range of D = F_approx - F_exact.
IntervalError max_interval_error(const CdfGrid& approx, const CdfGrid& exact);

/// Two-sided Kolmogorov-Smirnov statistic of a sorted sample against a CDF.
double ks_distance(std::span<const double> sorted_sample, const std::function<double(double)>& cdf);
double ks_distance(std::span<const double> sorted_sample, const CdfGrid& cdf);

}  // namespace edgeworth

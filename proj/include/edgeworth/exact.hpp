#pragma once

// Reference distributions of Pearson's r under bivariate-normal sampling.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace edgeworth {

struct McConfig {
  int n = 0;
  double rho = 0.0;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
};

/// Natural log of the gamma function, x > 0.
double log_gamma(double x);

struct HypergeometricSum {
  double value = 0.0;
  int terms = 0;
};

/// Gauss 2F1(a, b; c; x) by direct power series for 0 <= x < 1, stopping
/// once a term falls below 1e-14 of the partial sum.
HypergeometricSum gauss_2f1_series(double a, double b, double c, double x);
double gauss_2f1(double a, double b, double c, double x);

/// Exact density of the sample correlation of n bivariate-normal pairs:
///
///   (n-2) G(n-1) (1-rho^2)^((n-1)/2) (1-r^2)^((n-4)/2)
///   ---------------------------------------------------- 2F1(1/2, 1/2; n-1/2; (1+rho r)/2)
///        sqrt(2 pi) G(n-1/2) (1 - rho r)^(n-3/2)
double hotelling_pdf_r(int n, double rho, double r);

/// Sample correlations of `replicates` independent samples of n pairs.
/// Pairs are drawn as X ~ N(0,1), Y = rho X + sqrt(1-rho^2) W with
/// std::mt19937_64 seeded by `seed` and std::normal_distribution, so output
/// is reproducible per seed for a given standard library.
std::vector<double> mc_sample_r(const McConfig& config);

}  // namespace edgeworth

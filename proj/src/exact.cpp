#include "edgeworth/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "edgeworth/errors.hpp"

namespace edgeworth {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: x must be positive");
  // glibc lgamma is accurate to a few ulp on the positive axis
  return std::lgamma(x);
}

HypergeometricSum gauss_2f1_series(double a, double b, double c, double x) {
  if (!(c > 0.0)) throw DomainError("gauss_2f1: c must be positive");
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("gauss_2f1: x must be in [0, 1)");
  constexpr int kMaxTerms = 100000;
  constexpr double kRelTol = 1e-14;

  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (std::abs(term) < kRelTol * std::abs(sum)) return {sum, k + 2};
  }
  throw NumericError("gauss_2f1: series did not converge after " + std::to_string(kMaxTerms) +
                     " terms");
}

double gauss_2f1(double a, double b, double c, double x) {
  return gauss_2f1_series(a, b, c, x).value;
}

double hotelling_pdf_r(int n, double rho, double r) {
  if (n < 5) throw DomainError("hotelling_pdf_r: n must be at least 5");
  if (!(std::abs(rho) < 1.0)) throw DomainError("hotelling_pdf_r: |rho| must be < 1");
  if (!(std::abs(r) < 1.0)) throw DomainError("hotelling_pdf_r: |r| must be < 1");
  const double nd = n;
  const double log_prefactor = std::log(nd - 2.0) + log_gamma(nd - 1.0) - log_gamma(nd - 0.5) -
                               0.5 * std::log(2.0 * std::numbers::pi);
  const double log_shape = 0.5 * (nd - 1.0) * std::log1p(-rho * rho) +
                           0.5 * (nd - 4.0) * std::log1p(-r * r) -
                           (nd - 1.5) * std::log1p(-rho * r);
  const double hyp = gauss_2f1(0.5, 0.5, nd - 0.5, 0.5 * (1.0 + rho * r));
  return std::exp(log_prefactor + log_shape) * hyp;
}

std::vector<double> mc_sample_r(const McConfig& config) {
  if (config.n < 2) throw UsageError("mc_sample_r: n must be at least 2");
  if (config.replicates < 1) throw UsageError("mc_sample_r: need at least one replicate");
  if (!(std::abs(config.rho) < 1.0)) throw UsageError("mc_sample_r: |rho| must be < 1");

  std::mt19937_64 engine(config.seed);
  std::normal_distribution<double> normal;
  const double rho = config.rho;
  const double tail = std::sqrt(1.0 - rho * rho);
  const double nd = config.n;

  std::vector<double> out;
  out.reserve(config.replicates);
  for (std::size_t rep = 0; rep < config.replicates; ++rep) {
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < config.n; ++i) {
      const double x = normal(engine);
      const double y = rho * x + tail * normal(engine);
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
    }
    const double cxy = sxy - sx * sy / nd;
    const double cxx = sxx - sx * sx / nd;
    const double cyy = syy - sy * sy / nd;
    out.push_back(std::clamp(cxy / std::sqrt(cxx * cyy), -1.0, 1.0));
  }
  return out;
}

}  // namespace edgeworth

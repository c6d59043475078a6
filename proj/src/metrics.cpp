#include "edgeworth/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "edgeworth/errors.hpp"

namespace edgeworth {

double CdfGrid::operator()(double x) const {
  if (abscissae.empty()) throw UsageError("CdfGrid: empty grid");
  if (x < abscissae.front()) return 0.0;
  if (x >= abscissae.back()) return values.back();
  const auto it = std::upper_bound(abscissae.begin(), abscissae.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - abscissae.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - abscissae[lo]) / (abscissae[hi] - abscissae[lo]);
  return values[lo] + t * (values[hi] - values[lo]);
}

std::vector<double> uniform_grid(int points, double clip) {
  if (points < 1001) throw UsageError("uniform_grid: need at least 1001 points");
  if (!(clip > 0.0 && clip <= 1e-4)) throw UsageError("uniform_grid: clip must be in (0, 1e-4]");
  const double lo = -1.0 + clip;
  const double h = 2.0 * (1.0 - clip) / (points - 1);
  std::vector<double> x(points);
  for (int i = 0; i < points; ++i) x[i] = lo + i * h;
  x.back() = 1.0 - clip;
  return x;
}

CdfGrid cdf_on_grid(const std::function<double(double)>& pdf, int points, double clip) {
  CdfGrid grid;
  grid.abscissae = uniform_grid(points, clip);
  const auto& x = grid.abscissae;
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    f[i] = pdf(x[i]);
    if (!std::isfinite(f[i])) throw NumericError("cdf_on_grid: non-finite density value");
  }

  const double h = (x.back() - x.front()) / (x.size() - 1);
  grid.values.assign(x.size(), 0.0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (i % 2 == 0) {
      grid.values[i] = grid.values[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    } else if (i + 1 < x.size()) {
      // quadratic through (i-1, i, i+1), integrated over [x_{i-1}, x_i]
      grid.values[i] = grid.values[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    } else {
      grid.values[i] = grid.values[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
  }
  return grid;
}

IntervalError max_interval_error(const CdfGrid& approx, const CdfGrid& exact) {
  if (approx.abscissae != exact.abscissae || approx.values.size() != exact.values.size()) {
    throw UsageError("max_interval_error: grids differ");
  }
  if (approx.abscissae.empty()) throw UsageError("max_interval_error: empty grid");
  std::size_t lo = 0, hi = 0;
  double d_min = approx.values[0] - exact.values[0];
  double d_max = d_min;
  for (std::size_t i = 1; i < approx.values.size(); ++i) {
    const double d = approx.values[i] - exact.values[i];
    if (d < d_min) {
      d_min = d;
      lo = i;
    }
    if (d > d_max) {
      d_max = d;
      hi = i;
    }
  }
  return {d_max - d_min, approx.abscissae[lo], approx.abscissae[hi]};
}

double ks_distance(std::span<const double> sorted_sample, const std::function<double(double)>& cdf) {
  if (sorted_sample.empty()) throw UsageError("ks_distance: empty sample");
  if (!std::is_sorted(sorted_sample.begin(), sorted_sample.end())) {
    throw UsageError("ks_distance: sample must be sorted");
  }
  const double count = static_cast<double>(sorted_sample.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
    const double f = cdf(sorted_sample[i]);
    worst = std::max({worst, (i + 1) / count - f, f - i / count});
  }
  return worst;
}

double ks_distance(std::span<const double> sorted_sample, const CdfGrid& cdf) {
  return ks_distance(sorted_sample, std::function<double(double)>(std::cref(cdf)));
}

}  // namespace edgeworth

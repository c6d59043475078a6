#include "edgeworth/delta.hpp"

#include <algorithm>
#include <cmath>

#include "edgeworth/errors.hpp"

namespace edgeworth {

namespace {

constexpr std::size_t kPearsonDim = 5;
constexpr int kExpansionCap = 3;
constexpr std::array<int, 4> kPowerCaps = {2, 4, 4, 6};

void require_correlation(double rho, const char* where) {
  if (!(std::abs(rho) < 1.0)) throw UsageError(std::string(where) + ": |rho| must be < 1");
}

}  // namespace

OuterTransform OuterTransform::identity(double rho) {
  return {"identity", rho, 1.0, 0.0, 0.0, [](double x) { return x; }, [](double) { return 1.0; }};
}

OuterTransform OuterTransform::arctanh(double rho) {
  require_correlation(rho, "OuterTransform::arctanh");
  const double q = 1.0 - rho * rho;
  return {"arctanh",
          std::atanh(rho),
          1.0 / q,
          2.0 * rho / (q * q),
          (2.0 + 6.0 * rho * rho) / (q * q * q),
          [](double x) { return std::atanh(x); },
          [](double x) { return 1.0 / (1.0 - x * x); }};
}

OuterTransform OuterTransform::affine(double offset, double slope, double rho) {
  return {"affine",
          offset + slope * rho,
          slope,
          0.0,
          0.0,
          [offset, slope](double x) { return offset + slope * x; },
          [slope](double) { return slope; }};
}

OuterTransform OuterTransform::cubic(double rho) {
  return {"cubic",
          rho + rho * rho * rho,
          1.0 + 3.0 * rho * rho,
          6.0 * rho,
          6.0,
          [](double x) { return x + x * x * x; },
          [](double x) { return 1.0 + 3.0 * x * x; }};
}

TruncatedTaylor pearson_r_expansion(double rho) {
  require_correlation(rho, "pearson_r_expansion");
  auto var = [](std::size_t i) {
    return TruncatedTaylor::variable(kPearsonDim, kExpansionCap, i);
  };
  const auto x_bar = var(0), y_bar = var(1), x2 = var(2), y2 = var(3), xy = var(4);

  const auto numerator =
      TruncatedTaylor::constant(kPearsonDim, kExpansionCap, rho) + xy - x_bar * y_bar;
  const auto u_x = x2 - x_bar * x_bar;
  const auto u_y = y2 - y_bar * y_bar;
  return numerator * compose_inverse_sqrt(u_x) * compose_inverse_sqrt(u_y);
}

TruncatedTaylor apply_outer_transform(const TruncatedTaylor& s, const OuterTransform& t) {
  const auto w = s.without_constant();
  const auto w2 = w * w;
  const auto w3 = w2 * w;
  auto result = TruncatedTaylor::constant(s.dimension(), s.degree_cap(), t.g0);
  result = result + t.g1 * w + (t.g2 / 2.0) * w2 + (t.g3 / 6.0) * w3;
  return result;
}

PowerMoments raw_power_moments(const TruncatedTaylor& s, const MeanMomentTable& mean_moments) {
  if (s.dimension() != mean_moments.dimension()) {
    throw UsageError("raw_power_moments: dimension mismatch");
  }
  const auto w = s.without_constant();

  PowerMoments out;
  auto power = TruncatedTaylor::constant(w.dimension(), kPowerCaps.back(), 1.0);
  const auto w_lifted = w.recapped(kPowerCaps.back());
  for (std::size_t p = 0; p < out.size(); ++p) {
    power = power * w_lifted;
    const auto truncated = power.recapped(kPowerCaps[p]);
    for (const auto& [idx, c] : truncated.terms()) {
      out[p] += c * mean_moments.at(idx);
    }
  }
  return out;
}

PowerMoments transformed_power_moments(const TruncatedTaylor& base, const OuterTransform& t,
                                       const MeanMomentTable& mean_moments) {
  if (base.dimension() != mean_moments.dimension()) {
    throw UsageError("transformed_power_moments: dimension mismatch");
  }
  const std::size_t max_power = kPowerCaps.back();
  const auto w = base.without_constant().recapped(std::min(base.degree_cap(), kExpansionCap));

  // moments[c][j] = E[w^j] with w^j truncated at degree cap c.
  std::array<std::array<InvNPoly, max_power + 1>, max_power + 1> moments{};
  std::array<std::array<bool, max_power + 1>, max_power + 1> filled{};
  auto power = TruncatedTaylor::constant(w.dimension(), kPowerCaps.back(), 1.0);
  const auto w_lifted = w.recapped(kPowerCaps.back());
  for (std::size_t j = 1; j <= max_power; ++j) {
    power = power * w_lifted;
    for (int cap : kPowerCaps) {
      if (static_cast<int>(j) > cap) continue;
      if (filled[cap][j]) continue;
      filled[cap][j] = true;
      const auto truncated = power.recapped(cap);
      for (const auto& [idx, c] : truncated.terms()) moments[cap][j] += c * mean_moments.at(idx);
    }
  }

  // Scalar coefficients of (a1 x + a2 x^2 + a3 x^3)^p. Every monomial the
  // cap-3 outer expansion drops has degree >= 4 and cannot reach any of the
  // power caps once multiplied by the remaining p-1 factors.
  const std::array<double, 4> outer = {0.0, t.g1, t.g2 / 2.0, t.g3 / 6.0};
  std::array<double, 3 * 4 + 1> poly{};
  poly[0] = 1.0;
  PowerMoments out;
  for (std::size_t p = 0; p < out.size(); ++p) {
    std::array<double, 3 * 4 + 1> next{};
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0.0) continue;
      for (std::size_t k = 1; k < outer.size() && i + k < next.size(); ++k) {
        next[i + k] += poly[i] * outer[k];
      }
    }
    poly = next;
    const int cap = kPowerCaps[p];
    for (int j = 1; j <= cap; ++j) {
      if (poly[j] != 0.0) out[p] += poly[j] * moments[cap][j];
    }
  }
  return out;
}

SummaryStats summarize(double h0, const PowerMoments& powers) {
  const auto& [p1, p2, p3, p4] = powers;
  const auto p1_sq = p1 * p1;
  const auto c2 = p2 - p1_sq;
  const auto c3 = p3 - 3.0 * (p2 * p1) + 2.0 * (p1_sq * p1);
  const auto c4 = p4 - 4.0 * (p3 * p1) + 6.0 * (p2 * p1_sq) - 3.0 * (p1_sq * p1_sq);

  SummaryStats stats;
  stats.m0 = h0;
  stats.m1 = p1.coefficient(2);
  stats.v1 = c2.coefficient(2);
  stats.v2 = c2.coefficient(4);
  if (!(stats.v1 > 0.0) || c2.lowest_half_power() != 2) {
    throw DegenerateError("summarize: leading variance coefficient is not positive");
  }

  // Standardized third and fourth moments as series in n^(-1/2); only the
  // leading correction of each is complete at the chosen truncation.
  const auto skewness = ratio_series(c3, c2, 1.5, 1);
  const auto kurtosis = ratio_series(c4, c2, 2.0, 2);
  stats.g3coef = skewness.coefficient(1);
  stats.g4coef = kurtosis.coefficient(2);
  return stats;
}

double gamma3_functional(double g1, double g2, double rho) {
  return 3.0 * g1 * ((1.0 - rho * rho) * g2 - 2.0 * rho * g1);
}

SummaryStats summarize_statistic(const TruncatedTaylor& statistic, const CumulantTable& cumulants) {
  const auto mean_moments = mean_moment_table(cumulants);
  return summarize(statistic.constant_term(), raw_power_moments(statistic, mean_moments));
}

SummaryStats pearson_summary(const OuterTransform& transform, double rho) {
  return pearson_summary(transform, rho, kMaxMomentOrder);
}

SummaryStats pearson_summary(const OuterTransform& transform, double rho, int max_cumulant_order) {
  require_correlation(rho, "pearson_summary");
  // With Y = rho X + s V and V independent of X, the five deviations are a
  // linear image of those of (X, V, X^2-1, V^2-1, XV). Their moments are the
  // small integers of the uncorrelated case, so contracting against them
  // avoids the cancellation that strongly correlated deviations cause.
  const double s = std::sqrt(1.0 - rho * rho);
  auto e = [](std::size_t i) { return TruncatedTaylor::variable(kPearsonDim, kExpansionCap, i); };
  const std::vector<TruncatedTaylor> images = {
      e(0),
      rho * e(0) + s * e(1),
      e(2),
      (rho * rho) * e(2) + (s * s) * e(3) + (2.0 * rho * s) * e(4),
      rho * e(2) + s * e(4),
  };
  const auto base = substitute(pearson_r_expansion(rho), images);

  auto cumulants = cumulants_from_moments(pearson_central_moments(0.0));
  if (max_cumulant_order < kMaxMomentOrder) cumulants = cumulants.zeroed_above(max_cumulant_order);
  const auto mean_moments = mean_moment_table(cumulants);
  return summarize(transform.g0, transformed_power_moments(base, transform, mean_moments));
}

}  // namespace edgeworth

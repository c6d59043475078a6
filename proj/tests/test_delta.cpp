#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "edgeworth/delta.hpp"
#include "edgeworth/errors.hpp"
#include "edgeworth/exact.hpp"
#include "oracles.hpp"

using namespace edgeworth;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double kRhoGrid[] = {-0.9, -0.5, 0.0, 0.5, 0.9};

MultiIndex unit5(std::size_t i) { return MultiIndex::unit(5, i); }

}  // namespace

TEST_CASE("pearson_r_expansion", "[delta]") {
  const double rho = -0.6;
  const auto s = pearson_r_expansion(rho);
  CHECK(s.dimension() == 5);
  CHECK(s.degree_cap() == 3);
  CHECK(s.constant_term() == rho);
  CHECK_THAT(s.coefficient(unit5(4)), WithinAbs(1.0, 1e-15));
  CHECK_THAT(s.coefficient(unit5(2)), WithinAbs(-rho / 2.0, 1e-15));

  // first derivatives of the exact formula by central differences
  const double h = 1e-6;
  const double base[] = {0.0, 0.0, 1.0, 1.0, rho};
  for (std::size_t i = 0; i < 5; ++i) {
    double up[5], down[5];
    std::copy(base, base + 5, up);
    std::copy(base, base + 5, down);
    up[i] += h;
    down[i] -= h;
    const double fd = (oracles::pearson_from_means(up[0], up[1], up[2], up[3], up[4]) -
                       oracles::pearson_from_means(down[0], down[1], down[2], down[3], down[4])) /
                      (2 * h);
    CHECK_THAT(s.coefficient(unit5(i)), WithinAbs(fd, 1e-8));
  }

  // cubic truncation error: shrinking deviations 10x shrinks the error ~10^4x
  const double dev[] = {0.013, -0.021, 0.034, -0.017, 0.025};
  auto error_at = [&](double t) {
    double point[5];
    for (int i = 0; i < 5; ++i) point[i] = t * dev[i];
    const double exact = oracles::pearson_from_means(point[0], point[1], 1.0 + point[2],
                                                     1.0 + point[3], rho + point[4]);
    return std::abs(s.evaluate(point) - exact);
  };
  CHECK(error_at(1.0) < 1e-5);
  CHECK(error_at(0.1) < error_at(1.0) * 2e-3);

  CHECK_THROWS_AS(pearson_r_expansion(1.0), UsageError);
}

TEST_CASE("apply_outer_transform", "[delta]") {
  const auto s = pearson_r_expansion(0.3);
  const auto same = apply_outer_transform(s, OuterTransform::identity(0.3));
  for (const auto& idx : all_indices(5, 0, 3)) CHECK_THAT(same.coefficient(idx), WithinAbs(s.coefficient(idx), 1e-15));

  // arctanh at 0: w + w^3/3
  const auto w = TruncatedTaylor::variable(2, 3, 0) + TruncatedTaylor::variable(2, 3, 1);
  const auto g = apply_outer_transform(w, OuterTransform::arctanh(0.0));
  const auto expected = w + (1.0 / 3.0) * (w * w * w);
  for (const auto& idx : all_indices(2, 0, 3)) CHECK_THAT(g.coefficient(idx), WithinAbs(expected.coefficient(idx), 1e-15));

  const auto aff = apply_outer_transform(s, OuterTransform::affine(2.0, -3.0, 0.3));
  CHECK_THAT(aff.constant_term(), WithinAbs(2.0 - 0.9, 1e-15));
  CHECK_THAT(aff.coefficient(unit5(4)), WithinAbs(-3.0, 1e-15));
}

TEST_CASE("arctanh derivatives", "[delta]") {
  for (double rho : kRhoGrid) {
    const auto t = OuterTransform::arctanh(rho);
    const double h = 1e-6;
    CHECK_THAT(t.g1, WithinRel((std::atanh(rho + h) - std::atanh(rho - h)) / (2 * h), 1e-6));
    CHECK_THAT(t.g2, WithinAbs((t.derivative(rho + h) - t.derivative(rho - h)) / (2 * h), 1e-4 * std::max(1.0, std::abs(t.g2))));
    const auto t_up = OuterTransform::arctanh(rho + h), t_down = OuterTransform::arctanh(rho - h);
    CHECK_THAT(t.g3, WithinRel((t_up.g2 - t_down.g2) / (2 * h), 1e-6));
  }
}

TEST_CASE("raw_power_moments on a single mean", "[delta]") {
  CumulantTable ct(1, 6);
  const double sigma2 = 1.7, k3 = 0.4, k4 = 2.2;
  for (const auto& idx : all_indices(1, 2, 6)) ct.set(idx, 0.0);
  ct.set({2}, sigma2);
  ct.set({3}, k3);
  ct.set({4}, k4);
  const auto mm = mean_moment_table(ct);
  const auto s = TruncatedTaylor::variable(1, 3, 0) + TruncatedTaylor::constant(1, 3, 5.0);
  const auto p = raw_power_moments(s, mm);
  CHECK(p[0].empty());
  CHECK(p[1] == InvNPoly::inv_n(1, sigma2));
  CHECK(p[2] == InvNPoly::inv_n(2, k3));
  CHECK_THAT(p[3].coefficient(4), WithinAbs(3.0 * sigma2 * sigma2, 1e-14));
  CHECK_THAT(p[3].coefficient(6), WithinAbs(k4, 1e-14));
  CHECK(p[3].terms().size() == 2);

  MeanMomentTable shallow(1, 2);
  shallow.set({0}, InvNPoly::term(0, 1.0));
  shallow.set({1}, {});
  shallow.set({2}, InvNPoly::inv_n(1, sigma2));
  CHECK_THROWS_AS(raw_power_moments(s, shallow), IncompleteTableError);
  CHECK_THROWS_AS(raw_power_moments(pearson_r_expansion(0.1), mm), UsageError);
}

TEST_CASE("Pearson mean correction vanishes at rho = 0", "[delta]") {
  const auto mm = mean_moment_table(cumulants_from_moments(pearson_central_moments(0.0)));
  const auto p = raw_power_moments(pearson_r_expansion(0.0), mm);
  CHECK(std::abs(p[0].coefficient(2)) < 1e-15);
}

TEST_CASE("summarize reproduces the arctanh closed forms", "[delta]") {
  for (double rho : {-0.9, -0.85, -0.5, 0.0, 0.5, 0.9}) {
    const auto s = pearson_summary(OuterTransform::arctanh(rho), rho);
    CHECK_THAT(s.m0, WithinAbs(std::atanh(rho), 1e-15));
    CHECK_THAT(s.m1, WithinAbs(rho / 2.0, 1e-8));
    CHECK_THAT(s.v1, WithinRel(1.0, 1e-8));
    CHECK_THAT(s.v2, WithinRel((6.0 - rho * rho) / 2.0, 1e-8));
    CHECK(std::abs(s.g3coef) < 1e-8);
    CHECK_THAT(s.g4coef, WithinRel(2.0, 1e-8));
  }
}

TEST_CASE("summarize for the identity transform", "[delta]") {
  for (double rho : kRhoGrid) {
    const auto s = pearson_summary(OuterTransform::identity(rho), rho);
    const double q = 1.0 - rho * rho;
    CHECK_THAT(s.g3coef, WithinAbs(-6.0 * rho, 1e-8));
    CHECK_THAT(s.v1, WithinAbs(q * q, 1e-12));
    CHECK_THAT(s.m1, WithinAbs(-rho * q / 2.0, 1e-12));
  }
}

TEST_CASE("summarize rejects a degenerate statistic", "[delta]") {
  const auto mm = mean_moment_table(cumulants_from_moments(pearson_central_moments(0.2)));
  const auto constant = TruncatedTaylor::constant(5, 3, 0.2);
  CHECK_THROWS_AS(summarize(0.2, raw_power_moments(constant, mm)), DegenerateError);
}

TEST_CASE("gamma3_functional", "[delta]") {
  for (double rho : kRhoGrid) {
    const double q = 1.0 - rho * rho;
    CHECK(std::abs(gamma3_functional(1.0 / q, 2.0 * rho / (q * q), rho)) < 1e-12);
    CHECK_THAT(gamma3_functional(1.0, 0.0, rho), WithinAbs(-6.0 * rho, 1e-15));
  }
  CHECK(gamma3_functional(1.5, -0.7, 0.0) == 3.0 * 1.5 * -0.7);
}

TEST_CASE("summarize agrees with gamma3_functional across transforms", "[delta][property]") {
  for (double rho : kRhoGrid) {
    for (const auto& t : {OuterTransform::identity(rho), OuterTransform::arctanh(rho)}) {
      const auto s = pearson_summary(t, rho);
      CHECK_THAT(s.g3coef, WithinAbs(gamma3_functional(t.g1, t.g2, rho), 1e-8));
    }
    // With G' != 1 the standardized coefficient carries a 1/G'^2 factor.
    const auto cubic = OuterTransform::cubic(rho);
    const auto s = pearson_summary(cubic, rho);
    CHECK_THAT(s.g3coef, WithinAbs(gamma3_functional(cubic.g1, cubic.g2, rho) / (cubic.g1 * cubic.g1), 1e-10));
    CHECK((s.g3coef == 0.0) == (gamma3_functional(cubic.g1, cubic.g2, rho) == 0.0));
  }
}

TEST_CASE("cubic transform skewness matches simulation", "[delta][mc]") {
  const int n = 200;
  const double rho = 0.5;
  const auto t = OuterTransform::cubic(rho);
  const auto s = pearson_summary(t, rho);
  const auto r = mc_sample_r({n, rho, 200000, 11});
  double mean = 0.0;
  for (double x : r) mean += t.forward(x);
  mean /= static_cast<double>(r.size());
  double m2 = 0.0, m3 = 0.0;
  for (double x : r) {
    const double d = t.forward(x) - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= static_cast<double>(r.size());
  m3 /= static_cast<double>(r.size());
  const double skew = m3 / std::pow(m2, 1.5);
  const double se = std::sqrt(6.0 / static_cast<double>(r.size()));
  CHECK(std::abs(skew - s.g3coef / std::sqrt(n)) < 4.0 * se);
  // the unnormalized functional overstates it by G'^2 = 3.06
  CHECK(std::abs(skew - gamma3_functional(t.g1, t.g2, rho) / std::sqrt(n)) > 10.0 * se);
}

TEST_CASE("whitened and direct moment contraction agree", "[delta][property]") {
  for (double rho : {-0.5, 0.0, 0.3, 0.6}) {
    for (const auto& t : {OuterTransform::identity(rho), OuterTransform::arctanh(rho),
                          OuterTransform::cubic(rho)}) {
      const auto direct = summarize_statistic(apply_outer_transform(pearson_r_expansion(rho), t),
                                              cumulants_from_moments(pearson_central_moments(rho)));
      const auto fast = pearson_summary(t, rho);
      CHECK_THAT(fast.m1, WithinAbs(direct.m1, 1e-10));
      CHECK_THAT(fast.v1, WithinAbs(direct.v1, 1e-10));
      CHECK_THAT(fast.v2, WithinAbs(direct.v2, 1e-9));
      CHECK_THAT(fast.g3coef, WithinAbs(direct.g3coef, 1e-9));
      CHECK_THAT(fast.g4coef, WithinAbs(direct.g4coef, 1e-8));
    }
  }
}

TEST_CASE("transformed_power_moments equals expanding the transform first", "[delta]") {
  const double rho = 0.4;
  const auto base = pearson_r_expansion(rho);
  const auto mm = mean_moment_table(cumulants_from_moments(pearson_central_moments(rho)));
  for (const auto& t : {OuterTransform::arctanh(rho), OuterTransform::cubic(rho)}) {
    const auto a = transformed_power_moments(base, t, mm);
    const auto b = raw_power_moments(apply_outer_transform(base, t), mm);
    for (std::size_t p = 0; p < a.size(); ++p) {
      for (int h = 0; h <= 12; ++h) CHECK_THAT(a[p].coefficient(h), WithinAbs(b[p].coefficient(h), 1e-9));
    }
  }
}

TEST_CASE("affine transforms leave Z unchanged", "[delta][property]") {
  for (double rho : kRhoGrid) {
    const double a = 0.7, b = 2.5;
    const auto id = pearson_summary(OuterTransform::identity(rho), rho);
    const auto aff = pearson_summary(OuterTransform::affine(a, b, rho), rho);
    CHECK_THAT((aff.m0 - a) / b, WithinAbs(id.m0, 1e-10));
    CHECK_THAT(aff.m1 / b, WithinAbs(id.m1, 1e-10));
    CHECK_THAT(aff.v1 / (b * b), WithinAbs(id.v1, 1e-10));
    CHECK_THAT(aff.v2 / (b * b), WithinAbs(id.v2, 1e-10));
    CHECK_THAT(aff.g3coef, WithinAbs(id.g3coef, 1e-10));
    CHECK_THAT(aff.g4coef, WithinAbs(id.g4coef, 1e-10));
  }
}

TEST_CASE("rho reflection symmetry of the identity summary", "[delta][property]") {
  for (double rho : {0.1, 0.5, 0.85}) {
    const auto pos = pearson_summary(OuterTransform::identity(rho), rho);
    const auto neg = pearson_summary(OuterTransform::identity(-rho), -rho);
    CHECK_THAT(pos.m1, WithinAbs(-neg.m1, 1e-10));
    CHECK_THAT(pos.g3coef, WithinAbs(-neg.g3coef, 1e-10));
    CHECK_THAT(pos.v1, WithinAbs(neg.v1, 1e-10));
    CHECK_THAT(pos.v2, WithinAbs(neg.v2, 1e-10));
    CHECK_THAT(pos.g4coef, WithinAbs(neg.g4coef, 1e-10));
  }
}

TEST_CASE("cumulants above order 4 do not reach the summary", "[delta][property]") {
  for (double rho : {-0.85, 0.5}) {
    for (const auto& t : {OuterTransform::identity(rho), OuterTransform::arctanh(rho)}) {
      const auto full = pearson_summary(t, rho);
      const auto cut = pearson_summary(t, rho, 4);
      CHECK(std::abs(full.m1 - cut.m1) <= 1e-12);
      CHECK(std::abs(full.v1 - cut.v1) <= 1e-12);
      CHECK(std::abs(full.v2 - cut.v2) <= 1e-12);
      CHECK(std::abs(full.g3coef - cut.g3coef) <= 1e-12);
      CHECK(std::abs(full.g4coef - cut.g4coef) <= 1e-12);
    }
  }
}

TEST_CASE("Monte Carlo mean and variance of r at n = 200", "[delta][mc]") {
  // 2e5 replicates here; the acceptance suite runs the full 1e6 moment check.
  const int n = 200;
  for (double rho : {0.0, 0.5}) {
    const auto stats = pearson_summary(OuterTransform::identity(rho), rho);
    const auto r = mc_sample_r({n, rho, 200000, 314159});
    const double count = static_cast<double>(r.size());
    const double mean = std::accumulate(r.begin(), r.end(), 0.0) / count;
    double ss = 0.0, s4 = 0.0;
    for (double x : r) {
      ss += (x - mean) * (x - mean);
      s4 += std::pow(x - mean, 4);
    }
    const double var = ss / (count - 1.0);
    const double se_mean = std::sqrt(var / count);
    const double se_var = std::sqrt((s4 / count - var * var) / count);
    CHECK(std::abs(mean - (rho + stats.m1 / n)) < 4.0 * se_mean);
    CHECK(std::abs(var - stats.v1 / n) < 3.0 * se_var + stats.v2 / (n * n));
  }
}

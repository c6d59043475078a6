#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "edgeworth/edgeworth.hpp"
#include "edgeworth/errors.hpp"
#include "oracles.hpp"

using namespace edgeworth;
using Catch::Matchers::WithinAbs;

TEST_CASE("edgeworth_pdf_z", "[edgeworth]") {
  CHECK_THAT(edgeworth_pdf_z(0.0, 0.0, 0.0), WithinAbs(0.3989423, 5e-8));
  CHECK_THAT(edgeworth_pdf_z(0.0, 0.5, 0.0), WithinAbs(0.3781640, 5e-8));
  CHECK_THAT(edgeworth_pdf_z(1.0, 0.0, 0.1), WithinAbs(0.2399543, 5e-8));
  // raw negative values in the tail
  CHECK(edgeworth_pdf_z(-3.0, 1.5, 0.0) < 0.0);
}

TEST_CASE("Edgeworth density moments by quadrature", "[edgeworth][property]") {
  for (double g3 : {-0.8, 0.0, 0.3, 1.1}) {
    for (double g4 : {-0.5, 0.0, 0.7, 2.0}) {
      auto moment = [&](int k) {
        return oracles::simpson([&](double z) { return std::pow(z, k) * edgeworth_pdf_z(z, g3, g4); },
                                -14.0, 14.0, 20000);
      };
      CHECK_THAT(moment(0), WithinAbs(1.0, 1e-8));
      CHECK_THAT(moment(1), WithinAbs(0.0, 1e-6));
      CHECK_THAT(moment(2), WithinAbs(1.0, 1e-6));
      CHECK_THAT(moment(3), WithinAbs(g3, 1e-6));
    }
  }
}

TEST_CASE("build_model", "[edgeworth]") {
  const double rho = -0.85;
  const int n = 35;
  const auto t = OuterTransform::arctanh(rho);
  const SummaryStats stats{std::atanh(rho), rho / 2.0, 1.0, (6.0 - rho * rho) / 2.0, 0.0, 2.0};
  const auto model = build_model(stats, n, t);
  CHECK_THAT(model.m, WithinAbs(std::atanh(rho) - 0.85 / 70.0, 1e-15));
  CHECK_THAT(model.V, WithinAbs(1.0 / 35.0 + (6.0 - 0.7225) / 2450.0, 1e-15));
  CHECK_THAT(model.gamma4, WithinAbs(2.0 / 35.0, 1e-15));

  const auto plain = build_model(stats, n, t, false, false);
  CHECK(plain.gamma3 == 0.0);
  CHECK(plain.gamma4 == 0.0);

  const auto id = build_model(pearson_summary(OuterTransform::identity(0.0), 0.0), n,
                              OuterTransform::identity(0.0));
  CHECK(id.gamma3 == 0.0);

  CHECK_THROWS_AS(build_model(stats, 4, t), UsageError);
  CHECK_THROWS_AS(build_model(SummaryStats{0, 0, -1.0, 0, 0, 0}, n, t), DegenerateError);
}

TEST_CASE("approx_pdf_r", "[edgeworth]") {
  const auto id = OuterTransform::identity(0.2);
  const SummaryStats flat{0.2, 0.0, 0.5, 0.0, 0.0, 0.0};
  const auto model = build_model(flat, 40, id, false, false);
  CHECK_THAT(approx_pdf_r(model, model.m), WithinAbs(1.0 / std::sqrt(2.0 * M_PI * model.V), 1e-12));
  CHECK_THROWS_AS(approx_pdf_r(model, 1.0), DomainError);
  CHECK_THROWS_AS(approx_pdf_r(model, -1.3), DomainError);

  // arctanh model at n = 35 carries almost all of its mass inside (-1, 1)
  const double rho = -0.85;
  const auto at = OuterTransform::arctanh(rho);
  const auto full = build_model(pearson_summary(at, rho), 35, at);
  const double mass = oracles::simpson([&](double r) { return approx_pdf_r(full, r); },
                                       -1.0 + 1e-9, 1.0 - 1e-9, 200000);
  CHECK_THAT(mass, WithinAbs(1.0, 2e-3));

  // without the corrections it is an exact change of variables
  const auto plain = build_model(pearson_summary(at, rho), 35, at, false, false);
  const double plain_mass = oracles::simpson([&](double r) { return approx_pdf_r(plain, r); },
                                             -1.0 + 1e-12, 1.0 - 1e-12, 400000);
  CHECK_THAT(plain_mass, WithinAbs(1.0, 1e-8));
}

TEST_CASE("identity model at rho = 0 is symmetric", "[edgeworth][property]") {
  const auto id = OuterTransform::identity(0.0);
  const auto model = build_model(pearson_summary(id, 0.0), 35, id);
  for (double r = 0.0; r < 0.99; r += 0.0173) {
    CHECK_THAT(approx_pdf_r(model, r), WithinAbs(approx_pdf_r(model, -r), 1e-12));
  }
}

TEST_CASE("basic_fisher_pdf_r", "[edgeworth]") {
  const int n = 35;
  const double rho = -0.85;
  CHECK_THAT(basic_fisher_pdf_r(n, rho, rho),
             WithinAbs(std::sqrt((n - 3.0) / (2.0 * M_PI)) / (1.0 - rho * rho), 1e-10));
  const double mass = oracles::simpson([&](double r) { return basic_fisher_pdf_r(n, rho, r); },
                                       -1.0 + 1e-12, 1.0 - 1e-12, 400000);
  CHECK_THAT(mass, WithinAbs(1.0, 1e-8));
  CHECK_THROWS_AS(basic_fisher_pdf_r(3, rho, 0.0), UsageError);
  CHECK_THROWS_AS(basic_fisher_pdf_r(n, rho, 1.0), DomainError);
}

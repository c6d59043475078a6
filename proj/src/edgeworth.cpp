#include "edgeworth/edgeworth.hpp"

#include <cmath>
#include <numbers>

#include "edgeworth/errors.hpp"

namespace edgeworth {

namespace {

double standard_normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

double edgeworth_pdf_z(double z, double gamma3, double gamma4) {
  const double z2 = z * z;
  const double he3 = z * (z2 - 3.0);
  const double he4 = z2 * (z2 - 6.0) + 3.0;
  const double he6 = z2 * (z2 * (z2 - 15.0) + 45.0) - 15.0;
  const double correction =
      1.0 + gamma3 * he3 / 6.0 + gamma4 * he4 / 24.0 + gamma3 * gamma3 * he6 / 72.0;
  return standard_normal_pdf(z) * correction;
}

EdgeworthModel build_model(const SummaryStats& stats, int n, const OuterTransform& transform,
                           bool include_gamma3, bool include_gamma4) {
  if (n < 5) throw UsageError("build_model: n must be at least 5");
  const double nd = n;
  EdgeworthModel model;
  model.n = n;
  model.m = stats.m0 + stats.m1 / nd;
  model.V = stats.v1 / nd + stats.v2 / (nd * nd);
  model.gamma3 = include_gamma3 ? stats.g3coef / std::sqrt(nd) : 0.0;
  model.gamma4 = include_gamma4 ? stats.g4coef / nd : 0.0;
  model.transform = transform;
  model.include_gamma3 = include_gamma3;
  model.include_gamma4 = include_gamma4;
  if (!(model.V > 0.0)) throw DegenerateError("build_model: non-positive variance");
  return model;
}

double approx_pdf_r(const EdgeworthModel& model, double r) {
  if (!(std::abs(r) < 1.0)) throw DomainError("approx_pdf_r: |r| must be < 1");
  const double sd = std::sqrt(model.V);
  const double z = (model.transform.forward(r) - model.m) / sd;
  return edgeworth_pdf_z(z, model.gamma3, model.gamma4) * model.transform.derivative(r) / sd;
}

double basic_fisher_pdf_r(int n, double rho, double r) {
  if (n < 4) throw UsageError("basic_fisher_pdf_r: n must be at least 4");
  if (!(std::abs(rho) < 1.0)) throw UsageError("basic_fisher_pdf_r: |rho| must be < 1");
  if (!(std::abs(r) < 1.0)) throw DomainError("basic_fisher_pdf_r: |r| must be < 1");
  const double sd = 1.0 / std::sqrt(n - 3.0);
  const double z = (std::atanh(r) - std::atanh(rho)) / sd;
  return standard_normal_pdf(z) / (sd * (1.0 - r * r));
}

}  // namespace edgeworth

#pragma once

// Four-term Edgeworth density of the standardized statistic
// Z = (G(r) - m) / sqrt(V) and the implied densities of r.

#include "edgeworth/delta.hpp"

namespace edgeworth {

struct EdgeworthModel {
  int n = 0;
  double m = 0.0;
  double V = 0.0;
  double gamma3 = 0.0;
  double gamma4 = 0.0;
  OuterTransform transform;
  bool include_gamma3 = true;
  bool include_gamma4 = true;
};

/// phi(z) * (1 + G3 He3/6 + G4 He4/24 + G3^2 He6/72). Not clipped: the
/// polynomial factor may go negative in the tails.
double edgeworth_pdf_z(double z, double gamma3, double gamma4);

/// Evaluates the truncated summary at sample size n (n >= 5). Excluded
/// terms are stored as zero.
EdgeworthModel build_model(const SummaryStats& stats, int n, const OuterTransform& transform,
                           bool include_gamma3 = true, bool include_gamma4 = true);

/// f_Z((G(r) - m)/sqrt(V)) * G'(r) / sqrt(V), for |r| < 1.
double approx_pdf_r(const EdgeworthModel& model, double r);

/// Classical Fisher approximation: arctanh(r) normal with mean arctanh(rho)
/// and variance 1/(n-3).
double basic_fisher_pdf_r(int n, double rho, double r);

}  // namespace edgeworth

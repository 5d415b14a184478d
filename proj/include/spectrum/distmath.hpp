#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "spectrum/core.hpp"

namespace spectrum {

// Wasserstein-1 between two distributions over the same ordinal scheme with
// unit spacing between adjacent labels: sum_{i=1}^{k-1} |CDF1(i) - CDF2(i)|.
double emd(const VoteDistribution& d1, const VoteDistribution& d2);

// Earth Mover's Similarity, 100^(-EMD). 1 for identical distributions,
// strictly decreasing in EMD, always positive.
double ems(const VoteDistribution& d1, const VoteDistribution& d2);

inline double ems_from_emd(double emd_value) {
  return std::pow(100.0, -emd_value);
}

enum class BaselineKind { Uniform, NormalAroundStats };

struct BaselineSpec {
  BaselineKind kind = BaselineKind::Uniform;
  double mean = 0.0;  // ordinal units; NormalAroundStats only
  double std = 0.0;   // NormalAroundStats only; must be >= 0
};

// Uniform: 1/k everywhere. NormalAroundStats: Gaussian density evaluated at
// the integer supports 1..k and normalized; std == 0 degenerates to a point
// mass at the support nearest to the mean (half-ordinals round away from
// zero, result clamped to 1..k).
VoteDistribution baseline_distribution(const BaselineSpec& spec,
                                       const LabelScheme& scheme);

struct KendallResult {
  double tau = 0.0;  // tau-b, tie corrected
  double p = 1.0;    // two-sided, normal approximation
};

// Kendall's tau-b with the normal-approximation p-value. Inputs must have
// equal length >= 2. Vectors where every pair is tied in x or in y have an
// undefined tau; we report tau = 0, p = 1 for those.
KendallResult kendall_tau(const std::vector<double>& x,
                          const std::vector<double>& y);

}  // namespace spectrum

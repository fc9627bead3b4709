#pragma once

#include <vector>

namespace telesq {

/// Gauss-Hermite rule for integrals with weight exp(-x^2) on the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the n-point rule. Tables are built on first use (Golub-Welsch)
/// and shared read-only afterwards.
const GaussHermiteRule& gauss_hermite(int n);

}  // namespace telesq

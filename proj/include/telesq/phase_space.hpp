#pragma once

#include <complex>
#include <stdexcept>

#include "telesq/noise.hpp"

namespace telesq {

/// Raised when the quadrature convergence check fails.
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Squeezed vacuum or single photon with additive Gaussian noise sigma.
struct TransformedState {
  PhotonState state = PhotonState::Vacuum;
  double s = 1.0;
  Mat2 sigma = Mat2::Zero();
};

/// Wigner function of the noisy squeezed state at (x, p), evaluated from the
/// closed-form convolution of the squeezed input Wigner function with the
/// Gaussian noise kernel.
double wigner(const TransformedState& ts, double x, double p);

/// Wigner function at the origin; the negativity figure of merit.
double wigner_origin(const TransformedState& ts);

/// Symmetric characteristic function chi(xi) of the noisy squeezed state.
std::complex<double> characteristic(const TransformedState& ts, std::complex<double> xi);

/// Fidelity with the ideally squeezed pure input, via two-dimensional
/// Gauss-Hermite quadrature of the characteristic-function overlap along the
/// principal axes of the combined Gaussian exponent.
///
/// With check_convergence set, the order and order+40 values must agree to
/// 1e-8, else AccuracyError is thrown.
double fidelity(const TransformedState& ts, int quad_order = 80, bool check_convergence = true);

}  // namespace telesq

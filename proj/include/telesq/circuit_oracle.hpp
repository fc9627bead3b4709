#pragma once

#include <array>
#include <cstddef>

#include "telesq/noise.hpp"

namespace telesq::oracle {

/// Quadrature symbols of every mode that can enter a circuit: the input,
/// the two TMSV sources s1/s2 with their loss vacua, the detector vacua of
/// HD_A and HD_B, and the BAS pre-squeezer source s0 with its loss vacuum
/// and detector vacuum.
enum class Sym : int {
  x_in, p_in,
  x_s1, p_s1,
  x_s2, p_s2,
  x_ls1, p_ls1,
  x_ls2, p_ls2,
  x_da, p_da,
  x_db, p_db,
  x_s0, p_s0,
  x_ls0, p_ls0,
  x_dc, p_dc,
  count
};

constexpr std::size_t kSymCount = static_cast<std::size_t>(Sym::count);

/// Real linear combination of mode-quadrature symbols. Input modes are
/// independent, so variances are quadratic forms in the coefficients.
class LinearForm {
 public:
  LinearForm() { coeff_.fill(0.0); }
  static LinearForm unit(Sym s) {
    LinearForm f;
    f[s] = 1.0;
    return f;
  }

  double& operator[](Sym s) { return coeff_[static_cast<std::size_t>(s)]; }
  double operator[](Sym s) const { return coeff_[static_cast<std::size_t>(s)]; }

  LinearForm& operator+=(const LinearForm& o) {
    for (std::size_t i = 0; i < kSymCount; ++i) coeff_[i] += o.coeff_[i];
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator*(double c, LinearForm f) {
    for (auto& v : f.coeff_) v *= c;
    return f;
  }

 private:
  std::array<double, kSymCount> coeff_;
};

/// Output quadratures of one propagated circuit as linear forms, plus the
/// realized squeezing scale (the x_in coefficient of x_out).
struct CircuitTrace {
  LinearForm x_out;
  LinearForm p_out;
  double s_effective = 1.0;
};

/// Propagates the full generalized-teleporter circuit (or the BAS
/// pre-squeezer plus balanced teleporter) in the Heisenberg picture.
CircuitTrace build_and_propagate(const SqueezerConfig& config);

/// Noise covariance matrix accumulated from the linear-form coefficients;
/// the x_in/p_in signal coefficients are excluded.
Mat2 oracle_noise_matrix(const CircuitTrace& trace, const SqueezerConfig& config);

/// Variance of a single symbol under the given config (resource squeezing
/// for the source quadratures, 1/2 for every vacuum).
double symbol_variance(Sym s, const SqueezerConfig& config);

}  // namespace telesq::oracle

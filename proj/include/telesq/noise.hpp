#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "telesq/gaussian.hpp"

namespace telesq {

enum class Squeezer { PS, BS, BSPS, BAS };
enum class PhotonState { Vacuum, SinglePhoton };

std::string to_string(Squeezer v);
std::string to_string(PhotonState s);
Squeezer squeezer_from_string(const std::string& name);
PhotonState photon_state_from_string(const std::string& name);

/// Circuit parameters of one teleportation-based squeezer instance.
///
/// t1, t2 are the amplitude transmissions of the resource and mixing beam
/// splitters, phi the homodyne phase, t0 the pre-squeezer transmission (BAS
/// only). Resource squeezing is quoted in positive dB below vacuum; eta_s
/// and eta_h are the source and homodyne intensity transmissivities.
struct SqueezerConfig {
  Squeezer variant = Squeezer::BS;
  double t1 = 1.0 / std::numbers::sqrt2;
  double t2 = 1.0 / std::numbers::sqrt2;
  double t0 = 1.0;
  double phi = 0.0;
  double resource_db = 9.0;
  double eta_s = 1.0;
  double eta_h = 1.0;

  static SqueezerConfig ps(double phi, double resource_db, double eta_s, double eta_h);
  static SqueezerConfig bs(double t1, double t2, double resource_db, double eta_s, double eta_h);
  static SqueezerConfig bsps(double t1, double t2, double phi, double resource_db, double eta_s,
                             double eta_h);
  static SqueezerConfig bas(double t0, double resource_db, double eta_s, double eta_h);

  void validate() const;  // throws std::domain_error on violations

  double r1() const { return std::sqrt(1.0 - t1 * t1); }
  double r2() const { return std::sqrt(1.0 - t2 * t2); }
  double r0() const { return std::sqrt(1.0 - t0 * t0); }

  /// Variance of the squeezed resource quadratures (x_s1, p_s2): 0.5 * 10^{-db/10}.
  double squeezed_variance() const;
  /// Variance of the anti-squeezed partners, 1 / (4 * squeezed_variance).
  double antisqueezed_variance() const;
};

/// Derived quantities of the closed-form noise description.
struct NoiseModel {
  double s = 1.0;         // target squeezing scale in (0, 1]
  double g = 1.0;         // squeeze factor of the uncompensated gate
  double k = 0.0;         // shear strength of the uncompensated gate
  double j1 = 0.0, j2 = 0.0, j3 = 0.0;  // unity feed-forward gains
  Mat2 sigma = Mat2::Zero();            // additive noise covariance
};

/// Squeezing scale realized by the configured circuit.
double squeezing_parameter(const SqueezerConfig& config);

/// Gate parameters g = r1 r2 / (t1 t2) and k = tan(phi) / t2^2.
std::pair<double, double> gate_parameters(const SqueezerConfig& config);

/// Unity feed-forward gains (j1, j2, j3). Throws for |phi| = pi/2.
std::array<double, 3> gains(const SqueezerConfig& config);

/// Variances of the noise operators before the output phase correction.
std::pair<double, double> rotated_noise_variances(const SqueezerConfig& config);

/// Full noise model: s, g, k, gains and the 2x2 noise matrix Sigma.
/// Dispatches to bas_noise for the BAS variant.
NoiseModel noise_matrix(const SqueezerConfig& config);

/// BAS composition: pre-squeezer noise plus balanced-teleporter noise.
NoiseModel bas_noise(const SqueezerConfig& config);

/// Total noise referred to the gate input: trace of Sigma element-wise
/// multiplied with [[1/s^2, 1], [1, s^2]].
double total_noise(const NoiseModel& model);

/// Product of the noise-operator variances.
double noise_product(const NoiseModel& model);

/// Sufficient entanglement-breaking condition N_P >= 1/4 (boundary inclusive).
bool entanglement_breaking(const NoiseModel& model);

/// Parameter inversions: build a config realizing target scale s exactly.
/// Each inversion is verified by substitution before returning.
SqueezerConfig ps_config_for(double s, double resource_db, double eta_s, double eta_h);
SqueezerConfig bs_config_for(double s, double t1, double resource_db, double eta_s, double eta_h);
SqueezerConfig bsps_config_for(double s, double t1, double t2, double resource_db, double eta_s,
                               double eta_h);
SqueezerConfig bas_config_for(double s, double resource_db, double eta_s, double eta_h);

}  // namespace telesq

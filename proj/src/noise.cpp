#include "telesq/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace telesq {

namespace {

constexpr double kBalanced = 0.70710678118654752440;  // 1/sqrt(2)

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

std::string to_string(Squeezer v) {
  switch (v) {
    case Squeezer::PS: return "PS";
    case Squeezer::BS: return "BS";
    case Squeezer::BSPS: return "BSPS";
    case Squeezer::BAS: return "BAS";
  }
  return "?";
}

std::string to_string(PhotonState s) {
  return s == PhotonState::Vacuum ? "vacuum" : "single_photon";
}

Squeezer squeezer_from_string(const std::string& name) {
  if (name == "PS" || name == "ps") return Squeezer::PS;
  if (name == "BS" || name == "bs") return Squeezer::BS;
  if (name == "BSPS" || name == "bsps") return Squeezer::BSPS;
  if (name == "BAS" || name == "bas") return Squeezer::BAS;
  throw std::domain_error("unknown squeezer variant: " + name);
}

PhotonState photon_state_from_string(const std::string& name) {
  if (name == "vacuum" || name == "Vacuum") return PhotonState::Vacuum;
  if (name == "single_photon" || name == "SinglePhoton" || name == "single-photon")
    return PhotonState::SinglePhoton;
  throw std::domain_error("unknown input state: " + name);
}

SqueezerConfig SqueezerConfig::ps(double phi, double resource_db, double eta_s, double eta_h) {
  SqueezerConfig c;
  c.variant = Squeezer::PS;
  c.t1 = c.t2 = kBalanced;
  c.phi = phi;
  c.resource_db = resource_db;
  c.eta_s = eta_s;
  c.eta_h = eta_h;
  c.validate();
  return c;
}

SqueezerConfig SqueezerConfig::bs(double t1, double t2, double resource_db, double eta_s,
                                  double eta_h) {
  SqueezerConfig c;
  c.variant = Squeezer::BS;
  c.t1 = t1;
  c.t2 = t2;
  c.phi = 0.0;
  c.resource_db = resource_db;
  c.eta_s = eta_s;
  c.eta_h = eta_h;
  c.validate();
  return c;
}

SqueezerConfig SqueezerConfig::bsps(double t1, double t2, double phi, double resource_db,
                                    double eta_s, double eta_h) {
  SqueezerConfig c;
  c.variant = Squeezer::BSPS;
  c.t1 = t1;
  c.t2 = t2;
  c.phi = phi;
  c.resource_db = resource_db;
  c.eta_s = eta_s;
  c.eta_h = eta_h;
  c.validate();
  return c;
}

SqueezerConfig SqueezerConfig::bas(double t0, double resource_db, double eta_s, double eta_h) {
  SqueezerConfig c;
  c.variant = Squeezer::BAS;
  c.t1 = c.t2 = kBalanced;
  c.phi = 0.0;
  c.t0 = t0;
  c.resource_db = resource_db;
  c.eta_s = eta_s;
  c.eta_h = eta_h;
  c.validate();
  return c;
}

void SqueezerConfig::validate() const {
  require(t1 > 0.0 && t1 < 1.0, "degenerate circuit: t1 must lie in (0, 1)");
  require(t2 > 0.0 && t2 < 1.0, "degenerate circuit: t2 must lie in (0, 1)");
  require(resource_db >= 0.0, "resource_db must be non-negative");
  require(eta_s > 0.0 && eta_s <= 1.0, "eta_s must lie in (0, 1]");
  require(eta_h > 0.0 && eta_h <= 1.0, "eta_h must lie in (0, 1]");
  require(std::abs(phi) < std::numbers::pi / 2.0, "phi must lie in (-pi/2, pi/2)");
  if (variant == Squeezer::PS || variant == Squeezer::BAS) {
    require(std::abs(t1 - kBalanced) < 1e-12 && std::abs(t2 - kBalanced) < 1e-12,
            "PS/BAS require balanced beam splitters");
  }
  if (variant == Squeezer::BS || variant == Squeezer::BAS) {
    require(phi == 0.0, "BS/BAS require phi = 0");
  }
  if (variant == Squeezer::BAS) {
    require(t0 > 0.0 && t0 < 1.0, "degenerate circuit: t0 must lie in (0, 1)");
  }
}

double SqueezerConfig::squeezed_variance() const {
  return 0.5 * std::pow(10.0, -resource_db / 10.0);
}

double SqueezerConfig::antisqueezed_variance() const {
  return 1.0 / (4.0 * squeezed_variance());
}

std::pair<double, double> gate_parameters(const SqueezerConfig& config) {
  const double g = (config.r1() * config.r2()) / (config.t1 * config.t2);
  const double k = std::tan(config.phi) / (config.t2 * config.t2);
  return {g, k};
}

double squeezing_parameter(const SqueezerConfig& config) {
  config.validate();
  const auto [g, k] = gate_parameters(config);
  switch (config.variant) {
    case Squeezer::BAS:
      return config.t0;
    case Squeezer::BS:
      return g;
    case Squeezer::PS: {
      const double l = 2.0 * std::tan(config.phi);
      return std::sqrt(0.5 * (2.0 + l * l - l * std::sqrt(4.0 + l * l)));
    }
    case Squeezer::BSPS:
      // Smallest singular value of S(g) P(k); see decompose_squeeze_shear.
      return decompose_squeeze_shear(-std::log(g), k).squeeze_scale();
  }
  throw std::logic_error("unreachable");
}

std::array<double, 3> gains(const SqueezerConfig& config) {
  config.validate();
  const double cphi = std::cos(config.phi);
  require(std::abs(cphi) > 1e-12, "singular gains: phi = +-pi/2");
  const double j1 = config.r1() / (config.t1 * config.t2);
  const double j2 = config.t1 / (config.r1() * config.r2()) / cphi;
  const double j3 = config.t1 / (config.r1() * config.t2) * std::tan(config.phi);
  return {j1, j2, j3};
}

std::pair<double, double> rotated_noise_variances(const SqueezerConfig& config) {
  config.validate();
  const auto [g, k] = gate_parameters(config);
  const double source = config.squeezed_variance() * config.eta_s + 0.5 * (1.0 - config.eta_s);
  const double detector = (1.0 - config.eta_h) / config.eta_h;
  const double t2sq = config.t2 * config.t2;
  const double var_x = source / (config.t1 * config.t1) +
                       detector * (g * g) / (config.r2() * config.r2()) * 0.5;
  const double var_p = source / (config.r1() * config.r1()) +
                       detector / (g * g) * 0.5 * (1.0 / t2sq + k * k);
  return {var_x, var_p};
}

NoiseModel noise_matrix(const SqueezerConfig& config) {
  config.validate();
  if (config.variant == Squeezer::BAS) return bas_noise(config);

  NoiseModel model;
  const auto [g, k] = gate_parameters(config);
  model.g = g;
  model.k = k;
  const auto decomposition = decompose_squeeze_shear(-std::log(g), k);
  model.s = squeezing_parameter(config);
  const auto j = gains(config);
  model.j1 = j[0];
  model.j2 = j[1];
  model.j3 = j[2];

  const auto [var_x, var_p] = rotated_noise_variances(config);
  // Cross covariance of the rotated noise operators: the detector vacuum of
  // HD_A feeds both quadratures when the shear is active.
  const double cov = (1.0 - config.eta_h) / config.eta_h * k * 0.5;
  Mat2 sigma_zeta;
  sigma_zeta << var_x, cov, cov, var_p;

  // The output phase correction PS(-zeta) rotates the noise operators.
  const double c = std::cos(-decomposition.zeta);
  const double s = std::sin(-decomposition.zeta);
  Mat2 rot;
  rot << c, -s, s, c;
  model.sigma = rot * sigma_zeta * rot.transpose();
  return model;
}

NoiseModel bas_noise(const SqueezerConfig& config) {
  config.validate();
  require(config.variant == Squeezer::BAS, "bas_noise requires the BAS variant");

  // Balanced unity-gain teleporter noise.
  SqueezerConfig teleporter = config;
  teleporter.variant = Squeezer::BS;
  teleporter.t1 = teleporter.t2 = kBalanced;
  teleporter.phi = 0.0;
  NoiseModel model = noise_matrix(teleporter);

  const double r0sq = config.r0() * config.r0();
  const double source = config.squeezed_variance() * config.eta_s + 0.5 * (1.0 - config.eta_s);
  const double var_x_bas = r0sq * source;
  const double var_p_bas =
      0.5 * r0sq / (config.t0 * config.t0) * (1.0 - config.eta_h) / config.eta_h;

  model.s = config.t0;
  model.g = config.t0;
  model.k = 0.0;
  model.sigma(0, 0) += var_x_bas;
  model.sigma(1, 1) += var_p_bas;
  return model;
}

double total_noise(const NoiseModel& model) {
  // Sigma' = Sigma elementwise* [[1/s^2, 1], [1, s^2]]; N_T = tr(Sigma').
  const double s2 = model.s * model.s;
  return model.sigma(0, 0) / s2 + model.sigma(1, 1) * s2;
}

double noise_product(const NoiseModel& model) {
  return model.sigma(0, 0) * model.sigma(1, 1);
}

bool entanglement_breaking(const NoiseModel& model) {
  return noise_product(model) >= 0.25;
}

namespace {

void check_inversion(const SqueezerConfig& config, double s) {
  const double realized = squeezing_parameter(config);
  if (std::abs(realized - s) > 1e-12 * std::max(1.0, std::abs(s))) {
    throw std::runtime_error("parameter inversion failed to reproduce the target scale");
  }
}

}  // namespace

SqueezerConfig ps_config_for(double s, double resource_db, double eta_s, double eta_h) {
  require(s > 0.0 && s <= 1.0, "target scale must lie in (0, 1]");
  const double l = (1.0 - s * s) / s;
  const double phi = std::atan(l / 2.0);
  auto config = SqueezerConfig::ps(phi, resource_db, eta_s, eta_h);
  check_inversion(config, s);
  return config;
}

SqueezerConfig bs_config_for(double s, double t1, double resource_db, double eta_s,
                             double eta_h) {
  require(s > 0.0 && s <= 1.0, "target scale must lie in (0, 1]");
  require(t1 > 0.0 && t1 < 1.0, "degenerate circuit: t1 must lie in (0, 1)");
  const double r1sq = 1.0 - t1 * t1;
  const double t2sq = r1sq / (r1sq + s * s * t1 * t1);
  auto config = SqueezerConfig::bs(t1, std::sqrt(t2sq), resource_db, eta_s, eta_h);
  check_inversion(config, s);
  return config;
}

SqueezerConfig bsps_config_for(double s, double t1, double t2, double resource_db, double eta_s,
                               double eta_h) {
  require(s > 0.0 && s <= 1.0, "target scale must lie in (0, 1]");
  SqueezerConfig probe = SqueezerConfig::bs(t1, t2, resource_db, eta_s, eta_h);
  const auto [g, k_unused] = gate_parameters(probe);
  (void)k_unused;
  const double k2 = (g * g - s * s) * (1.0 - g * g * s * s) / (s * s);
  if (k2 < -1e-15) {
    throw std::domain_error("infeasible parameters: need s <= g <= 1/s for BSPS");
  }
  const double k = std::sqrt(std::max(0.0, k2));
  const double phi = std::atan(k * t2 * t2);
  auto config = SqueezerConfig::bsps(t1, t2, phi, resource_db, eta_s, eta_h);
  check_inversion(config, s);
  return config;
}

SqueezerConfig bas_config_for(double s, double resource_db, double eta_s, double eta_h) {
  require(s > 0.0 && s < 1.0, "BAS target scale must lie in (0, 1)");
  return SqueezerConfig::bas(s, resource_db, eta_s, eta_h);
}

}  // namespace telesq

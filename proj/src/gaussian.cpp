#include "telesq/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace telesq {

namespace {

Eigen::MatrixXd symplectic_form(int modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int m = 0; m < modes; ++m) {
    omega(2 * m, 2 * m + 1) = 1.0;
    omega(2 * m + 1, 2 * m) = -1.0;
  }
  return omega;
}

Mat2 rotation_matrix(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

}  // namespace

GaussianGate::GaussianGate(Eigen::MatrixXd m, Eigen::VectorXd d)
    : matrix_(std::move(m)), displacement_(std::move(d)) {}

GaussianGate GaussianGate::identity(int modes) {
  if (modes != 1 && modes != 2) throw std::domain_error("GaussianGate: modes must be 1 or 2");
  return GaussianGate(Eigen::MatrixXd::Identity(2 * modes, 2 * modes),
                      Eigen::VectorXd::Zero(2 * modes));
}

GaussianGate GaussianGate::rotation(double phi) {
  return GaussianGate(rotation_matrix(phi), Eigen::VectorXd::Zero(2));
}

GaussianGate GaussianGate::squeeze(double s) {
  if (!(s > 0.0)) throw std::domain_error("squeeze: scale must be positive");
  Mat2 m;
  m << s, 0.0, 0.0, 1.0 / s;
  return GaussianGate(m, Eigen::VectorXd::Zero(2));
}

GaussianGate GaussianGate::shear(double k) {
  Mat2 m;
  m << 1.0, 0.0, k, 1.0;
  return GaussianGate(m, Eigen::VectorXd::Zero(2));
}

GaussianGate GaussianGate::beam_splitter(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("beam_splitter: t must lie in [0, 1]");
  const double r = std::sqrt(1.0 - t * t);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  // x1' = t x2 + r x1, x2' = t x1 - r x2; identically on p.
  for (int q = 0; q < 2; ++q) {
    m(0 + q, 0 + q) = r;
    m(0 + q, 2 + q) = t;
    m(2 + q, 0 + q) = t;
    m(2 + q, 2 + q) = -r;
  }
  return GaussianGate(m, Eigen::VectorXd::Zero(4));
}

GaussianGate GaussianGate::with_displacement(const Eigen::VectorXd& d) const {
  if (d.size() != matrix_.rows()) throw std::domain_error("displacement size mismatch");
  return GaussianGate(matrix_, d);
}

GaussianGate GaussianGate::operator*(const GaussianGate& rhs) const {
  if (modes() != rhs.modes()) throw std::domain_error("gate mode count mismatch");
  return GaussianGate(matrix_ * rhs.matrix_, matrix_ * rhs.displacement_ + displacement_);
}

Eigen::VectorXd GaussianGate::apply_mean(const Eigen::VectorXd& mean) const {
  if (mean.size() != matrix_.rows()) throw std::domain_error("mean size mismatch");
  return matrix_ * mean + displacement_;
}

double GaussianGate::symplectic_defect() const {
  const Eigen::MatrixXd omega = symplectic_form(modes());
  return (matrix_.transpose() * omega * matrix_ - omega).cwiseAbs().maxCoeff();
}

Mat2 loss_channel(double eta, const Mat2& cov) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::domain_error("loss_channel: eta must lie in [0, 1]");
  return eta * cov + 0.5 * (1.0 - eta) * Mat2::Identity();
}

double GaussianDecomposition::squeeze_scale() const { return std::exp(-xi); }

Mat2 GaussianDecomposition::reconstruct() const {
  Mat2 s;
  s << squeeze_scale(), 0.0, 0.0, 1.0 / squeeze_scale();
  return rotation_matrix(zeta) * s * rotation_matrix(epsilon);
}

namespace {

// Angle that diagonalizes the symmetric matrix [[a, b], [b, c]] with the
// smaller eigenvalue on the first axis.
double small_axis_angle(double a, double b, double c) {
  double theta = 0.5 * std::atan2(2.0 * b, a - c);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double first = a * ct * ct + 2.0 * b * ct * st + c * st * st;
  const double second = a * st * st - 2.0 * b * ct * st + c * ct * ct;
  if (first > second) theta += std::numbers::pi / 2.0;
  return theta;
}

// Resolves the pi ambiguities of the two diagonalizing angles so that
// R(zeta) S(m) R(epsilon) reproduces the target; solutions come in
// (zeta, epsilon) and (zeta+pi, epsilon+pi) pairs and the branch with
// cos(zeta) >= 0 is kept.
GaussianDecomposition resolve_branches(double xi, double zeta0, double eps0,
                                       const Mat2& target) {
  GaussianDecomposition best{0.0, xi, 0.0};
  double best_err = std::numeric_limits<double>::infinity();
  for (int dz = 0; dz < 2; ++dz) {
    for (int de = 0; de < 2; ++de) {
      GaussianDecomposition cand{zeta0 + dz * std::numbers::pi, xi,
                                 eps0 + de * std::numbers::pi};
      const double err = (cand.reconstruct() - target).cwiseAbs().maxCoeff();
      if (err < best_err) {
        best_err = err;
        best = cand;
      }
    }
  }
  if (!(best_err < 1e-11)) {
    throw std::runtime_error("gate decomposition: no branch reconstructs the target");
  }
  if (std::cos(best.zeta) < 0.0 ||
      (std::cos(best.zeta) == 0.0 && std::sin(best.zeta) < 0.0)) {
    best.zeta += std::numbers::pi;
    best.epsilon += std::numbers::pi;
  }
  const auto wrap = [](double angle) {
    while (angle > std::numbers::pi) angle -= 2.0 * std::numbers::pi;
    while (angle <= -std::numbers::pi) angle += 2.0 * std::numbers::pi;
    return angle;
  };
  best.zeta = wrap(best.zeta);
  best.epsilon = wrap(best.epsilon);
  return best;
}

}  // namespace

GaussianDecomposition decompose_squeeze_shear(double r, double k) {
  if (k == 0.0 && r == 0.0) return GaussianDecomposition{0.0, 0.0, 0.0};
  if (k == 0.0 && r > 0.0) return GaussianDecomposition{0.0, r, 0.0};

  // Smallest squared singular value of S(e^{-r}) P(k); the two squared
  // singular values solve u^2 - B u + 1 = 0 with B the Gram-matrix trace.
  const double a = std::exp(-r);  // x-scale of the squeeze factor
  const double b = a * a + (1.0 + k * k) / (a * a);
  const double disc = std::max(0.0, b * b - 4.0);
  const double u = 2.0 / (b + std::sqrt(disc));  // e^{-2 xi}
  const double xi = -0.5 * std::log(u);

  Mat2 target;
  target << a, 0.0, k / a, 1.0 / a;

  if (u > 1.0 - 1e-15) return GaussianDecomposition{0.0, 0.0, 0.0};

  // T T^T = R(zeta) diag(m^2, 1/m^2) R(-zeta); T^T T likewise for -epsilon.
  const double zeta0 = small_axis_angle(a * a, k, (1.0 + k * k) / (a * a));
  const double eps0 = -small_axis_angle(a * a + k * k / (a * a), k / (a * a), 1.0 / (a * a));
  return resolve_branches(xi, zeta0, eps0, target);
}

GaussianDecomposition decompose_shear(double k) { return decompose_squeeze_shear(0.0, k); }

}  // namespace telesq

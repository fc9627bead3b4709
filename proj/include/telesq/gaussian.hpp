#pragma once

#include <Eigen/Dense>

namespace telesq {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

/// Linear quadrature map of a single- or two-mode Gaussian unitary.
/// Quadrature ordering is (x1, p1[, x2, p2]); vacuum variance is 1/2.
class GaussianGate {
 public:
  static GaussianGate identity(int modes);

  /// x -> x cos(phi) - p sin(phi), p -> p cos(phi) + x sin(phi).
  static GaussianGate rotation(double phi);

  /// x -> s x, p -> p / s. Requires s > 0.
  static GaussianGate squeeze(double s);

  /// x -> x, p -> p + k x.
  static GaussianGate shear(double k);

  /// Two-mode mixing with amplitude transmission t in [0, 1]:
  /// x1 -> t x2 + r x1, x2 -> t x1 - r x2 (same on p), r = sqrt(1 - t^2).
  static GaussianGate beam_splitter(double t);

  int modes() const { return static_cast<int>(matrix_.rows()) / 2; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const Eigen::VectorXd& displacement() const { return displacement_; }

  GaussianGate with_displacement(const Eigen::VectorXd& d) const;

  /// Gate product. (a * b) acts as b first, then a, matching matrix order.
  GaussianGate operator*(const GaussianGate& rhs) const;

  /// Mean quadrature vector after the gate.
  Eigen::VectorXd apply_mean(const Eigen::VectorXd& mean) const;

  /// Max-norm residual of M^T Omega M - Omega.
  double symplectic_defect() const;
  bool is_symplectic(double tol = 1e-12) const { return symplectic_defect() < tol; }

 private:
  GaussianGate(Eigen::MatrixXd m, Eigen::VectorXd d);
  Eigen::MatrixXd matrix_;
  Eigen::VectorXd displacement_;
};

/// Pure-loss channel on a single-mode covariance matrix:
/// eta * cov + (1 - eta)/2 * I, with eta the intensity transmissivity.
Mat2 loss_channel(double eta, const Mat2& cov);

/// Rotation-squeeze-rotation form R(zeta) S(e^{-xi}) R(epsilon) of a
/// symplectic single-mode gate. e^{-xi} is the smallest singular value of
/// the decomposed matrix, so xi >= 0 always.
struct GaussianDecomposition {
  double zeta;
  double xi;
  double epsilon;

  double squeeze_scale() const;  // e^{-xi}
  Mat2 reconstruct() const;      // R(zeta) * S(e^{-xi}) * R(epsilon)
};

/// Decomposition of the shear gate P(k).
GaussianDecomposition decompose_shear(double k);

/// Decomposition of S(e^{-r}) * P(k), r the squeeze exponent of the left
/// factor. Returns the identity decomposition in the degenerate r = k = 0
/// case.
GaussianDecomposition decompose_squeeze_shear(double r, double k);

}  // namespace telesq

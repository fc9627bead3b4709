// Development probe; removed before release.
#include <cstdio>
#include <random>

#include "telesq/circuit_oracle.hpp"
#include "telesq/gaussian.hpp"
#include "telesq/noise.hpp"

using namespace telesq;

int main() {
  // 1. Decomposition reconstruction across signs.
  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> kd(-5.0, 5.0), rd(-2.0, 2.0);
    double worst_shear = 0, worst_sp = 0, worst_sv = 0;
    for (int i = 0; i < 20000; ++i) {
      const double k = kd(rng);
      auto d = decompose_shear(k);
      Mat2 target;
      target << 1, 0, k, 1;
      worst_shear = std::max(worst_shear, (d.reconstruct() - target).cwiseAbs().maxCoeff());

      const double r = rd(rng);
      auto d2 = decompose_squeeze_shear(r, k);
      Mat2 t2;
      t2 << std::exp(-r), 0, k * std::exp(r), std::exp(r);
      worst_sp = std::max(worst_sp, (d2.reconstruct() - t2).cwiseAbs().maxCoeff());
      Eigen::JacobiSVD<Mat2> svd(t2);
      worst_sv = std::max(worst_sv, std::abs(d2.squeeze_scale() - svd.singularValues()(1)));
    }
    std::printf("shear recon worst=%.3e  sp recon worst=%.3e  sv worst=%.3e\n", worst_shear,
                worst_sp, worst_sv);
  }

  // 2. PS example: phi=pi/4 -> s = sqrt(2)-1.
  {
    auto c = SqueezerConfig::ps(std::atan(1.0), 9.0, 1.0, 1.0);
    std::printf("s_PS(phi=pi/4) = %.12f (expect %.12f)\n", squeezing_parameter(c),
                std::sqrt(2.0) - 1.0);
  }

  // 3. Oracle trace invariants + sigma equivalence over a small random grid.
  {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> td(0.05, 0.95), pd(-1.3, 1.3);
    const double etas[3] = {1.0, 0.9, 0.8};
    const double dbs[3] = {3.0, 6.0, 9.0};
    double worst_sig = 0, worst_s = 0, worst_cross = 0, worst_det = 0;
    int n = 0;
    for (int i = 0; i < 3000; ++i) {
      SqueezerConfig c;
      const int variant = i % 4;
      const double db = dbs[i % 3];
      const double es = etas[(i / 3) % 3], eh = etas[(i / 9) % 3];
      try {
        switch (variant) {
          case 0: c = SqueezerConfig::ps(pd(rng), db, es, eh); break;
          case 1: c = SqueezerConfig::bs(std::sqrt(td(rng)), std::sqrt(td(rng)), db, es, eh); break;
          case 2:
            c = SqueezerConfig::bsps(std::sqrt(td(rng)), std::sqrt(td(rng)), pd(rng), db, es, eh);
            break;
          case 3: c = SqueezerConfig::bas(std::sqrt(td(rng)), db, es, eh); break;
        }
      } catch (...) { continue; }
      auto trace = oracle::build_and_propagate(c);
      auto closed = noise_matrix(c);
      auto sig_o = oracle::oracle_noise_matrix(trace, c);
      worst_sig = std::max(worst_sig, (closed.sigma - sig_o).cwiseAbs().maxCoeff());
      worst_s = std::max(worst_s, std::abs(trace.s_effective - closed.s));
      worst_cross = std::max(worst_cross, std::abs(trace.x_out[oracle::Sym::p_in]));
      worst_cross = std::max(worst_cross, std::abs(trace.p_out[oracle::Sym::x_in]));
      const double det = trace.x_out[oracle::Sym::x_in] * trace.p_out[oracle::Sym::p_in] -
                         trace.x_out[oracle::Sym::p_in] * trace.p_out[oracle::Sym::x_in];
      worst_det = std::max(worst_det, std::abs(det - 1.0));
      ++n;
    }
    std::printf("grid n=%d  |dSigma|=%.3e  |ds|=%.3e  cross=%.3e  det=%.3e\n", n, worst_sig,
                worst_s, worst_cross, worst_det);
  }

  // 4. PS realistic covariance question.
  {
    for (double sdb : {-2.0, -5.0, -8.0}) {
      const double s = std::pow(10.0, sdb / 20.0);
      auto c = ps_config_for(s, 9.0, 0.8, 0.9);
      auto m = noise_matrix(c);
      auto tr = oracle::build_and_propagate(c);
      auto so = oracle::oracle_noise_matrix(tr, c);
      std::printf("PS s_db=%5.1f: closed covar=%+.6e oracle covar=%+.6e varx=%.6f varp=%.6f "
                  "NP=%.6f\n",
                  sdb, m.sigma(0, 1), so(0, 1), m.sigma(0, 0), m.sigma(1, 1), noise_product(m));
    }
  }

  // 5. BS realistic threshold probe (t1^2 = 0.5).
  {
    for (double sdb : {-7.0, -7.5, -8.0, -8.5}) {
      const double s = std::pow(10.0, sdb / 20.0);
      auto c = bs_config_for(s, std::sqrt(0.5), 9.0, 0.8, 0.9);
      auto m = noise_matrix(c);
      std::printf("BS s_db=%5.1f NP=%.6f breaking=%d\n", sdb, noise_product(m),
                  int(entanglement_breaking(m)));
    }
  }

  // 6. Unity-gain teleporter: balanced, phi=0, 3 dB lossless.
  {
    auto c = SqueezerConfig::bs(1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2, 3.0, 1.0,
                                1.0);
    auto m = noise_matrix(c);
    std::printf("teleporter 3dB: varNx=%.6f (expect %.6f) covar=%.2e s=%.6f\n", m.sigma(0, 0),
                2.0 * 0.5 * std::pow(10.0, -0.3), m.sigma(0, 1), m.s);
  }
  return 0;
}

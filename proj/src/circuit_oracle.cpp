#include "telesq/circuit_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace telesq::oracle {

namespace {

struct Mode {
  LinearForm x;
  LinearForm p;
};

Mode symbol_mode(Sym x, Sym p) { return {LinearForm::unit(x), LinearForm::unit(p)}; }

// mode <- sqrt(eta) mode + sqrt(1-eta) vacuum; the reflected port is dropped.
void apply_loss(Mode& mode, double eta, const Mode& vacuum) {
  const double t = std::sqrt(eta);
  const double r = std::sqrt(1.0 - eta);
  mode.x = t * mode.x + r * vacuum.x;
  mode.p = t * mode.p + r * vacuum.p;
}

// x1' = t x2 + r x1, x2' = t x1 - r x2 (same on p).
void apply_beam_splitter(double t, Mode& m1, Mode& m2) {
  const double r = std::sqrt(1.0 - t * t);
  Mode out1{t * m2.x + r * m1.x, t * m2.p + r * m1.p};
  Mode out2{t * m1.x + (-r) * m2.x, t * m1.p + (-r) * m2.p};
  m1 = out1;
  m2 = out2;
}

// x -> x cos - p sin, p -> p cos + x sin.
void apply_rotation(double phi, Mode& m) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Mode out{c * m.x + (-s) * m.p, c * m.p + s * m.x};
  m = out;
}

// Generalized teleporter applied to an arbitrary input mode. The feed-forward
// gains are the ideal j1..j3 divided by sqrt(eta_h), which keeps the signal
// gain at unity with inefficient detectors.
Mode teleport(const SqueezerConfig& config, Mode input, double g, double k) {
  Mode s1 = symbol_mode(Sym::x_s1, Sym::p_s1);
  Mode s2 = symbol_mode(Sym::x_s2, Sym::p_s2);
  apply_loss(s1, config.eta_s, symbol_mode(Sym::x_ls1, Sym::p_ls1));
  apply_loss(s2, config.eta_s, symbol_mode(Sym::x_ls2, Sym::p_ls2));

  // TMSV: mode 1 is measured later, mode 2 carries the output.
  Mode tmsv1 = s1;
  Mode tmsv2 = s2;
  apply_beam_splitter(config.t1, tmsv1, tmsv2);
  // After B(t1): tmsv1 = t1 s2 + r1 s1, tmsv2 = t1 s1 - r1 s2.

  const auto decomposition = decompose_squeeze_shear(-std::log(g), k);
  apply_rotation(-decomposition.epsilon, input);

  Mode a = input;   // port 1
  Mode b = tmsv1;   // port 2
  apply_beam_splitter(config.t2, a, b);
  // Port assignment: A = t2 tmsv1 + r2 input (x-measured),
  //                  B = t2 input - r2 tmsv1 (p-measured after PS(phi)).

  apply_loss(a, config.eta_h, symbol_mode(Sym::x_da, Sym::p_da));
  apply_loss(b, config.eta_h, symbol_mode(Sym::x_db, Sym::p_db));
  apply_rotation(config.phi, b);

  const LinearForm q_a = a.x;
  const LinearForm q_b = b.p;

  const auto j = gains(config);
  const double scale = 1.0 / std::sqrt(config.eta_h);
  tmsv2.x += (j[0] * scale) * q_a;
  tmsv2.p += (j[1] * scale) * q_b + (j[2] * scale) * q_a;

  apply_rotation(-decomposition.zeta, tmsv2);
  return tmsv2;
}

// Measurement-induced pre-squeezer: mixes the input with a squeezed source on
// B(t0), measures p of the reflected arm, and feeds the outcome forward.
Mode bas_pre_squeezer(const SqueezerConfig& config, Mode input) {
  Mode s0 = symbol_mode(Sym::x_s0, Sym::p_s0);
  apply_loss(s0, config.eta_s, symbol_mode(Sym::x_ls0, Sym::p_ls0));

  Mode measured = input;  // port 1
  Mode signal = s0;       // port 2
  apply_beam_splitter(config.t0, measured, signal);
  // measured = t0 s0 + r0 input, signal = t0 input - r0 s0.

  apply_loss(measured, config.eta_h, symbol_mode(Sym::x_dc, Sym::p_dc));
  const LinearForm q = measured.p;

  const double gain = config.r0() / (config.t0 * std::sqrt(config.eta_h));
  signal.p += gain * q;
  return signal;
}

}  // namespace

CircuitTrace build_and_propagate(const SqueezerConfig& config) {
  config.validate();
  Mode input = symbol_mode(Sym::x_in, Sym::p_in);

  Mode output;
  if (config.variant == Squeezer::BAS) {
    Mode squeezed = bas_pre_squeezer(config, input);
    SqueezerConfig teleporter = config;
    teleporter.variant = Squeezer::BS;
    output = teleport(teleporter, squeezed, 1.0, 0.0);
  } else {
    const auto [g, k] = gate_parameters(config);
    output = teleport(config, input, g, k);
  }

  CircuitTrace trace;
  trace.x_out = output.x;
  trace.p_out = output.p;
  trace.s_effective = output.x[Sym::x_in];
  return trace;
}

double symbol_variance(Sym s, const SqueezerConfig& config) {
  const double v = config.squeezed_variance();
  const double anti = config.antisqueezed_variance();
  switch (s) {
    case Sym::x_s1: return v;
    case Sym::p_s1: return anti;
    case Sym::x_s2: return anti;
    case Sym::p_s2: return v;
    case Sym::x_s0: return v;
    case Sym::p_s0: return anti;
    case Sym::x_in:
    case Sym::p_in:
      throw std::domain_error("signal symbols carry no assigned variance");
    default:
      return 0.5;  // auxiliary vacua
  }
}

Mat2 oracle_noise_matrix(const CircuitTrace& trace, const SqueezerConfig& config) {
  Mat2 sigma = Mat2::Zero();
  for (std::size_t i = 0; i < kSymCount; ++i) {
    const Sym s = static_cast<Sym>(i);
    if (s == Sym::x_in || s == Sym::p_in) continue;
    const double var = symbol_variance(s, config);
    const double cx = trace.x_out[s];
    const double cp = trace.p_out[s];
    sigma(0, 0) += cx * cx * var;
    sigma(1, 1) += cp * cp * var;
    sigma(0, 1) += cx * cp * var;
  }
  sigma(1, 0) = sigma(0, 1);
  return sigma;
}

}  // namespace telesq::oracle

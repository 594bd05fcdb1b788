#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fracterp/truncation.hpp"

namespace fracterp {

using cdouble = std::complex<double>;

// Complex samples on the uniform grid x_j = a + j*h, h = (b-a)/(M-1).
struct SampledSignal {
  double a = 0.0;
  double b = 1.0;
  std::vector<cdouble> values;

  int size() const { return static_cast<int>(values.size()); }
  double step() const { return (b - a) / static_cast<double>(values.size() - 1); }
  double x(int j) const { return a + j * step(); }
  void validate() const;

  static SampledSignal from_function(double a, double b, int m,
                                     const std::function<cdouble(double)>& fn);
};

/// Composite trapezoidal cumulative integral of f from a; output[0] = 0.
SampledSignal integrate_cumulative(const SampledSignal& f);

/// Fractional integral J^alpha f by the Newton operator series at rho = 1:
/// sum_n (I - J)^n f * P_n(alpha), each (I - J) application one trapezoidal
/// integration. Requires Re(alpha) > 0. Converges pointwise as h -> 0 and
/// terms -> infinity; convergence is endpoint-limited when f(a) != 0 (the
/// diagnostics report the surviving tail).
SeriesResult<SampledSignal> newton_fractional_integral(const SampledSignal& f, cdouble alpha,
                                                       const TruncationPolicy& policy);

/// Riemann-Liouville integral (1/Gamma(alpha)) int_a^x f(y) (x-y)^(alpha-1) dy
/// by product integration: f linear on each cell, the weakly singular kernel
/// integrated exactly. This is the module's oracle. Requires Re(alpha) > 0.
SampledSignal riemann_liouville(const SampledSignal& f, cdouble alpha);

enum class TrigKind { sin, cos };

// D^alpha[sin(lambda x)] = amplitude * sin(lambda x + phase_shift), cos alike.
struct TrigDerivative {
  TrigKind kind = TrigKind::sin;
  double lambda = 1.0;
  double alpha = 0.0;
  double amplitude = 1.0;    // lambda^alpha
  double phase_shift = 0.0;  // pi*alpha/2
  cdouble eval(double x) const;
};

TrigDerivative frac_derivative_trig(double lambda, TrigKind kind, double alpha);

/// Fractional derivative of a periodic signal on [a,b) (last sample dropped
/// from the transform grid, restored on output): Fourier coefficient n gets
/// multiplied by (i * 2 pi n/(b-a))^alpha, principal branch, which reproduces
/// the sin/cos closed forms at every order. Mean mode: annihilated for
/// alpha > 0, kept at alpha = 0, rejected for alpha < 0 unless the mean
/// vanishes.
SampledSignal frac_derivative_fourier_series(const SampledSignal& f, double alpha);

/// Same multiplier on the FFT frequency grid of a decaying signal
/// (|f| < 1e-8 required at both endpoints).
SampledSignal frac_derivative_fourier_transform(const SampledSignal& f, double alpha);

}  // namespace fracterp

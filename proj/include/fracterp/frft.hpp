#pragma once

#include <array>
#include <complex>
#include <vector>

namespace fracterp {

using cdouble = std::complex<double>;

// Complex samples on the centered index grid: sample j sits at
// x = (j - floor(M/2)) * sample_rate.
struct Signal {
  std::vector<cdouble> samples;
  double sample_rate = 1.0;

  int size() const { return static_cast<int>(samples.size()); }
  int center() const { return size() / 2; }
  double x(int j) const { return (j - center()) * sample_rate; }
  void validate() const;
};

/// Centered unitary DFT. F^2 is exactly the index reversal about the center
/// and F^4 the identity, so the order-4 periodic weights apply exactly.
Signal unitary_dft(const Signal& f);

/// F^2: index reversal about the center (mod-M wraparound on the edge).
Signal parity(const Signal& f);

/// Share of the signal in the -1 eigenspace of the DFT, computed with the
/// exact group projector (I - F + F^2 - F^3)/4.
double minus_one_component_fraction(const Signal& f);

// The four coefficients of the order-4 periodic power: alpha-weights for
// identity, F, F^2 (parity), F^3.
struct FrftWeights {
  double alpha = 0.0;
  std::array<cdouble, 4> w{};
};

/// Equal to periodic_power_weights(4, alpha); integer alpha gives the exact
/// indicator of alpha mod 4.
FrftWeights alt_frft_weights(double alpha);

struct FrftResult {
  Signal value;
  // nonzero when the input overlaps the -1 eigenspace, where the transform
  // multiplies by cos(pi alpha) instead of a unimodular power
  double minus_one_fraction = 0.0;
};

/// The four-term fractional Fourier transform
/// w0 f + w1 F[f] + w2 f(-x) + w3 F[f](-x); exact finite computation.
FrftResult alt_frft(const Signal& f, double alpha);

/// Chirp-based discrete realization of the rotation-kernel fractional
/// Fourier transform (multiply, convolve via FFT on a 2x-padded grid,
/// multiply). phi within 1e-9 of a multiple of pi returns the exact
/// identity/parity map; other near-degenerate angles are rejected.
Signal literature_frft(const Signal& f, double phi);

// t, grid size, max |(T_1)^t chi_[0,1/2]| over (1/2,1), and the true-shift
// maximum there, with the sampled profile for plotting.
struct TranslationReport {
  double t = 0.0;
  int grid = 0;
  double max_on_interval = 0.0;
  double true_shift_max = 0.0;
  std::vector<double> xs;
  std::vector<double> series_value;
};

/// The sinc-series power (T_1)^t applied to chi_[0,1/2], evaluated on a
/// uniform grid over [-8, 8] with symmetric truncation |n| <= 64. Every
/// integer-shifted box vanishes on (1/2, 1), so the series is exactly zero
/// there; the true shift T_{1/2} is 1.
TranslationReport translation_counterexample(double t, int grid);

/// (T_{1/k})^{kt} f = sum_n sinc(kt - n) f(x - n/k) on a grid commensurate
/// with step 1/k (shifts act by whole grid steps, zero fill at the ends).
Signal refined_translation_power(const Signal& f, double t, int k);

}  // namespace fracterp

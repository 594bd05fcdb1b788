#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fracterp/truncation.hpp"

namespace fracterp {

using cdouble = std::complex<double>;

// ---------------------------------------------------------------------------
// Newton (forward-difference) machinery
// ---------------------------------------------------------------------------

// Interpolation data c_0..c_N at integer nodes, origin fixed to 0:
// c_n = sum_{k<=n} P_k(n) f(k) = (-1)^n Delta^n f(0).
struct NewtonCoefficients {
  int origin = 0;
  std::vector<cdouble> values;
};

/// n-th Pochhammer-Newton polynomial P_n(alpha) = (-1)^n binom(alpha, n),
/// evaluated by the product form (total; no Gamma poles).
cdouble pochhammer_newton(int n, cdouble alpha);

/// Newton coefficients of a sample sequence f(0..N). The binomial weights
/// reach 2^N, so the accumulation runs in extended precision (pairwise order)
/// before rounding each coefficient back to double.
NewtonCoefficients newton_coefficients(std::span<const cdouble> samples);

/// Evaluate sum_n c_n P_n(s) under the policy. At a nonnegative integer
/// s = m < N the sum terminates exactly at n = m and reproduces f(m).
SeriesResult<cdouble> newton_eval(const NewtonCoefficients& coeffs, cdouble s,
                                  const TruncationPolicy& policy);

/// x^alpha through the Newton series of k -> x^k. The coefficients of that
/// geometric sequence are the exact forward differences (1-x)^n, which is how
/// they are produced here (the term-by-term binomial sums cancel
/// catastrophically in floating point once n is moderate).
/// Requires |x-1| < 1 unless alpha is a nonnegative integer.
SeriesResult<cdouble> newton_eval_power(cdouble x, cdouble alpha,
                                        const TruncationPolicy& policy);

// ---------------------------------------------------------------------------
// Shannon / sinc machinery
// ---------------------------------------------------------------------------

/// sin(pi x)/(pi x); 1 at x = 0, exact 0 at nonzero integers, series branch
/// below |x| = 1e-4.
double sinc(double x);

/// Symmetric partial sums sum_{|n|<=N} sinc(alpha-n) e^{i n theta}; the
/// pointwise limit is e^{i alpha theta} for theta in (-pi, pi) and
/// cos(pi alpha) at theta = pi. One-sided summation diverges, so the
/// truncation is symmetric by construction; policy.max_terms bounds N.
SeriesResult<cdouble> shannon_eval_power(double theta, double alpha,
                                         const TruncationPolicy& policy);

// ---------------------------------------------------------------------------
// Periodic (finite-order) closed forms
// ---------------------------------------------------------------------------

// The N weights of the exact period-N resummation of the Shannon series at
// order alpha: w_n = periodic_kernel(N, alpha - n).
struct PeriodicWeights {
  int period = 0;
  cdouble order{};
  std::vector<cdouble> weights;
};

/// (1/N) sin(pi x) cot(pi x / N) for even N, csc instead of cot for odd N;
/// removable singularities at x in N*Z evaluated by series (value 1).
double periodic_kernel(int period, double x);

/// Weights w_0..w_{N-1} at order alpha. At integer alpha they reduce to the
/// indicator of (alpha mod N).
PeriodicWeights periodic_power_weights(int period, double alpha);

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

/// Pairwise (cascade) summation.
cdouble pairwise_sum(std::span<const cdouble> terms);

/// True if z is an exactly-representable nonnegative integer (the finite-sum
/// cases of the Newton series).
bool is_nonnegative_integer(cdouble z);

}  // namespace fracterp

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fracterp/truncation.hpp"

namespace fracterp {

using cdouble = std::complex<double>;

enum class SampleProvenance { direct_series, accelerated_alternating, closed_form, user_supplied };

std::string to_string(SampleProvenance p);

// Integer-argument values g(0), g(1), ..., g(N) of a Dirichlet series,
// tagged with how each entry was obtained.
struct DirichletSamples {
  std::vector<cdouble> values;
  std::vector<SampleProvenance> provenance;
  void validate() const;
};

/// eta(0) = 1/2, eta(1) = ln 2, eta(k >= 2) by the Euler-transformed
/// alternating series. The table is produced in extended precision: the
/// Newton transform downstream amplifies sample noise by 2^n, so double
///-precision inputs would cap the usable series length near n = 35.
DirichletSamples eta_integer_values(int k_max);

/// Newton interpolation of arbitrary integer-node samples at s
/// (newton_coefficients + newton_eval). Exact at integer nodes.
SeriesResult<cdouble> dirichlet_newton_interpolate(const DirichletSamples& samples, cdouble s,
                                                   const TruncationPolicy& policy);

/// zeta(s) = [Newton interpolation of eta at s] / (1 - 2^(1-s)).
/// s = 1 (pole) and the other zeros of 1 - 2^(1-s) are rejected.
SeriesResult<cdouble> zeta_via_eta(cdouble s, const TruncationPolicy& policy);

/// Newton interpolation of 1/zeta(k) samples (1/zeta(0) = -2, 1/zeta(1) = 0,
/// k >= 2 from the direct series). Experimental: the identity is formal and
/// no convergence region is established; inspect the diagnostics.
SeriesResult<cdouble> reciprocal_zeta(cdouble s, const TruncationPolicy& policy);

/// zeta(s+1+eps) interpolated from samples zeta(k+1+eps), eps > 0, all
/// arguments right of the pole (direct series + Euler-Maclaurin tail).
SeriesResult<cdouble> zeta_shifted(cdouble s, double eps, const TruncationPolicy& policy);

/// Mellin-transform interpolation: interpolates g(k) = M[f](k)/Gamma(k) and
/// multiplies by Gamma(s). Slot 0 of the input holds f(0) directly (the
/// limiting value of M[f](s)/Gamma(s) at s = 0; M[f](0) itself generally
/// diverges). Rejects nonpositive-integer s (Gamma pole).
SeriesResult<cdouble> mellin_interpolate(const DirichletSamples& mellin_samples, cdouble s,
                                         const TruncationPolicy& policy);

}  // namespace fracterp

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>

#include "fracterp/truncation.hpp"

namespace fracterp {

using cdouble = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Throws if the matrix is not square or contains non-finite entries.
void validate_matrix(const ComplexMatrix& T);

enum class CertificateKind { disk, unit_circle, finite_order };

struct CertificateRequest {
  CertificateKind kind = CertificateKind::disk;
  cdouble center{};    // disk
  double radius = 0.0; // disk
  int order = 0;       // finite_order
};

// Evidence that the spectrum of T lies in the region an engine needs.
// disk: every eigenvalue in the closed disk (tol 1e-9).
// unit_circle: ||T*T - I||_F <= 1e-9.
// finite_order: ||T^N - I||_F <= 1e-9.
struct SpectralCertificate {
  CertificateKind kind = CertificateKind::disk;
  cdouble center{};
  double radius = 0.0;
  int order = 0;
  std::string evidence;
};

/// Check the requested spectral region; throws certificate_error (reporting
/// the offending eigenvalue or residual) when it fails.
SpectralCertificate certify_spectrum(const ComplexMatrix& T, const CertificateRequest& req);

// Tightest tangent disk B(z,|z|) found by a golden-section search over the
// ray through the eigenvalue centroid. quality = max_i |lambda_i / z - 1|.
struct TangentDisk {
  cdouble z{};
  double quality = 0.0;
};
TangentDisk find_tangent_disk(const ComplexMatrix& T);

struct MatrixPowerResult {
  ComplexMatrix value;
  Convergence diag;
  SpectralCertificate certificate;
};

/// T^alpha by the Newton operator series rho^alpha * sum_n (I - T/rho)^n P_n(alpha).
/// rho = nullopt picks the tangent disk mapping the spectrum into B(1, 0.8).
/// Spectrum on the boundary of B(rho,|rho|) (within 1e-9) requires Re(alpha) > 0.
MatrixPowerResult newton_matrix_power(const ComplexMatrix& T, cdouble alpha,
                                      std::optional<cdouble> rho,
                                      const TruncationPolicy& policy);

/// U^alpha for unitary U by symmetric partial sums sum_{|n|<=N} sinc(alpha-n) U^n.
/// Converges O(1/N); on the -1 eigenspace the limit multiplier is cos(pi alpha).
MatrixPowerResult shannon_matrix_power(const ComplexMatrix& U, double alpha,
                                       const TruncationPolicy& policy);

/// T^alpha for T with T^N = I: the exact finite combination
/// sum_{n<N} w_n(alpha) T^n with the period-N weights. No truncation.
MatrixPowerResult periodic_matrix_power(const ComplexMatrix& T, int order, double alpha);

/// Independent oracle: V diag(lambda_i^alpha) V^{-1}, principal branch.
/// Refuses ill-conditioned eigenbases (cond > 1e8) and eigenvalues within
/// 1e-12 of the negative real axis; lambda = 0 is allowed only for
/// Re(alpha) > 0 (0^alpha = 0).
ComplexMatrix eigen_fractional_power_oracle(const ComplexMatrix& T, cdouble alpha);

}  // namespace fracterp

#include "fracterp/operator_power.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fracterp/errors.hpp"
#include "fracterp/interp.hpp"

namespace fracterp {

namespace {

constexpr double kCertTol = 1e-9;

std::string fmt_complex(cdouble z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

Eigen::VectorXcd eigenvalues_of(const ComplexMatrix& T) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(T, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw certificate_error("eigenvalue computation did not converge");
  return es.eigenvalues();
}

double disk_quality(const Eigen::VectorXcd& ev, cdouble z) {
  double q = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    q = std::max(q, std::abs(ev[i] / z - 1.0));
  return q;
}

}  // namespace

void validate_matrix(const ComplexMatrix& T) {
  if (T.rows() == 0 || T.rows() != T.cols())
    throw std::invalid_argument("matrix must be square and nonempty");
  if (!T.allFinite()) throw std::invalid_argument("matrix entries must be finite");
}

TangentDisk find_tangent_disk(const ComplexMatrix& T) {
  validate_matrix(T);
  const Eigen::VectorXcd ev = eigenvalues_of(T);
  cdouble centroid = ev.sum() / static_cast<double>(ev.size());
  cdouble dir = std::abs(centroid) > 1e-14 ? centroid / std::abs(centroid) : cdouble{1.0, 0.0};

  // q(t) = max_i |lambda_i/(t u) - 1| is unimodal along the ray; golden section.
  auto q = [&](double t) { return disk_quality(ev, t * dir); };
  double scale = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) scale = std::max(scale, std::abs(ev[i]));
  if (scale == 0.0) return {cdouble{1.0, 0.0}, 1.0};  // nilpotent: spectrum {0}, boundary case

  double lo = scale * 1e-3, hi = scale * 1e3;
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = q(x1), f2 = q(x2);
  for (int it = 0; it < 200; ++it) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a); f1 = q(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a); f2 = q(x2);
    }
    if (b - a < 1e-12 * scale) break;
  }
  const double t = 0.5 * (a + b);
  return {t * dir, q(t)};
}

SpectralCertificate certify_spectrum(const ComplexMatrix& T, const CertificateRequest& req) {
  validate_matrix(T);
  SpectralCertificate cert;
  cert.kind = req.kind;
  std::ostringstream ev_note;

  switch (req.kind) {
    case CertificateKind::disk: {
      const Eigen::VectorXcd ev = eigenvalues_of(T);
      for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev[i] - req.center) > req.radius + kCertTol)
          throw certificate_error("CertificateRefused: eigenvalue " + fmt_complex(ev[i]) +
                                  " outside disk B(" + fmt_complex(req.center) + ", " +
                                  std::to_string(req.radius) + ")");
      }
      cert.center = req.center;
      cert.radius = req.radius;
      const TangentDisk td = find_tangent_disk(T);
      ev_note << "dense eigensolve, " << ev.size() << " eigenvalues inside; tightest tangent disk B("
              << fmt_complex(td.z) << ", " << std::abs(td.z) << ") quality " << td.quality;
      break;
    }
    case CertificateKind::unit_circle: {
      const double res = (T.adjoint() * T - ComplexMatrix::Identity(T.rows(), T.cols())).norm();
      if (res > kCertTol)
        throw certificate_error("CertificateRefused: ||T*T - I||_F = " + std::to_string(res));
      ev_note << "unitarity residual ||T*T - I||_F = " << res;
      break;
    }
    case CertificateKind::finite_order: {
      if (req.order < 1) throw std::invalid_argument("finite_order certificate needs order >= 1");
      ComplexMatrix P = ComplexMatrix::Identity(T.rows(), T.cols());
      for (int k = 0; k < req.order; ++k) P = P * T;
      const double res = (P - ComplexMatrix::Identity(T.rows(), T.cols())).norm();
      if (res > kCertTol)
        throw certificate_error("CertificateRefused: ||T^" + std::to_string(req.order) +
                                " - I||_F = " + std::to_string(res));
      cert.order = req.order;
      ev_note << "||T^" << req.order << " - I||_F = " << res;
      break;
    }
  }
  cert.evidence = ev_note.str();
  return cert;
}

MatrixPowerResult newton_matrix_power(const ComplexMatrix& T, cdouble alpha,
                                      std::optional<cdouble> rho,
                                      const TruncationPolicy& policy) {
  validate_matrix(T);
  policy.validate();
  const Eigen::VectorXcd ev = eigenvalues_of(T);

  cdouble r;
  double quality;
  std::string how;
  if (rho) {
    r = *rho;
    if (r == cdouble{0.0, 0.0}) throw domain_error("newton_matrix_power: rho must be nonzero");
    quality = disk_quality(ev, r);
    how = "user rho";
  } else {
    const TangentDisk td = find_tangent_disk(T);
    r = td.z;
    quality = td.quality;
    how = "auto rho (target B(1, 0.8))";
  }

  if (quality > 1.0 + kCertTol) {
    Eigen::Index worst = 0;
    double w = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      const double d = std::abs(ev[i] / r - 1.0);
      if (d > w) { w = d; worst = i; }
    }
    throw certificate_error("CertificateRefused: eigenvalue " + fmt_complex(ev[worst]) +
                            " outside B(rho, |rho|) for rho = " + fmt_complex(r));
  }
  if (quality > 1.0 - kCertTol && alpha.real() <= 0.0)
    throw domain_error("newton_matrix_power: spectrum touches the disk boundary; needs Re(alpha) > 0");

  SpectralCertificate cert;
  cert.kind = CertificateKind::disk;
  cert.center = r;
  cert.radius = std::abs(r);
  {
    std::ostringstream os;
    os << how << ": sigma(T/rho) within distance " << quality << " of 1";
    cert.evidence = os.str();
  }

  // sum_n (I - T/rho)^n P_n(alpha), one multiply per term; prefactor rho^alpha.
  const Eigen::Index n = T.rows();
  const ComplexMatrix E = ComplexMatrix::Identity(n, n) - T / r;
  ComplexMatrix Epow = ComplexMatrix::Identity(n, n);
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  cdouble P = 1.0;
  int below = 0, used = 0;
  bool converged = false;
  double tail = 0.0;
  for (int k = 0; k < policy.max_terms; ++k) {
    const ComplexMatrix term = Epow * P;
    acc += term;
    ++used;
    const double mag = term.norm();
    tail = mag;
    if (mag < policy.abs_tol) {
      if (++below >= policy.tail_window) { converged = true; break; }
    } else {
      below = 0;
    }
    P *= (alpha - static_cast<double>(k)) * (-1.0) / static_cast<double>(k + 1);
    if (P == cdouble{0.0, 0.0}) { converged = true; break; }  // integer alpha: finite sum
    Epow = Epow * E;
  }

  MatrixPowerResult res;
  res.value = std::pow(r, alpha) * acc;
  res.diag = {converged, used, tail};
  res.certificate = std::move(cert);
  return res;
}

MatrixPowerResult shannon_matrix_power(const ComplexMatrix& U, double alpha,
                                       const TruncationPolicy& policy) {
  policy.validate();
  SpectralCertificate cert = certify_spectrum(U, {CertificateKind::unit_circle});

  const Eigen::Index n = U.rows();
  const ComplexMatrix Uinv = U.adjoint();  // unitary
  ComplexMatrix acc = sinc(alpha) * ComplexMatrix::Identity(n, n);
  ComplexMatrix Up = ComplexMatrix::Identity(n, n);
  ComplexMatrix Um = ComplexMatrix::Identity(n, n);
  int below = 0, used = 1;
  bool converged = false;
  double tail = 0.0;
  for (int k = 1; k <= policy.max_terms; ++k) {
    Up = Up * U;
    Um = Um * Uinv;
    const ComplexMatrix pair = sinc(alpha - k) * Up + sinc(alpha + k) * Um;
    acc += pair;
    ++used;
    const double mag = pair.norm();
    tail = mag;
    if (mag < policy.abs_tol) {
      if (++below >= policy.tail_window) { converged = true; break; }
    } else {
      below = 0;
    }
  }

  MatrixPowerResult res;
  res.value = std::move(acc);
  res.diag = {converged, used, tail};
  res.certificate = std::move(cert);
  return res;
}

MatrixPowerResult periodic_matrix_power(const ComplexMatrix& T, int order, double alpha) {
  SpectralCertificate cert = certify_spectrum(T, {CertificateKind::finite_order, {}, 0.0, order});

  const PeriodicWeights w = periodic_power_weights(order, alpha);
  const Eigen::Index n = T.rows();
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  ComplexMatrix Tp = ComplexMatrix::Identity(n, n);
  for (int k = 0; k < order; ++k) {
    if (w.weights[k] != cdouble{0.0, 0.0}) acc += w.weights[k] * Tp;
    if (k + 1 < order) Tp = Tp * T;
  }

  MatrixPowerResult res;
  res.value = std::move(acc);
  res.diag = {true, order, 0.0};
  res.certificate = std::move(cert);
  return res;
}

ComplexMatrix eigen_fractional_power_oracle(const ComplexMatrix& T, cdouble alpha) {
  validate_matrix(T);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(T, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw certificate_error("eigenvalue computation did not converge");

  const ComplexMatrix& V = es.eigenvectors();
  Eigen::JacobiSVD<ComplexMatrix> svd(V);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double smax = svd.singularValues()(0);
  if (smin <= 0.0 || smax / smin > 1e8)
    throw certificate_error("IllConditioned: eigenvector matrix condition " +
                            std::to_string(smin > 0 ? smax / smin : std::numeric_limits<double>::infinity()));

  Eigen::VectorXcd d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const cdouble lam = d[i];
    if (std::abs(lam) <= 1e-12) {
      if (alpha.real() <= 0.0)
        throw certificate_error("BranchAmbiguous: zero eigenvalue with Re(alpha) <= 0");
      d[i] = 0.0;  // 0^alpha = 0
      continue;
    }
    if (std::abs(lam.imag()) <= 1e-12 && lam.real() < -1e-12)
      throw certificate_error("BranchAmbiguous: eigenvalue " + fmt_complex(lam) +
                              " on the negative real axis");
    d[i] = std::pow(lam, alpha);
  }
  return V * d.asDiagonal() * V.inverse();
}

}  // namespace fracterp

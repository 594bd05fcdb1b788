#include "fracterp/frac_calculus.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"
#include "fracterp/errors.hpp"
#include "fracterp/interp.hpp"
#include "fracterp/special.hpp"

namespace fracterp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void SampledSignal::validate() const {
  if (values.size() < 2) throw std::invalid_argument("SampledSignal: need at least 2 samples");
  if (!(b > a)) throw std::invalid_argument("SampledSignal: need b > a");
  for (const cdouble& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("SampledSignal: non-finite sample");
}

SampledSignal SampledSignal::from_function(double a, double b, int m,
                                           const std::function<cdouble(double)>& fn) {
  SampledSignal s;
  s.a = a;
  s.b = b;
  s.values.resize(m);
  const double h = (b - a) / static_cast<double>(m - 1);
  for (int j = 0; j < m; ++j) s.values[j] = fn(a + j * h);
  return s;
}

SampledSignal integrate_cumulative(const SampledSignal& f) {
  f.validate();
  SampledSignal out = f;
  const double h = f.step();
  cdouble acc = 0.0;
  out.values[0] = 0.0;
  for (std::size_t j = 1; j < f.values.size(); ++j) {
    acc += 0.5 * h * (f.values[j - 1] + f.values[j]);
    out.values[j] = acc;
  }
  return out;
}

SeriesResult<SampledSignal> newton_fractional_integral(const SampledSignal& f, cdouble alpha,
                                                       const TruncationPolicy& policy) {
  f.validate();
  policy.validate();
  if (alpha.real() <= 0.0)
    throw domain_error("newton_fractional_integral: Re(alpha) must be > 0");

  const std::size_t m = f.values.size();
  std::vector<cdouble> u(f.values.begin(), f.values.end());  // (I - J)^n f
  std::vector<cdouble> acc(m, cdouble{0.0, 0.0});
  SampledSignal Jbuf = f;

  cdouble P = 1.0;
  int below = 0, used = 0;
  bool converged = false;
  double tail = 0.0;
  for (int n = 0; n < policy.max_terms; ++n) {
    double mag = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const cdouble t = u[j] * P;
      acc[j] += t;
      mag = std::max(mag, std::abs(t));
    }
    ++used;
    tail = mag;
    if (mag < policy.abs_tol) {
      if (++below >= policy.tail_window) { converged = true; break; }
    } else {
      below = 0;
    }
    P *= (alpha - static_cast<double>(n)) * (-1.0) / static_cast<double>(n + 1);
    if (P == cdouble{0.0, 0.0}) { converged = true; break; }
    Jbuf.values = u;
    const SampledSignal Ju = integrate_cumulative(Jbuf);
    for (std::size_t j = 0; j < m; ++j) u[j] -= Ju.values[j];
  }

  SeriesResult<SampledSignal> res;
  res.value = f;
  res.value.values = std::move(acc);
  res.diag = {converged, used, tail};
  return res;
}

SampledSignal riemann_liouville(const SampledSignal& f, cdouble alpha) {
  f.validate();
  if (alpha.real() <= 0.0) throw domain_error("riemann_liouville: Re(alpha) must be > 0");

  const std::size_t m = f.values.size();
  const double h = f.step();

  // cell moments: dm0[q] = int_{(q-1)h}^{qh} u^(alpha-1) du, dm1[q] same with u^alpha
  std::vector<cdouble> g0(m), g1(m);
  for (std::size_t k = 0; k < m; ++k) {
    g0[k] = principal_pow(cdouble(k * h, 0.0), alpha);
    g1[k] = principal_pow(cdouble(k * h, 0.0), alpha + 1.0);
  }
  std::vector<cdouble> dm0(m), dm1(m);
  for (std::size_t q = 1; q < m; ++q) {
    dm0[q] = (g0[q] - g0[q - 1]) / alpha;
    dm1[q] = (g1[q] - g1[q - 1]) / (alpha + 1.0);
  }

  SampledSignal out = f;
  out.values.assign(m, cdouble{0.0, 0.0});
  const cdouble inv_gamma = 1.0 / gamma_complex(alpha);

  // per cell [x_j, x_{j+1}]: f(y) = A + B u with u = x_i - y
  for (std::size_t i = 1; i < m; ++i) {
    cdouble acc = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t q = i - j;
      const cdouble slope = (f.values[j + 1] - f.values[j]) / h;
      const cdouble A = f.values[j] + slope * (static_cast<double>(q) * h);
      acc += A * dm0[q] - slope * dm1[q];
    }
    out.values[i] = acc * inv_gamma;
  }
  return out;
}

cdouble TrigDerivative::eval(double x) const {
  const double arg = lambda * x + phase_shift;
  return kind == TrigKind::sin ? cdouble{amplitude * std::sin(arg), 0.0}
                               : cdouble{amplitude * std::cos(arg), 0.0};
}

TrigDerivative frac_derivative_trig(double lambda, TrigKind kind, double alpha) {
  if (!(lambda > 0.0)) throw domain_error("frac_derivative_trig: lambda must be > 0");
  TrigDerivative d;
  d.kind = kind;
  d.lambda = lambda;
  d.alpha = alpha;
  d.amplitude = std::pow(lambda, alpha);
  d.phase_shift = 0.5 * kPi * alpha;
  return d;
}

namespace {

// shared multiplier loop for the two spectral derivatives
SampledSignal spectral_derivative(const SampledSignal& f, double alpha, bool drop_last) {
  const std::size_t m = f.values.size();
  const std::size_t L = drop_last ? m - 1 : m;
  const double period = drop_last ? (f.b - f.a) : (f.b - f.a) + f.step();

  std::vector<cdouble> w(f.values.begin(), f.values.begin() + L);
  detail::fft(w, /*inverse=*/false);

  double scale = 0.0;
  for (const cdouble& v : f.values) scale = std::max(scale, std::abs(v));
  if (alpha < 0.0 && std::abs(w[0]) > 1e-12 * std::max(1.0, scale) * static_cast<double>(L))
    throw domain_error("fractional derivative: alpha < 0 with nonzero mean (0^alpha undefined)");

  for (std::size_t k = 0; k < L; ++k) {
    const long kk = (k <= L / 2 && !(L % 2 == 0 && k == L / 2)) ? static_cast<long>(k)
                                                                : static_cast<long>(k) - static_cast<long>(L);
    const double omega = 2.0 * kPi * static_cast<double>(kk) / period;
    cdouble mult;
    if (kk == 0) {
      mult = (alpha == 0.0) ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
    } else {
      mult = principal_pow(cdouble(0.0, omega), cdouble(alpha, 0.0));
    }
    w[k] *= mult;
  }
  detail::fft(w, /*inverse=*/true);
  const double inv = 1.0 / static_cast<double>(L);

  SampledSignal out = f;
  for (std::size_t j = 0; j < L; ++j) out.values[j] = w[j] * inv;
  if (drop_last) out.values[m - 1] = out.values[0];
  return out;
}

}  // namespace

SampledSignal frac_derivative_fourier_series(const SampledSignal& f, double alpha) {
  f.validate();
  if (f.values.size() < 3)
    throw std::invalid_argument("frac_derivative_fourier_series: need at least 3 samples");
  return spectral_derivative(f, alpha, /*drop_last=*/true);
}

SampledSignal frac_derivative_fourier_transform(const SampledSignal& f, double alpha) {
  f.validate();
  if (std::abs(f.values.front()) >= 1e-8 || std::abs(f.values.back()) >= 1e-8)
    throw domain_error(
        "frac_derivative_fourier_transform: signal must decay below 1e-8 at both endpoints");
  return spectral_derivative(f, alpha, /*drop_last=*/false);
}

}  // namespace fracterp

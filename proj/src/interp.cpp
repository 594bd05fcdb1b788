#include "fracterp/interp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "bigfloat.hpp"
#include "fracterp/errors.hpp"

namespace fracterp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sin(pi*x) with argument reduced mod 2 first; keeps full relative accuracy
// for the large shifts that show up in the translation demos.
double sin_pi(double x) {
  double r = std::remainder(x, 2.0);
  return std::sin(kPi * r);
}

}  // namespace

cdouble pairwise_sum(std::span<const cdouble> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return {};
  if (n == 1) return terms[0];
  if (n == 2) return terms[0] + terms[1];
  const std::size_t half = n / 2;
  return pairwise_sum(terms.subspan(0, half)) + pairwise_sum(terms.subspan(half));
}

bool is_nonnegative_integer(cdouble z) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  return r >= 0.0 && r == std::floor(r) && r <= 2147483647.0;
}

cdouble pochhammer_newton(int n, cdouble alpha) {
  if (n < 0) throw std::invalid_argument("pochhammer_newton: n must be >= 0");
  cdouble p = 1.0;
  for (int m = 0; m < n; ++m)
    p *= (alpha - static_cast<double>(m)) * (-1.0) / static_cast<double>(m + 1);
  return p;
}

NewtonCoefficients newton_coefficients(std::span<const cdouble> samples) {
  const std::size_t N1 = samples.size();
  if (N1 == 0) throw std::invalid_argument("newton_coefficients: samples empty");
  if (N1 > 8192) throw std::invalid_argument("newton_coefficients: table too long");

  // binom(n,k) reaches 2^n, so run the whole transform at n + slack bits.
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(N1 + 128);
  using detail::BigFloat;

  NewtonCoefficients out;
  out.values.resize(N1);

  BigFloat w(prec), tmp(prec);
  std::vector<BigFloat> term_re, term_im;
  for (std::size_t n = 0; n < N1; ++n) {
    term_re.assign(n + 1, BigFloat(prec));
    term_im.assign(n + 1, BigFloat(prec));
    // P_k(n) = (-1)^k binom(n,k), built by the exact integer recurrence
    w.set(1.0);
    for (std::size_t k = 0; k <= n; ++k) {
      mpfr_mul_d(term_re[k].get(), w.get(), samples[k].real(), MPFR_RNDN);
      mpfr_mul_d(term_im[k].get(), w.get(), samples[k].imag(), MPFR_RNDN);
      if (k < n) {
        mpfr_mul_si(w.get(), w.get(), -static_cast<long>(n - k), MPFR_RNDN);
        mpfr_div_ui(w.get(), w.get(), static_cast<unsigned long>(k + 1), MPFR_RNDN);
      }
    }
    // pairwise reduction in place
    for (std::size_t width = 1; width < n + 1; width *= 2) {
      for (std::size_t i = 0; i + width < n + 1; i += 2 * width) {
        mpfr_add(term_re[i].get(), term_re[i].get(), term_re[i + width].get(), MPFR_RNDN);
        mpfr_add(term_im[i].get(), term_im[i].get(), term_im[i + width].get(), MPFR_RNDN);
      }
    }
    out.values[n] = {term_re[0].to_double(), term_im[0].to_double()};
  }
  return out;
}

namespace {

// Shared driver: accumulate c_n * P_n(s) with the policy's stopping rule.
// `coeff(n)` supplies c_n. Terms are collected and pairwise-summed at the end.
SeriesResult<cdouble> newton_series_driver(cdouble s, const TruncationPolicy& policy,
                                           std::size_t max_n,
                                           const std::function<cdouble(std::size_t)>& coeff) {
  policy.validate();
  std::vector<cdouble> terms;
  terms.reserve(std::min<std::size_t>(max_n, 1024));

  cdouble P = 1.0;  // P_0(s)
  int below = 0;
  bool converged = false;
  double tail = 0.0;
  std::size_t n = 0;
  const std::size_t cap = std::min<std::size_t>(max_n, static_cast<std::size_t>(policy.max_terms));
  for (; n < cap; ++n) {
    const cdouble t = coeff(n) * P;
    terms.push_back(t);
    const double mag = std::abs(t);
    if (mag < policy.abs_tol) {
      if (++below >= policy.tail_window) {
        converged = true;
        ++n;
        break;
      }
    } else {
      below = 0;
    }
    if (P == cdouble{0.0, 0.0}) {  // s hit an integer node: sum is exact now
      converged = true;
      ++n;
      break;
    }
    P *= (s - static_cast<double>(n)) * (-1.0) / static_cast<double>(n + 1);
  }
  // tail estimate: largest term magnitude in the final window
  const std::size_t w = std::min<std::size_t>(terms.size(),
                                              static_cast<std::size_t>(policy.tail_window));
  for (std::size_t i = terms.size() - w; i < terms.size(); ++i)
    tail = std::max(tail, std::abs(terms[i]));
  if (n >= max_n) converged = true;  // ran out of coefficients: finite sum

  SeriesResult<cdouble> res;
  res.value = pairwise_sum(terms);
  res.diag = {converged, static_cast<int>(terms.size()), tail};
  return res;
}

}  // namespace

SeriesResult<cdouble> newton_eval(const NewtonCoefficients& coeffs, cdouble s,
                                  const TruncationPolicy& policy) {
  return newton_series_driver(s, policy, coeffs.values.size(),
                              [&](std::size_t n) { return coeffs.values[n]; });
}

SeriesResult<cdouble> newton_eval_power(cdouble x, cdouble alpha,
                                        const TruncationPolicy& policy) {
  const bool integer_order = is_nonnegative_integer(alpha);
  if (!integer_order && std::abs(x - 1.0) >= 1.0)
    throw domain_error("newton_eval_power: |x-1| >= 1 and alpha not a nonnegative integer");

  // forward differences of k -> x^k are exactly (1-x)^n
  const cdouble base = 1.0 - x;
  cdouble c = 1.0;
  std::size_t produced = 0;
  auto coeff = [&](std::size_t n) {
    while (produced < n) {
      c *= base;
      ++produced;
    }
    return c;
  };
  const std::size_t max_n =
      integer_order ? static_cast<std::size_t>(alpha.real()) + 1
                    : static_cast<std::size_t>(policy.max_terms);
  return newton_series_driver(alpha, policy, max_n, coeff);
}

double sinc(double x) {
  if (x == std::nearbyint(x)) return x == 0.0 ? 1.0 : 0.0;
  if (std::abs(x) < 1e-4) {
    const double z = kPi * x;
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return sin_pi(x) / (kPi * x);
}

SeriesResult<cdouble> shannon_eval_power(double theta, double alpha,
                                         const TruncationPolicy& policy) {
  policy.validate();
  theta = std::remainder(theta, 2.0 * kPi);

  std::vector<cdouble> terms;
  terms.reserve(std::min(policy.max_terms + 1, 4096));
  terms.push_back(sinc(alpha));

  const cdouble step = std::polar(1.0, theta);
  cdouble zp = 1.0, zm = 1.0;
  int below = 0;
  bool converged = false;
  for (int n = 1; n <= policy.max_terms; ++n) {
    zp *= step;
    zm *= std::conj(step);
    const cdouble pair = sinc(alpha - n) * zp + sinc(alpha + n) * zm;
    terms.push_back(pair);
    if (std::abs(pair) < policy.abs_tol) {
      if (++below >= policy.tail_window) {
        converged = true;
        break;
      }
    } else {
      below = 0;
    }
  }
  double tail = 0.0;
  const std::size_t w = std::min<std::size_t>(terms.size(),
                                              static_cast<std::size_t>(policy.tail_window));
  for (std::size_t i = terms.size() - w; i < terms.size(); ++i)
    tail = std::max(tail, std::abs(terms[i]));

  SeriesResult<cdouble> res;
  res.value = pairwise_sum(terms);
  res.diag = {converged, static_cast<int>(terms.size()), tail};
  return res;
}

double periodic_kernel(int period, double x) {
  if (period < 1) throw std::invalid_argument("periodic_kernel: period must be >= 1");
  if (x == std::nearbyint(x) && std::abs(x) < 1e15) {
    // exact at the integers: 1 on multiples of the period, 0 elsewhere
    const long xi = std::lround(x);
    return (xi % period + period) % period == 0 ? 1.0 : 0.0;
  }
  const double N = static_cast<double>(period);
  const double k = std::nearbyint(x / N);
  const double d = x - k * N;
  if (std::abs(d) < 1e-4) {
    // f(kN + d) = sinc(d) * g(pi d / N), g = z cot z (even) or z csc z (odd)
    const double z = kPi * d / N;
    const double z2 = z * z;
    const double g = (period % 2 == 0) ? 1.0 - z2 / 3.0 - z2 * z2 / 45.0
                                       : 1.0 + z2 / 6.0 + 7.0 * z2 * z2 / 360.0;
    return sinc(d) * g;
  }
  const double num = sin_pi(x);
  const double r = std::remainder(x, 2.0 * N);  // sin/cos(pi x / N) period 2N
  const double den = std::sin(kPi * r / N);
  if (period % 2 == 0) return num * (std::cos(kPi * r / N) / den) / N;
  return num / den / N;
}

PeriodicWeights periodic_power_weights(int period, double alpha) {
  if (period < 1) throw std::invalid_argument("periodic_power_weights: period must be >= 1");
  PeriodicWeights w;
  w.period = period;
  w.order = alpha;
  w.weights.resize(period);
  for (int n = 0; n < period; ++n)
    w.weights[n] = periodic_kernel(period, alpha - static_cast<double>(n));
  return w;
}

}  // namespace fracterp

#include "fracterp/frft.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"
#include "fracterp/errors.hpp"
#include "fracterp/interp.hpp"

namespace fracterp {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<cdouble> ifftshift(const std::vector<cdouble>& f, int c) {
  const int m = static_cast<int>(f.size());
  std::vector<cdouble> g(m);
  for (int i = 0; i < m; ++i) g[i] = f[(i + c) % m];
  return g;
}

std::vector<cdouble> fftshift(const std::vector<cdouble>& g, int c) {
  const int m = static_cast<int>(g.size());
  std::vector<cdouble> f(m);
  for (int k = 0; k < m; ++k) f[k] = g[(k - c + m) % m];
  return f;
}

}  // namespace

void Signal::validate() const {
  if (samples.size() < 4) throw std::invalid_argument("Signal: need at least 4 samples");
  if (!(sample_rate > 0.0)) throw std::invalid_argument("Signal: sample_rate must be > 0");
  for (const cdouble& v : samples)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("Signal: non-finite sample");
}

Signal unitary_dft(const Signal& f) {
  f.validate();
  const int m = f.size();
  std::vector<cdouble> g = ifftshift(f.samples, f.center());
  detail::fft(g, /*inverse=*/false);
  const double s = 1.0 / std::sqrt(static_cast<double>(m));
  for (cdouble& v : g) v *= s;
  Signal out = f;
  out.samples = fftshift(g, f.center());
  return out;
}

Signal parity(const Signal& f) {
  f.validate();
  const int m = f.size();
  const int c2 = 2 * f.center();
  Signal out = f;
  for (int k = 0; k < m; ++k) out.samples[k] = f.samples[((c2 - k) % m + m) % m];
  return out;
}

double minus_one_component_fraction(const Signal& f) {
  const Signal F1 = unitary_dft(f);
  const Signal F2 = parity(f);
  const Signal F3 = parity(F1);
  double num = 0.0, den = 0.0;
  for (int j = 0; j < f.size(); ++j) {
    const cdouble p =
        0.25 * (f.samples[j] - F1.samples[j] + F2.samples[j] - F3.samples[j]);
    num += std::norm(p);
    den += std::norm(f.samples[j]);
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

FrftWeights alt_frft_weights(double alpha) {
  const PeriodicWeights pw = periodic_power_weights(4, alpha);
  FrftWeights w;
  w.alpha = alpha;
  for (int n = 0; n < 4; ++n) w.w[n] = pw.weights[n];
  return w;
}

FrftResult alt_frft(const Signal& f, double alpha) {
  f.validate();
  const FrftWeights w = alt_frft_weights(alpha);

  const Signal F1 = unitary_dft(f);
  const Signal F2 = parity(f);
  const Signal F3 = parity(F1);

  FrftResult res;
  res.value = f;
  const int m = f.size();
  {
    double num = 0.0, den = 0.0;
    for (int j = 0; j < m; ++j) {
      const cdouble p =
          0.25 * (f.samples[j] - F1.samples[j] + F2.samples[j] - F3.samples[j]);
      num += std::norm(p);
      den += std::norm(f.samples[j]);
    }
    res.minus_one_fraction = den > 0.0 ? std::sqrt(num / den) : 0.0;
  }

  // skip exactly-zero weights so integer orders reproduce their map verbatim
  const std::array<const std::vector<cdouble>*, 4> powers = {&f.samples, &F1.samples,
                                                             &F2.samples, &F3.samples};
  std::vector<cdouble> acc(m, cdouble{0.0, 0.0});
  bool first = true;
  for (int n = 0; n < 4; ++n) {
    if (w.w[n] == cdouble{0.0, 0.0}) continue;
    if (first && w.w[n] == cdouble{1.0, 0.0}) {
      acc = *powers[n];
      first = false;
      continue;
    }
    for (int j = 0; j < m; ++j) acc[j] += w.w[n] * (*powers[n])[j];
    first = false;
  }
  res.value.samples = std::move(acc);
  return res;
}

Signal literature_frft(const Signal& f, double phi) {
  f.validate();
  const double r = phi - 2.0 * kPi * std::floor(phi / (2.0 * kPi));
  // exact maps at the degenerate angles
  if (r < 1e-9 || 2.0 * kPi - r < 1e-9) return f;
  if (std::abs(r - kPi) < 1e-9) return parity(f);
  if (std::abs(std::sin(r)) < 1e-6)
    throw domain_error(
        "literature_frft: DegenerateAngle, |sin phi| < 1e-6; use the exact identity/parity map "
        "(or alt_frft at an integer order)");

  const int m = f.size();
  const int c = f.center();
  const double dx = f.sample_rate;
  const double cot = std::cos(r) / std::sin(r);
  const double csc = 1.0 / std::sin(r);
  const double beta = csc * dx * dx;
  const cdouble A = std::sqrt(cdouble(1.0, -cot));

  // Bluestein: e^{-2 pi i beta m'n'} = e^{-i pi beta m'^2} e^{-i pi beta n'^2}
  //            e^{+i pi beta (m'-n')^2}
  std::size_t L = 1;
  while (L < static_cast<std::size_t>(2 * m)) L <<= 1;

  std::vector<cdouble> a(L, cdouble{0.0, 0.0});
  for (int n = 0; n < m; ++n) {
    const double np = static_cast<double>(n - c);
    const double inner = kPi * (cot * dx * dx - beta) * np * np;
    a[n] = f.samples[n] * std::polar(1.0, inner);
  }
  std::vector<cdouble> h(L, cdouble{0.0, 0.0});
  for (int j = 0; j < m; ++j) {
    const cdouble v = std::polar(1.0, kPi * beta * static_cast<double>(j) * static_cast<double>(j));
    h[j] = v;
    if (j > 0) h[L - j] = v;
  }
  detail::fft(a, false);
  detail::fft(h, false);
  for (std::size_t i = 0; i < L; ++i) a[i] *= h[i];
  detail::fft(a, true);
  const double invL = 1.0 / static_cast<double>(L);

  Signal out = f;
  for (int k = 0; k < m; ++k) {
    const double mp = static_cast<double>(k - c);
    const cdouble outer =
        std::polar(1.0, kPi * (cot * dx * dx - beta) * mp * mp);
    out.samples[k] = A * dx * outer * a[k] * invL;
  }
  return out;
}

TranslationReport translation_counterexample(double t, int grid) {
  if (grid < 2) throw std::invalid_argument("translation_counterexample: grid must be >= 2");
  TranslationReport rep;
  rep.t = t;
  rep.grid = grid;
  rep.xs.resize(grid);
  rep.series_value.resize(grid);
  const double h = 16.0 / static_cast<double>(grid - 1);
  for (int i = 0; i < grid; ++i) {
    const double x = -8.0 + i * h;
    double v = 0.0;
    for (int n = -64; n <= 64; ++n) {
      if (x >= n && x <= n + 0.5) v += sinc(t - n);  // chi_[n, n+1/2]
    }
    rep.xs[i] = x;
    rep.series_value[i] = v;
    if (x > 0.5 && x < 1.0) {
      rep.max_on_interval = std::max(rep.max_on_interval, std::abs(v));
      const double truth = (x >= t && x <= t + 0.5) ? 1.0 : 0.0;
      rep.true_shift_max = std::max(rep.true_shift_max, truth);
    }
  }
  return rep;
}

Signal refined_translation_power(const Signal& f, double t, int k) {
  f.validate();
  if (k < 1) throw std::invalid_argument("refined_translation_power: k must be >= 1");
  const double h = f.sample_rate;
  const double steps = 1.0 / (static_cast<double>(k) * h);
  const long step = std::lround(steps);
  if (step < 1 || std::abs(steps - static_cast<double>(step)) > 1e-9 * steps)
    throw domain_error("refined_translation_power: GridMismatch, 1/k is not a whole number of grid steps");

  const int m = f.size();
  const int nmax = static_cast<int>(std::ceil(static_cast<double>(k) * m * h));
  Signal out = f;
  std::vector<cdouble> acc(m, cdouble{0.0, 0.0});
  for (int n = -nmax; n <= nmax; ++n) {
    const double w = sinc(static_cast<double>(k) * t - n);
    if (w == 0.0) continue;
    const long sh = static_cast<long>(n) * step;
    const long lo = std::max<long>(0, sh);
    const long hi = std::min<long>(m, m + sh);
    for (long j = lo; j < hi; ++j) acc[j] += w * f.samples[j - sh];
  }
  out.samples = std::move(acc);
  return out;
}

}  // namespace fracterp

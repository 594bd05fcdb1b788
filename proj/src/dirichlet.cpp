#include "fracterp/dirichlet.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "bigfloat.hpp"
#include "fracterp/errors.hpp"
#include "fracterp/interp.hpp"
#include "fracterp/special.hpp"

namespace fracterp {

using detail::BigFloat;

std::string to_string(SampleProvenance p) {
  switch (p) {
    case SampleProvenance::direct_series: return "direct series";
    case SampleProvenance::accelerated_alternating: return "accelerated alternating series";
    case SampleProvenance::closed_form: return "closed form";
    case SampleProvenance::user_supplied: return "user-supplied";
  }
  return "?";
}

void DirichletSamples::validate() const {
  if (values.size() < 3) throw std::invalid_argument("DirichletSamples: need N >= 2");
  for (const cdouble& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("DirichletSamples: non-finite value");
  if (!provenance.empty() && provenance.size() != values.size())
    throw std::invalid_argument("DirichletSamples: provenance length mismatch");
}

namespace {

constexpr int kMaxTable = 512;

// ---- extended-precision table machinery ------------------------------------
// The Newton transform amplifies sample noise by 2^n; every sample table is
// therefore produced and transformed at a precision that grows with its
// length, and rounded to double only on the way out.

std::vector<double> newton_transform(const std::vector<BigFloat>& f, mpfr_prec_t prec) {
  const std::size_t N1 = f.size();
  std::vector<double> out(N1);
  BigFloat w(prec), acc(prec), t(prec);
  for (std::size_t n = 0; n < N1; ++n) {
    w.set(1.0);  // P_0(n)
    acc.set(0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      mpfr_mul(t.get(), w.get(), f[k].get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
      if (k < n) {
        mpfr_mul_si(w.get(), w.get(), -static_cast<long>(n - k), MPFR_RNDN);
        mpfr_div_ui(w.get(), w.get(), static_cast<unsigned long>(k + 1), MPFR_RNDN);
      }
    }
    out[n] = acc.to_double();
  }
  return out;
}

struct Rational {
  mpq_t v;
  Rational() { mpq_init(v); }
  ~Rational() { mpq_clear(v); }
  Rational(const Rational&) = delete;
  Rational& operator=(const Rational&) = delete;
};

// B_0..B_m as exact rationals (Akiyama-Tanigawa).
std::vector<std::unique_ptr<Rational>> bernoulli(int m) {
  std::vector<std::unique_ptr<Rational>> B;
  std::vector<std::unique_ptr<Rational>> a;
  for (int j = 0; j <= m; ++j) a.emplace_back(std::make_unique<Rational>());
  mpq_t tmp;
  mpq_init(tmp);
  for (int n = 0; n <= m; ++n) {
    mpq_set_ui(a[n]->v, 1, static_cast<unsigned long>(n + 1));
    for (int j = n - 1; j >= 0; --j) {
      mpq_sub(tmp, a[j]->v, a[j + 1]->v);
      mpq_set_si(a[j]->v, j + 1, 1);
      mpq_mul(a[j]->v, a[j]->v, tmp);
    }
    B.emplace_back(std::make_unique<Rational>());
    mpq_set(B.back()->v, a[0]->v);
  }
  mpq_clear(tmp);
  return B;
}

constexpr int kMaxEmJ = 128;

const std::vector<std::unique_ptr<Rational>>& bernoulli_table() {
  static const std::vector<std::unique_ptr<Rational>> tab = bernoulli(2 * kMaxEmJ + 2);
  return tab;
}

// zeta(x) for real x > 1: direct series to K plus Euler-Maclaurin tail,
// K and J scaled with the working precision.
void zeta_em(BigFloat& out, const BigFloat& x, mpfr_prec_t prec) {
  const unsigned long K = std::max<unsigned long>(100, static_cast<unsigned long>(prec));
  const int J = std::min<int>(kMaxEmJ, static_cast<int>(prec) / 6 + 8);
  const auto& Btab = bernoulli_table();

  BigFloat acc(prec), t(prec), u(prec), base(prec);
  for (unsigned long m = 1; m < K; ++m) {
    base.set_ui(m);
    mpfr_pow(t.get(), base.get(), x.get(), MPFR_RNDN);
    mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
  }
  base.set_ui(K);
  BigFloat Kmx(prec);
  mpfr_pow(Kmx.get(), base.get(), x.get(), MPFR_RNDN);
  mpfr_ui_div(Kmx.get(), 1, Kmx.get(), MPFR_RNDN);  // K^-x
  // K^(1-x)/(x-1)
  mpfr_mul_ui(t.get(), Kmx.get(), K, MPFR_RNDN);
  mpfr_sub_ui(u.get(), x.get(), 1, MPFR_RNDN);
  mpfr_div(t.get(), t.get(), u.get(), MPFR_RNDN);
  mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
  // K^-x / 2
  mpfr_div_ui(t.get(), Kmx.get(), 2, MPFR_RNDN);
  mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
  // sum_j B_2j/(2j)! * (x)_{2j-1} * K^(-x-2j+1)
  BigFloat poch(prec), fact(prec), Bv(prec), Kpow(prec);
  mpfr_set(poch.get(), x.get(), MPFR_RNDN);   // (x)_1 = x
  fact.set(2.0);                              // 2!
  mpfr_mul_ui(Kpow.get(), Kmx.get(), K, MPFR_RNDN);
  mpfr_div_ui(Kpow.get(), Kpow.get(), K * K, MPFR_RNDN);  // K^(-x-1)
  for (int j = 1; j <= J; ++j) {
    mpfr_set_q(Bv.get(), Btab[2 * j]->v, MPFR_RNDN);
    mpfr_mul(t.get(), Bv.get(), poch.get(), MPFR_RNDN);
    mpfr_div(t.get(), t.get(), fact.get(), MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), Kpow.get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
    if (j < J) {
      // (x)_{2j+1} = (x)_{2j-1} (x+2j-1)(x+2j); (2j+2)!; K^(-x-2j-1)
      mpfr_add_ui(u.get(), x.get(), static_cast<unsigned long>(2 * j - 1), MPFR_RNDN);
      mpfr_mul(poch.get(), poch.get(), u.get(), MPFR_RNDN);
      mpfr_add_ui(u.get(), x.get(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
      mpfr_mul(poch.get(), poch.get(), u.get(), MPFR_RNDN);
      mpfr_mul_ui(fact.get(), fact.get(), static_cast<unsigned long>(2 * j + 1), MPFR_RNDN);
      mpfr_mul_ui(fact.get(), fact.get(), static_cast<unsigned long>(2 * j + 2), MPFR_RNDN);
      mpfr_div_ui(Kpow.get(), Kpow.get(), K * K, MPFR_RNDN);
    }
  }
  mpfr_set(out.get(), acc.get(), MPFR_RNDN);
}

// eta(k), k >= 2: Euler-transformed alternating series
// sum_{j>=0} (-1)^j (j+1)^-k  ->  sum_n d_n / 2^(n+1), d_n the n-fold
// (a_j - a_{j+1}) difference at 0; terms decay like 2^-n.
void eta_euler(BigFloat& out, int k, mpfr_prec_t prec) {
  const int nmax = static_cast<int>(prec) + 16;
  std::vector<BigFloat> diff;
  diff.reserve(nmax + 1);
  BigFloat t(prec);
  for (int j = 0; j <= nmax; ++j) {
    BigFloat a(prec);
    mpfr_ui_pow_ui(t.get(), static_cast<unsigned long>(j + 1), static_cast<unsigned long>(k),
                   MPFR_RNDN);
    mpfr_ui_div(a.get(), 1, t.get(), MPFR_RNDN);
    diff.push_back(std::move(a));
  }
  BigFloat acc(prec), pow2(prec);
  pow2.set(2.0);
  for (int n = 0; n <= nmax; ++n) {
    mpfr_div(t.get(), diff[0].get(), pow2.get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
    for (int j = 0; j + n + 1 <= nmax; ++j)
      mpfr_sub(diff[j].get(), diff[j].get(), diff[j + 1].get(), MPFR_RNDN);
    mpfr_mul_ui(pow2.get(), pow2.get(), 2, MPFR_RNDN);
  }
  mpfr_set(out.get(), acc.get(), MPFR_RNDN);
}

struct EtaTable {
  std::vector<double> values;
  std::vector<double> coeffs;  // Newton transform of the table
};

std::shared_ptr<const EtaTable> eta_table(int k_max) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const EtaTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k_max);
  if (it != cache.end()) return it->second;

  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(k_max + 192);
  std::vector<BigFloat> tab;
  tab.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    BigFloat v(prec);
    if (k == 0) {
      mpfr_set_d(v.get(), 0.5, MPFR_RNDN);
    } else if (k == 1) {
      mpfr_const_log2(v.get(), MPFR_RNDN);
    } else if (k >= 64) {
      // plain alternating series; terms m^-k collapse within ~2^(prec/k) terms
      BigFloat t(prec), mk(prec);
      for (unsigned long m = 1;; ++m) {
        mpfr_ui_pow_ui(mk.get(), m, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_ui_div(t.get(), 1, mk.get(), MPFR_RNDN);
        if (m % 2 == 1)
          mpfr_add(v.get(), v.get(), t.get(), MPFR_RNDN);
        else
          mpfr_sub(v.get(), v.get(), t.get(), MPFR_RNDN);
        if (mpfr_get_exp(t.get()) < -static_cast<long>(prec) - 8) break;
      }
    } else {
      eta_euler(v, k, prec);
    }
    tab.push_back(std::move(v));
  }

  auto out = std::make_shared<EtaTable>();
  out->values.resize(k_max + 1);
  for (int k = 0; k <= k_max; ++k) out->values[k] = tab[k].to_double();
  out->coeffs = newton_transform(tab, prec);
  cache[k_max] = out;
  return out;
}

SeriesResult<cdouble> eval_real_coeffs(const std::vector<double>& c, cdouble s,
                                       const TruncationPolicy& policy) {
  NewtonCoefficients nc;
  nc.values.assign(c.begin(), c.end());
  return newton_eval(nc, s, policy);
}

int table_size(const TruncationPolicy& policy) {
  return std::min(std::max(policy.max_terms, 8), kMaxTable);
}

}  // namespace

DirichletSamples eta_integer_values(int k_max) {
  if (k_max < 0 || k_max > kMaxTable)
    throw std::invalid_argument("eta_integer_values: k_max out of range");
  const auto tab = eta_table(std::max(k_max, 2));
  DirichletSamples s;
  s.values.reserve(k_max + 1);
  s.provenance.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    s.values.emplace_back(tab->values[k], 0.0);
    s.provenance.push_back(k <= 1 ? SampleProvenance::closed_form
                                  : SampleProvenance::accelerated_alternating);
  }
  return s;
}

SeriesResult<cdouble> dirichlet_newton_interpolate(const DirichletSamples& samples, cdouble s,
                                                   const TruncationPolicy& policy) {
  samples.validate();
  const NewtonCoefficients c = newton_coefficients(samples.values);
  return newton_eval(c, s, policy);
}

SeriesResult<cdouble> zeta_via_eta(cdouble s, const TruncationPolicy& policy) {
  policy.validate();
  if (std::abs(s - cdouble{1.0, 0.0}) < 1e-12)
    throw domain_error("zeta_via_eta: pole at s = 1");
  const cdouble factor = 1.0 - std::pow(2.0, 1.0 - s);
  if (std::abs(factor) < 1e-12)
    throw domain_error("zeta_via_eta: 1 - 2^(1-s) vanishes at this s");

  const auto tab = eta_table(table_size(policy));
  SeriesResult<cdouble> r = eval_real_coeffs(tab->coeffs, s, policy);
  r.value /= factor;
  return r;
}

SeriesResult<cdouble> reciprocal_zeta(cdouble s, const TruncationPolicy& policy) {
  policy.validate();
  const int N = table_size(policy);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(N + 192);
  std::vector<BigFloat> tab;
  tab.reserve(N + 1);
  BigFloat x(prec), z(prec);
  for (int k = 0; k <= N; ++k) {
    BigFloat v(prec);
    if (k == 0) {
      mpfr_set_si(v.get(), -2, MPFR_RNDN);  // zeta(0) = -1/2
    } else if (k == 1) {
      mpfr_set_zero(v.get(), 1);  // reciprocal of the pole
    } else {
      x.set_ui(static_cast<unsigned long>(k));
      zeta_em(z, x, prec);
      mpfr_ui_div(v.get(), 1, z.get(), MPFR_RNDN);
    }
    tab.push_back(std::move(v));
  }
  const std::vector<double> c = newton_transform(tab, prec);
  return eval_real_coeffs(c, s, policy);
}

SeriesResult<cdouble> zeta_shifted(cdouble s, double eps, const TruncationPolicy& policy) {
  policy.validate();
  if (!(eps > 0.0)) throw domain_error("zeta_shifted: eps must be > 0");
  const int N = table_size(policy);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(N + 192);
  std::vector<BigFloat> tab;
  tab.reserve(N + 1);
  BigFloat x(prec);
  for (int k = 0; k <= N; ++k) {
    BigFloat v(prec);
    mpfr_set_d(x.get(), eps, MPFR_RNDN);
    mpfr_add_ui(x.get(), x.get(), static_cast<unsigned long>(k + 1), MPFR_RNDN);
    zeta_em(v, x, prec);
    tab.push_back(std::move(v));
  }
  const std::vector<double> c = newton_transform(tab, prec);
  return eval_real_coeffs(c, s, policy);
}

SeriesResult<cdouble> mellin_interpolate(const DirichletSamples& mellin_samples, cdouble s,
                                         const TruncationPolicy& policy) {
  mellin_samples.validate();
  policy.validate();
  if (std::abs(s.imag()) < 1e-12 && s.real() <= 1e-12 &&
      std::abs(s.real() - std::round(s.real())) < 1e-12)
    throw domain_error("mellin_interpolate: Gamma pole at nonpositive integer s");
  if (mellin_samples.values.size() > 171)
    throw std::invalid_argument("mellin_interpolate: table longer than Gamma range");

  // slot 0 carries f(0) = lim_{s->0} M[f](s)/Gamma(s); g(k) = M[f](k)/Gamma(k) after
  std::vector<cdouble> g(mellin_samples.values.size());
  g[0] = mellin_samples.values[0];
  for (std::size_t k = 1; k < g.size(); ++k)
    g[k] = mellin_samples.values[k] / gamma_complex(cdouble(static_cast<double>(k), 0.0));

  const NewtonCoefficients c = newton_coefficients(g);
  SeriesResult<cdouble> r = newton_eval(c, s, policy);
  r.value *= gamma_complex(s);
  return r;
}

}  // namespace fracterp

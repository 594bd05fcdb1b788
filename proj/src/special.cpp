#include "fracterp/special.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace fracterp {

namespace {

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
    771.32342877765313,   -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = 3.14159265358979323846;

bool is_small_positive_integer(cdouble z, long& out) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  if (r < 1.0 || r > 170.0 || r != std::floor(r)) return false;
  out = static_cast<long>(r);
  return true;
}

cdouble lanczos_core(cdouble z) {
  // valid for Re(z) >= 0.5; z here is the mathematical argument
  cdouble x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    x += kLanczos[i] / (z + static_cast<double>(i - 1));
  cdouble t = z + kLanczosG - 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * x;
}

}  // namespace

cdouble gamma_complex(cdouble z) {
  long n = 0;
  if (is_small_positive_integer(z, n)) {
    double f = 1.0;
    for (long k = 2; k < n; ++k) f *= static_cast<double>(k);
    return {f, 0.0};
  }
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
  }
  return lanczos_core(z);
}

cdouble log_gamma_complex(cdouble z) {
  if (z.real() < 0.5)
    return std::log(kPi / std::sin(kPi * z)) - log_gamma_complex(1.0 - z);
  cdouble x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    x += kLanczos[i] / (z + static_cast<double>(i - 1));
  cdouble t = z + kLanczosG - 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

cdouble principal_pow(cdouble z, cdouble a) {
  if (z == cdouble{0.0, 0.0}) {
    if (a == cdouble{0.0, 0.0}) return {1.0, 0.0};
    if (a.real() > 0.0) return {0.0, 0.0};
    return {std::numeric_limits<double>::quiet_NaN(),
            std::numeric_limits<double>::quiet_NaN()};
  }
  return std::pow(z, a);
}

}  // namespace fracterp

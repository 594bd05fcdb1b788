#pragma once

#include <complex>

namespace fracterp {

using cdouble = std::complex<double>;

/// Gamma function for complex argument (Lanczos approximation, reflection for
/// Re z < 0.5; exact factorial values at small positive integers).
cdouble gamma_complex(cdouble z);

/// log Gamma, principal strip; used where Gamma itself would overflow.
cdouble log_gamma_complex(cdouble z);

/// Principal-branch power z^a with the 0^a conventions used throughout:
/// 0^0 = 1, 0^a = 0 for Re(a) > 0.
cdouble principal_pow(cdouble z, cdouble a);

}  // namespace fracterp

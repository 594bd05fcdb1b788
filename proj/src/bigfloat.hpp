#pragma once

// Minimal RAII wrapper over MPFR, internal to the library. The Newton
// (binomial) transform multiplies samples by weights as large as 2^N before
// near-total cancellation, so it must run at a precision that scales with the
// table length; doubles are unusable past n ~ 40.

#include <mpfr.h>

#include <utility>

namespace fracterp::detail {

class BigFloat {
public:
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  void set(double x) { mpfr_set_d(v_, x, MPFR_RNDN); }
  void set_ui(unsigned long x) { mpfr_set_ui(v_, x, MPFR_RNDN); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
  mpfr_t v_;
};

}  // namespace fracterp::detail

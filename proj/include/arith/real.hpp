#pragma once

#include <mpfr.h>

#include <string>

#include "arith/bigint.hpp"

namespace arith {

/// Owning wrapper around an mpfr_t. Every arithmetic call site passes its
/// rounding direction explicitly; there are no operator overloads on purpose
/// since interval endpoints need RNDD / RNDU respectively.
class Real {
 public:
  explicit Real(mpfr_prec_t precision) { mpfr_init2(value_, precision); mpfr_set_zero(value_, 1); }
  Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~Real() { mpfr_clear(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits = 40) const;
  BigInt floor() const;

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with lo rounded down and hi rounded up.
struct Interval {
  Real lo;
  Real hi;
};

}  // namespace arith

#pragma once

#include "mfs/exact.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace mfs {

/// Working precision of every floating-point path, in decimal digits.
inline constexpr int kWorkingDigits = 100;
/// Guard digits reserved between working precision and any requested output.
inline constexpr int kGuardDigits = 20;
inline constexpr int kMaxOutputDigits = kWorkingDigits - kGuardDigits;

using Real = mp::number<mp::mpfr_float_backend<kWorkingDigits>, mp::et_off>;

inline Real to_real(const Rational& r) { return Real(r); }

/// Numeric value of a + sum b_i e^{x_i} at working precision.
inline Real to_real(const ExpLinear& v) {
    Real out = to_real(v.constant_part());
    for (const auto& t : v.terms()) {
        out += to_real(t.coeff) * exp(to_real(t.exponent));
    }
    return out;
}

}  // namespace mfs

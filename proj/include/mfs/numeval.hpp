#pragma once

#include "mfs/exact.hpp"
#include "mfs/real.hpp"

#include <string>

namespace mfs {

/// sign * d.ddd... * 10^exponent with a nonzero leading digit; the value
/// zero has digits "0" and exponent 0.
struct DecimalValue {
    bool negative = false;
    std::string digits = "0";
    long exponent = 0;

    bool is_zero() const { return digits == "0"; }
    friend bool operator==(const DecimalValue&, const DecimalValue&) = default;
};

/// Plain notation when |exponent| < 6 ("0.09390606", "1.0000"), otherwise
/// "d.ddde-7" / "d.ddde+7".
std::string to_string(const DecimalValue& v);

/// Exact value of the decimal string.
Rational to_rational(const DecimalValue& v);

/// Correctly rounded (half away from zero) d significant digits of v.
DecimalValue round_to_digits(const Rational& v, unsigned d);

/// d significant digits of a working-precision value, rounded by MPFR.
DecimalValue decimal_from_real(const Real& v, unsigned d);

/// Approximation of e^x with a relative error bound.
struct ExpApprox {
    Rational value;
    Rational rel_error;
};

/// e^x from a scaled-integer Taylor series carrying `precision` decimal
/// digits after the point. Requires |x| <= 100.
ExpApprox exp_scaled(const Rational& x, unsigned precision);

/// e^x to d significant digits, within 1 ulp. Throws std::domain_error for
/// d == 0 or |x| > 100.
DecimalValue exp_digits(const Rational& x, unsigned d);

/// a + sum b_i e^{x_i} to d significant digits. Working precision starts at
/// d + 15 digits and is raised by the observed cancellation until the
/// error bound is below 1% of an ulp of the result.
DecimalValue render(const ExpLinear& v, unsigned d);

}  // namespace mfs

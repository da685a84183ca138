#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace mfs {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;

/// Exact fraction. GMP keeps every value canonical: gcd(num, den) = 1,
/// den > 0, and zero is 0/1, so operator== is semantic equality.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

/// p/q in lowest terms. Throws std::domain_error when q == 0.
Rational make_rational(const BigInt& p, const BigInt& q);

/// n! exactly. Results are memoized; the cache is safe for concurrent use.
/// Throws std::domain_error for n < 0.
BigInt factorial(long n);

/// Binomial coefficient, zero when k > n. Throws std::domain_error for
/// negative arguments.
BigInt binomial(long n, long k);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Exact value a + sum_i b_i * e^{x_i} over rationals.
///
/// Canonical form: exponents strictly increasing, every stored coefficient
/// nonzero, and no term with exponent 0 (e^0 is folded into the constant).
/// Two values are equal iff their representations are identical.
class ExpLinear {
public:
    struct Term {
        Rational exponent;
        Rational coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    ExpLinear() = default;

    static ExpLinear constant(const Rational& c);
    /// coeff * e^{exponent}
    static ExpLinear exp_term(const Rational& coeff, const Rational& exponent);

    const Rational& constant_part() const { return constant_; }
    const std::vector<Term>& terms() const { return terms_; }

    /// Coefficient of e^{exponent}; the constant part when exponent == 0.
    Rational coefficient_of(const Rational& exponent) const;

    bool is_zero() const { return constant_ == 0 && terms_.empty(); }

    ExpLinear& operator+=(const ExpLinear& rhs);
    ExpLinear& operator-=(const ExpLinear& rhs);
    ExpLinear& operator*=(const Rational& s);
    ExpLinear& operator/=(const Rational& s);

    friend bool operator==(const ExpLinear&, const ExpLinear&) = default;

    friend ExpLinear explin_axpy(const Rational& alpha, const ExpLinear& v, const ExpLinear& w);

private:
    Rational constant_;
    std::vector<Term> terms_;
};

/// alpha * v + w in canonical form.
ExpLinear explin_axpy(const Rational& alpha, const ExpLinear& v, const ExpLinear& w);

ExpLinear operator+(ExpLinear lhs, const ExpLinear& rhs);
ExpLinear operator-(ExpLinear lhs, const ExpLinear& rhs);
ExpLinear operator-(const ExpLinear& v);
ExpLinear operator*(const Rational& s, ExpLinear v);
ExpLinear operator*(ExpLinear v, const Rational& s);
ExpLinear operator/(ExpLinear v, const Rational& s);

/// "a + (b1/c1)*e^(x1) + ..." with e^(1) written as "e" and unit
/// coefficients omitted; the zero value renders as "0".
std::string to_string(const ExpLinear& v);

}  // namespace mfs

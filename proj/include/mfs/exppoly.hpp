#pragma once

#include "mfs/exact.hpp"
#include "mfs/real.hpp"

#include <string>
#include <vector>

namespace mfs {

/// Dense polynomial over the rationals; coeffs()[i] multiplies z^i.
/// The zero polynomial has no coefficients, otherwise the leading one is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational& c, unsigned degree);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& z) const;
    Real operator()(const Real& z) const;

    Poly derivative() const;
    /// z^n * this
    Poly shifted_up(unsigned n) const;
    /// this / z, requires a zero constant term.
    Poly shifted_down() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Poly operator+(Poly lhs, const Poly& rhs);
Poly operator-(Poly lhs, const Poly& rhs);
Poly operator*(const Rational& s, Poly p);

/// Ascending sparse form, e.g. "1 + -1/2*z^2"; "0" for the zero polynomial.
std::string to_string(const Poly& p);

/// (P(z) e^z + Q(z)) / z^m
///
/// Canonical: while m > 0 and both P and Q vanish at 0, one factor of z is
/// cancelled. The zero expression has m = 0.
class ExpPoly {
public:
    ExpPoly() = default;
    ExpPoly(Poly p, Poly q, unsigned m = 0);

    static ExpPoly exp();
    static ExpPoly polynomial(Poly q);

    const Poly& p() const { return p_; }
    const Poly& q() const { return q_; }
    unsigned m() const { return m_; }

    ExpPoly& operator+=(const ExpPoly& rhs);
    ExpPoly& operator*=(const Rational& s);

    friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

private:
    void canonicalize();

    Poly p_;
    Poly q_;
    unsigned m_ = 0;
};

ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs);
ExpPoly operator*(const Rational& s, ExpPoly f);

/// z^power * exp_ell(z) where exp_ell(z) = sum_{n>=0} z^n / (n + ell)!.
/// power may be negative (down to -1 is all that is ever needed); it then
/// raises the denominator power.
ExpPoly build_zpow_expell(long power, unsigned ell);

/// z^{k-1} * exp_ell(z). Throws std::invalid_argument for k < 1.
ExpPoly build_zk_expell(long k, unsigned ell);

ExpPoly differentiate(const ExpPoly& f);
ExpPoly nth_derivative(ExpPoly f, unsigned n);

/// Exact value of f at x with at most one exponential term (exponent x).
/// Throws std::domain_error when x == 0 and the canonical m is positive.
ExpLinear eval_at(const ExpPoly& f, const Rational& x);

/// Floating-point value of f at x; same domain rule as eval_at.
Real eval_numeric(const ExpPoly& f, const Real& x);

/// "( P(z)*exp(z) + Q(z) ) / z^m"
std::string to_string(const ExpPoly& f);

}  // namespace mfs

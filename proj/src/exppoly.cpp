#include "mfs/exppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfs {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational Poly::operator()(const Rational& z) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Real Poly::operator()(const Real& z) const {
    Real acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + to_real(*it);
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return Poly(std::move(d));
}

Poly Poly::shifted_up(unsigned n) const {
    if (is_zero() || n == 0) {
        return *this;
    }
    std::vector<Rational> c(n);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(c));
}

Poly Poly::shifted_down() const {
    if (is_zero()) {
        return {};
    }
    if (coeffs_.front() != 0) {
        throw std::logic_error("Poly::shifted_down: nonzero constant term");
    }
    return Poly(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    trim();
    return *this;
}

Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
Poly operator-(Poly lhs, const Poly& rhs) { return lhs += Rational(-1) * rhs; }
Poly operator*(const Rational& s, Poly p) { return p *= s; }

std::string to_string(const Poly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += to_string(c);
        if (i == 1) {
            out += "*z";
        } else if (i > 1) {
            out += "*z^" + std::to_string(i);
        }
    }
    return out;
}

ExpPoly::ExpPoly(Poly p, Poly q, unsigned m) : p_(std::move(p)), q_(std::move(q)), m_(m) {
    canonicalize();
}

ExpPoly ExpPoly::exp() { return ExpPoly(Poly({Rational(1)}), Poly()); }

ExpPoly ExpPoly::polynomial(Poly q) { return ExpPoly(Poly(), std::move(q)); }

void ExpPoly::canonicalize() {
    if (p_.is_zero() && q_.is_zero()) {
        m_ = 0;
        return;
    }
    while (m_ > 0 && p_.coeff(0) == 0 && q_.coeff(0) == 0) {
        p_ = p_.shifted_down();
        q_ = q_.shifted_down();
        --m_;
    }
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
    const unsigned m = std::max(m_, rhs.m_);
    p_ = p_.shifted_up(m - m_) + rhs.p_.shifted_up(m - rhs.m_);
    q_ = q_.shifted_up(m - m_) + rhs.q_.shifted_up(m - rhs.m_);
    m_ = m;
    canonicalize();
    return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& s) {
    p_ *= s;
    q_ *= s;
    canonicalize();
    return *this;
}

ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
ExpPoly operator*(const Rational& s, ExpPoly f) { return f *= s; }

ExpPoly build_zpow_expell(long power, unsigned ell) {
    // z^power * (e^z - sum_{n<ell} z^n/n!) / z^ell, with negative powers
    // moved into the denominator.
    const unsigned up = power > 0 ? static_cast<unsigned>(power) : 0;
    const unsigned down = power < 0 ? static_cast<unsigned>(-power) : 0;
    std::vector<Rational> partial(ell);
    for (unsigned n = 0; n < ell; ++n) {
        partial[n] = make_rational(-1, factorial(n));
    }
    return ExpPoly(Poly::monomial(1, up), Poly(std::move(partial)).shifted_up(up), ell + down);
}

ExpPoly build_zk_expell(long k, unsigned ell) {
    if (k < 1) {
        throw std::invalid_argument("build_zk_expell: k must be >= 1, got " + std::to_string(k));
    }
    return build_zpow_expell(k - 1, ell);
}

ExpPoly differentiate(const ExpPoly& f) {
    // d/dz (P e^z + Q)/z^m = ((zP' + zP - mP) e^z + (zQ' - mQ)) / z^{m+1}
    const Rational m = f.m();
    const Poly& p = f.p();
    const Poly& q = f.q();
    Poly dp = p.derivative().shifted_up(1) + p.shifted_up(1) - m * p;
    Poly dq = q.derivative().shifted_up(1) - m * q;
    return ExpPoly(std::move(dp), std::move(dq), f.m() + 1);
}

ExpPoly nth_derivative(ExpPoly f, unsigned n) {
    for (unsigned i = 0; i < n; ++i) {
        f = differentiate(f);
    }
    return f;
}

ExpLinear eval_at(const ExpPoly& f, const Rational& x) {
    if (x == 0 && f.m() > 0) {
        throw std::domain_error(
            "eval_at: evaluate-at-zero unsupported for an expression with a z^" +
            std::to_string(f.m()) + " denominator");
    }
    Rational scale = 1;
    for (unsigned i = 0; i < f.m(); ++i) {
        scale /= x;
    }
    return ExpLinear::exp_term(f.p()(x) * scale, x) + ExpLinear::constant(f.q()(x) * scale);
}

Real eval_numeric(const ExpPoly& f, const Real& x) {
    if (x == 0 && f.m() > 0) {
        throw std::domain_error("eval_numeric: evaluate-at-zero unsupported");
    }
    Real num = f.q()(x);
    if (!f.p().is_zero()) {
        num += f.p()(x) * exp(x);
    }
    return num / pow(x, f.m());
}

std::string to_string(const ExpPoly& f) {
    return "( " + to_string(f.p()) + "*exp(z) + " + to_string(f.q()) + " ) / z^" +
           std::to_string(f.m());
}

}  // namespace mfs

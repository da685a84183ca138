#include "mfs/exact.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace mfs {

Rational make_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    return Rational(p, q);
}

namespace {

// Shared table of n! for n < size(); extended under the write lock.
struct FactorialCache {
    std::shared_mutex mutex;
    std::vector<BigInt> table{BigInt(1)};
};

FactorialCache& factorial_cache() {
    static FactorialCache cache;
    return cache;
}

}  // namespace

BigInt factorial(long n) {
    if (n < 0) {
        throw std::domain_error("factorial: negative argument " + std::to_string(n));
    }
    auto& cache = factorial_cache();
    const auto idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(cache.mutex);
        if (idx < cache.table.size()) {
            return cache.table[idx];
        }
    }
    std::unique_lock lock(cache.mutex);
    auto& table = cache.table;
    table.reserve(idx + 1);
    while (table.size() <= idx) {
        table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    }
    return table[idx];
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0) {
        throw std::domain_error("binomial: negative argument");
    }
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    // After step i, result == C(n - k + i, i), so each division is exact.
    for (long i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        result /= static_cast<unsigned long>(i);
    }
    return result;
}

std::string to_string(const Rational& r) {
    const BigInt den = denominator(r);
    if (den == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + den.str();
}

ExpLinear ExpLinear::constant(const Rational& c) {
    ExpLinear v;
    v.constant_ = c;
    return v;
}

ExpLinear ExpLinear::exp_term(const Rational& coeff, const Rational& exponent) {
    ExpLinear v;
    if (exponent == 0) {
        v.constant_ = coeff;
    } else if (coeff != 0) {
        v.terms_.push_back({exponent, coeff});
    }
    return v;
}

Rational ExpLinear::coefficient_of(const Rational& exponent) const {
    if (exponent == 0) {
        return constant_;
    }
    for (const auto& t : terms_) {
        if (t.exponent == exponent) {
            return t.coeff;
        }
    }
    return 0;
}

ExpLinear explin_axpy(const Rational& alpha, const ExpLinear& v, const ExpLinear& w) {
    ExpLinear out;
    out.constant_ = alpha * v.constant_ + w.constant_;
    if (alpha == 0) {
        out.terms_ = w.terms_;
        return out;
    }

    const auto& a = v.terms_;
    const auto& b = w.terms_;
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
            out.terms_.push_back({a[i].exponent, alpha * a[i].coeff});
            ++i;
        } else if (i == a.size() || b[j].exponent < a[i].exponent) {
            out.terms_.push_back(b[j]);
            ++j;
        } else {
            Rational c = alpha * a[i].coeff + b[j].coeff;
            if (c != 0) {
                out.terms_.push_back({a[i].exponent, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

ExpLinear& ExpLinear::operator+=(const ExpLinear& rhs) {
    *this = explin_axpy(1, rhs, *this);
    return *this;
}

ExpLinear& ExpLinear::operator-=(const ExpLinear& rhs) {
    *this = explin_axpy(-1, rhs, *this);
    return *this;
}

ExpLinear& ExpLinear::operator*=(const Rational& s) {
    if (s == 0) {
        *this = ExpLinear();
        return *this;
    }
    constant_ *= s;
    for (auto& t : terms_) {
        t.coeff *= s;
    }
    return *this;
}

ExpLinear& ExpLinear::operator/=(const Rational& s) {
    if (s == 0) {
        throw std::domain_error("ExpLinear: division by zero");
    }
    return *this *= Rational(1) / s;
}

ExpLinear operator+(ExpLinear lhs, const ExpLinear& rhs) { return lhs += rhs; }
ExpLinear operator-(ExpLinear lhs, const ExpLinear& rhs) { return lhs -= rhs; }
ExpLinear operator-(const ExpLinear& v) { return Rational(-1) * v; }
ExpLinear operator*(const Rational& s, ExpLinear v) { return v *= s; }
ExpLinear operator*(ExpLinear v, const Rational& s) { return v *= s; }
ExpLinear operator/(ExpLinear v, const Rational& s) { return v /= s; }

namespace {

// Unsigned rendering of |coeff| * e^(x); coefficient 1 is omitted.
std::string render_term(const Rational& abs_coeff, const Rational& exponent) {
    std::string base = exponent == 1 ? "e" : "e^(" + to_string(exponent) + ")";
    if (abs_coeff == 1) {
        return base;
    }
    if (denominator(abs_coeff) == 1) {
        return to_string(abs_coeff) + "*" + base;
    }
    return "(" + to_string(abs_coeff) + ")*" + base;
}

}  // namespace

std::string to_string(const ExpLinear& v) {
    if (v.is_zero()) {
        return "0";
    }
    std::string out;
    if (v.constant_part() != 0) {
        out = to_string(v.constant_part());
    }
    for (const auto& t : v.terms()) {
        const bool negative = t.coeff < 0;
        const std::string body = render_term(abs(t.coeff), t.exponent);
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace mfs

#include "mfs/numeval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfs {

namespace {

BigInt pow10_int(unsigned e) { return pow(BigInt(10), e); }

Rational pow10(long e) {
    if (e >= 0) {
        return Rational(pow10_int(static_cast<unsigned>(e)));
    }
    return Rational(BigInt(1), pow10_int(static_cast<unsigned>(-e)));
}

// Rough log10 of a positive rational from bit lengths (off by at most ~1).
double log10_estimate(const Rational& r) {
    const auto num_bits = static_cast<double>(msb(numerator(r)));
    const auto den_bits = static_cast<double>(msb(denominator(r)));
    return (num_bits - den_bits) * std::log10(2.0);
}

}  // namespace

std::string to_string(const DecimalValue& v) {
    if (v.is_zero()) {
        return "0";
    }
    const std::string sign = v.negative ? "-" : "";
    const std::string& d = v.digits;
    const long e = v.exponent;
    if (e <= -6 || e >= 6) {
        std::string out = sign + d.substr(0, 1);
        if (d.size() > 1) {
            out += "." + d.substr(1);
        }
        return out + "e" + (e < 0 ? "-" : "+") + std::to_string(std::labs(e));
    }
    if (e < 0) {
        return sign + "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    }
    const auto int_len = static_cast<std::size_t>(e + 1);
    if (d.size() <= int_len) {
        return sign + d + std::string(int_len - d.size(), '0');
    }
    return sign + d.substr(0, int_len) + "." + d.substr(int_len);
}

Rational to_rational(const DecimalValue& v) {
    if (v.is_zero()) {
        return 0;
    }
    Rational r = Rational(BigInt(v.digits)) * pow10(v.exponent - static_cast<long>(v.digits.size()) + 1);
    return v.negative ? Rational(-r) : r;
}

DecimalValue round_to_digits(const Rational& v, unsigned d) {
    if (d == 0) {
        throw std::domain_error("round_to_digits: need at least one digit");
    }
    if (v == 0) {
        return {};
    }
    const Rational a = abs(v);
    auto e = static_cast<long>(std::floor(log10_estimate(a)));
    while (a >= pow10(e + 1)) {
        ++e;
    }
    while (a < pow10(e)) {
        --e;
    }
    const Rational scaled = a * pow10(static_cast<long>(d) - 1 - e) + Rational(1, 2);
    BigInt q = numerator(scaled) / denominator(scaled);
    if (q == pow10_int(d)) {
        q /= 10;
        ++e;
    }
    return {v < 0, q.str(), e};
}

DecimalValue decimal_from_real(const Real& v, unsigned d) {
    if (d == 0 || d > static_cast<unsigned>(kMaxOutputDigits)) {
        throw std::domain_error("decimal_from_real: digits must be in 1.." +
                                std::to_string(kMaxOutputDigits));
    }
    if (v == 0) {
        return {};
    }
    // "-d.ddd...e-07"
    const std::string s = v.str(static_cast<std::streamsize>(d - 1), std::ios_base::scientific);
    DecimalValue out;
    std::size_t pos = 0;
    if (s[pos] == '-') {
        out.negative = true;
        ++pos;
    }
    const auto epos = s.find('e', pos);
    out.digits.clear();
    for (std::size_t i = pos; i < epos; ++i) {
        if (s[i] != '.') {
            out.digits += s[i];
        }
    }
    out.exponent = std::stol(s.substr(epos + 1));
    return out;
}

ExpApprox exp_scaled(const Rational& x, unsigned precision) {
    const Rational ax = abs(x);
    if (ax > 100) {
        throw std::domain_error("exp_scaled: |x| = " + to_string(ax) + " exceeds 100");
    }
    const BigInt p = numerator(ax);
    const BigInt q = denominator(ax);
    const BigInt scale = pow10_int(precision);
    const double xd = ax.convert_to<double>();
    const double log_budget = precision * std::log(10.0);
    const double log_x = std::log(std::max(1.0, xd));

    // term_n = floor(term_{n-1} * x / n); each step loses < 1 ulp and the
    // propagated error stays below one ulp per term relative to e^|x|.
    BigInt term = scale;
    BigInt sum = scale;
    unsigned long n = 0;
    while (true) {
        ++n;
        term = term * p / (q * n);
        sum += term;
        // Stop once n! > 10^precision * max(1,|x|)^n and terms halve.
        if (n > 2 * xd && std::lgamma(n + 1.0) > log_budget + n * log_x) {
            break;
        }
    }
    ExpApprox out;
    out.rel_error = make_rational(2 * BigInt(n + 3), scale);
    out.value = x < 0 ? make_rational(scale, sum) : make_rational(sum, scale);
    return out;
}

DecimalValue exp_digits(const Rational& x, unsigned d) {
    if (d == 0) {
        throw std::domain_error("exp_digits: need at least one digit");
    }
    if (abs(x) > 100) {
        throw std::domain_error("exp_digits: |x| = " + to_string(abs(x)) + " exceeds 100");
    }
    return round_to_digits(exp_scaled(x, d + 15).value, d);
}

DecimalValue render(const ExpLinear& v, unsigned d) {
    if (d == 0) {
        throw std::domain_error("render: need at least one digit");
    }
    if (v.is_zero()) {
        return {};
    }
    unsigned precision = d + 15;
    for (int pass = 0; pass < 64; ++pass) {
        Rational sum = v.constant_part();
        Rational error = 0;
        Rational largest = abs(sum);
        for (const auto& t : v.terms()) {
            const ExpApprox e = exp_scaled(t.exponent, precision);
            const Rational term = t.coeff * e.value;
            sum += term;
            error += abs(term) * e.rel_error;
            largest = std::max(largest, abs(term));
        }
        if (sum != 0 && error * pow10(d + 2) <= abs(sum)) {
            return round_to_digits(sum, d);
        }
        // Cancellation: raise precision by the digits lost to it.
        const double lost = sum == 0 ? precision : log10_estimate(largest / abs(sum));
        precision += static_cast<unsigned>(std::max(5.0, std::ceil(lost) + 5.0));
    }
    throw std::runtime_error("render: precision escalation did not converge for " + to_string(v));
}

}  // namespace mfs

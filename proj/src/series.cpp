#include "mfs/series.hpp"

#include "mfs/exppoly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mfs {

namespace {

void require_kj(long k, long j, long j_min, const char* who) {
    if (k < 1) {
        throw std::invalid_argument(std::string(who) + ": k must be >= 1, got " + std::to_string(k));
    }
    if (j < j_min || j > k) {
        throw std::invalid_argument(std::string(who) + ": j must satisfy " + std::to_string(j_min) +
                                    " <= j <= k = " + std::to_string(k) + ", got " +
                                    std::to_string(j));
    }
}

ExpPoly kernel(long k, unsigned ell, KernelExponent exponent) {
    if (exponent == KernelExponent::KMinusOne) {
        return build_zk_expell(k, ell);
    }
    return build_zpow_expell(static_cast<long>(ell) - 1, ell);
}

}  // namespace

ExpLinear s_kj_theorem(long k, long j) {
    require_kj(k, j, 0, "s_kj_theorem");
    const auto ell = static_cast<unsigned>(k - j);
    return confluent_divdiff(build_zk_expell(k, ell), static_cast<unsigned>(k),
                             static_cast<unsigned>(j), 1);
}

ExpLinear s_kj_binomial(long k, long j) {
    if (j == 0) {
        throw std::invalid_argument("s_kj_binomial: j = 0 has no binomial form; use s_k0");
    }
    require_kj(k, j, 1, "s_kj_binomial");
    Rational coeff = 0;
    for (long i = 0; i < j; ++i) {
        coeff += make_rational(binomial(j - 1, i), factorial(k + j - i - 1));
    }
    return ExpLinear::exp_term(coeff, 1);
}

ExpLinear s_k0(long k) {
    if (k < 1) {
        throw std::invalid_argument("s_k0: k must be >= 1, got " + std::to_string(k));
    }
    Rational alternating = 0;
    for (long j = 0; j < k; ++j) {
        const Rational term = make_rational(1, factorial(j));
        alternating += (j % 2 == 0) ? term : Rational(-term);
    }
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    return ExpLinear::constant(sign) + ExpLinear::exp_term(-sign * alternating, 1);
}

Rational a_k(long k) {
    if (k < 1) {
        throw std::invalid_argument("a_k: k must be >= 1, got " + std::to_string(k));
    }
    Rational sum = 0;
    for (long i = 0; i < k; ++i) {
        sum += make_rational(binomial(k - 1, i), factorial(2 * k - i - 1));
    }
    return sum;
}

ExpLinear f_kl(long k, unsigned ell, const NodeSet& nodes, KernelExponent exponent) {
    if (k < 1 || nodes.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("f_kl: expected k = " + std::to_string(k) + " nodes, got " +
                                    std::to_string(nodes.size()));
    }
    return divdiff_exact(kernel(k, ell, exponent), nodes);
}

ExpLinear s_k_of_x(long k, const NodeSet& nodes) {
    return nodes.product() * f_kl(k, static_cast<unsigned>(k), nodes);
}

Real g_ell_numeric(const SeriesCoeffs& coeffs, unsigned ell, const Real& z) {
    if (!(abs(z) < Real(coeffs.radius))) {
        throw std::domain_error("node " + z.str(12) + " is not inside the radius of convergence " +
                                std::to_string(coeffs.radius) + " of series '" + coeffs.name + "'");
    }
    // Stop once the current term and the geometric tail estimate from the
    // observed term ratio are both below the working tolerance.
    const Real tol = pow(Real(10), -(kWorkingDigits - 5));
    constexpr std::size_t kMaxTerms = 500000;
    Real sum = 0;
    Real power = 1;
    Real prev = 0;
    for (std::size_t n = 0; n < kMaxTerms; ++n) {
        const Real term = coeffs.coeff(n + ell) * power;
        sum += term;
        const Real mag = abs(term);
        if (n > 0 && prev != 0 && mag != 0) {
            const Real ratio = mag / prev;
            const Real scale = std::max(abs(sum), Real(std::numeric_limits<double>::min()));
            if (ratio < 1 && mag * ratio / (1 - ratio) <= tol * scale && mag <= tol * scale) {
                return sum;
            }
        }
        if (mag != 0) {
            prev = mag;
        }
        power *= z;
        if (power == 0) {
            return sum;
        }
    }
    throw std::runtime_error("g_ell_numeric: series '" + coeffs.name + "' did not converge at z = " +
                             z.str(12));
}

Real g_kl_numeric(const SeriesCoeffs& coeffs, long k, unsigned ell, std::span<const Real> nodes,
                  KernelExponent exponent) {
    if (k < 1 || nodes.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("g_kl_numeric: expected k = " + std::to_string(k) +
                                    " nodes, got " + std::to_string(nodes.size()));
    }
    const long power = exponent == KernelExponent::KMinusOne ? k - 1 : static_cast<long>(ell) - 1;
    std::vector<Real> values;
    values.reserve(nodes.size());
    for (const auto& x : nodes) {
        values.push_back(pow(x, power) * g_ell_numeric(coeffs, ell, x));
    }
    return divdiff_numeric(values, nodes);
}

}  // namespace mfs

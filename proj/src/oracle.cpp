#include "mfs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace mfs {

namespace {

void validate(unsigned k, std::size_t nodes, TruncationSpec trunc, const char* who) {
    if (k < 1) {
        throw std::invalid_argument(std::string(who) + ": k must be >= 1");
    }
    if (nodes != k) {
        throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(k) +
                                    " nodes, got " + std::to_string(nodes));
    }
    if (trunc.depth < 1) {
        throw std::invalid_argument(std::string(who) + ": truncation depth must be >= 1");
    }
}

void guard_loops(unsigned k, unsigned start, TruncationSpec trunc) {
    const double range = trunc.depth >= start ? trunc.depth - start + 1.0 : 0.0;
    const double loops = trunc.mode == TruncationMode::PerIndex
                             ? std::pow(range, static_cast<double>(k))
                             : static_cast<double>(k) * (trunc.depth + 1.0) * (trunc.depth + 1.0);
    if (loops > static_cast<double>(kMaxOracleLoops)) {
        throw ResourceLimitError("oracle: " + std::to_string(k) + " indices at depth " +
                                 std::to_string(trunc.depth) + " need ~" +
                                 std::to_string(static_cast<long double>(loops)) +
                                 " loop iterations, above the limit of " +
                                 std::to_string(kMaxOracleLoops));
    }
}

unsigned first_omitted(unsigned k, unsigned start, TruncationSpec trunc) {
    if (trunc.mode == TruncationMode::TotalDegree) {
        return std::max(trunc.depth + 1, k * start);
    }
    return trunc.depth + 1 + (k - 1) * start;
}

// Literal k nested loops over start <= n_i <= cap, with the products of the
// per-index weights bucketed by total degree.
template <class T, class Weight>
void nested_loops(unsigned index, unsigned k, unsigned start, unsigned cap, unsigned degree,
                  const T& partial, const Weight& weight, std::vector<T>& shells) {
    if (index == k) {
        shells[degree] += partial;
        return;
    }
    for (unsigned n = start; n <= cap; ++n) {
        nested_loops(index + 1, k, start, cap, degree + n, T(partial * weight(index, n)), weight,
                     shells);
    }
}

template <class T, class Weight>
std::vector<T> shells_per_index(unsigned k, unsigned start, unsigned cap, const Weight& weight) {
    std::vector<T> shells(static_cast<std::size_t>(k) * cap + 1, T(0));
    nested_loops(0, k, start, cap, 0, T(1), weight, shells);
    return shells;
}

// Shell sums up to total degree max_degree: one index at a time, the shell
// table is extended by summing over the new index's value.
template <class T, class Weight>
std::vector<T> shells_total_degree(unsigned k, unsigned start, unsigned max_degree,
                                   const Weight& weight) {
    std::vector<T> shells(max_degree + 1, T(0));
    shells[0] = 1;
    for (unsigned i = 0; i < k; ++i) {
        std::vector<T> next(max_degree + 1, T(0));
        for (unsigned s = 0; s <= max_degree; ++s) {
            for (unsigned n = start; n <= s; ++n) {
                if (shells[s - n] != 0) {
                    next[s] += weight(i, n) * shells[s - n];
                }
            }
        }
        shells = std::move(next);
    }
    return shells;
}

template <class T, class Weight>
std::vector<T> shells_for(unsigned k, unsigned start, TruncationSpec trunc, const Weight& weight) {
    if (trunc.mode == TruncationMode::PerIndex) {
        return shells_per_index<T>(k, start, trunc.depth, weight);
    }
    return shells_total_degree<T>(k, start, trunc.depth, weight);
}

// Single shell at one total degree, no per-index cap.
template <class T, class Weight>
T full_shell(unsigned k, unsigned start, unsigned degree, const Weight& weight) {
    return shells_total_degree<T>(k, start, degree, weight)[degree];
}

}  // namespace

double decay_threshold(unsigned k, double max_abs_node) {
    return 2.0 * k * std::max(1.0, max_abs_node) * std::numbers::e;
}

ExactPartialSum oracle_skj(unsigned k, unsigned j, TruncationSpec trunc) {
    validate(k, k, trunc, "oracle_skj");
    if (j > k) {
        throw std::invalid_argument("oracle_skj: j must satisfy 0 <= j <= k");
    }
    guard_loops(k, 1, trunc);
    auto weight = [j](unsigned i, unsigned n) { return i < j ? BigInt(n) : BigInt(1); };
    const auto shells = shells_for<BigInt>(k, 1, trunc, weight);

    ExactPartialSum out;
    out.value = 0;
    for (unsigned s = 0; s < shells.size(); ++s) {
        if (shells[s] != 0) {
            out.value += make_rational(shells[s], factorial(s));
        }
    }
    out.depth = trunc.depth;
    out.mode = trunc.mode;
    out.first_omitted_degree = first_omitted(k, 1, trunc);
    out.tail_estimate = 2 * make_rational(full_shell<BigInt>(k, 1, out.first_omitted_degree, weight),
                                          factorial(out.first_omitted_degree));
    out.tail_credible = out.first_omitted_degree > decay_threshold(k, 1.0);
    return out;
}

ExactPartialSum oracle_sk_of_x(unsigned k, std::span<const Rational> nodes, TruncationSpec trunc) {
    validate(k, nodes.size(), trunc, "oracle_sk_of_x");
    guard_loops(k, 1, trunc);

    // x_i = p_i / q_i. Weights are scaled to integers p_i^n q_i^{N-n};
    // every tuple then shares the denominator prod_i q_i^N.
    const unsigned cap = trunc.depth;
    std::vector<std::vector<BigInt>> scaled(k);
    BigInt common = 1;
    for (unsigned i = 0; i < k; ++i) {
        const BigInt p = numerator(nodes[i]);
        const BigInt q = denominator(nodes[i]);
        std::vector<BigInt> ppow(cap + 1, BigInt(1));
        std::vector<BigInt> qpow(cap + 1, BigInt(1));
        for (unsigned n = 1; n <= cap; ++n) {
            ppow[n] = ppow[n - 1] * p;
            qpow[n] = qpow[n - 1] * q;
        }
        scaled[i].resize(cap + 1);
        for (unsigned n = 0; n <= cap; ++n) {
            scaled[i][n] = ppow[n] * qpow[cap - n];
        }
        common *= qpow[cap];
    }
    auto weight = [&scaled](unsigned i, unsigned n) -> const BigInt& { return scaled[i][n]; };
    const auto shells = shells_for<BigInt>(k, 1, trunc, weight);

    ExactPartialSum out;
    out.value = 0;
    for (unsigned s = 0; s < shells.size(); ++s) {
        if (shells[s] != 0) {
            out.value += make_rational(shells[s], factorial(s) * common);
        }
    }
    out.depth = trunc.depth;
    out.mode = trunc.mode;
    out.first_omitted_degree = first_omitted(k, 1, trunc);

    auto rational_weight = [&nodes](unsigned i, unsigned n) {
        Rational w = 1;
        for (unsigned e = 0; e < n; ++e) {
            w *= nodes[i];
        }
        return w;
    };
    const Rational shell =
        full_shell<Rational>(k, 1, out.first_omitted_degree, rational_weight);
    out.tail_estimate = 2 * abs(shell) / Rational(factorial(out.first_omitted_degree));

    double max_abs = 0;
    for (const auto& x : nodes) {
        max_abs = std::max(max_abs, std::abs(x.convert_to<double>()));
    }
    out.tail_credible = out.first_omitted_degree > decay_threshold(k, max_abs);
    return out;
}

RealPartialSum oracle_gkl(const SeriesCoeffs& coeffs, unsigned k, unsigned ell,
                          std::span<const Real> nodes, TruncationSpec trunc) {
    validate(k, nodes.size(), trunc, "oracle_gkl");
    double max_abs = 0;
    for (const auto& x : nodes) {
        if (!(abs(x) < Real(coeffs.radius))) {
            throw std::domain_error("node " + x.str(12) + " is not inside the radius of convergence " +
                                    std::to_string(coeffs.radius) + " of series '" + coeffs.name +
                                    "'");
        }
        max_abs = std::max(max_abs, std::abs(x.convert_to<double>()));
    }
    guard_loops(k, 0, trunc);

    const unsigned cap = std::max(trunc.depth, first_omitted(k, 0, trunc));
    std::vector<std::vector<Real>> powers(k, std::vector<Real>(cap + 1));
    for (unsigned i = 0; i < k; ++i) {
        powers[i][0] = 1;
        for (unsigned n = 1; n <= cap; ++n) {
            powers[i][n] = powers[i][n - 1] * nodes[i];
        }
    }
    auto weight = [&powers](unsigned i, unsigned n) -> const Real& { return powers[i][n]; };
    const auto shells = shells_for<Real>(k, 0, trunc, weight);

    RealPartialSum out;
    out.value = 0;
    for (unsigned s = 0; s < shells.size(); ++s) {
        out.value += coeffs.coeff(s + ell) * shells[s];
    }
    out.depth = trunc.depth;
    out.mode = trunc.mode;
    out.first_omitted_degree = first_omitted(k, 0, trunc);
    const Real shell = full_shell<Real>(k, 0, out.first_omitted_degree, weight);
    out.tail_estimate = 2 * abs(coeffs.coeff(out.first_omitted_degree + ell) * shell);
    out.tail_credible = out.first_omitted_degree > decay_threshold(k, max_abs);
    return out;
}

}  // namespace mfs

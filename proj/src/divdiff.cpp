#include "mfs/divdiff.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <limits>
#include <stdexcept>

namespace mfs {

NodeSet::NodeSet(std::vector<Rational> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) {
        throw std::invalid_argument("node set must contain at least one node");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i] == 0) {
            throw std::invalid_argument("node " + std::to_string(i + 1) +
                                        " is zero; nodes must be nonzero");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (nodes_[i] == nodes_[j]) {
                throw std::invalid_argument(
                    "duplicate node " + to_string(nodes_[i]) + " (positions " +
                    std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                    "); repeated nodes need the confluent form");
            }
        }
    }
}

Rational NodeSet::product() const {
    Rational p = 1;
    for (const auto& x : nodes_) {
        p *= x;
    }
    return p;
}

SeriesCoeffs exp_coeffs() {
    return {"exp",
            [](std::size_t n) { return Real(1) / to_real(Rational(factorial(static_cast<long>(n)))); },
            std::numeric_limits<double>::infinity()};
}

SeriesCoeffs geometric_coeffs() {
    return {"geometric", [](std::size_t) { return Real(1); }, 1.0};
}

SeriesCoeffs series_by_name(const std::string& name) {
    if (name == "exp") {
        return exp_coeffs();
    }
    if (name == "geometric") {
        return geometric_coeffs();
    }
    throw std::invalid_argument("unknown series '" + name + "' (expected exp or geometric)");
}

ExpLinear divdiff_exact(const ExpPoly& f, const NodeSet& nodes) {
    const std::size_t k = nodes.size();
    std::vector<ExpLinear> table;
    table.reserve(k);
    for (const auto& x : nodes) {
        table.push_back(eval_at(f, x));
    }
    // After pass l, table[i] = [x_i, ..., x_{i+l}; f].
    for (std::size_t l = 1; l < k; ++l) {
        for (std::size_t i = 0; i + l < k; ++i) {
            table[i] = (table[i + 1] - table[i]) / (nodes[i + l] - nodes[i]);
        }
    }
    return table.front();
}

Real divdiff_numeric(std::span<const Real> fvals, std::span<const Real> nodes) {
    if (nodes.empty() || fvals.size() != nodes.size()) {
        throw std::invalid_argument("divdiff_numeric: need as many values as nodes (at least one)");
    }
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const Real scale = std::max({Real(1), abs(nodes[i]), abs(nodes[j])});
            if (abs(nodes[i] - nodes[j]) <= 16 * eps * scale) {
                throw std::invalid_argument("divdiff_numeric: nodes " + std::to_string(j + 1) +
                                            " and " + std::to_string(i + 1) +
                                            " coincide within working precision");
            }
        }
    }
    std::vector<Real> table(fvals.begin(), fvals.end());
    const std::size_t k = nodes.size();
    for (std::size_t l = 1; l < k; ++l) {
        for (std::size_t i = 0; i + l < k; ++i) {
            table[i] = (table[i + 1] - table[i]) / (nodes[i + l] - nodes[i]);
        }
    }
    return table.front();
}

ExpLinear confluent_divdiff(const ExpPoly& f, unsigned k, unsigned j, const Rational& x) {
    if (k < 1) {
        throw std::invalid_argument("confluent_divdiff: k must be >= 1");
    }
    const unsigned order = k + j - 1;
    return eval_at(nth_derivative(f, order), x) / Rational(factorial(order));
}

Rational popoviciu_h(std::span<const Rational> nodes, unsigned r) {
    // h[d] holds h_d of the first i nodes; adding node x gives
    // h_d(.., x) = h_d(..) + x * h_{d-1}(.., x).
    std::vector<Rational> h(r + 1);
    h[0] = 1;
    for (const auto& x : nodes) {
        for (unsigned d = 1; d <= r; ++d) {
            h[d] += x * h[d - 1];
        }
    }
    return h[r];
}

SmoothFunction exp_function() {
    return [](const Real& x, unsigned) { return exp(x); };
}

SmoothFunction monomial_function(unsigned power) {
    return [power](const Real& x, unsigned order) -> Real {
        if (order > power) {
            return Real(0);
        }
        Real c = 1;
        for (unsigned i = 0; i < order; ++i) {
            c *= power - i;
        }
        return c * pow(x, power - order);
    };
}

SmoothFunction smooth_function(const ExpPoly& f) {
    std::vector<ExpPoly> derivs{f};
    for (unsigned i = 0; i < 4; ++i) {
        derivs.push_back(differentiate(derivs.back()));
    }
    return [derivs = std::move(derivs)](const Real& x, unsigned order) {
        if (order < derivs.size()) {
            return eval_numeric(derivs[order], x);
        }
        return eval_numeric(nth_derivative(derivs.back(), order + 1 - static_cast<unsigned>(derivs.size())), x);
    };
}

namespace {

using Gauss = boost::math::quadrature::gauss<Real, 32>;

// Integrates over t_level in [0, upper], accumulating the argument
// x_1 + sum_i (x_{i+1} - x_i) t_i along the way.
Real simplex_level(const SmoothFunction& f, std::span<const Real> steps, unsigned order,
                   std::size_t level, const Real& upper, const Real& base) {
    if (level == steps.size()) {
        return f(base, order);
    }
    auto integrand = [&](const Real& t) -> Real {
        return simplex_level(f, steps, order, level + 1, t, base + steps[level] * t);
    };
    return Gauss::integrate(integrand, Real(0), upper);
}

}  // namespace

Real simplex_quadrature_check(const SmoothFunction& f, std::span<const Real> nodes) {
    if (nodes.size() < 2 || nodes.size() > 4) {
        throw std::invalid_argument("simplex_quadrature_check: supports 2 to 4 nodes, got " +
                                    std::to_string(nodes.size()));
    }
    std::vector<Real> steps;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        steps.push_back(nodes[i] - nodes[i - 1]);
    }
    const auto order = static_cast<unsigned>(nodes.size() - 1);
    return simplex_level(f, steps, order, 0, Real(1), nodes[0]);
}

}  // namespace mfs

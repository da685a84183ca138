#pragma once

#include "mfs/exact.hpp"
#include "mfs/exppoly.hpp"
#include "mfs/real.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mfs {

/// Ordered, pairwise-distinct, nonzero rational nodes x_1..x_k (k >= 1).
class NodeSet {
public:
    /// Throws std::invalid_argument naming the offending node on an empty
    /// list, a zero node or a duplicate.
    explicit NodeSet(std::vector<Rational> nodes);

    std::size_t size() const { return nodes_.size(); }
    const Rational& operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<Rational>& values() const { return nodes_; }
    auto begin() const { return nodes_.begin(); }
    auto end() const { return nodes_.end(); }

    Rational product() const;

private:
    std::vector<Rational> nodes_;
};

/// g(z) = sum_n coeff(n) z^n, convergent for |z| < radius.
struct SeriesCoeffs {
    std::string name;
    std::function<Real(std::size_t)> coeff;
    double radius;
};

/// g = exp: coeff(n) = 1/n!, infinite radius.
SeriesCoeffs exp_coeffs();
/// g = 1/(1-z): coeff(n) = 1, radius 1.
SeriesCoeffs geometric_coeffs();
/// Lookup by name ("exp" or "geometric"); throws std::invalid_argument otherwise.
SeriesCoeffs series_by_name(const std::string& name);

/// [x_1, ..., x_k; f] by the Newton recursion in exact arithmetic. The
/// result's exponentials are e^{x_i} for a subset of the nodes.
ExpLinear divdiff_exact(const ExpPoly& f, const NodeSet& nodes);

/// Newton tableau over the working-precision field. Throws
/// std::invalid_argument on mismatched or empty inputs and on nodes that
/// coincide within working precision.
Real divdiff_numeric(std::span<const Real> fvals, std::span<const Real> nodes);

/// Fully confluent limit [x, ..., x; f] read through the derivative:
/// f^{(k+j-1)}(x) / (k+j-1)!. With j = 0 this is the k-node confluent value;
/// with j > 0 it is the limit of a j-th mixed partial of the k-node
/// divided difference.
ExpLinear confluent_divdiff(const ExpPoly& f, unsigned k, unsigned j, const Rational& x);

/// Complete homogeneous symmetric polynomial h_r of the node values.
Rational popoviciu_h(std::span<const Rational> nodes, unsigned r);
inline Rational popoviciu_h(const NodeSet& nodes, unsigned r) {
    return popoviciu_h(std::span<const Rational>(nodes.values()), r);
}

/// f^{(order)}(x)
using SmoothFunction = std::function<Real(const Real& x, unsigned order)>;

SmoothFunction exp_function();
SmoothFunction monomial_function(unsigned power);
SmoothFunction smooth_function(const ExpPoly& f);

/// Simplex-integral form of the divided difference over k = |nodes| nodes:
///   int_0^1 int_0^{t_1} ... int_0^{t_{k-2}}
///       f^{(k-1)}(x_1 + (x_2 - x_1) t_1 + ... + (x_k - x_{k-1}) t_{k-1}) dt
/// using nested 32-point Gauss-Legendre rules. Supports 2 <= k <= 4.
Real simplex_quadrature_check(const SmoothFunction& f, std::span<const Real> nodes);

}  // namespace mfs

#pragma once

#include "mfs/divdiff.hpp"
#include "mfs/exact.hpp"
#include "mfs/real.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>

namespace mfs {

/// Brute-force partial sums of the multiple series, straight from their
/// definitions. Nothing here uses divided differences or the closed forms.

/// PerIndex: every index runs from its natural start up to depth.
/// TotalDegree: all tuples with n_1 + ... + n_k <= depth, summed shell by shell.
enum class TruncationMode { PerIndex, TotalDegree };

struct TruncationSpec {
    unsigned depth = 60;
    TruncationMode mode = TruncationMode::PerIndex;
};

/// Thrown when a request would exceed kMaxOracleLoops.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMaxOracleLoops = 1'000'000'000;

template <class T>
struct PartialSum {
    T value;
    /// Heuristic: 2 x |contribution of the full shell at first_omitted_degree|.
    T tail_estimate;
    unsigned depth = 0;
    TruncationMode mode = TruncationMode::PerIndex;
    /// Smallest total degree n_1 + ... + n_k with an omitted tuple.
    unsigned first_omitted_degree = 0;
    /// Whether first_omitted_degree lies past decay_threshold, i.e. in the
    /// regime where shell contributions shrink monotonically.
    bool tail_credible = false;
};

using ExactPartialSum = PartialSum<Rational>;
using RealPartialSum = PartialSum<Real>;

/// Total degree beyond which shell increments decrease: 2 k max(1, |x|) e.
double decay_threshold(unsigned k, double max_abs_node);

/// sum_{n_i >= 1} n_1...n_j / (n_1 + ... + n_k)!, truncated.
ExactPartialSum oracle_skj(unsigned k, unsigned j, TruncationSpec trunc);

/// sum_{n_i >= 1} x_1^{n_1}...x_k^{n_k} / (n_1 + ... + n_k)!, truncated.
ExactPartialSum oracle_sk_of_x(unsigned k, std::span<const Rational> nodes, TruncationSpec trunc);

/// sum_{n_i >= 0} g_{n_1+...+n_k+l} x_1^{n_1}...x_k^{n_k}, truncated.
RealPartialSum oracle_gkl(const SeriesCoeffs& coeffs, unsigned k, unsigned ell,
                          std::span<const Real> nodes, TruncationSpec trunc);

}  // namespace mfs

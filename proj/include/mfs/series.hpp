#pragma once

#include "mfs/divdiff.hpp"
#include "mfs/exact.hpp"
#include "mfs/real.hpp"

#include <span>

namespace mfs {

/// Power of z multiplying g_l(z) inside the divided difference that
/// represents G_{k,l}. KMinusOne is the form that matches the series;
/// EllMinusOne is kept so the alternative reading can be audited.
enum class KernelExponent { KMinusOne, EllMinusOne };

/// S_{k,j} = f^{(k+j-1)}(1) / (k+j-1)! with f(z) = z^{k-1} exp_{k-j}(z).
/// Requires k >= 1 and 0 <= j <= k (std::invalid_argument otherwise).
ExpLinear s_kj_theorem(long k, long j);

/// S_{k,j} = e * sum_{i<j} C(j-1, i) / (k+j-i-1)!  for 1 <= j <= k.
ExpLinear s_kj_binomial(long k, long j);

/// S_{k,0} = (-1)^k (1 - e sum_{j<k} (-1)^j / j!).
ExpLinear s_k0(long k);

/// a_k = S_{k,k} / e = sum_{i<k} C(k-1, i) / (2k-i-1)!.
Rational a_k(long k);

/// f_{k,l}(x_1..x_k) = sum_{n_i >= 0} x^n / (|n| + l)!, as the divided
/// difference [x_1..x_k; z^{k-1} exp_l(z)].
ExpLinear f_kl(long k, unsigned ell, const NodeSet& nodes,
               KernelExponent exponent = KernelExponent::KMinusOne);

/// S_k(x_1..x_k) = x_1...x_k * f_{k,k}(x_1..x_k).
ExpLinear s_k_of_x(long k, const NodeSet& nodes);

/// g_l(z) = sum_{n>=0} coeff(n + l) z^n, summed to working precision.
/// Throws std::domain_error when |z| is not inside the radius.
Real g_ell_numeric(const SeriesCoeffs& coeffs, unsigned ell, const Real& z);

/// G_{k,l}(x_1..x_k) as the numeric divided difference of z^{k-1} g_l(z).
Real g_kl_numeric(const SeriesCoeffs& coeffs, long k, unsigned ell, std::span<const Real> nodes,
                  KernelExponent exponent = KernelExponent::KMinusOne);

}  // namespace mfs

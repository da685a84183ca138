// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include "mfs/cli.hpp"
#include "mfs/divdiff.hpp"
#include "mfs/numeval.hpp"
#include "mfs/oracle.hpp"
#include "mfs/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace mfs;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string str(const Real& v) { return v.str(6, std::ios_base::scientific); }

// Distinct nonzero rationals p/den with |p/den| <= bound.
std::vector<Rational> random_nodes(std::mt19937_64& rng, std::size_t count, long bound, long den) {
    std::uniform_int_distribution<long> dist(-bound * den, bound * den);
    std::set<Rational> seen;
    std::vector<Rational> out;
    while (out.size() < count) {
        const long p = dist(rng);
        const Rational v = make_rational(p, den);
        if (p != 0 && seen.insert(v).second) {
            out.push_back(v);
        }
    }
    return out;
}

// Sum of all degree-r monomials, by enumerating exponent tuples.
Rational enumerate_h(const std::vector<Rational>& x, unsigned r, std::size_t i = 0,
                     const Rational& partial = 1) {
    if (i + 1 == x.size()) {
        Rational p = partial;
        for (unsigned e = 0; e < r; ++e) {
            p *= x[i];
        }
        return p;
    }
    Rational sum = 0;
    Rational power = 1;
    for (unsigned n = 0; n <= r; ++n) {
        sum += enumerate_h(x, r - n, i + 1, partial * power);
        power *= x[i];
    }
    return sum;
}

Outcome table_reproduction() {
    Outcome o;
    // The published S_{k,j} table: j = 0 in full, j >= 1 as multiples of e.
    const std::vector<std::vector<std::string>> expected = {
        {"e-1", "1"},
        {"1", "1/2", "2/3"},
        {"e/2-1", "1/6", "5/24", "31/120"},
        {"1-e/3", "1/24", "1/20", "43/720", "179/2520"},
        {"3e/8-1", "1/120", "7/720", "19/1680", "529/40320", "787/51840"},
    };
    const std::vector<ExpLinear> j0 = {
        ExpLinear::exp_term(1, 1) - ExpLinear::constant(1), ExpLinear::constant(1),
        ExpLinear::exp_term(R(1, 2), 1) - ExpLinear::constant(1),
        ExpLinear::constant(1) - ExpLinear::exp_term(R(1, 3), 1),
        ExpLinear::exp_term(R(3, 8), 1) - ExpLinear::constant(1)};
    const std::vector<std::vector<Rational>> coeffs = {
        {R(1)},
        {R(1, 2), R(2, 3)},
        {R(1, 6), R(5, 24), R(31, 120)},
        {R(1, 24), R(1, 20), R(43, 720), R(179, 2520)},
        {R(1, 120), R(7, 720), R(19, 1680), R(529, 40320), R(787, 51840)},
    };
    const cli::TableRecord t = cli::cmd_table(5);
    o.require(t.rows.size() == 5, "table has wrong number of rows");
    int cells = 0;
    for (std::size_t k = 1; k <= 5 && o.pass; ++k) {
        o.require(t.rows[k - 1] == expected[k - 1], "row " + std::to_string(k) + " text differs");
        o.require(s_k0(static_cast<long>(k)) == j0[k - 1], "S_{k,0} differs at k=" + std::to_string(k));
        ++cells;
        for (std::size_t j = 1; j <= k; ++j) {
            o.require(s_kj_binomial(static_cast<long>(k), static_cast<long>(j)) ==
                          ExpLinear::exp_term(coeffs[k - 1][j - 1], 1),
                      "S_{" + std::to_string(k) + "," + std::to_string(j) + "} differs");
            ++cells;
        }
    }
    o.require(cells == 20, "expected 20 cells");
    o.detail = o.pass ? std::to_string(cells) + " cells equal" : o.detail;
    return o;
}

Outcome exact_a_values() {
    Outcome o;
    const Rational expected[] = {R(1), R(2, 3), R(31, 120), R(179, 2520), R(787, 51840)};
    for (long k = 1; k <= 5; ++k) {
        o.require(a_k(k) == expected[k - 1], "a_" + std::to_string(k) + " = " + to_string(a_k(k)));
    }
    if (o.pass) {
        o.detail = "1, 2/3, 31/120, 179/2520, 787/51840";
    }
    return o;
}

Outcome high_k_decimals() {
    Outcome o;
    const std::string a10 = to_string(render(ExpLinear::constant(a_k(10)), 16));
    const std::string a100 = to_string(render(ExpLinear::constant(a_k(100)), 16));
    o.require(a10 == "5.912338752837942e-7", "a_10 rendered " + a10);
    o.require(a100 == "2.829019570367539e-158", "a_100 rendered " + a100);
    if (o.pass) {
        o.detail = a10 + ", " + a100;
    }
    return o;
}

Outcome three_way() {
    Outcome o;
    Real worst = 0;
    for (long k = 1; k <= 6; ++k) {
        for (long j = 1; j <= k; ++j) {
            const ExpLinear theorem = s_kj_theorem(k, j);
            const std::string at = " at k=" + std::to_string(k) + ", j=" + std::to_string(j);
            o.require(theorem == s_kj_binomial(k, j), "theorem and binomial forms differ" + at);
            const auto oracle = oracle_skj(static_cast<unsigned>(k), static_cast<unsigned>(j),
                                           {60, TruncationMode::TotalDegree});
            const Real err = abs(to_real(theorem) - to_real(oracle.value));
            worst = std::max(worst, err);
            o.require(err < Real("1e-12"), "oracle disagrees by " + str(err) + at);
        }
    }
    if (o.pass) {
        o.detail = "21 pairs, max |delta| " + str(worst);
    }
    return o;
}

Outcome j0_consistency() {
    Outcome o;
    for (long k = 1; k <= 6; ++k) {
        o.require(s_k0(k) == s_kj_theorem(k, 0), "differs at k=" + std::to_string(k));
    }
    return o;
}

Outcome popoviciu_suite() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    std::uniform_int_distribution<unsigned> deg(0, 6);
    for (int i = 0; i < 100 && o.pass; ++i) {
        const auto x = random_nodes(rng, size(rng), 3, 7);
        const unsigned r = deg(rng);
        const NodeSet nodes(x);
        const auto k = static_cast<unsigned>(x.size());
        const ExpPoly mono = ExpPoly::polynomial(Poly::monomial(1, k - 1 + r));
        const Rational h = popoviciu_h(nodes, r);
        o.require(divdiff_exact(mono, nodes) == ExpLinear::constant(h),
                  "divided difference != h_r for case " + std::to_string(i));
        o.require(h == enumerate_h(x, r), "h_r != enumeration for case " + std::to_string(i));
    }
    if (o.pass) {
        o.detail = "100 cases, exact";
    }
    return o;
}

Outcome theorem1_numeric() {
    Outcome o;
    std::mt19937_64 rng(20240602);
    std::uniform_int_distribution<unsigned> kd(1, 3);
    std::uniform_int_distribution<unsigned> ld(0, 4);
    std::uniform_int_distribution<long> pd(11, 89);
    Real worst = 0;
    auto nodes_in_unit = [&](unsigned k) {
        std::set<long> picked;
        while (picked.size() < k) {
            picked.insert(pd(rng));
        }
        std::vector<Real> x;
        for (long p : picked) {
            x.push_back(to_real(make_rational(p, 100)));
        }
        return x;
    };
    for (int i = 0; i < 25; ++i) {
        const unsigned k = kd(rng);
        const unsigned ell = ld(rng);
        const auto x = nodes_in_unit(k);
        const Real closed = g_kl_numeric(exp_coeffs(), k, ell, x);
        const auto oracle = oracle_gkl(exp_coeffs(), k, ell, x, {60, TruncationMode::PerIndex});
        const Real err = abs(closed - oracle.value);
        worst = std::max(worst, err);
        o.require(err < Real("1e-12"), "exp case " + std::to_string(i) + " off by " + str(err));
    }
    for (int i = 0; i < 10; ++i) {
        const unsigned k = kd(rng);
        const auto x = nodes_in_unit(k);
        Real product = 1;
        for (const auto& v : x) {
            product /= 1 - v;
        }
        const Real err = abs(g_kl_numeric(geometric_coeffs(), k, 0, x) - product);
        worst = std::max(worst, err);
        o.require(err < Real("1e-12"), "geometric product off by " + str(err));
    }
    if (o.pass) {
        o.detail = "25 exp + 10 geometric cases, max |delta| " + str(worst);
    }
    return o;
}

Outcome quadrature_suite() {
    Outcome o;
    std::mt19937_64 rng(20240603);
    Real worst = 0;
    const SmoothFunction fs[] = {exp_function(), monomial_function(5)};
    const char* names[] = {"e^z", "z^5"};
    for (std::size_t count : {2u, 3u}) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Real> x;
            for (const auto& v : random_nodes(rng, count, 2, 8)) {
                x.push_back(to_real(v));
            }
            for (std::size_t w = 0; w < 2; ++w) {
                std::vector<Real> vals;
                for (const auto& v : x) {
                    vals.push_back(fs[w](v, 0));
                }
                const Real err = abs(simplex_quadrature_check(fs[w], x) - divdiff_numeric(vals, x));
                worst = std::max(worst, err);
                o.require(err < Real("1e-8"), std::string(names[w]) + " with " +
                                                  std::to_string(count) + " nodes off by " + str(err));
            }
        }
    }
    if (o.pass) {
        o.detail = "12 cases, max |delta| " + str(worst);
    }
    return o;
}

template <class F>
Real mixed_partial(const F& fn, std::vector<Real> x, unsigned j, const Real& h, unsigned i = 0) {
    if (i == j) {
        return fn(x);
    }
    auto plus = x;
    auto minus = x;
    plus[i] += h;
    minus[i] -= h;
    return (mixed_partial(fn, plus, j, h, i + 1) - mixed_partial(fn, minus, j, h, i + 1)) / (2 * h);
}

Outcome confluence() {
    Outcome o;
    double min_order = 1e9;
    for (long k = 1; k <= 3; ++k) {
        for (long j = 0; j <= k; ++j) {
            const ExpPoly f = build_zk_expell(k, static_cast<unsigned>(k - j));
            const auto uk = static_cast<unsigned>(k);
            const auto uj = static_cast<unsigned>(j);
            const Real target = to_real(confluent_divdiff(f, uk, uj, 1));
            auto error_at = [&](long inv_eps) {
                std::vector<Rational> nodes;
                for (long i = 0; i < k + j; ++i) {
                    nodes.push_back(1 + make_rational(i, inv_eps));
                }
                return abs(to_real(divdiff_exact(f, NodeSet(nodes))) - target);
            };
            if (k + j < 2) {
                continue;
            }
            const Real e3 = error_at(1000);
            const Real e4 = error_at(10000);
            const double order = static_cast<double>(log10(e3 / e4));
            min_order = std::min(min_order, order);
            o.require(order >= 1.0, "order " + std::to_string(order) + " at k=" + std::to_string(k) +
                                        ", j=" + std::to_string(j));
        }
    }
    const Real h("1e-4");
    Real worst = 0;
    for (long k = 1; k <= 3; ++k) {
        for (long j = 1; j <= k; ++j) {
            const auto ell = static_cast<unsigned>(k - j);
            std::vector<Real> x;
            for (long i = 0; i < k; ++i) {
                x.push_back(1 + (Real(i) - Real(k - 1) / 2) * h / 3);
            }
            auto G = [&](const std::vector<Real>& nodes) {
                return g_kl_numeric(exp_coeffs(), k, ell, nodes);
            };
            const Real exact = to_real(s_kj_theorem(k, j));
            const Real rel = abs(mixed_partial(G, x, static_cast<unsigned>(j), h) - exact) / abs(exact);
            worst = std::max(worst, rel);
            o.require(rel < Real("1e-4"), "finite difference off by relative " + str(rel));
        }
    }
    if (o.pass) {
        std::ostringstream d;
        d << "min observed order " << min_order << ", max FD relative error " << str(worst);
        o.detail = d.str();
    }
    return o;
}

Outcome cancellation_stress() {
    Outcome o;
    const std::vector<Rational> alt = {R(1), R(-1)};
    const auto oracle = oracle_sk_of_x(2, alt, {80, TruncationMode::PerIndex});
    const Rational rendered = to_rational(render(s_k_of_x(2, NodeSet(alt)), 30));
    const Real err1 = abs(to_real(rendered - oracle.value));
    o.require(err1 < Real("1e-20"), "S_2(1,-1) off by " + str(err1));

    const ExpLinear s40 = ExpLinear::constant(1) - ExpLinear::exp_term(R(1, 3), 1);
    const auto o40 = oracle_skj(4, 0, {60, TruncationMode::TotalDegree});
    const Real err2 = abs(to_real(to_rational(render(s40, 30)) - o40.value));
    o.require(err2 < Real("1e-12"), "1 - e/3 off by " + str(err2));
    if (o.pass) {
        o.detail = "|delta| " + str(err1) + " and " + str(err2);
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "exact S_{k,j} table reproduction, k <= 5", 1.0, table_reproduction},
        {2, "exact a_k for k = 1..5", 0.1, exact_a_values},
        {3, "16-digit a_10 and a_100", 5.0, high_k_decimals},
        {4, "theorem = binomial = oracle for 1 <= j <= k <= 6", 60.0, three_way},
        {5, "s_k0 = theorem form at j = 0, k = 1..6", 0.0, j0_consistency},
        {6, "Popoviciu identity, 100 random cases", 0.0, popoviciu_suite},
        {7, "G_{k,l} numeric vs oracle and geometric product", 0.0, theorem1_numeric},
        {8, "simplex quadrature vs divided difference", 0.0, quadrature_suite},
        {9, "confluence order and mixed partial derivatives", 0.0, confluence},
        {10, "alternating and cancellation stress", 0.0, cancellation_stress},
    };
    int failures = 0;
    double total = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += seconds;
        if (o.pass && c.limit_seconds > 0 && seconds > c.limit_seconds) {
            o.pass = false;
            o.detail = "took longer than " + std::to_string(c.limit_seconds) + " s";
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %2d. %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    if (total > 120.0) {
        std::printf("[FAIL] total runtime %.1f s exceeds 2 minutes\n", total);
        ++failures;
    }
    std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures,
                criteria.size(), total);
    return failures == 0 ? 0 : 1;
}

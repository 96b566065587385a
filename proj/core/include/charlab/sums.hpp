#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "charlab/characters.hpp"
#include "charlab/domain.hpp"
#include "charlab/io.hpp"

namespace charlab {

// ---- character sums -------------------------------------------------------
// Every engine returns the exact RootSumHistogram; all agreement checks
// between two evaluation strategies compare histograms bin for bin.

// sum over lambda in G of chi(a + lambda); |value| <= sqrt(p) for a != 0
RootSumHistogram sum_subgroup_shift(const Character& chi, u64 a, const Subgroup& G);

enum class IntervalAlgo {
    Direct, // double loop over (x, lambda)
    ViaRU,  // count table r(u) = #{(x,lambda): x + a*lambda = u}, then one pass over u
};

// sum over x in I, lambda in G of chi(x + a*lambda)
RootSumHistogram sum_interval_subgroup(const Character& chi, u64 a, const Interval& I,
                                       const Subgroup& G, IntervalAlgo algo = IntervalAlgo::Direct);

// sum over x in I, lambda in G of chi(x + f(lambda)); f(X) = aX reproduces
// sum_interval_subgroup exactly
RootSumHistogram sum_poly_interval_subgroup(const Character& chi, const Poly& f, const Interval& I,
                                            const Subgroup& G);

enum class PairAlgo {
    Direct, // double loop over (lambda, mu)
    ViaF,   // F(u) = #{(lambda,mu): lambda + mu = u}, then one pass over u
};

// sum over lambda, mu in G of chi(a + lambda + mu)
RootSumHistogram sum_subgroup_pair(const Character& chi, u64 a, const Subgroup& G,
                                   PairAlgo algo = PairAlgo::Direct);

// ---- conjugate-weighted triple sums ---------------------------------------
// The T-fold averaged forms of the two double sums above. Each equals the
// corresponding double sum scaled by T, bin for bin; computing them through an
// independent loop structure makes that equality a meaningful cross-check.

// sum over x in I and lambda, mu in G of conj(chi(mu)) * chi(mu*x + a*lambda),
// by the literal triple loop
RootSumHistogram conj_weighted_interval_triple(const Character& chi, u64 a, const Interval& I,
                                               const Subgroup& G);

enum class TripleAlgo {
    Literal, // the T^3 loop, as displayed
    Grouped, // group (lambda, mu) by their sum u with multiplicity F(u)
};

// sum over lambda, mu, theta in G of conj(chi(theta)) * chi(a*theta + mu + lambda)
RootSumHistogram conj_weighted_pair_triple(const Character& chi, u64 a, const Subgroup& G,
                                           TripleAlgo algo = TripleAlgo::Literal);

// ---- exponential sums ------------------------------------------------------

// sum over x in [1, p-1] of e^((2*pi*i/p) * (a1*x^k1 + ... + ar*x^kr));
// phases are exact modular evaluations, accumulation is the only float step.
// Throws all_coefficients_zero if every a_i = 0, invalid_argument on k_i = 0.
std::complex<double> sparse_exp_sum(const FieldCtx& ctx,
                                    std::span<const std::pair<u64, u64>> terms);

struct SubgroupExpSum {
    std::complex<double> value;        // sum over lambda in G of e(a*f(lambda)/p)
    std::complex<double> substituted;  // sum over x in [1,p-1] of e(a*f(x^((p-1)/T))/p)
    u64 T = 0;
    u64 full_range = 0; // p-1
    // |value/T - substituted/(p-1)|; zero up to float roundoff, since the
    // substitution x -> x^((p-1)/T) covers G exactly (p-1)/T times
    double identity_gap() const;
};

// Throws zero_coefficient on a = 0, constant_polynomial on deg f < 1.
SubgroupExpSum subgroup_exp_sum(const FieldCtx& ctx, u64 a, const Poly& f, const Subgroup& G);

// ---- sliding-window moment --------------------------------------------------

struct MomentReport {
    u64 p = 0, R = 0, nu = 1, d = 1;
    // Exact group-ring accumulation of sum over v of |S_v|^(2*nu), where
    // S_v = sum_{r=1..R} chi(v+r): bins[t] is the integer coefficient of the
    // t-th power of the primitive d-th root of unity.
    std::vector<u128> bins;
    double value = 0;  // derived: sum of bins[t] * cos(2*pi*t/d)
    double rhs = 0;    // R^(2*nu) * sqrt(p) + R^nu * p
    double ratio = 0;  // value / rhs
};

// 2*nu-th moment of the R-term sliding character sum over all p window starts.
// Exact per-window histograms; |.|^2 and powers taken in the integer group
// ring Z[Z_d] by cyclic convolution, so the only float is the final value.
MomentReport davenport_erdos_moment(const Character& chi, u64 R, u64 nu);

} // namespace charlab

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charlab/count_table.hpp"
#include "charlab/domain.hpp"

namespace charlab {

// Result carrier for every exact congruence count. `count` is always the
// exact value; main_term / bound_rhs are the analytic comparison values
// where one exists, and notes carries regime flags (never silently dropped).
struct CountReport {
    std::string quantity;
    u64 p = 0;
    std::string params; // stable "key=value;..." text, enough to re-run the row
    u128 count = 0;
    std::optional<double> main_term;
    std::optional<double> bound_rhs;
    std::optional<double> ratio; // count / bound_rhs when bound_rhs present
    std::optional<u128> oracle_count;
    std::string notes;

    double deviation() const; // |count - main_term|, main term required
};

// N(I,G) = #{(x, y, lambda) in I x I x G : lambda * x = y mod p}.
// Main term H^2 T / p. Iterates (x, lambda) directly when T <= H, otherwise
// (x, y) pairs with a subgroup membership test.
CountReport count_nig(const Interval& I, const Subgroup& G);

// Q = #{(x, y, lambda, mu) in I^2 x G^2 : lambda * x = mu * y} via the
// product-value table; the report checks Q = T * N(I,G) and notes the result.
CountReport count_q(const Interval& I, const Subgroup& G);

enum class EnergyAlgo {
    Quadruple, // literal 4-loop, guarded to T <= 64
    Histogram, // sum of F(u)^2 over the pair-sum table
};

// E(G) = #{(l1, m1, l2, m2) in G^4 : l1 + m1 = l2 + m2}; bound_rhs = T^(5/2)
CountReport additive_energy(const Subgroup& G, EnergyAlgo algo = EnergyAlgo::Histogram);

// F(u) = #{(lambda, mu) in G^2 : lambda + mu = u}; total mass T^2
CountTable f_histogram(const Subgroup& G);

// #{(x1, x2, x3, x4) in J1 x J2 x J3 x J4 : x1 x2 = x3 x4 mod p};
// main term h1 h2 h3 h4 / p. Boxes with b_i = 0 are accepted and flagged.
CountReport count_symcong(const FieldCtx& ctx, const Interval& J1, const Interval& J2,
                          const Interval& J3, const Interval& J4);

// true iff no two distinct elements differ by a positive integer <= h,
// gaps measured on integer representatives in [0, p), not cyclically
bool is_h_spaced(std::span<const u64> S, u64 h);

// Sorted set of residues whose pairwise gaps all exceed h; the factory
// validates the spacing invariant.
struct SpacedSet {
    std::vector<u64> elements; // sorted ascending, distinct
    u64 h = 0;

    static SpacedSet make(std::vector<u64> elems, u64 h);
};

// W = sum over v of c(v)^2 with c(v) = #{(u, s, l) in I x S x Lset :
// (u + s) / l = v mod p}. Scale parameter for the flags and the reported RHS
// (#S*H*L)^2/p + #S*H*L is L = #Lset; precondition violations (L >= H or
// 2HL >= p, with L = min(Lset) as the prime scale) are flagged in notes, the
// count is still exact.
CountReport count_w_quantity(const FieldCtx& ctx, const Interval& I, std::span<const u64> ell_primes,
                             const SpacedSet& S);

struct UReport {
    CountTable table; // v -> U(v) = #{(u, l, lambda) in I x Lset x G : (u + f(lambda)) / l = v}
    CountReport report; // count = U = sum of U(v)^2; ratio to H * #Lset * T^2
};

UReport u_histogram(const Interval& I, std::span<const u64> ell_primes, const Subgroup& G,
                    const Poly& f);

// #{lambda in G : f(lambda) in b + I}; main term H T / p
CountReport count_poly_values_in_interval(const Poly& f, const Subgroup& G, u64 b, const Interval& I);

// Literal nested-loop reference implementations, deliberately table-free.
// Quadratic-to-sextuple cost; meant for small instances in tests and the
// --oracle CLI paths.
namespace oracles {
u128 count_nig(const Interval& I, const Subgroup& G);
u128 count_q(const Interval& I, const Subgroup& G);
u128 additive_energy(const Subgroup& G);
u128 count_symcong(const FieldCtx& ctx, const Interval& J1, const Interval& J2, const Interval& J3,
                   const Interval& J4);
u128 count_w_quantity(const FieldCtx& ctx, const Interval& I, std::span<const u64> ell_primes,
                      const SpacedSet& S);
u128 u_second_moment(const Interval& I, std::span<const u64> ell_primes, const Subgroup& G,
                     const Poly& f);
u128 count_poly_values_in_interval(const Poly& f, const Subgroup& G, u64 b, const Interval& I);
} // namespace oracles

} // namespace charlab

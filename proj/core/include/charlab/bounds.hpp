#pragma once

#include <string>
#include <vector>

#include "charlab/modarith.hpp"

namespace charlab {

// Bound right-hand sides with every p^o(1) factor dropped and every implied
// constant set to 1. Ratios of exact observed values to these evaluators are
// the artifact's main output; nothing here is a pass/fail threshold.

double weil_rhs(u64 p);         // sqrt(p)
double hbk_energy_rhs(u64 T);   // T^(5/2)

struct RegimeValue {
    double value = 0;
    std::string regime;
};

// Piecewise energy bound for T <= p^(2/3):
//   T <= p^(1/2)             -> T^(32/13)
//   p^(1/2) < T <= p^(29/48) -> T^(31/13) * p^(1/26)
//   p^(29/48) < T <= p^(2/3) -> T^3 * p^(-1/3)
// Throws regime_error above p^(2/3). Breakpoints at 1/2 and 2/3 are decided
// by exact integer comparison (T^2 vs p, T^3 vs p^2).
RegimeValue shkredov_energy_rhs(u64 T, u64 p);

struct PairBoundValue {
    double value = 0;
    std::string regime;
    double trivial_weil = 0;  // T * sqrt(p), the row-wise Weil route
    double trivial_count = 0; // T^2, the term-count bound
};

// Piecewise bound for |sum over lambda,mu in G of chi(a+lambda+mu)|:
//   T <= p^(1/2)             -> T^(19/26) * p^(1/2)
//   p^(1/2) < T <= p^(29/48) -> T^(9/13) * p^(27/52)
//   p^(29/48) < T <= p^(2/3) -> T * p^(1/3)
// The regime label gains a ",nontriviality-threshold" marker when the branch
// value is not below the trivial T^2 (reachable at T <= p^(13/33)).
PairBoundValue thm_gg_rhs(u64 T, u64 p);

struct NigRhs {
    double term1 = 0; // H * t^((2nu+1)/(2nu(nu+1))) * p^(-1/(2(nu+1)))
    double term2 = 0; // H^2 * t^(1/nu) * p^(-1/nu)
    double total = 0;
    double t = 0;     // max(T, sqrt(p))
};

NigRhs nig_rhs(u64 H, u64 T, u64 p, u64 nu);

double thm3_rhs(u64 H, u64 T, u64 p); // H * T * p^(-5/48)

// One row of sweep output; the unit every CSV line is built from.
struct BoundReport {
    std::string theorem;
    u64 p = 0;
    u64 T = 0;
    u64 H = 0;        // 0 = not applicable
    u64 char_order = 0; // 0 = not applicable
    u64 a = 0;        // meaningful iff has_a
    bool has_a = false;
    bool has_H = false;
    bool has_char = false;
    double observed = 0; // magnitude or exact count, from the exact engines
    double rhs = 0;
    double ratio = 0;
    std::string regime;
};

std::string bound_csv_header();                   // theorem,p,T,H,char_order,a,observed,rhs,ratio,regime
std::string bound_csv_row(const BoundReport& r);

struct SweepSpec {
    std::string theorem;        // weil | thm3 | thm-gg | shkredov | hbk | nig | daverdos | decay
    u64 p_lo = 0, p_hi = 0;     // inclusive prime range
    std::vector<u64> primes;    // explicit list; wins over the range when nonempty
    std::string t_rule;         // "nearest:<theta>" | "largest-below:<theta>" | "window:<lo>:<hi>" | "fixed:<T>" | "full"
    std::string h_rule;         // "pow:<theta>" | "fixed:<H>"
    std::string r_rule;         // daverdos window length: "pow:<theta>" | "fixed:<R>"
    u64 char_order = 2;         // order of the canonical character used
    unsigned num_a = 5;         // seeded shifts per tuple
    u64 nu = 1;                 // nig / daverdos
    u64 seed = 0;
    unsigned threads = 1;
    u64 max_primes = 0;         // 0 = unlimited
    // 0 = every eligible prime in range. n > 0 = n geometric grid targets
    // across [p_lo, p_hi]; each target advances to the next eligible prime not
    // already taken, spreading the sample across the range.
    unsigned grid_points = 0;
};

// Deterministic: per-prime tasks fan out to workers, results merge in
// parameter order (p, T, H, k, a); identical spec => identical rows.
// Primes whose p-1 lacks a divisor satisfying t_rule are skipped.
std::vector<BoundReport> run_sweep(const SweepSpec& spec);

std::string sweep_to_csv(const std::vector<BoundReport>& rows);

} // namespace charlab

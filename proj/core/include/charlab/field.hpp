#pragma once

#include <cstdint>
#include <vector>

#include "charlab/modarith.hpp"

namespace charlab {

bool is_prime(u64 n);

struct Factor {
    u64 prime;
    unsigned exponent;

    bool operator==(const Factor&) const = default;
};

// Full factorization, ascending by prime. Trial division below 10^6, then
// Brent's rho with a deterministic parameter schedule and an iteration budget.
std::vector<Factor> factorize(u64 n, u64 rho_budget = (1ull << 24));

std::vector<u64> primes_up_to(u64 n);
std::vector<u64> primes_in_range(u64 lo, u64 hi); // segmented, inclusive

std::vector<u64> divisors_from_factors(const std::vector<Factor>& fs); // sorted

enum class IndexPolicy {
    Auto,   // build the index table iff p <= kIndexTableAutoLimit
    Always, // build regardless of size (8 bytes per residue)
    Never,  // discrete logs fall back to Pohlig-Hellman
};

inline constexpr u64 kIndexTableAutoLimit = 1ull << 22;

// Everything about F_p that the rest of the library keeps reusing: the
// factored group order, the smallest primitive root, and (for small p) the
// full index table x -> ind_g(x).
struct FieldCtx {
    u64 p = 0;
    std::vector<Factor> pm1_factors; // factorization of p-1
    u64 g = 0;                       // smallest primitive root
    std::vector<u64> index_table;    // empty if not built; index_table[x] = ind_g(x), slot 0 unused

    bool has_index_table() const { return !index_table.empty(); }
    std::vector<u64> divisors_pm1() const { return divisors_from_factors(pm1_factors); }
};

// Throws composite_modulus if p is not an odd prime, invalid_argument if p is
// outside (2, 2^62).
FieldCtx build_field_ctx(u64 p, IndexPolicy policy = IndexPolicy::Auto);

// ind_g(x) in [0, p-2]. Table lookup when available, Pohlig-Hellman with
// baby-step giant-step otherwise. Throws zero_argument on x = 0 mod p.
u64 dlog(const FieldCtx& ctx, u64 x);

// multiplicative order of x mod p; throws zero_argument on x = 0 mod p
u64 mult_order(const FieldCtx& ctx, u64 x);

} // namespace charlab

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charlab/field.hpp"

namespace charlab {

struct ThreeBitWitness {
    u64 k = 0, m = 0;  // 1 <= k < m <= ell_p; candidate is 2^m + 2^k + 1 as an integer
    u64 residue = 0;   // the candidate reduced mod p (the value tested for primitivity)
};

struct UpRecord {
    u64 p = 0;
    u64 ell_p = 0;     // multiplicative order of 2 mod p (0 for p = 2)
    unsigned u_p = 0;  // minimal popcount over primitive roots in [1, p-1]
    u64 witness = 0;   // the minimal-popcount primitive root found
    bool found = false; // false = no primitive root within max_weight (u_p unknown)
    std::optional<ThreeBitWitness> three_bit;
};

// Enumerates n in [1, p-1] by increasing popcount, then increasing value,
// and stops at the first primitive root; that hit is the minimum-weight one.
// Fills p, ell_p, u_p, witness; three_bit is left empty.
UpRecord compute_up(const FieldCtx& ctx, unsigned max_weight = 62);

// Smallest (m, k) lexicographic with 1 <= k < m <= ell_p such that
// 2^m + 2^k + 1 reduced mod p is a primitive root; absent when no candidate
// in that range works. The candidate integer can exceed p, so primitivity is
// tested on the reduced residue.
std::optional<ThreeBitWitness> three_bit_search(const FieldCtx& ctx);

struct ScanOptions {
    u64 Q = 0;                  // scan all primes <= Q
    unsigned max_weight = 62;
    bool with_three_bit = true;
    unsigned threads = 1;
    u64 ceiling = 10'000'000;   // refuse larger Q (CeilingExceeded)
};

struct ScanResult {
    u64 Q = 0;
    std::vector<UpRecord> records;            // prime order, p = 2 included
    std::map<unsigned, u64> u_distribution;   // odd primes only (p = 2 is a convention row)
    std::vector<u64> exceptions_up_gt3;       // primes with u_p > 3, never silently dropped
    u64 ell_below_13_33 = 0;                  // odd primes with ell_p < p^(13/33)
    u64 odd_primes = 0;
};

// Segmented-sieve scan; per-prime work shards across threads, output merged
// in prime order. p = 2 gets the convention row u_p = 1, witness = 1 and is
// excluded from the aggregates.
ScanResult scan_primes(const ScanOptions& opt);

std::string scan_csv_header(); // p,ell_p,u_p,witness,three_bit_k,three_bit_m
std::string scan_to_csv(const ScanResult& r);
std::string scan_summary_json(const ScanResult& r);

} // namespace charlab

#include "charlab/primroots.hpp"

#include <cmath>

#include <json.hpp>

#include "charlab/errors.hpp"
#include "charlab/parallel.hpp"

namespace charlab {

namespace {

bool is_primitive_root(u64 n, const FieldCtx& ctx) {
    if (n % ctx.p == 0) return false;
    for (const auto& f : ctx.pm1_factors)
        if (powmod(n, (ctx.p - 1) / f.prime, ctx.p) == 1) return false;
    return true;
}

// next integer with the same popcount (Gosper); caller checks the range
u64 next_same_weight(u64 n) {
    u64 c = n & (~n + 1);
    u64 r = n + c;
    return (((r ^ n) >> 2) / c) | r;
}

} // namespace

UpRecord compute_up(const FieldCtx& ctx, unsigned max_weight) {
    if (max_weight < 1) fail(errc::invalid_argument, "max_weight must be >= 1");
    UpRecord rec;
    rec.p = ctx.p;
    rec.ell_p = mult_order(ctx, 2 % ctx.p);
    const u64 limit = ctx.p - 1;
    for (unsigned w = 1; w <= max_weight && w <= 63; ++w) {
        u64 n = (w == 64) ? ~0ull : ((1ull << w) - 1); // smallest value of weight w
        if (n > limit) break;                          // heavier weights start larger still
        while (true) {
            if (is_primitive_root(n, ctx)) {
                rec.u_p = w;
                rec.witness = n;
                rec.found = true;
                return rec;
            }
            u64 nx = next_same_weight(n);
            if (nx > limit || nx < n) break;
            n = nx;
        }
    }
    rec.found = false;
    return rec;
}

std::optional<ThreeBitWitness> three_bit_search(const FieldCtx& ctx) {
    const u64 p = ctx.p;
    const u64 ell = mult_order(ctx, 2 % p);
    u64 pm = mulmod(2, 2, p); // 2^m for m = 2
    for (u64 m = 2; m <= ell; ++m) {
        u64 pk = 2 % p; // 2^k for k = 1
        for (u64 k = 1; k < m; ++k) {
            u64 cand = addmod(addmod(pm, pk, p), 1 % p, p);
            if (is_primitive_root(cand, ctx)) return ThreeBitWitness{k, m, cand};
            pk = mulmod(pk, 2, p);
        }
        pm = mulmod(pm, 2, p);
    }
    return std::nullopt;
}

ScanResult scan_primes(const ScanOptions& opt) {
    if (opt.Q > opt.ceiling)
        fail(errc::ceiling_exceeded, "scan limit " + std::to_string(opt.Q) + " above ceiling");
    std::vector<u64> primes = primes_in_range(2, opt.Q);
    ScanResult result;
    result.Q = opt.Q;
    result.records.resize(primes.size());
    parallel_for(primes.size(), opt.threads, [&](std::size_t i) {
        const u64 p = primes[i];
        if (p == 2) {
            // degenerate by convention: 1 generates the trivial group
            result.records[i] = UpRecord{2, 0, 1, 1, true, std::nullopt};
            return;
        }
        FieldCtx ctx = build_field_ctx(p, IndexPolicy::Never);
        UpRecord rec = compute_up(ctx, opt.max_weight);
        if (opt.with_three_bit) rec.three_bit = three_bit_search(ctx);
        result.records[i] = rec;
    });
    for (const UpRecord& rec : result.records) {
        if (rec.p == 2) continue;
        ++result.odd_primes;
        if (rec.found) {
            ++result.u_distribution[rec.u_p];
            if (rec.u_p > 3) result.exceptions_up_gt3.push_back(rec.p);
        }
        // ell_p < p^(13/33), the threshold below which the three-digit
        // argument gives no guarantee
        if (33.0L * std::log((long double)rec.ell_p) < 13.0L * std::log((long double)rec.p))
            ++result.ell_below_13_33;
    }
    return result;
}

std::string scan_csv_header() { return "p,ell_p,u_p,witness,three_bit_k,three_bit_m"; }

std::string scan_to_csv(const ScanResult& r) {
    std::string s = scan_csv_header() + "\n";
    for (const UpRecord& rec : r.records) {
        s += std::to_string(rec.p);
        s += ',' + std::to_string(rec.ell_p);
        s += ',' + (rec.found ? std::to_string(rec.u_p) : std::string("-1"));
        s += ',' + std::to_string(rec.witness);
        if (rec.three_bit) {
            s += ',' + std::to_string(rec.three_bit->k);
            s += ',' + std::to_string(rec.three_bit->m);
        } else {
            s += ",,";
        }
        s += '\n';
    }
    return s;
}

std::string scan_summary_json(const ScanResult& r) {
    nlohmann::json j;
    j["Q"] = r.Q;
    j["primes"] = r.records.size();
    j["odd_primes"] = r.odd_primes;
    nlohmann::json dist = nlohmann::json::object();
    for (const auto& [u, n] : r.u_distribution) dist[std::to_string(u)] = n;
    j["u_distribution"] = dist;
    j["exceptions_up_gt3"] = r.exceptions_up_gt3;
    j["ell_below_13_33"] = r.ell_below_13_33;
    return j.dump(2) + "\n";
}

} // namespace charlab

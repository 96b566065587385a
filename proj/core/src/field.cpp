#include "charlab/field.hpp"

#include <algorithm>
#include <cstring>

#include "charlab/errors.hpp"

namespace charlab {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin: this witness set covers all n < 3.3e24
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

u64 pollard_brent(u64 n, u64 budget) {
    // Brent's cycle variant; c walks a fixed schedule so runs are reproducible
    for (u64 c = 1; c < 64; ++c) {
        u64 y = 2, r = 1, q = 1, x = 0, ys = 0, g = 1;
        u64 steps = 0;
        const u64 m = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = addmod(mulmod(y, y, n), c, n);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = addmod(mulmod(y, y, n), c, n);
                    q = mulmod(q, submod(x, y, n), n);
                }
                g = std::gcd(q, n);
                k += lim;
                steps += lim;
                if (steps > budget) return 0;
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = addmod(mulmod(ys, ys, n), c, n);
                g = std::gcd(submod(x, ys, n), n);
            }
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

void factor_rec(u64 n, u64 budget, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n, budget);
    if (d == 0 || d == n)
        fail(errc::factorization_failure, "rho budget exhausted on " + std::to_string(n));
    factor_rec(d, budget, out);
    factor_rec(n / d, budget, out);
}

} // namespace

std::vector<Factor> factorize(u64 n, u64 rho_budget) {
    if (n == 0) fail(errc::invalid_argument, "factorize(0)");
    std::vector<u64> ps;
    for (u64 q : {2ull, 3ull, 5ull}) {
        while (n % q == 0) {
            ps.push_back(q);
            n /= q;
        }
    }
    static const unsigned wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 q = 7;
    unsigned wi = 0;
    while (q < 1000000 && q * q <= n) {
        while (n % q == 0) {
            ps.push_back(q);
            n /= q;
        }
        q += wheel[wi];
        wi = (wi + 1) & 7;
    }
    if (n > 1) {
        if (q * q > n)
            ps.push_back(n);
        else
            factor_rec(n, rho_budget, ps);
    }
    std::sort(ps.begin(), ps.end());
    std::vector<Factor> out;
    for (u64 prime : ps) {
        if (!out.empty() && out.back().prime == prime)
            ++out.back().exponent;
        else
            out.push_back({prime, 1});
    }
    return out;
}

std::vector<u64> primes_up_to(u64 n) {
    if (n < 2) return {};
    std::vector<bool> comp(n + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    if (hi < 2 || hi < lo) return {};
    if (lo < 2) lo = 2;
    u64 root = 1;
    while ((root + 1) * (root + 1) <= hi) ++root;
    std::vector<u64> base = primes_up_to(root);
    std::vector<u64> out;
    const u64 seg = 1u << 18;
    for (u64 start = lo; start <= hi; start += seg) {
        u64 end = std::min(hi, start + seg - 1);
        std::vector<bool> comp(end - start + 1, false);
        for (u64 q : base) {
            u64 first = std::max(q * q, (start + q - 1) / q * q);
            for (u64 j = first; j <= end; j += q) comp[j - start] = true;
        }
        for (u64 v = start; v <= end; ++v)
            if (v >= 2 && !comp[v - start]) out.push_back(v);
        if (end == hi) break;
    }
    return out;
}

std::vector<u64> divisors_from_factors(const std::vector<Factor>& fs) {
    std::vector<u64> out{1};
    for (const auto& f : fs) {
        std::size_t n = out.size();
        u64 pk = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
            pk *= f.prime;
            for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FieldCtx build_field_ctx(u64 p, IndexPolicy policy) {
    if (p <= 2 || p >= (1ull << 62))
        fail(errc::invalid_argument, "p out of range: " + std::to_string(p));
    if (!is_prime(p)) fail(errc::composite_modulus, std::to_string(p) + " is not prime");

    FieldCtx ctx;
    ctx.p = p;
    ctx.pm1_factors = factorize(p - 1);

    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (const auto& f : ctx.pm1_factors) {
            if (powmod(g, (p - 1) / f.prime, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ctx.g = g;
            break;
        }
    }

    bool build = policy == IndexPolicy::Always || (policy == IndexPolicy::Auto && p <= kIndexTableAutoLimit);
    if (build) {
        ctx.index_table.assign(p, 0);
        u64 pw = 1;
        for (u64 i = 0; i < p - 1; ++i) {
            ctx.index_table[pw] = i;
            pw = mulmod(pw, ctx.g, p);
        }
    }
    return ctx;
}

namespace {

// order of gen is q (prime); returns log of y in [0, q)
u64 bsgs_prime_order(u64 gen, u64 y, u64 q, u64 p) {
    if (y == 1) return 0;
    u64 m = 1;
    while (m * m < q) ++m;
    if (m > (1ull << 26)) fail(errc::budget_exceeded, "giant-step table too large");
    std::vector<std::pair<u64, u64>> baby(m);
    u64 e = 1;
    for (u64 j = 0; j < m; ++j) {
        baby[j] = {e, j};
        e = mulmod(e, gen, p);
    }
    std::sort(baby.begin(), baby.end());
    u64 factor = powmod(invmod(gen, p), m, p);
    u64 gamma = y;
    for (u64 i = 0; i * m < q + m; ++i) {
        auto it = std::lower_bound(baby.begin(), baby.end(), std::pair<u64, u64>{gamma, 0});
        if (it != baby.end() && it->first == gamma) return i * m + it->second;
        gamma = mulmod(gamma, factor, p);
    }
    fail(errc::budget_exceeded, "bsgs: element not in expected subgroup");
}

} // namespace

u64 dlog(const FieldCtx& ctx, u64 x) {
    const u64 p = ctx.p;
    x %= p;
    if (x == 0) fail(errc::zero_argument, "dlog of 0");
    if (ctx.has_index_table()) return ctx.index_table[x];

    // Pohlig-Hellman over the factorization of p-1
    const u64 n = p - 1;
    u64 result = 0, modulus = 1;
    for (const auto& f : ctx.pm1_factors) {
        u64 qe = 1;
        for (unsigned e = 0; e < f.exponent; ++e) qe *= f.prime;
        u64 gamma = powmod(ctx.g, n / qe, p); // order q^e
        u64 target = powmod(x, n / qe, p);
        u64 eta = powmod(gamma, qe / f.prime, p); // order q
        u64 gamma_inv = invmod(gamma, p);
        u64 xk = 0, qpow = 1;
        for (unsigned i = 0; i < f.exponent; ++i) {
            u64 t = mulmod(target, powmod(gamma_inv, xk, p), p);
            t = powmod(t, qe / (qpow * f.prime), p);
            u64 digit = bsgs_prime_order(eta, t, f.prime, p);
            xk += digit * qpow;
            qpow *= f.prime;
        }
        // CRT: result = xk (mod qe), result kept mod `modulus`
        u64 diff = submod(xk % qe, result % qe, qe);
        u64 inc = mulmod(diff, invmod(modulus % qe, qe), qe);
        result += inc * modulus;
        modulus *= qe;
    }
    return result % n;
}

u64 mult_order(const FieldCtx& ctx, u64 x) {
    const u64 p = ctx.p;
    x %= p;
    if (x == 0) fail(errc::zero_argument, "mult_order of 0");
    u64 ord = p - 1;
    for (const auto& f : ctx.pm1_factors) {
        for (unsigned e = 0; e < f.exponent; ++e) {
            if (powmod(x, ord / f.prime, p) == 1)
                ord /= f.prime;
            else
                break;
        }
    }
    return ord;
}

} // namespace charlab

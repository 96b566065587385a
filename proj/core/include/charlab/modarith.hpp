#pragma once

#include <cstdint>
#include <numeric>

namespace charlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using s128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    // a, b < m < 2^63 assumed
    u64 s = a + b;
    return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// inverse of a mod m, gcd(a, m) = 1 assumed (extended euclid)
inline u64 invmod(u64 a, u64 m) {
    s128 t = 0, newt = 1;
    s128 r = (s128)m, newr = (s128)(a % m);
    while (newr != 0) {
        s128 q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += m;
    return (u64)t;
}

} // namespace charlab

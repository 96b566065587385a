#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/field.hpp"

namespace charlab {

// The unique multiplicative subgroup of order T | p-1, generated by
// h = g^((p-1)/T). Elements are enumerated in power order 1, h, h^2, ...
// and materialized lazily. Copies share the cache; the FieldCtx must outlive
// every copy.
class Subgroup {
  public:
    Subgroup(const FieldCtx& ctx, u64 T);

    const FieldCtx& ctx() const { return *ctx_; }
    u64 p() const { return ctx_->p; }
    u64 order() const { return T_; }
    u64 generator() const { return h_; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        u64 e = 1;
        for (u64 i = 0; i < T_; ++i) {
            fn(e);
            e = mulmod(e, h_, ctx_->p);
        }
    }

    const std::vector<u64>& elements() const;

    // u in G iff ind_g(u) is divisible by (p-1)/T, equivalently u^T = 1
    bool contains(u64 u) const;

  private:
    struct Cache {
        std::once_flag once;
        std::vector<u64> elems;
    };
    const FieldCtx* ctx_;
    u64 T_;
    u64 h_;
    std::shared_ptr<Cache> cache_;
};

inline Subgroup make_subgroup(const FieldCtx& ctx, u64 T) { return Subgroup(ctx, T); }

// The interval {b+1, ..., b+H} reduced mod p. b = 0 is the plain initial
// segment; H must stay below p (validated by the consuming operation, which
// knows p).
struct Interval {
    u64 b = 0;
    u64 H = 1;
};

inline void check_interval(const Interval& I, u64 p) {
    if (I.H < 1 || I.H >= p) fail(errc::invalid_argument, "interval length must be in [1, p-1]");
}

// x-th element, i in [0, H)
inline u64 interval_element(const Interval& I, u64 i, u64 p) { return (u64)(((u128)I.b + 1 + i) % p); }

inline bool interval_contains(const Interval& I, u64 u, u64 p) {
    u64 start = (u64)(((u128)I.b + 1) % p);
    u64 w = submod(u % p, start, p);
    return w < I.H;
}

// Polynomial over F_p, coefficients ascending by degree. Operations that
// require a genuine polynomial (degree >= 1 mod p) validate via degree_mod.
struct Poly {
    std::vector<u64> coeffs; // coeffs[i] * X^i

    static Poly linear(u64 a) { return Poly{{0, a}}; }

    u64 eval(u64 x, u64 p) const {
        u64 r = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) r = addmod(mulmod(r, x, p), coeffs[i] % p, p);
        return r;
    }

    // degree after reduction mod p; 0 for constants and the zero polynomial
    u64 degree_mod(u64 p) const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] % p != 0) return i;
        return 0;
    }

    std::string text() const; // "2X^2+X+5" style label for reports
};

inline void check_poly(const Poly& f, u64 p) {
    if (f.degree_mod(p) < 1) fail(errc::constant_polynomial, "polynomial must have degree >= 1 mod p");
}

} // namespace charlab

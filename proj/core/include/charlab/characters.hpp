#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charlab/field.hpp"

namespace charlab {

// Value of chi at a point: the index j of the d-th root of unity e^(2*pi*i*j/d),
// or nullopt for the distinguished zero chi(0) = 0.
using CharValue = std::optional<u64>;

namespace detail {
// baby-step giant-step restricted to the order-d subgroup generated by h
struct SubgroupDlog {
    u64 p = 0, d = 0, h = 0;
    u64 m = 0;
    std::vector<std::pair<u64, u64>> baby; // (h^j, j) sorted by value
    u64 giant = 0;                         // h^{-m}

    static std::shared_ptr<const SubgroupDlog> build(u64 p, u64 d, u64 h);
    u64 lookup(u64 y) const; // y in <h> assumed
};
} // namespace detail

// Multiplicative character mod p, labeled by its exponent k on the canonical
// smallest primitive root: chi(g^i) = e^(2*pi*i*k*i/(p-1)). Order
// d = (p-1)/gcd(k, p-1); k = 0 is the principal character. Immutable and
// cheap to copy; the referenced FieldCtx must outlive it.
class Character {
  public:
    Character(const FieldCtx& ctx, u64 k);

    const FieldCtx& ctx() const { return *ctx_; }
    u64 p() const { return ctx_->p; }
    u64 k() const { return k_; }
    u64 order() const { return d_; }
    bool principal() const { return k_ == 0; }

    // chi(x) as the root-of-unity index j in [0, d), or nullopt for x = 0.
    // j = (k * ind_g(x) mod (p-1)) / ((p-1)/d).
    CharValue eval(u64 x) const;

    std::complex<double> value(u64 x) const; // derived complex value (0 at x=0)

  private:
    const FieldCtx* ctx_;
    u64 k_;
    u64 d_;
    u64 step_;      // (p-1)/d
    u64 k_reduced_; // k/step_, a unit mod d
    // Fallback evaluation when no index table exists: x^(p-1)/d lands in the
    // order-d subgroup, where a small BSGS table finds ind mod d. For d = 2 a
    // direct square table is cheaper still when p fits in memory.
    std::shared_ptr<const detail::SubgroupDlog> sub_dlog_;
    std::shared_ptr<const std::vector<std::int8_t>> qr_table_; // d=2: 0 -> j=0, 1 -> j=1, -1 at x=0
};

inline Character legendre_character(const FieldCtx& ctx) { return Character(ctx, (ctx.p - 1) / 2); }

// the character of exact order d with smallest positive exponent, k = (p-1)/d
Character canonical_character(const FieldCtx& ctx, u64 d);

// Exact integer carrier for a character sum: counts[j] terms landed on the
// j-th power of the primitive d-th root of unity, zero_terms had argument 0.
// The complex value is derived on demand and never fed back into arithmetic.
struct RootSumHistogram {
    u64 d = 1;
    std::vector<u64> counts; // size d
    u64 zero_terms = 0;

    RootSumHistogram() : counts(1, 0) {}
    explicit RootSumHistogram(u64 order) : d(order), counts(order, 0) {}

    void add(CharValue v) {
        if (v)
            ++counts[*v];
        else
            ++zero_terms;
    }
    void add_many(CharValue v, u64 n) {
        if (v)
            counts[*v] += n;
        else
            zero_terms += n;
    }
    void merge(const RootSumHistogram& o);
    RootSumHistogram scaled(u64 m) const; // every count (and zero_terms) times m

    u64 total_terms() const;
    std::complex<double> to_complex() const;
    double magnitude() const;
    std::string digest() const; // "c0:c1:...:c{d-1}"

    bool operator==(const RootSumHistogram&) const = default;
};

std::complex<double> histogram_to_complex(const RootSumHistogram& h);

// Sum over x in [1, p-1] of chi(x) e^(2*pi*i*x/p). |result| = sqrt(p) is the
// calibration oracle for character evaluation. Throws principal_character.
std::complex<double> gauss_sum(const Character& chi);

} // namespace charlab

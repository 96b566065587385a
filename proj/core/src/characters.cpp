#include "charlab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "charlab/errors.hpp"

namespace charlab {

namespace detail {

std::shared_ptr<const SubgroupDlog> SubgroupDlog::build(u64 p, u64 d, u64 h) {
    auto t = std::make_shared<SubgroupDlog>();
    t->p = p;
    t->d = d;
    t->h = h;
    u64 m = 1;
    while (m * m < d) ++m;
    t->m = m;
    t->baby.resize(m);
    u64 e = 1;
    for (u64 j = 0; j < m; ++j) {
        t->baby[j] = {e, j};
        e = mulmod(e, h, p);
    }
    std::sort(t->baby.begin(), t->baby.end());
    t->giant = powmod(invmod(h, p), m, p);
    return t;
}

u64 SubgroupDlog::lookup(u64 y) const {
    u64 gamma = y;
    for (u64 i = 0;; ++i) {
        auto it = std::lower_bound(baby.begin(), baby.end(), std::pair<u64, u64>{gamma, 0});
        if (it != baby.end() && it->first == gamma) return (i * m + it->second) % d;
        if (i * m > d) fail(errc::budget_exceeded, "subgroup dlog: element outside subgroup");
        gamma = mulmod(gamma, giant, p);
    }
}

} // namespace detail

namespace {
// d small enough that a 16·sqrt(d)-byte baby table is cheap to keep per character
constexpr u64 kSubgroupDlogLimit = 1ull << 44;
// quadratic-character square table: one byte per residue
constexpr u64 kQrTableLimit = 1ull << 24;
} // namespace

Character::Character(const FieldCtx& ctx, u64 k) : ctx_(&ctx) {
    const u64 n = ctx.p - 1;
    k_ = k % n;
    u64 g = std::gcd(k_, n);
    d_ = n / g;
    step_ = g; // (p-1)/d
    k_reduced_ = k_ / step_;
    if (ctx.has_index_table() || d_ == 1) return;

    if (d_ == 2 && ctx.p <= kQrTableLimit) {
        // quadratic character: sieve the squares once, then eval is a lookup
        auto qr = std::make_shared<std::vector<std::int8_t>>(ctx.p, 1);
        auto& t = *qr;
        t[0] = -1;
        for (u64 i = 1; i <= (ctx.p - 1) / 2; ++i) t[mulmod(i, i, ctx.p)] = 0;
        qr_table_ = std::move(qr);
        return;
    }
    if (d_ <= kSubgroupDlogLimit) {
        u64 h = powmod(ctx.g, step_, ctx.p);
        sub_dlog_ = detail::SubgroupDlog::build(ctx.p, d_, h);
    }
    // else: eval falls back to full Pohlig-Hellman per call
}

CharValue Character::eval(u64 x) const {
    const u64 p = ctx_->p;
    if (x >= p) x %= p;
    if (x == 0) return std::nullopt;
    if (d_ == 1) return 0;
    if (ctx_->has_index_table()) {
        u64 i = ctx_->index_table[x];
        return (u64)((u128)k_ * i % (p - 1)) / step_;
    }
    if (qr_table_) return (u64)(*qr_table_)[x];
    u64 t = powmod(x, step_, p); // lands in the order-d subgroup
    u64 id;
    if (sub_dlog_)
        id = sub_dlog_->lookup(t);
    else
        id = dlog(*ctx_, x) % d_;
    return mulmod(k_reduced_ % d_, id, d_);
}

std::complex<double> Character::value(u64 x) const {
    CharValue v = eval(x);
    if (!v) return {0.0, 0.0};
    double ang = 2.0 * std::numbers::pi * (double)*v / (double)d_;
    return {std::cos(ang), std::sin(ang)};
}

Character canonical_character(const FieldCtx& ctx, u64 d) {
    if (d == 0 || (ctx.p - 1) % d != 0)
        fail(errc::invalid_argument, "character order must divide p-1");
    return Character(ctx, (ctx.p - 1) / d);
}

void RootSumHistogram::merge(const RootSumHistogram& o) {
    if (o.d != d) fail(errc::invalid_argument, "histogram order mismatch in merge");
    for (u64 j = 0; j < d; ++j) counts[j] += o.counts[j];
    zero_terms += o.zero_terms;
}

RootSumHistogram RootSumHistogram::scaled(u64 m) const {
    RootSumHistogram r(d);
    for (u64 j = 0; j < d; ++j) r.counts[j] = counts[j] * m;
    r.zero_terms = zero_terms * m;
    return r;
}

u64 RootSumHistogram::total_terms() const {
    u64 s = zero_terms;
    for (u64 c : counts) s += c;
    return s;
}

std::complex<double> RootSumHistogram::to_complex() const {
    double re = 0, im = 0;
    for (u64 j = 0; j < d; ++j) {
        if (!counts[j]) continue;
        double ang = 2.0 * std::numbers::pi * (double)j / (double)d;
        re += (double)counts[j] * std::cos(ang);
        im += (double)counts[j] * std::sin(ang);
    }
    return {re, im};
}

double RootSumHistogram::magnitude() const { return std::abs(to_complex()); }

std::string RootSumHistogram::digest() const {
    std::string s;
    for (u64 j = 0; j < d; ++j) {
        if (j) s += ':';
        s += std::to_string(counts[j]);
    }
    return s;
}

std::complex<double> histogram_to_complex(const RootSumHistogram& h) { return h.to_complex(); }

std::complex<double> gauss_sum(const Character& chi) {
    if (chi.principal()) fail(errc::principal_character, "gauss sum needs a nonprincipal character");
    const u64 p = chi.p();
    const u64 d = chi.order();
    double re = 0, im = 0;
    for (u64 x = 1; x < p; ++x) {
        CharValue v = chi.eval(x);
        double ang = 2.0 * std::numbers::pi * ((double)*v / (double)d + (double)x / (double)p);
        re += std::cos(ang);
        im += std::sin(ang);
    }
    return {re, im};
}

} // namespace charlab

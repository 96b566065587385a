#include "charlab/domain.hpp"

namespace charlab {

Subgroup::Subgroup(const FieldCtx& ctx, u64 T) : ctx_(&ctx), T_(T) {
    if (T == 0 || (ctx.p - 1) % T != 0)
        fail(errc::invalid_argument, "subgroup order must divide p-1, got " + std::to_string(T));
    h_ = powmod(ctx.g, (ctx.p - 1) / T, ctx.p);
    cache_ = std::make_shared<Cache>();
}

const std::vector<u64>& Subgroup::elements() const {
    std::call_once(cache_->once, [this] {
        cache_->elems.reserve(T_);
        for_each([this](u64 e) { cache_->elems.push_back(e); });
    });
    return cache_->elems;
}

bool Subgroup::contains(u64 u) const {
    const u64 p = ctx_->p;
    u %= p;
    if (u == 0) return false;
    if (ctx_->has_index_table()) return ctx_->index_table[u] % ((p - 1) / T_) == 0;
    return powmod(u, T_, p) == 1;
}

std::string Poly::text() const {
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0 && !(i == 0 && s.empty())) continue;
        if (!s.empty()) s += '+';
        if (i == 0 || coeffs[i] != 1) s += std::to_string(coeffs[i]);
        if (i >= 1) s += 'X';
        if (i >= 2) s += '^' + std::to_string(i);
    }
    if (s.empty()) s = "0";
    return s;
}

} // namespace charlab

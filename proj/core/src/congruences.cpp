#include "charlab/congruences.hpp"

#include <algorithm>
#include <cmath>

#include "charlab/errors.hpp"
#include "charlab/field.hpp"

namespace charlab {

namespace {

std::string kv(const char* k, u64 v) { return std::string(k) + "=" + std::to_string(v); }

std::vector<u64> interval_values(const Interval& I, u64 p) {
    check_interval(I, p);
    std::vector<u64> xs(I.H);
    u64 x = (u64)(((u128)I.b + 1) % p);
    for (u64 i = 0; i < I.H; ++i) {
        xs[i] = x;
        ++x;
        if (x == p) x = 0;
    }
    return xs;
}

void check_ell_primes(std::span<const u64> ells, u64 p) {
    for (std::size_t i = 0; i < ells.size(); ++i) {
        if (!is_prime(ells[i])) fail(errc::invalid_argument, "ell values must be prime");
        if (ells[i] % p == 0) fail(errc::invalid_argument, "ell must differ from p");
        for (std::size_t j = i + 1; j < ells.size(); ++j)
            if (ells[i] == ells[j]) fail(errc::invalid_argument, "ell values must be distinct");
    }
}

} // namespace

double CountReport::deviation() const {
    if (!main_term) fail(errc::invalid_argument, "report has no main term");
    return std::abs((double)count - *main_term);
}

CountReport count_nig(const Interval& I, const Subgroup& G) {
    const u64 p = G.p();
    const u64 T = G.order();
    std::vector<u64> xs = interval_values(I, p);
    u128 n = 0;
    if (T <= I.H) {
        G.for_each([&](u64 lambda) {
            for (u64 x : xs)
                if (interval_contains(I, mulmod(lambda, x, p), p)) ++n;
        });
    } else {
        for (u64 x : xs) {
            if (x == 0) {
                // lambda * 0 = 0 for every lambda; counts iff 0 lies in I
                if (interval_contains(I, 0, p)) n += T;
                continue;
            }
            u64 xinv = invmod(x, p);
            for (u64 y : xs)
                if (G.contains(mulmod(y, xinv, p))) ++n;
        }
    }
    CountReport rep;
    rep.quantity = "nig";
    rep.p = p;
    rep.params = kv("T", T) + ";" + kv("H", I.H) + ";" + kv("b", I.b);
    rep.count = n;
    rep.main_term = (double)I.H * (double)I.H * (double)T / (double)p;
    return rep;
}

CountReport count_q(const Interval& I, const Subgroup& G) {
    const u64 p = G.p();
    const u64 T = G.order();
    std::vector<u64> xs = interval_values(I, p);
    CountTable prod(p);
    G.for_each([&](u64 lambda) {
        for (u64 x : xs) prod.add(mulmod(lambda, x, p));
    });
    prod.finalize();
    u128 q = prod.sum_squares();
    CountReport rep;
    rep.quantity = "q";
    rep.p = p;
    rep.params = kv("T", T) + ";" + kv("H", I.H) + ";" + kv("b", I.b);
    rep.count = q;
    rep.main_term = (double)I.H * (double)T * (double)I.H * (double)T / (double)p;
    u128 n = count_nig(I, G).count;
    rep.notes = (q == (u128)T * n) ? "q=T*nig" : "q!=T*nig";
    return rep;
}

CountTable f_histogram(const Subgroup& G) {
    const u64 p = G.p();
    const std::vector<u64>& el = G.elements();
    CountTable F(p);
    for (u64 lambda : el) {
        for (u64 mu : el) {
            u64 u = lambda + mu;
            if (u >= p) u -= p;
            F.add(u);
        }
    }
    F.finalize();
    return F;
}

CountReport additive_energy(const Subgroup& G, EnergyAlgo algo) {
    const u64 T = G.order();
    u128 e = 0;
    if (algo == EnergyAlgo::Quadruple) {
        if (T > 64) fail(errc::oracle_too_large, "quadruple energy path is guarded to T <= 64");
        e = oracles::additive_energy(G);
    } else {
        e = f_histogram(G).sum_squares();
    }
    CountReport rep;
    rep.quantity = "energy";
    rep.p = G.p();
    rep.params = kv("T", T);
    rep.count = e;
    rep.bound_rhs = std::pow((double)T, 2.5);
    rep.ratio = (double)e / *rep.bound_rhs;
    return rep;
}

CountReport count_symcong(const FieldCtx& ctx, const Interval& J1, const Interval& J2,
                          const Interval& J3, const Interval& J4) {
    const u64 p = ctx.p;
    auto x1 = interval_values(J1, p), x2 = interval_values(J2, p);
    auto x3 = interval_values(J3, p), x4 = interval_values(J4, p);
    CountTable A(p), B(p);
    for (u64 a : x1)
        for (u64 b : x2) A.add(mulmod(a, b, p));
    for (u64 a : x3)
        for (u64 b : x4) B.add(mulmod(a, b, p));
    A.finalize();
    B.finalize();
    CountReport rep;
    rep.quantity = "symcong";
    rep.p = p;
    rep.params = kv("h1", J1.H) + ";" + kv("b1", J1.b) + ";" + kv("h2", J2.H) + ";" + kv("b2", J2.b) +
                 ";" + kv("h3", J3.H) + ";" + kv("b3", J3.b) + ";" + kv("h4", J4.H) + ";" +
                 kv("b4", J4.b);
    rep.count = A.dot(B);
    rep.main_term = (double)J1.H * (double)J2.H * (double)J3.H * (double)J4.H / (double)p;
    if (J1.b % p == 0 || J2.b % p == 0 || J3.b % p == 0 || J4.b % p == 0)
        rep.notes = "b=0 box accepted outside lemma statement";
    return rep;
}

bool is_h_spaced(std::span<const u64> S, u64 h) {
    std::vector<u64> s(S.begin(), S.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] - s[i - 1] <= h) return false;
    return true;
}

SpacedSet SpacedSet::make(std::vector<u64> elems, u64 h) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!is_h_spaced(elems, h)) fail(errc::invalid_argument, "set is not h-spaced");
    return SpacedSet{std::move(elems), h};
}

CountReport count_w_quantity(const FieldCtx& ctx, const Interval& I, std::span<const u64> ells,
                             const SpacedSet& S) {
    const u64 p = ctx.p;
    check_interval(I, p);
    check_ell_primes(ells, p);
    CountReport rep;
    rep.quantity = "w";
    rep.p = p;
    rep.params = kv("H", I.H) + ";" + kv("b", I.b) + ";" + kv("num_ell", ells.size()) + ";" +
                 kv("num_s", S.elements.size()) + ";" + kv("h", S.h);
    if (ells.empty() || S.elements.empty()) {
        rep.count = 0;
        return rep;
    }
    CountTable c(p);
    for (u64 ell : ells) {
        u64 inv = invmod(ell % p, p);
        for (u64 s : S.elements) {
            // v = (u + s)/ell walks an arithmetic progression of step 1/ell as
            // u walks the interval
            u64 v = mulmod((u64)(((u128)I.b + 1 + s) % p), inv, p);
            for (u64 i = 0; i < I.H; ++i) {
                c.add(v);
                v = addmod(v, inv, p);
            }
        }
    }
    c.finalize();
    rep.count = c.sum_squares();
    const double nS = (double)S.elements.size(), H = (double)I.H, nL = (double)ells.size();
    rep.bound_rhs = nS * H * nL * nS * H * nL / (double)p + nS * H * nL;
    rep.ratio = (double)rep.count / *rep.bound_rhs;
    u64 scale = *std::min_element(ells.begin(), ells.end());
    std::string flags;
    if (scale >= I.H) flags = "L>=H outside lemma";
    if ((u128)2 * I.H * scale >= p) {
        if (!flags.empty()) flags += ";";
        flags += "2HL>=p outside lemma";
    }
    rep.notes = flags;
    return rep;
}

UReport u_histogram(const Interval& I, std::span<const u64> ells, const Subgroup& G, const Poly& f) {
    const u64 p = G.p();
    check_interval(I, p);
    check_ell_primes(ells, p);
    check_poly(f, p);
    const u64 T = G.order();
    CountTable table(p);
    for (u64 ell : ells) {
        u64 inv = invmod(ell % p, p);
        G.for_each([&](u64 lambda) {
            u64 w = f.eval(lambda, p);
            u64 v = mulmod((u64)(((u128)I.b + 1 + w) % p), inv, p);
            for (u64 i = 0; i < I.H; ++i) {
                table.add(v);
                v = addmod(v, inv, p);
            }
        });
    }
    table.finalize();
    UReport out{std::move(table), {}};
    out.report.quantity = "u_second_moment";
    out.report.p = p;
    out.report.params = kv("T", T) + ";" + kv("H", I.H) + ";" + kv("b", I.b) + ";" +
                        kv("num_ell", ells.size()) + ";deg=" + std::to_string(f.degree_mod(p));
    out.report.count = out.table.sum_squares();
    out.report.bound_rhs = (double)I.H * (double)ells.size() * (double)T * (double)T;
    out.report.ratio = (double)out.report.count / *out.report.bound_rhs;
    return out;
}

CountReport count_poly_values_in_interval(const Poly& f, const Subgroup& G, u64 b, const Interval& I) {
    const u64 p = G.p();
    check_interval(I, p);
    check_poly(f, p);
    Interval shifted{(u64)(((u128)b + I.b) % p), I.H};
    u128 n = 0;
    G.for_each([&](u64 lambda) {
        if (interval_contains(shifted, f.eval(lambda, p), p)) ++n;
    });
    CountReport rep;
    rep.quantity = "poly_values";
    rep.p = p;
    rep.params = kv("T", G.order()) + ";" + kv("H", I.H) + ";" + kv("b", b) + ";" +
                 kv("ib", I.b) + ";f=" + f.text();
    rep.count = n;
    rep.main_term = (double)I.H * (double)G.order() / (double)p;
    return rep;
}

namespace oracles {

u128 count_nig(const Interval& I, const Subgroup& G) {
    const u64 p = G.p();
    auto xs = interval_values(I, p);
    u128 n = 0;
    for (u64 lambda : G.elements())
        for (u64 x : xs)
            for (u64 y : xs)
                if (mulmod(lambda, x, p) == y) ++n;
    return n;
}

u128 count_q(const Interval& I, const Subgroup& G) {
    const u64 p = G.p();
    auto xs = interval_values(I, p);
    const auto& el = G.elements();
    u128 n = 0;
    for (u64 lambda : el)
        for (u64 mu : el)
            for (u64 x : xs)
                for (u64 y : xs)
                    if (mulmod(lambda, x, p) == mulmod(mu, y, p)) ++n;
    return n;
}

u128 additive_energy(const Subgroup& G) {
    const u64 p = G.p();
    const auto& el = G.elements();
    u128 n = 0;
    for (u64 l1 : el)
        for (u64 m1 : el)
            for (u64 l2 : el)
                for (u64 m2 : el)
                    if (addmod(l1, m1, p) == addmod(l2, m2, p)) ++n;
    return n;
}

u128 count_symcong(const FieldCtx& ctx, const Interval& J1, const Interval& J2, const Interval& J3,
                   const Interval& J4) {
    const u64 p = ctx.p;
    auto x1 = interval_values(J1, p), x2 = interval_values(J2, p);
    auto x3 = interval_values(J3, p), x4 = interval_values(J4, p);
    u128 n = 0;
    for (u64 a : x1)
        for (u64 b : x2)
            for (u64 c : x3)
                for (u64 d : x4)
                    if (mulmod(a, b, p) == mulmod(c, d, p)) ++n;
    return n;
}

u128 count_w_quantity(const FieldCtx& ctx, const Interval& I, std::span<const u64> ells,
                      const SpacedSet& S) {
    const u64 p = ctx.p;
    auto us = interval_values(I, p);
    u128 n = 0;
    // cross-multiplied congruence avoids inversions entirely
    for (u64 u1 : us)
        for (u64 s1 : S.elements)
            for (u64 l1 : ells)
                for (u64 u2 : us)
                    for (u64 s2 : S.elements)
                        for (u64 l2 : ells)
                            if (mulmod(addmod(u1, s1 % p, p), l2 % p, p) ==
                                mulmod(addmod(u2, s2 % p, p), l1 % p, p))
                                ++n;
    return n;
}

u128 u_second_moment(const Interval& I, std::span<const u64> ells, const Subgroup& G, const Poly& f) {
    const u64 p = G.p();
    auto us = interval_values(I, p);
    const auto& el = G.elements();
    u128 n = 0;
    for (u64 u1 : us)
        for (u64 l1 : ells)
            for (u64 a1 : el)
                for (u64 u2 : us)
                    for (u64 l2 : ells)
                        for (u64 a2 : el)
                            if (mulmod(addmod(u1, f.eval(a1, p), p), l2 % p, p) ==
                                mulmod(addmod(u2, f.eval(a2, p), p), l1 % p, p))
                                ++n;
    return n;
}

u128 count_poly_values_in_interval(const Poly& f, const Subgroup& G, u64 b, const Interval& I) {
    const u64 p = G.p();
    Interval shifted{(u64)(((u128)b + I.b) % p), I.H};
    auto targets = interval_values(shifted, p);
    u128 n = 0;
    for (u64 lambda : G.elements()) {
        u64 v = f.eval(lambda, p);
        for (u64 t : targets)
            if (t == v) ++n;
    }
    return n;
}

} // namespace oracles

} // namespace charlab

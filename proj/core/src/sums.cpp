#include "charlab/sums.hpp"

#include <cmath>
#include <numbers>

#include "charlab/congruences.hpp"
#include "charlab/errors.hpp"

namespace charlab {

namespace {

void require_nonprincipal(const Character& chi) {
    if (chi.principal()) fail(errc::principal_character, "sum needs a nonprincipal character");
}

u64 require_nonzero_shift(u64 a, u64 p) {
    a %= p;
    if (a == 0) fail(errc::invalid_argument, "shift a must be nonzero mod p");
    return a;
}

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

} // namespace

RootSumHistogram sum_subgroup_shift(const Character& chi, u64 a, const Subgroup& G) {
    require_nonprincipal(chi);
    const u64 p = chi.p();
    a = require_nonzero_shift(a, p);
    RootSumHistogram hist(chi.order());
    G.for_each([&](u64 lambda) { hist.add(chi.eval(addmod(a, lambda, p))); });
    return hist;
}

RootSumHistogram sum_interval_subgroup(const Character& chi, u64 a, const Interval& I,
                                       const Subgroup& G, IntervalAlgo algo) {
    require_nonprincipal(chi);
    const u64 p = chi.p();
    a = require_nonzero_shift(a, p);
    std::vector<u64> xs = interval_values(I, p);
    RootSumHistogram hist(chi.order());
    if (algo == IntervalAlgo::Direct) {
        G.for_each([&](u64 lambda) {
            u64 s = mulmod(a, lambda, p);
            for (u64 x : xs) hist.add(chi.eval(addmod(x, s, p)));
        });
        return hist;
    }
    CountTable r(p);
    G.for_each([&](u64 lambda) {
        u64 s = mulmod(a, lambda, p);
        for (u64 x : xs) r.add(addmod(x, s, p));
    });
    r.finalize();
    r.for_each_nonzero([&](u64 u, u64 c) { hist.add_many(chi.eval(u), c); });
    return hist;
}

RootSumHistogram sum_poly_interval_subgroup(const Character& chi, const Poly& f, const Interval& I,
                                            const Subgroup& G) {
    require_nonprincipal(chi);
    const u64 p = chi.p();
    check_poly(f, p);
    std::vector<u64> xs = interval_values(I, p);
    RootSumHistogram hist(chi.order());
    G.for_each([&](u64 lambda) {
        u64 s = f.eval(lambda, p);
        for (u64 x : xs) hist.add(chi.eval(addmod(x, s, p)));
    });
    return hist;
}

RootSumHistogram sum_subgroup_pair(const Character& chi, u64 a, const Subgroup& G, PairAlgo algo) {
    require_nonprincipal(chi);
    const u64 p = chi.p();
    a = require_nonzero_shift(a, p);
    RootSumHistogram hist(chi.order());
    if (algo == PairAlgo::Direct) {
        const std::vector<u64>& el = G.elements();
        for (u64 lambda : el) {
            u64 s = addmod(a, lambda, p);
            for (u64 mu : el) hist.add(chi.eval(addmod(s, mu, p)));
        }
        return hist;
    }
    CountTable F = f_histogram(G);
    F.for_each_nonzero([&](u64 u, u64 c) { hist.add_many(chi.eval(addmod(a, u, p)), c); });
    return hist;
}

RootSumHistogram conj_weighted_interval_triple(const Character& chi, u64 a, const Interval& I,
                                               const Subgroup& G) {
    require_nonprincipal(chi);
    const u64 p = chi.p();
    const u64 d = chi.order();
    a = require_nonzero_shift(a, p);
    std::vector<u64> xs = interval_values(I, p);
    std::vector<u64> shifts; // a*lambda over G
    shifts.reserve(G.order());
    G.for_each([&](u64 lambda) { shifts.push_back(mulmod(a, lambda, p)); });
    RootSumHistogram hist(d);
    G.for_each([&](u64 mu) {
        u64 jm = *chi.eval(mu); // mu is a unit
        for (u64 x : xs) {
            u64 mx = mulmod(mu, x, p);
            for (u64 s : shifts) {
                CharValue v = chi.eval(addmod(mx, s, p));
                if (v)
                    hist.add((*v + d - jm) % d);
                else
                    ++hist.zero_terms;
            }
        }
    });
    return hist;
}

RootSumHistogram conj_weighted_pair_triple(const Character& chi, u64 a, const Subgroup& G,
                                           TripleAlgo algo) {
    require_nonprincipal(chi);
    const u64 p = chi.p();
    const u64 d = chi.order();
    a = require_nonzero_shift(a, p);
    RootSumHistogram hist(d);
    if (algo == TripleAlgo::Literal) {
        const std::vector<u64>& el = G.elements();
        for (u64 theta : el) {
            u64 jt = *chi.eval(theta);
            u64 at = mulmod(a, theta, p);
            for (u64 lambda : el) {
                u64 s = addmod(at, lambda, p);
                for (u64 mu : el) {
                    CharValue v = chi.eval(addmod(s, mu, p));
                    if (v)
                        hist.add((*v + d - jt) % d);
                    else
                        ++hist.zero_terms;
                }
            }
        }
        return hist;
    }
    CountTable F = f_histogram(G);
    G.for_each([&](u64 theta) {
        u64 jt = *chi.eval(theta);
        u64 at = mulmod(a, theta, p);
        F.for_each_nonzero([&](u64 u, u64 c) {
            CharValue v = chi.eval(addmod(at, u, p));
            if (v)
                hist.add_many((*v + d - jt) % d, c);
            else
                hist.zero_terms += c;
        });
    });
    return hist;
}

std::complex<double> sparse_exp_sum(const FieldCtx& ctx, std::span<const std::pair<u64, u64>> terms) {
    const u64 p = ctx.p;
    bool any = false;
    for (const auto& [a, k] : terms) {
        if (k == 0) fail(errc::invalid_argument, "exponent k must be positive");
        if (a % p != 0) any = true;
    }
    if (!any) fail(errc::all_coefficients_zero, "sparse exponential sum needs a nonzero coefficient");
    double re = 0, im = 0;
    for (u64 x = 1; x < p; ++x) {
        u64 num = 0;
        for (const auto& [a, k] : terms) num = addmod(num, mulmod(a % p, powmod(x, k, p), p), p);
        double ang = 2.0 * std::numbers::pi * (double)num / (double)p;
        re += std::cos(ang);
        im += std::sin(ang);
    }
    return {re, im};
}

double SubgroupExpSum::identity_gap() const {
    return std::abs(value / (double)T - substituted / (double)full_range);
}

SubgroupExpSum subgroup_exp_sum(const FieldCtx& ctx, u64 a, const Poly& f, const Subgroup& G) {
    const u64 p = ctx.p;
    a %= p;
    if (a == 0) fail(errc::zero_coefficient, "subgroup exponential sum needs a != 0");
    check_poly(f, p);
    SubgroupExpSum out;
    out.T = G.order();
    out.full_range = p - 1;
    double re = 0, im = 0;
    G.for_each([&](u64 lambda) {
        u64 num = mulmod(a, f.eval(lambda, p), p);
        double ang = 2.0 * std::numbers::pi * (double)num / (double)p;
        re += std::cos(ang);
        im += std::sin(ang);
    });
    out.value = {re, im};
    const u64 e = (p - 1) / G.order();
    re = im = 0;
    for (u64 x = 1; x < p; ++x) {
        u64 num = mulmod(a, f.eval(powmod(x, e, p), p), p);
        double ang = 2.0 * std::numbers::pi * (double)num / (double)p;
        re += std::cos(ang);
        im += std::sin(ang);
    }
    out.substituted = {re, im};
    return out;
}

namespace {

// cyclic convolution over Z[Z_d]
std::vector<u128> cyclic_conv(const std::vector<u128>& a, const std::vector<u128>& b, u64 d) {
    std::vector<u128> out(d, 0);
    for (u64 i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (u64 j = 0; j < d; ++j) {
            if (!b[j]) continue;
            u64 t = i + j;
            if (t >= d) t -= d;
            out[t] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

MomentReport davenport_erdos_moment(const Character& chi, u64 R, u64 nu) {
    require_nonprincipal(chi);
    const u64 p = chi.p();
    const u64 d = chi.order();
    if (R == 0 || R >= p) fail(errc::invalid_argument, "window length R must be in [1, p-1]");
    if (nu == 0) fail(errc::invalid_argument, "nu must be >= 1");
    // bins accumulate p * R^(2nu) worth of mass; keep it inside 128 bits
    if (2.0 * (double)nu * std::log2((double)R + 1) + std::log2((double)p) > 120.0)
        fail(errc::budget_exceeded, "moment accumulator would overflow 128 bits");

    MomentReport rep;
    rep.p = p;
    rep.R = R;
    rep.nu = nu;
    rep.d = d;
    rep.bins.assign(d, 0);

    // value-index counts of the current window chi(v+1..v+R), slid one step
    // per v; zeros drop out of the inner sum so only unit terms are binned
    std::vector<u64> window(d, 0);
    std::vector<CharValue> vals(p);
    for (u64 x = 0; x < p; ++x) vals[x] = chi.eval(x);
    for (u64 r = 1; r <= R; ++r) {
        CharValue v = vals[r % p];
        if (v) ++window[*v];
    }
    std::vector<u128> base(d), acc(d);
    for (u64 v = 0;; ++v) {
        // base = window convolved with its reversal = |S_v|^2 in the group ring
        for (u64 t = 0; t < d; ++t) {
            u128 s = 0;
            for (u64 j = 0; j < d; ++j) {
                u64 j2 = j + t < d ? j + t : j + t - d;
                s += (u128)window[j] * window[j2];
            }
            base[t] = s;
        }
        acc = base;
        for (u64 step = 1; step < nu; ++step) acc = cyclic_conv(acc, base, d);
        for (u64 t = 0; t < d; ++t) rep.bins[t] += acc[t];
        if (v + 1 == p) break;
        CharValue out = vals[(v + 1) % p];
        if (out) --window[*out];
        CharValue in = vals[(v + 1 + R) % p];
        if (in) ++window[*in];
    }

    long double val = 0;
    for (u64 t = 0; t < d; ++t) {
        if (!rep.bins[t]) continue;
        long double ang = 2.0L * std::numbers::pi_v<long double> * (long double)t / (long double)d;
        val += (long double)rep.bins[t] * std::cos(ang);
    }
    rep.value = (double)val;
    rep.rhs = std::pow((double)R, 2.0 * (double)nu) * std::sqrt((double)p) +
              std::pow((double)R, (double)nu) * (double)p;
    rep.ratio = rep.value / rep.rhs;
    return rep;
}

} // namespace charlab

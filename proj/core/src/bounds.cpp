#include "charlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "charlab/congruences.hpp"
#include "charlab/errors.hpp"
#include "charlab/field.hpp"
#include "charlab/io.hpp"
#include "charlab/parallel.hpp"
#include "charlab/rng.hpp"
#include "charlab/sums.hpp"

namespace charlab {

double weil_rhs(u64 p) { return std::sqrt((double)p); }

double hbk_energy_rhs(u64 T) { return std::pow((double)T, 2.5); }

namespace {

// T <= p^(1/2) and T <= p^(2/3) decided exactly in integers; the 29/48
// breakpoint has no integer form, so extended-precision logs decide it
bool le_sqrt(u64 T, u64 p) { return (u128)T * T <= p; }

bool le_two_thirds(u64 T, u64 p) {
    if (T >= (1ull << 42)) return false; // T^3 >= 2^126 > p^2 for p < 2^62
    return (u128)T * T * T <= (u128)p * p;
}

bool le_29_48(u64 T, u64 p) {
    return 48.0L * std::log((long double)T) <= 29.0L * std::log((long double)p);
}

} // namespace

RegimeValue shkredov_energy_rhs(u64 T, u64 p) {
    if (T == 0 || p < 2) fail(errc::invalid_argument, "need T >= 1, p >= 2");
    if (!le_two_thirds(T, p)) fail(errc::regime_error, "energy bound valid only for T <= p^(2/3)");
    if (le_sqrt(T, p)) return {std::pow((double)T, 32.0 / 13.0), "T<=p^1/2"};
    if (le_29_48(T, p))
        return {std::pow((double)T, 31.0 / 13.0) * std::pow((double)p, 1.0 / 26.0),
                "p^1/2<T<=p^29/48"};
    return {std::pow((double)T, 3.0) * std::pow((double)p, -1.0 / 3.0), "p^29/48<T<=p^2/3"};
}

PairBoundValue thm_gg_rhs(u64 T, u64 p) {
    if (T == 0 || p < 2) fail(errc::invalid_argument, "need T >= 1, p >= 2");
    if (!le_two_thirds(T, p)) fail(errc::regime_error, "pair-sum bound valid only for T <= p^(2/3)");
    PairBoundValue out;
    if (le_sqrt(T, p)) {
        out.value = std::pow((double)T, 19.0 / 26.0) * std::sqrt((double)p);
        out.regime = "T<=p^1/2";
    } else if (le_29_48(T, p)) {
        out.value = std::pow((double)T, 9.0 / 13.0) * std::pow((double)p, 27.0 / 52.0);
        out.regime = "p^1/2<T<=p^29/48";
    } else {
        out.value = (double)T * std::pow((double)p, 1.0 / 3.0);
        out.regime = "p^29/48<T<=p^2/3";
    }
    out.trivial_weil = (double)T * std::sqrt((double)p);
    out.trivial_count = (double)T * (double)T;
    if (out.value >= out.trivial_count * (1.0 - 1e-9)) out.regime += ";nontriviality-threshold";
    return out;
}

NigRhs nig_rhs(u64 H, u64 T, u64 p, u64 nu) {
    if (nu == 0) fail(errc::invalid_argument, "nu must be >= 1");
    NigRhs r;
    r.t = le_sqrt(T, p) ? std::sqrt((double)p) : (double)T; // t = max{T, sqrt(p)}
    double n = (double)nu;
    r.term1 = (double)H * std::pow(r.t, (2 * n + 1) / (2 * n * (n + 1))) *
              std::pow((double)p, -1.0 / (2 * (n + 1)));
    r.term2 = (double)H * (double)H * std::pow(r.t, 1.0 / n) * std::pow((double)p, -1.0 / n);
    r.total = r.term1 + r.term2;
    return r;
}

double thm3_rhs(u64 H, u64 T, u64 p) {
    return (double)H * (double)T * std::pow((double)p, -5.0 / 48.0);
}

std::string bound_csv_header() { return "theorem,p,T,H,char_order,a,observed,rhs,ratio,regime"; }

std::string bound_csv_row(const BoundReport& r) {
    std::string s = r.theorem;
    s += ',' + std::to_string(r.p);
    s += ',' + std::to_string(r.T);
    s += ',';
    if (r.has_H) s += std::to_string(r.H);
    s += ',';
    if (r.has_char) s += std::to_string(r.char_order);
    s += ',';
    if (r.has_a) s += std::to_string(r.a);
    s += ',' + fmt_double(r.observed);
    s += ',' + fmt_double(r.rhs);
    s += ',' + fmt_double(r.ratio);
    s += ',' + r.regime;
    return s;
}

namespace {

struct Rule {
    std::string kind;
    double lo = 0, hi = 0;
    u64 fixed = 0;
};

Rule parse_rule(const std::string& text, const char* what) {
    if (text.empty()) fail(errc::invalid_argument, std::string(what) + " rule missing");
    Rule r;
    std::size_t c1 = text.find(':');
    r.kind = text.substr(0, c1);
    if (r.kind == "full") return r;
    if (c1 == std::string::npos) fail(errc::invalid_argument, std::string(what) + " rule needs a value");
    std::string rest = text.substr(c1 + 1);
    if (r.kind == "fixed") {
        r.fixed = std::stoull(rest);
        return r;
    }
    if (r.kind == "nearest" || r.kind == "largest-below" || r.kind == "pow") {
        r.lo = std::stod(rest);
        return r;
    }
    if (r.kind == "window") {
        std::size_t c2 = rest.find(':');
        if (c2 == std::string::npos)
            fail(errc::invalid_argument, "window rule needs two exponents lo:hi");
        r.lo = std::stod(rest.substr(0, c2));
        r.hi = std::stod(rest.substr(c2 + 1));
        return r;
    }
    fail(errc::invalid_argument, std::string(what) + " rule kind unknown: " + r.kind);
}

// divisor of p-1 selected by the rule, or 0 when the prime is ineligible
u64 select_T(const std::vector<u64>& divisors, u64 p, const Rule& rule) {
    double lp = std::log((double)p);
    if (rule.kind == "full") return p - 1;
    if (rule.kind == "fixed")
        return std::binary_search(divisors.begin(), divisors.end(), rule.fixed) ? rule.fixed : 0;
    if (rule.kind == "nearest" || rule.kind == "largest-below") {
        double target = rule.lo * lp;
        u64 best = 0;
        double best_dist = 0;
        for (u64 d : divisors) {
            if (rule.kind == "largest-below") {
                if (std::log((double)d) <= target + 1e-12 && d > best) best = d;
                continue;
            }
            double dist = std::abs(std::log((double)d) - target);
            if (best == 0 || dist < best_dist - 1e-15) {
                best = d;
                best_dist = dist;
            }
        }
        return best;
    }
    // window: divisors inside [p^lo, p^hi], nearest to the center
    double center = 0.5 * (rule.lo + rule.hi) * lp;
    u64 best = 0;
    double best_dist = 0;
    for (u64 d : divisors) {
        double ld = std::log((double)d);
        if (ld < rule.lo * lp - 1e-12 || ld > rule.hi * lp + 1e-12) continue;
        double dist = std::abs(ld - center);
        if (best == 0 || dist < best_dist - 1e-15) {
            best = d;
            best_dist = dist;
        }
    }
    return best;
}

u64 rule_size(const Rule& rule, u64 p, const char* what) {
    if (rule.kind == "fixed") return rule.fixed;
    if (rule.kind == "pow") {
        u64 v = (u64)std::pow((double)p, rule.lo);
        return std::max<u64>(1, std::min(v, p - 1));
    }
    fail(errc::invalid_argument, std::string(what) + " rule must be fixed:<n> or pow:<theta>");
}

struct PrimeTask {
    u64 p;
    u64 T;
};

} // namespace

std::vector<BoundReport> run_sweep(const SweepSpec& spec) {
    const bool needs_char = spec.theorem == "weil" || spec.theorem == "thm3" ||
                            spec.theorem == "thm-gg" || spec.theorem == "daverdos" ||
                            spec.theorem == "decay";
    const bool needs_H = spec.theorem == "thm3" || spec.theorem == "nig" || spec.theorem == "decay";
    const bool needs_a = spec.theorem == "weil" || spec.theorem == "thm3" ||
                         spec.theorem == "thm-gg" || spec.theorem == "decay";
    if (spec.theorem != "weil" && spec.theorem != "thm3" && spec.theorem != "thm-gg" &&
        spec.theorem != "shkredov" && spec.theorem != "hbk" && spec.theorem != "nig" &&
        spec.theorem != "daverdos" && spec.theorem != "decay")
        fail(errc::invalid_argument, "unknown theorem tag: " + spec.theorem);
    if (needs_a && spec.num_a == 0) fail(errc::invalid_argument, "num_a must be >= 1");
    if (needs_char && spec.char_order < 2)
        fail(errc::invalid_argument, "character order must be >= 2");

    Rule t_rule = parse_rule(spec.t_rule.empty() ? "nearest:0.5" : spec.t_rule, "T");
    Rule h_rule = parse_rule(spec.h_rule.empty() ? "pow:0.25" : spec.h_rule, "H");
    Rule r_rule = parse_rule(spec.r_rule.empty() ? "fixed:2" : spec.r_rule, "R");

    // candidate primes, in ascending order
    std::vector<u64> candidates;
    if (!spec.primes.empty()) {
        candidates = spec.primes;
        std::sort(candidates.begin(), candidates.end());
        for (u64 p : candidates)
            if (!is_prime(p)) fail(errc::invalid_argument, std::to_string(p) + " is not prime");
    } else {
        if (spec.p_lo < 3 || spec.p_hi < spec.p_lo)
            fail(errc::invalid_argument, "prime range must satisfy 3 <= p_lo <= p_hi");
        candidates = primes_in_range(spec.p_lo, spec.p_hi);
    }

    auto eligible_T = [&](u64 p) -> u64 {
        if (needs_char && (p - 1) % spec.char_order != 0) return 0;
        std::vector<u64> divisors = divisors_from_factors(factorize(p - 1));
        u64 T = select_T(divisors, p, t_rule);
        // the pair-sum and energy bounds exist only below p^(2/3); a prime
        // whose selected divisor lands above is skipped like any other
        // ineligible prime instead of aborting the sweep
        if (T && (spec.theorem == "thm-gg" || spec.theorem == "shkredov") &&
            !le_two_thirds(T, p))
            return 0;
        return T;
    };

    std::vector<PrimeTask> tasks;
    if (spec.grid_points > 0 && !candidates.empty()) {
        double llo = std::log((double)candidates.front());
        double lhi = std::log((double)candidates.back());
        std::size_t cursor_floor = 0;
        for (unsigned j = 0; j < spec.grid_points; ++j) {
            double frac = spec.grid_points == 1 ? 0.0 : (double)j / (spec.grid_points - 1);
            double target = std::exp(llo + frac * (lhi - llo));
            std::size_t i = std::lower_bound(candidates.begin(), candidates.end(), (u64)target) -
                            candidates.begin();
            i = std::max(i, cursor_floor); // never reuse a prime already taken
            for (; i < candidates.size(); ++i) {
                u64 T = eligible_T(candidates[i]);
                if (T) {
                    tasks.push_back({candidates[i], T});
                    cursor_floor = i + 1;
                    break;
                }
            }
        }
    } else {
        for (u64 p : candidates) {
            u64 T = eligible_T(p);
            if (T) tasks.push_back({p, T});
            if (spec.max_primes && tasks.size() >= spec.max_primes) break;
        }
    }
    if (spec.max_primes && tasks.size() > spec.max_primes) tasks.resize(spec.max_primes);

    std::vector<std::vector<BoundReport>> per_prime(tasks.size());
    parallel_for(tasks.size(), spec.threads, [&](std::size_t ti) {
        const u64 p = tasks[ti].p;
        const u64 T = tasks[ti].T;
        // sweeps never need general-purpose dlog; character evaluation brings
        // its own tables sized to the character order
        FieldCtx ctx = build_field_ctx(p, IndexPolicy::Never);
        Subgroup G(ctx, T);
        std::vector<BoundReport>& rows = per_prime[ti];

        u64 H = needs_H ? rule_size(h_rule, p, "H") : 0;
        std::vector<u64> shifts;
        if (needs_a) {
            SplitMix64 rng(derive_seed(spec.seed, spec.theorem + "|p=" + std::to_string(p)));
            for (unsigned i = 0; i < spec.num_a; ++i) shifts.push_back(1 + rng.below(p - 1));
            std::sort(shifts.begin(), shifts.end());
        }

        auto base_row = [&](void) {
            BoundReport r;
            r.theorem = spec.theorem;
            r.p = p;
            r.T = T;
            r.H = H;
            r.has_H = needs_H;
            r.char_order = spec.char_order;
            r.has_char = needs_char;
            return r;
        };

        if (spec.theorem == "shkredov" || spec.theorem == "hbk") {
            CountReport e = additive_energy(G, EnergyAlgo::Histogram);
            BoundReport r = base_row();
            r.observed = (double)e.count;
            if (spec.theorem == "hbk") {
                r.rhs = hbk_energy_rhs(T);
            } else {
                RegimeValue rv = shkredov_energy_rhs(T, p);
                r.rhs = rv.value;
                r.regime = rv.regime;
            }
            r.ratio = r.observed / r.rhs;
            rows.push_back(r);
            return;
        }
        if (spec.theorem == "nig") {
            CountReport n = count_nig(Interval{0, H}, G);
            BoundReport r = base_row();
            r.observed = (double)n.count;
            NigRhs nr = nig_rhs(H, T, p, spec.nu);
            r.rhs = nr.total;
            r.ratio = r.observed / r.rhs;
            r.regime = "nu=" + std::to_string(spec.nu) + (le_sqrt(T, p) ? ";t=sqrt(p)" : ";t=T");
            rows.push_back(r);
            return;
        }

        Character chi = canonical_character(ctx, spec.char_order);
        if (spec.theorem == "daverdos") {
            u64 R = rule_size(r_rule, p, "R");
            MomentReport m = davenport_erdos_moment(chi, R, spec.nu);
            BoundReport r = base_row();
            r.observed = m.value;
            r.rhs = m.rhs;
            r.ratio = m.ratio;
            r.regime = "R=" + std::to_string(R) + ";nu=" + std::to_string(spec.nu);
            rows.push_back(r);
            return;
        }

        // per-shift sums; the F table for pair sums is shared across shifts
        CountTable F(1);
        if (spec.theorem == "thm-gg") F = f_histogram(G);
        for (u64 a : shifts) {
            BoundReport r = base_row();
            r.a = a;
            r.has_a = true;
            if (spec.theorem == "weil") {
                r.observed = sum_subgroup_shift(chi, a, G).magnitude();
                r.rhs = weil_rhs(p);
            } else if (spec.theorem == "thm3" || spec.theorem == "decay") {
                r.observed = sum_interval_subgroup(chi, a, Interval{0, H}, G).magnitude();
                r.rhs = spec.theorem == "thm3" ? thm3_rhs(H, T, p) : (double)H * (double)T;
            } else { // thm-gg
                RootSumHistogram hist(chi.order());
                F.for_each_nonzero(
                    [&](u64 u, u64 c) { hist.add_many(chi.eval(addmod(a, u, p)), c); });
                r.observed = hist.magnitude();
                PairBoundValue pb = thm_gg_rhs(T, p);
                r.rhs = pb.value;
                r.regime = pb.regime;
            }
            r.ratio = r.observed / r.rhs;
            rows.push_back(r);
        }
    });

    std::vector<BoundReport> out;
    for (auto& rows : per_prime)
        for (auto& r : rows) out.push_back(std::move(r));
    std::stable_sort(out.begin(), out.end(), [](const BoundReport& x, const BoundReport& y) {
        return std::tuple(x.p, x.T, x.H, x.char_order, x.a) <
               std::tuple(y.p, y.T, y.H, y.char_order, y.a);
    });
    return out;
}

std::string sweep_to_csv(const std::vector<BoundReport>& rows) {
    std::string s = bound_csv_header() + "\n";
    for (const auto& r : rows) s += bound_csv_row(r) + "\n";
    return s;
}

} // namespace charlab

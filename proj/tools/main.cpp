// charlab: command-line surface over the exact character-sum laboratory.
// Exit codes: 0 ok, 2 validation error, 3 compute error, 4 oracle mismatch.

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charlab/bounds.hpp"
#include "charlab/characters.hpp"
#include "charlab/congruences.hpp"
#include "charlab/domain.hpp"
#include "charlab/errors.hpp"
#include "charlab/field.hpp"
#include "charlab/io.hpp"
#include "charlab/primroots.hpp"
#include "charlab/rng.hpp"
#include "charlab/sums.hpp"

using namespace charlab;
using nlohmann::json;

namespace {

struct Globals {
    u64 seed = 0;
    unsigned threads = 1;
    std::string format = "csv";
    std::string out;
    bool oracle = false;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) fail(errc::invalid_argument, "cannot open output file " + g.out);
    f.write(text.data(), (std::streamsize)text.size());
}

u64 parse_u64(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail(errc::invalid_argument, std::string(what) + ": expected an unsigned integer, got '" + s + "'");
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size())
        fail(errc::invalid_argument, std::string(what) + ": value out of range: '" + s + "'");
    return (u64)v;
}

// explicit --a values win; otherwise num_a seeded distinct shifts in [1, p-1]
std::vector<u64> make_shifts(const std::vector<u64>& given, u64 num_a, u64 p, u64 seed,
                             const std::string& label) {
    if (!given.empty()) return given;
    u64 n = std::min<u64>(num_a == 0 ? 1 : num_a, p - 1);
    SplitMix64 rng(derive_seed(seed, label));
    std::set<u64> s;
    while (s.size() < n) s.insert(1 + rng.below(p - 1));
    return {s.begin(), s.end()};
}

void require_equal_hist(const RootSumHistogram& got, const RootSumHistogram& want,
                        const std::string& what) {
    if (got == want) return;
    std::string msg = what;
    if (got.d != want.d)
        msg += ": order " + std::to_string(got.d) + " vs " + std::to_string(want.d);
    else if (got.zero_terms != want.zero_terms)
        msg += ": zero_terms " + std::to_string(got.zero_terms) + " vs " +
               std::to_string(want.zero_terms);
    else
        for (u64 j = 0; j < got.d; ++j)
            if (got.counts[j] != want.counts[j]) {
                msg += ": bin " + std::to_string(j) + " counts " + std::to_string(got.counts[j]) +
                       " vs " + std::to_string(want.counts[j]);
                break;
            }
    fail(errc::oracle_mismatch, msg);
}

void require_equal_count(u128 got, u128 want, const std::string& what) {
    if (got == want) return;
    fail(errc::oracle_mismatch, what + ": " + fmt_u128(got) + " vs " + fmt_u128(want));
}

// Cross-check route that shares no table with Character: every term goes
// through a full Pohlig-Hellman discrete log on an index-free context.
RootSumHistogram dlog_route_hist(const FieldCtx& sctx, u64 k, u64 d, const std::vector<u64>& xs) {
    if (xs.size() > 2'000'000)
        fail(errc::oracle_too_large, "dlog-route cross-check capped at 2e6 terms");
    const u64 p = sctx.p;
    const u64 step = (p - 1) / d;
    RootSumHistogram h(d);
    for (u64 x : xs) {
        u64 r = x % p;
        if (r == 0) {
            h.add(std::nullopt);
            continue;
        }
        h.add(mulmod(k, dlog(sctx, r), p - 1) / step);
    }
    return h;
}

// ---- field-info -------------------------------------------------------------

struct FieldInfoArgs {
    u64 p = 0;
};

std::string factor_text(const std::vector<Factor>& fs) {
    std::string s;
    for (const Factor& f : fs) {
        if (!s.empty()) s += '*';
        s += std::to_string(f.prime);
        if (f.exponent > 1) s += '^' + std::to_string(f.exponent);
    }
    return s;
}

void run_field_info(const Globals& g, const FieldInfoArgs& a) {
    FieldCtx ctx = build_field_ctx(a.p);
    std::vector<u64> divisors = ctx.divisors_pm1();
    if (g.format == "json") {
        json j;
        j["p"] = ctx.p;
        j["g"] = ctx.g;
        json fs = json::array();
        for (const Factor& f : ctx.pm1_factors) fs.push_back({{"prime", f.prime}, {"exponent", f.exponent}});
        j["pm1_factors"] = fs;
        j["divisors"] = divisors;
        emit(g, j.dump(2) + "\n");
        return;
    }
    std::string divs;
    for (u64 d : divisors) {
        if (!divs.empty()) divs += ' ';
        divs += std::to_string(d);
    }
    std::string s = "p,g,pm1,num_divisors,divisors\n";
    s += std::to_string(ctx.p) + ',' + std::to_string(ctx.g) + ',' + factor_text(ctx.pm1_factors) +
         ',' + std::to_string(divisors.size()) + ',' + divs + '\n';
    emit(g, s);
}

// ---- charsum ----------------------------------------------------------------

struct CharsumArgs {
    std::string kind;
    u64 p = 0, T = 0;
    u64 order = 2;
    u64 k = 0;
    bool k_set = false;
    std::vector<u64> a;
    u64 num_a = 0;
    u64 b = 0, H = 0;
    std::vector<u64> poly;
    std::string algo = "direct";
};

struct CharsumRow {
    u64 a = 0;
    bool has_a = false;
    RootSumHistogram hist;
    std::string bound;
    double rhs = 0;
};

void run_charsum(const Globals& g, const CharsumArgs& args) {
    FieldCtx ctx = build_field_ctx(args.p);
    if (args.T == 0) fail(errc::invalid_argument, "--T is required");
    Subgroup G(ctx, args.T);
    Character chi = args.k_set ? Character(ctx, args.k) : canonical_character(ctx, args.order);
    const u64 p = ctx.p;

    const bool needs_interval = args.kind == "interval" || args.kind == "poly";
    if (needs_interval && args.H == 0)
        fail(errc::invalid_argument, args.kind + " kind requires --H >= 1");
    Interval I{args.b, args.H};

    IntervalAlgo ialgo = IntervalAlgo::Direct;
    PairAlgo palgo = PairAlgo::Direct;
    if (args.kind == "interval") {
        if (args.algo == "via-ru")
            ialgo = IntervalAlgo::ViaRU;
        else if (args.algo != "direct")
            fail(errc::invalid_argument, "interval algo must be direct or via-ru");
    } else if (args.kind == "pair") {
        if (args.algo == "via-f")
            palgo = PairAlgo::ViaF;
        else if (args.algo != "direct")
            fail(errc::invalid_argument, "pair algo must be direct or via-f");
    } else if (args.algo != "direct") {
        fail(errc::invalid_argument, args.kind + " kind has a single algorithm");
    }

    Poly f;
    if (args.kind == "poly") {
        if (args.poly.empty()) fail(errc::invalid_argument, "poly kind requires --poly c0,c1,...");
        f.coeffs = args.poly;
    }

    // index-free context for the independent dlog-route cross-check
    FieldCtx slow_ctx;
    if (g.oracle && (args.kind == "shift" || args.kind == "poly"))
        slow_ctx = build_field_ctx(p, IndexPolicy::Never);

    std::vector<CharsumRow> rows;
    if (args.kind == "poly") {
        CharsumRow r;
        r.hist = sum_poly_interval_subgroup(chi, f, I, G);
        if (g.oracle) {
            std::vector<u64> xs;
            for (u64 i = 0; i < I.H; ++i) {
                u64 x = interval_element(I, i, p);
                G.for_each([&](u64 lam) { xs.push_back(addmod(x, f.eval(lam, p), p)); });
            }
            require_equal_hist(r.hist, dlog_route_hist(slow_ctx, chi.k(), chi.order(), xs),
                               "poly sum vs dlog route");
        }
        r.bound = "trivial";
        r.rhs = (double)I.H * (double)args.T;
        rows.push_back(std::move(r));
    } else {
        std::vector<u64> shifts = make_shifts(args.a, args.num_a, p, g.seed,
                                              "charsum|" + args.kind + "|p=" + std::to_string(p));
        for (u64 a : shifts) {
            CharsumRow r;
            r.a = a;
            r.has_a = true;
            if (args.kind == "shift") {
                r.hist = sum_subgroup_shift(chi, a, G);
                if (g.oracle) {
                    std::vector<u64> xs;
                    G.for_each([&](u64 lam) { xs.push_back(addmod(a % p, lam, p)); });
                    require_equal_hist(r.hist, dlog_route_hist(slow_ctx, chi.k(), chi.order(), xs),
                                       "shift sum vs dlog route");
                }
                r.bound = "weil";
                r.rhs = weil_rhs(p);
            } else if (args.kind == "interval") {
                r.hist = sum_interval_subgroup(chi, a, I, G, ialgo);
                if (g.oracle) {
                    IntervalAlgo other =
                        ialgo == IntervalAlgo::Direct ? IntervalAlgo::ViaRU : IntervalAlgo::Direct;
                    require_equal_hist(r.hist, sum_interval_subgroup(chi, a, I, G, other),
                                       "interval algo cross-check");
                }
                r.bound = "thm3";
                r.rhs = thm3_rhs(I.H, args.T, p);
            } else { // pair
                r.hist = sum_subgroup_pair(chi, a, G, palgo);
                if (g.oracle) {
                    PairAlgo other = palgo == PairAlgo::Direct ? PairAlgo::ViaF : PairAlgo::Direct;
                    require_equal_hist(r.hist, sum_subgroup_pair(chi, a, G, other),
                                       "pair algo cross-check");
                }
                try {
                    PairBoundValue pb = thm_gg_rhs(args.T, p);
                    r.bound = "thm-gg";
                    r.rhs = pb.value;
                } catch (const Error& e) {
                    if (e.code() != errc::regime_error) throw;
                    r.bound = "trivial";
                    r.rhs = (double)args.T * (double)args.T;
                }
            }
            rows.push_back(std::move(r));
        }
    }

    const bool has_interval_cols = needs_interval;
    if (g.format == "json") {
        json arr = json::array();
        for (const CharsumRow& r : rows) {
            json row;
            row["kind"] = args.kind;
            row["p"] = p;
            row["T"] = args.T;
            row["char_order"] = chi.order();
            row["k"] = chi.k();
            if (r.has_a) row["a"] = r.a;
            if (has_interval_cols) {
                row["b"] = I.b;
                row["H"] = I.H;
            }
            if (args.kind == "poly") row["poly"] = f.text();
            if (args.kind == "interval" || args.kind == "pair") row["algo"] = args.algo;
            row["terms"] = r.hist.total_terms();
            row["zero_terms"] = r.hist.zero_terms;
            row["digest"] = r.hist.digest();
            auto v = r.hist.to_complex();
            row["value_re"] = v.real();
            row["value_im"] = v.imag();
            row["magnitude"] = r.hist.magnitude();
            row["bound"] = r.bound;
            row["rhs"] = r.rhs;
            row["ratio"] = r.hist.magnitude() / r.rhs;
            if (g.oracle) row["oracle"] = "ok";
            arr.push_back(row);
        }
        emit(g, arr.dump(2) + "\n");
        return;
    }
    std::string s =
        "kind,p,T,char_order,k,a,b,H,poly,algo,terms,zero_terms,digest,value_re,value_im,"
        "magnitude,bound,rhs,ratio,oracle\n";
    for (const CharsumRow& r : rows) {
        s += args.kind + ',' + std::to_string(p) + ',' + std::to_string(args.T) + ',' +
             std::to_string(chi.order()) + ',' + std::to_string(chi.k()) + ',';
        s += r.has_a ? std::to_string(r.a) : "";
        s += ',';
        s += has_interval_cols ? std::to_string(I.b) : "";
        s += ',';
        s += has_interval_cols ? std::to_string(I.H) : "";
        s += ',';
        s += args.kind == "poly" ? f.text() : "";
        s += ',';
        s += (args.kind == "interval" || args.kind == "pair") ? args.algo : "";
        s += ',' + std::to_string(r.hist.total_terms()) + ',' + std::to_string(r.hist.zero_terms) +
             ',' + r.hist.digest();
        auto v = r.hist.to_complex();
        s += ',' + fmt_double(v.real()) + ',' + fmt_double(v.imag()) + ',' +
             fmt_double(r.hist.magnitude());
        s += ',' + r.bound + ',' + fmt_double(r.rhs) + ',' +
             fmt_double(r.hist.magnitude() / r.rhs);
        s += ',';
        s += g.oracle ? "ok" : "";
        s += '\n';
    }
    emit(g, s);
}

// ---- count reports (energy, counts) ------------------------------------------

std::string count_csv_header() {
    return "quantity,p,params,count,main_term,bound_rhs,ratio,oracle_count,notes";
}

std::string count_csv_row(const CountReport& r) {
    std::string s = r.quantity + ',' + std::to_string(r.p) + ',' + r.params + ',' +
                    fmt_u128(r.count) + ',';
    s += r.main_term ? fmt_double(*r.main_term) : "";
    s += ',';
    s += r.bound_rhs ? fmt_double(*r.bound_rhs) : "";
    s += ',';
    s += r.ratio ? fmt_double(*r.ratio) : "";
    s += ',';
    s += r.oracle_count ? fmt_u128(*r.oracle_count) : "";
    s += ',' + r.notes;
    return s;
}

json count_json_row(const CountReport& r) {
    json row;
    row["quantity"] = r.quantity;
    row["p"] = r.p;
    row["params"] = r.params;
    row["count"] = fmt_u128(r.count); // string: may exceed 64 bits
    if (r.main_term) row["main_term"] = *r.main_term;
    if (r.bound_rhs) row["bound_rhs"] = *r.bound_rhs;
    if (r.ratio) row["ratio"] = *r.ratio;
    if (r.oracle_count) row["oracle_count"] = fmt_u128(*r.oracle_count);
    if (!r.notes.empty()) row["notes"] = r.notes;
    return row;
}

void emit_count_report(const Globals& g, const CountReport& r) {
    if (g.format == "json") {
        emit(g, count_json_row(r).dump(2) + "\n");
        return;
    }
    emit(g, count_csv_header() + "\n" + count_csv_row(r) + "\n");
}

struct EnergyArgs {
    u64 p = 0, T = 0;
    std::string algo = "histogram";
};

void run_energy(const Globals& g, const EnergyArgs& a) {
    FieldCtx ctx = build_field_ctx(a.p);
    if (a.T == 0) fail(errc::invalid_argument, "--T is required");
    Subgroup G(ctx, a.T);
    EnergyAlgo algo;
    if (a.algo == "histogram")
        algo = EnergyAlgo::Histogram;
    else if (a.algo == "quadruple")
        algo = EnergyAlgo::Quadruple;
    else
        fail(errc::invalid_argument, "energy algo must be histogram or quadruple");
    CountReport r = additive_energy(G, algo);
    if (g.oracle) {
        EnergyAlgo other =
            algo == EnergyAlgo::Histogram ? EnergyAlgo::Quadruple : EnergyAlgo::Histogram;
        CountReport o = additive_energy(G, other);
        require_equal_count(r.count, o.count, "energy algo cross-check");
        r.oracle_count = o.count;
    }
    emit_count_report(g, r);
}

struct CountsArgs {
    std::string kind;
    u64 p = 0, T = 0, b = 0, H = 0;
    u64 b1 = 0, h1 = 0, b2 = 0, h2 = 0, b3 = 0, h3 = 0, b4 = 0, h4 = 0;
    std::vector<u64> ell;
    std::vector<u64> sset;
    u64 spacing = 0;
    std::vector<u64> poly;
    u64 shift = 0;
};

void run_counts(const Globals& g, const CountsArgs& a) {
    FieldCtx ctx = build_field_ctx(a.p);
    auto need = [&](bool ok, const char* msg) {
        if (!ok) fail(errc::invalid_argument, msg);
    };
    CountReport r;
    if (a.kind == "nig" || a.kind == "q") {
        need(a.T > 0, "--T is required");
        need(a.H > 0, "--H is required");
        Subgroup G(ctx, a.T);
        Interval I{a.b, a.H};
        r = a.kind == "nig" ? count_nig(I, G) : count_q(I, G);
        if (g.oracle) {
            u128 o = a.kind == "nig" ? oracles::count_nig(I, G) : oracles::count_q(I, G);
            require_equal_count(r.count, o, a.kind + " vs brute force");
            r.oracle_count = o;
        }
    } else if (a.kind == "symcong") {
        need(a.h1 > 0 && a.h2 > 0 && a.h3 > 0 && a.h4 > 0, "--h1..--h4 are required");
        Interval J1{a.b1, a.h1}, J2{a.b2, a.h2}, J3{a.b3, a.h3}, J4{a.b4, a.h4};
        r = count_symcong(ctx, J1, J2, J3, J4);
        if (g.oracle) {
            u128 o = oracles::count_symcong(ctx, J1, J2, J3, J4);
            require_equal_count(r.count, o, "symcong vs brute force");
            r.oracle_count = o;
        }
    } else if (a.kind == "w") {
        need(a.H > 0, "--H is required");
        need(!a.ell.empty(), "--ell is required");
        need(!a.sset.empty(), "--s is required");
        SpacedSet S = SpacedSet::make(a.sset, a.spacing);
        Interval I{a.b, a.H};
        r = count_w_quantity(ctx, I, a.ell, S);
        if (g.oracle) {
            u128 o = oracles::count_w_quantity(ctx, I, a.ell, S);
            require_equal_count(r.count, o, "w vs brute force");
            r.oracle_count = o;
        }
    } else if (a.kind == "uhist") {
        need(a.T > 0, "--T is required");
        need(a.H > 0, "--H is required");
        need(!a.ell.empty(), "--ell is required");
        need(!a.poly.empty(), "--poly is required");
        Subgroup G(ctx, a.T);
        Interval I{a.b, a.H};
        Poly f{a.poly};
        UReport ur = u_histogram(I, a.ell, G, f);
        r = ur.report;
        if (g.oracle) {
            u128 o = oracles::u_second_moment(I, a.ell, G, f);
            require_equal_count(r.count, o, "u second moment vs brute force");
            r.oracle_count = o;
        }
    } else if (a.kind == "polyint") {
        need(a.T > 0, "--T is required");
        need(a.H > 0, "--H is required");
        need(!a.poly.empty(), "--poly is required");
        Subgroup G(ctx, a.T);
        Interval I{a.b, a.H};
        Poly f{a.poly};
        r = count_poly_values_in_interval(f, G, a.shift, I);
        if (g.oracle) {
            u128 o = oracles::count_poly_values_in_interval(f, G, a.shift, I);
            require_equal_count(r.count, o, "polyint vs brute force");
            r.oracle_count = o;
        }
    } else {
        fail(errc::invalid_argument, "unknown counts kind: " + a.kind);
    }
    emit_count_report(g, r);
}

// ---- verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string theorem;
    std::string p_range;
    std::vector<u64> primes;
    std::string t_rule = "nearest:0.5";
    std::string h_rule = "pow:0.25";
    std::string r_rule = "fixed:2";
    u64 char_order = 2;
    u64 num_a = 5;
    u64 nu = 1;
    u64 max_primes = 0;
    u64 grid_points = 0;
};

void run_verify(const Globals& g, const VerifyArgs& a) {
    SweepSpec spec;
    spec.theorem = a.theorem;
    if (!a.p_range.empty()) {
        auto pos = a.p_range.find(':');
        if (pos == std::string::npos)
            fail(errc::invalid_argument, "--p-range must be lo:hi");
        spec.p_lo = parse_u64(a.p_range.substr(0, pos), "--p-range lo");
        spec.p_hi = parse_u64(a.p_range.substr(pos + 1), "--p-range hi");
    }
    spec.primes = a.primes;
    if (spec.primes.empty() && a.p_range.empty())
        fail(errc::invalid_argument, "one of --p-range or --primes is required");
    spec.t_rule = a.t_rule;
    spec.h_rule = a.h_rule;
    spec.r_rule = a.r_rule;
    spec.char_order = a.char_order;
    spec.num_a = (unsigned)a.num_a;
    spec.nu = a.nu;
    spec.seed = g.seed;
    spec.threads = g.threads;
    spec.max_primes = a.max_primes;
    spec.grid_points = (unsigned)a.grid_points;
    std::vector<BoundReport> rows = run_sweep(spec);
    if (g.format == "json") {
        json arr = json::array();
        for (const BoundReport& r : rows) {
            json row;
            row["theorem"] = r.theorem;
            row["p"] = r.p;
            row["T"] = r.T;
            if (r.has_H) row["H"] = r.H;
            if (r.has_char) row["char_order"] = r.char_order;
            if (r.has_a) row["a"] = r.a;
            row["observed"] = r.observed;
            row["rhs"] = r.rhs;
            row["ratio"] = r.ratio;
            if (!r.regime.empty()) row["regime"] = r.regime;
            arr.push_back(row);
        }
        emit(g, arr.dump(2) + "\n");
        return;
    }
    emit(g, sweep_to_csv(rows));
}

// ---- uscan ----------------------------------------------------------------------

struct UscanArgs {
    u64 Q = 0;
    u64 max_weight = 62;
    bool no_three_bit = false;
    u64 ceiling = 10'000'000;
};

void run_uscan(const Globals& g, const UscanArgs& a) {
    ScanOptions opt;
    opt.Q = a.Q;
    opt.max_weight = (unsigned)a.max_weight;
    opt.with_three_bit = !a.no_three_bit;
    opt.threads = g.threads;
    opt.ceiling = a.ceiling;
    ScanResult res = scan_primes(opt);
    if (g.format == "json") {
        emit(g, scan_summary_json(res));
        return;
    }
    emit(g, scan_to_csv(res));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-sum and congruence-count laboratory over F_p"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file mirroring long flags; flags win");

    Globals g;
    app.add_option("--seed", g.seed, "global RNG seed; all randomness derives from it");
    app.add_option("--threads", g.threads, "worker cap for sweeps and scans");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "write output to a file instead of stdout");
    app.add_flag("--oracle", g.oracle, "brute-force cross-check; mismatch aborts with exit 4");

    FieldInfoArgs fi;
    auto* c_fi = app.add_subcommand("field-info", "prime field summary: factors, primitive root, divisors");
    c_fi->fallthrough();
    c_fi->add_option("p", fi.p, "odd prime modulus")->required();

    CharsumArgs cs;
    auto* c_cs = app.add_subcommand("charsum", "exact character sums over subgroups and intervals");
    c_cs->fallthrough();
    c_cs->add_option("kind", cs.kind, "shift | interval | poly | pair")
        ->required()
        ->check(CLI::IsMember({"shift", "interval", "poly", "pair"}));
    c_cs->add_option("--p", cs.p, "odd prime modulus")->required();
    c_cs->add_option("--T", cs.T, "subgroup order, a divisor of p-1");
    c_cs->add_option("--order", cs.order, "character order (canonical character); default 2");
    auto* opt_k = c_cs->add_option("--k", cs.k, "character exponent on the smallest primitive root (overrides --order)");
    c_cs->add_option("--a", cs.a, "explicit shifts (repeat or comma-separate)")->delimiter(',');
    c_cs->add_option("--num-a", cs.num_a, "seeded random shifts when --a is absent (default 1)");
    c_cs->add_option("--b", cs.b, "interval start shift; interval is {b+1,...,b+H}");
    c_cs->add_option("--H", cs.H, "interval length");
    c_cs->add_option("--poly", cs.poly, "polynomial coefficients, ascending degree, comma-separated")
        ->delimiter(',');
    c_cs->add_option("--algo", cs.algo, "interval: direct|via-ru; pair: direct|via-f");

    EnergyArgs en;
    auto* c_en = app.add_subcommand("energy", "additive energy of a multiplicative subgroup");
    c_en->fallthrough();
    c_en->add_option("--p", en.p, "odd prime modulus")->required();
    c_en->add_option("--T", en.T, "subgroup order, a divisor of p-1");
    c_en->add_option("--algo", en.algo, "histogram | quadruple");

    CountsArgs co;
    auto* c_co = app.add_subcommand("counts", "exact congruence counts with main-term comparisons");
    c_co->fallthrough();
    c_co->add_option("kind", co.kind, "nig | q | symcong | w | uhist | polyint")
        ->required()
        ->check(CLI::IsMember({"nig", "q", "symcong", "w", "uhist", "polyint"}));
    c_co->add_option("--p", co.p, "odd prime modulus")->required();
    c_co->add_option("--T", co.T, "subgroup order");
    c_co->add_option("--b", co.b, "interval start shift");
    c_co->add_option("--H", co.H, "interval length");
    c_co->add_option("--b1", co.b1, "box 1 start");
    c_co->add_option("--h1", co.h1, "box 1 length");
    c_co->add_option("--b2", co.b2, "box 2 start");
    c_co->add_option("--h2", co.h2, "box 2 length");
    c_co->add_option("--b3", co.b3, "box 3 start");
    c_co->add_option("--h3", co.h3, "box 3 length");
    c_co->add_option("--b4", co.b4, "box 4 start");
    c_co->add_option("--h4", co.h4, "box 4 length");
    c_co->add_option("--ell", co.ell, "prime moduli list, comma-separated")->delimiter(',');
    c_co->add_option("--s", co.sset, "spaced-set elements, comma-separated")->delimiter(',');
    c_co->add_option("--spacing", co.spacing, "required gap: elements must differ by more than this");
    c_co->add_option("--poly", co.poly, "polynomial coefficients, ascending degree")->delimiter(',');
    c_co->add_option("--shift", co.shift, "outer shift for polyint: counts f(lambda) in shift + I");

    VerifyArgs vf;
    auto* c_vf = app.add_subcommand("verify", "bound-vs-observed ratio sweeps, CSV per row");
    c_vf->fallthrough();
    c_vf->add_option("theorem", vf.theorem,
                     "weil | thm3 | thm-gg | shkredov | hbk | nig | daverdos | decay")
        ->required()
        ->check(CLI::IsMember(
            {"weil", "thm3", "thm-gg", "shkredov", "hbk", "nig", "daverdos", "decay"}));
    c_vf->add_option("--p-range", vf.p_range, "inclusive prime range lo:hi");
    c_vf->add_option("--primes", vf.primes, "explicit prime list (wins over --p-range)")
        ->delimiter(',');
    c_vf->add_option("--t-rule", vf.t_rule,
                     "nearest:<theta> | largest-below:<theta> | window:<lo>:<hi> | fixed:<T> | full");
    c_vf->add_option("--h-rule", vf.h_rule, "pow:<theta> | fixed:<H>");
    c_vf->add_option("--r-rule", vf.r_rule, "pow:<theta> | fixed:<R> (daverdos window)");
    c_vf->add_option("--char-order", vf.char_order, "canonical character order (default 2)");
    c_vf->add_option("--num-a", vf.num_a, "seeded shifts per (p,T,H) tuple");
    c_vf->add_option("--nu", vf.nu, "moment parameter for nig / daverdos");
    c_vf->add_option("--max-primes", vf.max_primes, "stop after this many eligible primes (0 = all)");
    c_vf->add_option("--grid-points", vf.grid_points,
                     "geometric prime grid across the range (0 = every eligible prime)");

    UscanArgs us;
    auto* c_us = app.add_subcommand("uscan", "minimum-weight primitive root scan over primes <= Q");
    c_us->fallthrough();
    c_us->add_option("--Q", us.Q, "scan all primes <= Q")->required();
    c_us->add_option("--max-weight", us.max_weight, "abandon a prime beyond this popcount");
    c_us->add_flag("--no-three-bit", us.no_three_bit, "skip the 2^m+2^k+1 witness search");
    c_us->add_option("--ceiling", us.ceiling, "refuse Q beyond this limit");

    try {
        app.parse(argc, argv);
        cs.k_set = opt_k->count() > 0;
        if (*c_fi) run_field_info(g, fi);
        if (*c_cs) run_charsum(g, cs);
        if (*c_en) run_energy(g, en);
        if (*c_co) run_counts(g, co);
        if (*c_vf) run_verify(g, vf);
        if (*c_us) run_uscan(g, us);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.code()) {
        case errc::oracle_mismatch: return 4;
        case errc::factorization_failure:
        case errc::budget_exceeded: return 3;
        default: return 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}

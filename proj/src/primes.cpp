#include "ramsey/primes.hpp"

#include <algorithm>
#include <cmath>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::uint64_t nth_prime_bound_estimate(std::size_t n) {
    if (n < 6) return 15;
    const double x = static_cast<double>(n);
    return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 16;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t bound) : bound_(bound) {
    if (bound_ < 2) throw SpecError("sieve bound must be at least 2");
    if (bound_ > (1ull << 31)) throw SpecError("sieve bound above 2^31 is not supported");
    std::vector<std::uint8_t> composite(bound_ + 1, 0);
    for (std::uint64_t p = 2; p * p <= bound_; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t multiple = p * p; multiple <= bound_; multiple += p)
            composite[multiple] = 1;
    }
    for (std::uint64_t v = 2; v <= bound_; ++v)
        if (!composite[v]) primes_.push_back(v);
}

std::uint64_t PrimeTable::nth(std::size_t n) const {
    if (n == 0) throw SpecError("primes are 1-indexed");
    if (n > primes_.size())
        throw SieveBoundError("prime p_" + std::to_string(n) + " is beyond the sieve bound " +
                                  std::to_string(bound_) + "; a bound of about " +
                                  std::to_string(nth_prime_bound_estimate(n)) + " suffices",
                              nth_prime_bound_estimate(n));
    return primes_[n - 1];
}

std::optional<std::size_t> PrimeTable::index_of(std::uint64_t value) const {
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), value);
    if (it == primes_.end() || *it != value) return std::nullopt;
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

std::vector<std::uint64_t> window_primes(long i, long m, const PrimeTable& table) {
    if (i < 0 || m < 1) throw SpecError("window requires i >= 0 and m >= 1");
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(i) + 1);
    for (long r = 0; r <= i; ++r) out.push_back(table.nth(static_cast<std::size_t>(m + r)));
    return out;
}

std::vector<std::uint32_t> metrical_coloring(long i, long m, const PrimeTable& table) {
    table.nth(static_cast<std::size_t>(m + i + 1));  // alphabet bound must be covered
    const auto primes = window_primes(i, m, table);
    std::vector<std::uint32_t> colors;
    colors.reserve(static_cast<std::size_t>(i) * (i + 1) / 2);
    // lexicographic edge order of K_{i+1}
    for (long r = 0; r <= i; ++r)
        for (long s = r + 1; s <= i; ++s)
            colors.push_back(static_cast<std::uint32_t>(
                primes[s] > primes[r] ? primes[s] - primes[r] : primes[r] - primes[s]));
    return colors;
}

RamseyBase metrical_base(long m, long horizon, const PrimeTable& table) {
    if (m < 1) throw SpecError("prime index m must be >= 1");
    table.nth(static_cast<std::size_t>(m + horizon + 1));  // fail early, naming the bound
    RamseyBase base;
    base.family = GraphFamily::complete_family(1, 0);  // G_i = K_{i+1}
    const PrimeTable* tbl = &table;
    base.alphabet = [tbl, m](long i) {
        return Alphabet{tbl->nth(static_cast<std::size_t>(m + i + 1)), {}};
    };
    base.admissible = [tbl, m](long i) {
        return Admissible::explicit_list({metrical_coloring(i, m, *tbl)});
    };
    return base;
}

namespace {

std::string theta_note(long m) {
    return "theta: vertex r of K_{i+1} carries p_{m+r} for r = 0..i (m = " +
           std::to_string(m) + "); the window alphabet is {0..p_{m+i+1}-1}";
}

// Sorted primes attached to a match, via the fixed vertex assignment.
std::vector<std::uint64_t> match_primes(const TargetMatch& match, long m,
                                        const PrimeTable& table) {
    std::vector<std::uint64_t> primes;
    primes.reserve(match.vertex_map.size());
    for (VertexId v : match.vertex_map)
        primes.push_back(table.nth(static_cast<std::size_t>(m + v)));
    std::sort(primes.begin(), primes.end());
    return primes;
}

// A k-monochromatic path forces a strict arithmetic progression: exactly two
// integers sit at distance k from any value, so the sorted primes must climb
// by k at every step. Violations are engine bugs.
void check_progression(const std::vector<std::uint64_t>& primes, long gap,
                       const std::string& what) {
    for (std::size_t i = 1; i < primes.size(); ++i)
        if (primes[i] - primes[i - 1] != static_cast<std::uint64_t>(gap))
            throw ConsistencyError(what + ": matched vertices do not realize a gap-" +
                                   std::to_string(gap) + " progression");
}

PrimeRun run_window_instance(std::string kind, long t, long k, long m, long horizon,
                             const PrimeTable& table, RunOptions options,
                             const RamseySymbol& symbol,
                             std::optional<long> oracle_index) {
    RamseyBase base = metrical_base(m, horizon, table);
    SearchReport report = ramsey_number(base, symbol, horizon, options);
    report.conventions.push_back(theta_note(m));

    PrimeRun run;
    run.kind = std::move(kind);
    run.t = t;
    run.k = k;
    run.m = m;
    run.horizon = horizon;
    run.candidate = report.candidate;
    run.oracle_index = oracle_index;
    run.oracle_agreement = (report.candidate == oracle_index);
    run.status = report.candidate ? "found" : "not-found-within-horizon";
    if (report.candidate) {
        const auto& match = report.at(*report.candidate).match;
        if (match) {
            run.realizing_primes = match_primes(*match, m, table);
            if (run.k > 0) check_progression(run.realizing_primes, run.k, run.kind);
        }
    }
    run.report = std::move(report);
    return run;
}

}  // namespace

PrimeRun ap_ramsey(long t, long k, long m, long horizon, const PrimeTable& table,
                   RunOptions options) {
    if (t < 1 || k < 1 || m < 1) throw SpecError("ap_ramsey requires t, k, m >= 1");
    if (horizon < 0) throw SpecError("horizon must be >= 0");
    options.backend = Backend::Direct;
    RamseySymbol symbol;
    symbol.uniform = true;
    const LabelTarget target =
        monochromatic_label_target(path_graph(static_cast<VertexId>(t)),
                                   static_cast<std::uint32_t>(k));
    symbol.targets = [target](long) { return std::vector<LabelTarget>{target}; };
    return run_window_instance("ap", t, k, m, horizon, table, options, symbol,
                               oracle_ap_window(t, k, m, horizon, table));
}

PrimeRun twin_prime_ramsey(long m, long horizon, const PrimeTable& table,
                           RunOptions options) {
    PrimeRun run = ap_ramsey(1, 2, m, horizon, table, std::move(options));
    run.kind = "twin";
    return run;
}

PrimeRun greentao_ramsey(long t, long horizon, const PrimeTable& table, RunOptions options) {
    if (t < 1) throw SpecError("greentao_ramsey requires t >= 1");
    if (horizon < 0) throw SpecError("horizon must be >= 0");
    options.backend = Backend::Direct;
    const long m = 1;
    RamseySymbol symbol;
    symbol.uniform = false;
    const Graph path = path_graph(static_cast<VertexId>(t));
    symbol.targets = [path](long i) {
        std::vector<LabelTarget> targets;
        for (long j = 1; j < i; ++j)
            targets.push_back(
                monochromatic_label_target(path, static_cast<std::uint32_t>(j)));
        return targets;
    };
    PrimeRun run = run_window_instance("greentao", t, 0, m, horizon, table, options, symbol,
                                       oracle_greentao_window(t, horizon, table));
    // the realized gap is the matched target's color: gap j for target index j-1
    if (run.candidate && run.report.at(*run.candidate).match) {
        const long gap = static_cast<long>(run.report.at(*run.candidate).match->target_index) + 1;
        check_progression(run.realizing_primes, gap, "greentao");
        run.k = gap;
    }
    return run;
}

PolignacRun polignac_ramsey(long t, long m, long horizon, PolignacMode mode,
                            const PrimeTable& table, RunOptions options) {
    if (t < 1 || m < 1) throw SpecError("polignac_ramsey requires t, m >= 1");
    if (horizon < 0) throw SpecError("horizon must be >= 0");
    options.backend = Backend::Direct;
    table.nth(static_cast<std::size_t>(m + horizon + 1));

    const PrimeTable* tbl = &table;
    RamseyBase base;
    base.family = GraphFamily::complete_family(1, 0);
    base.alphabet = [tbl, m](long i) {
        return Alphabet{tbl->nth(static_cast<std::size_t>(m + i + 1)), {}};
    };
    // forced: the path through consecutive primes; edge {r, r+1} of K_{i+1}
    // carries the consecutive gap p_{m+r+1} - p_{m+r}
    base.admissible = [tbl, m](long i) {
        const Graph member = complete_graph(static_cast<VertexId>(i + 1));
        std::vector<std::pair<EdgeId, std::uint32_t>> forced;
        for (long r = 0; r < i; ++r) {
            const std::uint64_t lo = tbl->nth(static_cast<std::size_t>(m + r));
            const std::uint64_t hi = tbl->nth(static_cast<std::size_t>(m + r + 1));
            forced.emplace_back(*member.edge_between(static_cast<VertexId>(r),
                                                     static_cast<VertexId>(r + 1)),
                                static_cast<std::uint32_t>(hi - lo));
        }
        return Admissible::generated(std::move(forced));
    };

    RamseySymbol symbol;
    symbol.uniform = true;
    const LabelTarget target =
        monochromatic_label_target(complete_graph(2), static_cast<std::uint32_t>(2 * t));
    symbol.targets = [target](long) { return std::vector<LabelTarget>{target}; };

    PolignacRun out;
    out.mode = mode;

    RunOptions primary = options;
    primary.generated_mode = mode == PolignacMode::Exhaustive ? GeneratedMode::Exhaustive
                                                              : GeneratedMode::ShortCircuit;
    SearchReport report = ramsey_number(base, symbol, horizon, primary);
    report.conventions.push_back(theta_note(m));
    report.conventions.push_back(
        "admissible: colorings forced to the metrical values on the consecutive-prime path, "
        "free elsewhere");

    out.run.kind = "polignac";
    out.run.t = t;
    out.run.k = 2 * t;
    out.run.m = m;
    out.run.horizon = horizon;
    out.run.candidate = report.candidate;
    out.run.oracle_index = oracle_consecutive_gap_window(2 * t, m, horizon, table);
    out.run.oracle_agreement = (report.candidate == out.run.oracle_index);
    out.run.status = report.candidate ? "found" : "not-found-within-horizon";
    if (report.candidate) {
        const auto& match = report.at(*report.candidate).match;
        if (match) {
            out.run.realizing_primes = match_primes(*match, m, table);
            check_progression(out.run.realizing_primes, 2 * t, "polignac");
        }
    }

    if (mode == PolignacMode::Both) {
        RunOptions exhaustive = options;
        exhaustive.generated_mode = GeneratedMode::Exhaustive;
        for (long i = 0; i <= horizon; ++i) {
            try {
                const ArrowsOutcome direct = arrows(base, symbol, i, exhaustive);
                out.compared_indices.push_back(i);
                if (direct.holds != report.at(i).arrows) out.modes_agree = false;
            } catch (const CapacityError&) {
                // free-edge completions beyond the enumeration bound
            }
        }
    }

    out.run.report = std::move(report);
    return out;
}

std::vector<ZhangRow> zhang_ramsey_scan(long m_max, long t_max, long horizon,
                                        const PrimeTable& table, RunOptions options) {
    if (m_max < 1 || t_max < 1) throw SpecError("zhang scan requires m_max, t_max >= 1");
    std::vector<ZhangRow> rows;
    rows.reserve(static_cast<std::size_t>(t_max));
    for (long t = 1; t <= t_max; ++t) {
        ZhangRow row;
        row.t = t;
        row.found_for_all_m = true;
        for (long m = 1; m <= m_max; ++m) {
            const PolignacRun run =
                polignac_ramsey(t, m, horizon, PolignacMode::ShortCircuit, table, options);
            row.candidates.push_back(run.run.candidate);
            if (!run.run.candidate) row.found_for_all_m = false;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<long> oracle_ap_window(long t, long k, long m, long horizon,
                                     const PrimeTable& table) {
    std::optional<long> best;
    for (std::size_t s = static_cast<std::size_t>(m);; ++s) {
        if (s > table.count()) break;
        const std::uint64_t first = table.nth(s);
        if (static_cast<std::size_t>(m + horizon) < s) break;  // start beyond the last window
        bool all_prime = true;
        std::size_t last_index = s;
        for (long j = 1; j <= t && all_prime; ++j) {
            const auto idx = table.index_of(first + static_cast<std::uint64_t>(j) * k);
            if (!idx)
                all_prime = false;
            else
                last_index = *idx;
        }
        if (!all_prime) continue;
        const long window = static_cast<long>(last_index) - m;  // window must reach p_{last}
        if (window <= horizon && (!best || window < *best)) best = window;
    }
    return best;
}

std::optional<long> oracle_consecutive_gap_window(long gap, long m, long horizon,
                                                  const PrimeTable& table) {
    for (long r = 0; r < horizon; ++r) {
        const std::uint64_t lo = table.nth(static_cast<std::size_t>(m + r));
        const std::uint64_t hi = table.nth(static_cast<std::size_t>(m + r + 1));
        if (hi - lo == static_cast<std::uint64_t>(gap)) return r + 1;
    }
    return std::nullopt;
}

std::optional<long> oracle_greentao_window(long t, long horizon, const PrimeTable& table) {
    const long m = 1;
    std::optional<long> best;
    for (long gap = 1; gap < horizon; ++gap) {
        const auto window = oracle_ap_window(t, gap, m, horizon, table);
        if (!window) continue;
        const long needed = std::max(*window, gap + 1);  // the gap must satisfy gap < i
        if (needed <= horizon && (!best || needed < *best)) best = needed;
    }
    return best;
}

}  // namespace ramsey

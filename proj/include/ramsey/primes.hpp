#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/engine.hpp"

namespace ramsey {

constexpr std::uint64_t kDefaultSieveBound = 10'000'000;

/// Eratosthenes table; primes are 1-indexed (nth(1) = 2).
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t bound = kDefaultSieveBound);

    std::uint64_t bound() const { return bound_; }
    std::size_t count() const { return primes_.size(); }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    /// Throws SieveBoundError (naming an adequate bound) when n > count().
    std::uint64_t nth(std::size_t n) const;
    std::optional<std::size_t> index_of(std::uint64_t value) const;  // 1-based

private:
    std::uint64_t bound_;
    std::vector<std::uint64_t> primes_;
};

/// The primes p_m..p_{m+i} attached to the vertices of K_{i+1}.
std::vector<std::uint64_t> window_primes(long i, long m, const PrimeTable& table);

/// Edge colors of K_{i+1} (lexicographic edge order) under the fixed
/// assignment vertex r -> p_{m+r}: edge {r, s} gets |p_{m+r} - p_{m+s}|.
/// Requires the table to cover p_{m+i+1}, the alphabet bound.
std::vector<std::uint32_t> metrical_coloring(long i, long m, const PrimeTable& table);

/// Base with family K_{i+1} (i >= 0), alphabet {0..p_{m+i+1}-1} and the
/// singleton admissible set {metrical_coloring(i, m)} at every index. The
/// returned closures reference `table`; it must outlive the base.
RamseyBase metrical_base(long m, long horizon, const PrimeTable& table);

struct PrimeRun {
    std::string kind;
    long t = 0, k = 0, m = 0;
    long horizon = 0;
    std::optional<long> candidate;
    std::vector<std::uint64_t> realizing_primes;
    std::optional<long> oracle_index;
    bool oracle_agreement = false;
    std::string status;  // "found" | "not-found-within-horizon"
    SearchReport report;
};

/// Least window index whose metrical coloring contains a k-monochromatic
/// path with t edges; equivalently, the least window containing t+1 primes
/// in arithmetic progression with gap k. Cross-checked against the direct
/// AP-in-primes scan.
PrimeRun ap_ramsey(long t, long k, long m, long horizon, const PrimeTable& table,
                   RunOptions options = {});

/// ap_ramsey specialized to pairs at distance 2.
PrimeRun twin_prime_ramsey(long m, long horizon, const PrimeTable& table,
                           RunOptions options = {});

/// Non-uniform instance: at index i the targets are the j-monochromatic
/// paths with t edges for every gap 0 < j < i, over the m = 1 window base.
PrimeRun greentao_ramsey(long t, long horizon, const PrimeTable& table,
                         RunOptions options = {});

enum class PolignacMode { ShortCircuit, Exhaustive, Both };

struct PolignacRun {
    PrimeRun run;
    PolignacMode mode = PolignacMode::ShortCircuit;
    std::vector<long> compared_indices;  // where both modes ran (mode Both)
    bool modes_agree = true;
};

/// Gap-2t edges forced along the consecutive-prime path: admissible colorings
/// of K_{i+1} agree with the metrical coloring on the path through p_{m+r}
/// in order and are free elsewhere.
PolignacRun polignac_ramsey(long t, long m, long horizon, PolignacMode mode,
                            const PrimeTable& table, RunOptions options = {});

struct ZhangRow {
    long t = 0;
    bool found_for_all_m = false;
    std::vector<std::optional<long>> candidates;  // per m = 1..m_max
};

/// For each t <= t_max, whether polignac_ramsey(t, m, horizon) finds a
/// candidate for every m <= m_max.
std::vector<ZhangRow> zhang_ramsey_scan(long m_max, long t_max, long horizon,
                                        const PrimeTable& table, RunOptions options = {});

/// Sieve-level oracles (no graphs involved).
std::optional<long> oracle_ap_window(long t, long k, long m, long horizon,
                                     const PrimeTable& table);
std::optional<long> oracle_consecutive_gap_window(long gap, long m, long horizon,
                                                  const PrimeTable& table);
std::optional<long> oracle_greentao_window(long t, long horizon, const PrimeTable& table);

}  // namespace ramsey

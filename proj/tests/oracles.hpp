// Test-only oracles, kept deliberately naive and independent of the library's
// search paths: plain recursion over all injective vertex maps, trial-division
// primes, and hand-frozen constants.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/engine.hpp"
#include "ramsey/graph.hpp"

namespace oracles {

std::uint64_t embedding_count(const ramsey::Graph& target, const ramsey::Graph& host);

bool contains_colored(const ramsey::Graph& host, const std::vector<std::uint32_t>& colors,
                      const ramsey::Graph& target, const std::vector<std::uint32_t>& target_colors);

bool contains_any(const ramsey::Graph& host, const std::vector<std::uint32_t>& colors,
                  const std::vector<ramsey::LabelTarget>& targets);

std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit);

/// Least window i <= horizon such that {p_m..p_{m+i}} contains t+1 primes in
/// arithmetic progression with gap k (primes 1-indexed).
std::optional<long> ap_window(long t, long k, long m, long horizon,
                              const std::vector<std::uint64_t>& primes);

/// Least window i <= horizon with a consecutive-prime gap 2t starting at
/// offset r < i from p_m.
std::optional<long> consecutive_gap_window(long gap, long m, long horizon,
                                           const std::vector<std::uint64_t>& primes);

/// The classical 2-coloring of K_5 by the two 5-cycles (color 0 on the cycle
/// 0-1-2-3-4-0), in the lexicographic edge order of complete_graph(5). It has
/// no monochromatic triangle.
std::vector<std::uint32_t> two_five_cycles_coloring();

/// K_4 with the worked-example edge numbering: 0=(0,1), 1=(1,2), 2=(0,2),
/// 3=(1,3), 4=(0,3), 5=(2,3).
ramsey::Graph worked_example_k4();

/// GF(4) multiplication table over x^2 + x + 1 in packed values 0..3
/// (2 = x, 3 = x + 1), frozen by hand.
extern const std::uint16_t gf4_mul[4][4];
extern const std::uint16_t gf4_add[4][4];

}  // namespace oracles

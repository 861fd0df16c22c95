#include "ramsey/selftest.hpp"

#include <random>
#include <sstream>

#include "ramsey/engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/primes.hpp"
#include "ramsey/spec_io.hpp"

namespace ramsey {

namespace {

// ---- tiny independent oracles ------------------------------------------

// All injective vertex maps, no pruning; edge preservation checked at the end.
void naive_maps(const Graph& host, std::vector<VertexId>& map, std::vector<bool>& used,
                std::size_t want, const std::function<void(const std::vector<VertexId>&)>& emit) {
    if (map.size() == want) {
        emit(map);
        return;
    }
    for (VertexId h = 0; h < host.vertex_count(); ++h) {
        if (used[h]) continue;
        used[h] = true;
        map.push_back(h);
        naive_maps(host, map, used, want, emit);
        map.pop_back();
        used[h] = false;
    }
}

std::uint64_t naive_embedding_count(const Graph& target, const Graph& host) {
    std::uint64_t count = 0;
    std::vector<VertexId> map;
    std::vector<bool> used(host.vertex_count(), false);
    naive_maps(host, map, used, target.vertex_count(), [&](const std::vector<VertexId>& m) {
        for (auto [a, b] : target.edges())
            if (!host.adjacent(m[a], m[b])) return;
        ++count;
    });
    return count;
}

bool naive_contains(const Graph& host, const std::vector<std::uint32_t>& colors,
                    const LabelTarget& target) {
    bool found = false;
    std::vector<VertexId> map;
    std::vector<bool> used(host.vertex_count(), false);
    naive_maps(host, map, used, target.graph.vertex_count(),
               [&](const std::vector<VertexId>& m) {
                   if (found) return;
                   for (EdgeId e = 0; e < target.graph.edge_count(); ++e) {
                       auto [a, b] = target.graph.edge(e);
                       const auto he = host.edge_between(m[a], m[b]);
                       if (!he || colors[*he] != target.colors[e]) return;
                   }
                   found = true;
               });
    return found;
}

bool naive_contains_any(const Graph& host, const std::vector<std::uint32_t>& colors,
                        const std::vector<LabelTarget>& targets) {
    for (const auto& t : targets)
        if (naive_contains(host, colors, t)) return true;
    return false;
}

std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(n);
    }
    return primes;
}

// ---- check helpers -------------------------------------------------------

struct Suite {
    int workers = 1;
    std::vector<CheckResult> results;

    void record(const std::string& name, bool pass, const std::string& detail) {
        results.push_back({name, pass, detail});
    }

    template <typename Fn>
    void check(const std::string& name, Fn&& fn) {
        try {
            std::string detail;
            const bool pass = fn(detail);
            record(name, pass, detail);
        } catch (const std::exception& e) {
            record(name, false, std::string("exception: ") + e.what());
        }
    }
};

std::string describe_counterexample(const std::string& what, long index) {
    std::ostringstream os;
    os << what << " at index " << index;
    return os.str();
}

RamseyBase maximal_base(std::uint64_t alphabet_size, long start = 1) {
    RamseyBase base;
    base.family = GraphFamily::complete_family(0, start);
    const Alphabet alpha{alphabet_size, {}};
    base.alphabet = [alpha](long) { return alpha; };
    base.admissible = [](long) { return Admissible::maximal(); };
    return base;
}

RamseySymbol uniform_symbol(std::vector<LabelTarget> targets) {
    RamseySymbol s;
    s.uniform = true;
    s.targets = [targets](long) { return targets; };
    return s;
}

LabelTarget random_target(std::mt19937& rng, std::uint32_t alphabet_size) {
    static const std::vector<Graph> pool = {complete_graph(2), path_graph(2), complete_graph(3),
                                            path_graph(3)};
    const Graph& g = pool[rng() % pool.size()];
    std::vector<std::uint32_t> colors(g.edge_count());
    if (rng() % 2 == 0) {
        std::fill(colors.begin(), colors.end(), rng() % alphabet_size);
    } else {
        for (auto& c : colors) c = rng() % alphabet_size;
    }
    return LabelTarget{g, std::move(colors)};
}

}  // namespace

std::vector<CheckResult> run_selftest(int workers) {
    Suite suite;
    suite.workers = workers;
    RunOptions opts;
    opts.workers = workers;

    suite.check("field-axioms", [&](std::string& detail) {
        for (const auto& [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {2u, 3u},
                                  {3u, 2u}, {2u, 4u}}) {
            const FieldSpec f(p, k);
            const auto elems = f.all_elements();
            for (auto a : elems) {
                if (f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0) {
                    detail = "identity/negation fails in GF(" + std::to_string(f.q()) + ")";
                    return false;
                }
                for (auto b : elems) {
                    if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) {
                        detail = "commutativity fails in GF(" + std::to_string(f.q()) + ")";
                        return false;
                    }
                    for (auto c : elems) {
                        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) ||
                            f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
                            f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) {
                            detail = "ring axiom fails in GF(" + std::to_string(f.q()) + ")";
                            return false;
                        }
                    }
                }
            }
        }
        detail = "exhaustive over GF(2..16)";
        return true;
    });

    suite.check("field-unit-powers", [&](std::string& detail) {
        for (const auto& [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u},
                                  {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {2u, 6u}}) {
            const FieldSpec f(p, k);
            for (std::uint32_t a = 1; a < f.q(); ++a) {
                const auto e = static_cast<FieldElem>(a);
                if (f.pow(e, f.q() - 1) != 1 || f.mul(e, f.inv(e)) != 1) {
                    detail = "a^(q-1) or a*inv(a) fails in GF(" + std::to_string(f.q()) +
                             ") at a=" + std::to_string(a);
                    return false;
                }
            }
        }
        detail = "a^(q-1)=1 and a*inv(a)=1 over fields up to GF(64)";
        return true;
    });

    suite.check("field-fault-detection", [&](std::string& detail) {
        // x^2 + 1 is reducible over GF(2); the axiom suite must catch the
        // corrupted table.
        const FieldSpec bad = FieldSpec::unchecked(2, 2, {1, 0, 1});
        bool caught = false;
        for (std::uint32_t a = 1; a < bad.q() && !caught; ++a) {
            const auto e = static_cast<FieldElem>(a);
            if (bad.pow(e, bad.q() - 1) != 1 || bad.mul(e, bad.inv(e)) != 1) caught = true;
        }
        detail = caught ? "corrupted GF(4) rejected by the unit-power suite"
                        : "corrupted field passed the unit-power suite";
        return caught;
    });

    suite.check("field-poly-function-kernel", [&](std::string& detail) {
        for (const auto& [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}}) {
            const FieldSpec f(p, k);
            for (std::uint32_t a = 0; a < f.q(); ++a) {
                const auto e = static_cast<FieldElem>(a);
                if (f.sub(f.pow(e, f.q()), e) != 0) {
                    detail = "x^q - x does not vanish at " + std::to_string(a) + " in GF(" +
                             std::to_string(f.q()) + ")";
                    return false;
                }
            }
        }
        detail = "x^q - x is the zero function on every tested field";
        return true;
    });

    suite.check("embedding-counts", [&](std::string& detail) {
        const std::vector<std::pair<Graph, Graph>> cases = {
            {complete_graph(3), complete_graph(4)}, {path_graph(2), complete_graph(3)},
            {complete_graph(3), complete_graph(2)}, {path_graph(3), complete_graph(4)},
            {complete_graph(2), path_graph(4)},     {path_graph(2), path_graph(5)},
        };
        for (const auto& [target, host] : cases) {
            const auto got = enumerate_embeddings(target, host).size();
            const auto want = naive_embedding_count(target, host);
            if (got != want) {
                detail = "count mismatch: got " + std::to_string(got) + ", brute force " +
                         std::to_string(want);
                return false;
            }
        }
        if (enumerate_embeddings(complete_graph(3), complete_graph(4)).size() != 24) {
            detail = "|K_4/K_3| != 24";
            return false;
        }
        detail = "backtracking enumeration matches brute force";
        return true;
    });

    suite.check("zero-set-equivalence", [&](std::string& detail) {
        const std::vector<Graph> hosts = {complete_graph(3), path_graph(3),
                                          Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})};
        for (std::uint32_t q : {2u, 3u}) {
            const FieldSpec f(q, 1);
            const std::vector<LabelTarget> pool = {
                monochromatic_label_target(complete_graph(2), 0),
                monochromatic_label_target(path_graph(2), 1 % q),
                LabelTarget{path_graph(2), {0, 1 % q}},
            };
            for (const Graph& host : hosts) {
                for (std::size_t a = 0; a < pool.size(); ++a) {
                    for (std::size_t b = a; b < pool.size(); ++b) {
                        const std::vector<LabelTarget> targets = {pool[a], pool[b]};
                        std::vector<ColoredTarget> field_targets;
                        for (const auto& t : targets) {
                            std::vector<FieldElem> colors(t.colors.begin(), t.colors.end());
                            field_targets.push_back(ColoredTarget{t.graph, colors});
                        }
                        const auto expr = build_indicator(host, field_targets, f);
                        const auto space = ColoringSpace::all(host.edge_count(), q);
                        for (std::uint64_t i = 0; i < space.size(); ++i) {
                            const auto raw = space.at(i);
                            std::vector<FieldElem> point(raw.begin(), raw.end());
                            const bool vanishes = evaluate(expr, point) == 0;
                            const bool contains = naive_contains_any(host, raw, targets);
                            if (vanishes != contains) {
                                detail = "disagreement on host with " +
                                         std::to_string(host.edge_count()) +
                                         " edges, q=" + std::to_string(q) + ", point " +
                                         std::to_string(i);
                                return false;
                            }
                        }
                    }
                }
            }
        }
        detail = "indicator zeros coincide with direct containment on the small grid";
        return true;
    });

    suite.check("interpolation-soundness", [&](std::string& detail) {
        for (std::uint32_t q : {2u, 3u}) {
            const FieldSpec f(q, 1);
            const Graph host = complete_graph(3);
            const std::vector<ColoredTarget> targets = {
                monochromatic_target(complete_graph(2), 0),
                monochromatic_target(complete_graph(3), static_cast<FieldElem>(1 % q))};
            const auto expr = build_indicator(host, targets, f);
            const auto poly = expand_reduced(expr);
            const auto space = ColoringSpace::all(host.edge_count(), q);
            for (std::uint64_t i = 0; i < space.size(); ++i) {
                const auto raw = space.at(i);
                std::vector<FieldElem> point(raw.begin(), raw.end());
                if (evaluate(expr, point) != evaluate(poly, point)) {
                    detail = "reduced polynomial deviates at point " + std::to_string(i) +
                             " over GF(" + std::to_string(q) + ")";
                    return false;
                }
            }
        }
        detail = "expand_reduced agrees with lazy evaluation pointwise";
        return true;
    });

    suite.check("backend-agreement", [&](std::string& detail) {
        std::mt19937 rng(20240811);
        for (int trial = 0; trial < 25; ++trial) {
            const std::uint32_t alphabet = 2 + rng() % 2;
            RamseyBase base = maximal_base(alphabet);
            std::vector<LabelTarget> targets = {random_target(rng, alphabet)};
            if (rng() % 2) targets.push_back(random_target(rng, alphabet));
            const long horizon = 3 + static_cast<long>(rng() % 2);
            RunOptions both = opts;
            both.backend = Backend::Both;
            const SearchReport rep =
                ramsey_number(base, uniform_symbol(targets), horizon, both);
            for (const auto& r : rep.per_index) {
                if (r.provenance != Provenance::BothBackends) {
                    detail = describe_counterexample("index not dual-computed", r.index);
                    return false;
                }
            }
        }
        detail = "direct and algebraic scans agreed on 25 randomized instances";
        return true;
    });

    suite.check("prefix-monotonicity", [&](std::string& detail) {
        std::mt19937 rng(77001);
        for (int trial = 0; trial < 25; ++trial) {
            const std::uint32_t alphabet = 2 + rng() % 2;
            RamseyBase base = maximal_base(alphabet);
            std::vector<LabelTarget> targets = {random_target(rng, alphabet)};
            const SearchReport rep =
                ramsey_number(base, uniform_symbol(targets), 4, opts);
            bool seen = false;
            for (const auto& r : rep.per_index) {
                if (r.arrows) seen = true;
                else if (seen) {
                    detail = describe_counterexample("non-monotone trace", r.index);
                    return false;
                }
            }
            if (rep.soundness != Soundness::Exact) {
                detail = "maximal uniform finite instance not reported exact";
                return false;
            }
        }
        detail = "arrows traces monotone on 25 maximal uniform instances";
        return true;
    });

    suite.check("symbol-extension-monotonicity", [&](std::string& detail) {
        std::mt19937 rng(41255);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t alphabet = 2;
            RamseyBase base = maximal_base(alphabet);
            std::vector<LabelTarget> small = {random_target(rng, alphabet)};
            std::vector<LabelTarget> large = small;
            large.push_back(random_target(rng, alphabet));
            const long horizon = 4;
            const auto rs = ramsey_number(base, uniform_symbol(small), horizon, opts);
            const auto rl = ramsey_number(base, uniform_symbol(large), horizon, opts);
            if (rs.candidate && (!rl.candidate || *rl.candidate > *rs.candidate)) {
                detail = describe_counterexample("extended symbol grew", trial);
                return false;
            }
        }
        detail = "40 randomized symbol extensions kept the candidate from growing";
        return true;
    });

    suite.check("base-restriction-monotonicity", [&](std::string& detail) {
        std::mt19937 rng(90210);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t alphabet = 2;
            const long horizon = 4;
            RamseyBase full = maximal_base(alphabet);
            std::vector<LabelTarget> targets = {random_target(rng, alphabet)};
            // random nonempty per-index subsets of all colorings
            std::vector<std::vector<std::vector<std::uint32_t>>> subsets;
            for (long i = 1; i <= horizon; ++i) {
                const auto space =
                    ColoringSpace::all(complete_graph(static_cast<VertexId>(i)).edge_count(),
                                       alphabet);
                std::vector<std::vector<std::uint32_t>> list;
                for (std::uint64_t idx = 0; idx < space.size(); ++idx)
                    if (rng() % 4 != 0) list.push_back(space.at(idx));
                if (list.empty()) list.push_back(space.at(0));
                subsets.push_back(std::move(list));
            }
            RamseyBase restricted = full;
            restricted.admissible = [subsets](long i) {
                return Admissible::explicit_list(subsets.at(static_cast<std::size_t>(i - 1)));
            };
            const auto rs = ramsey_number(full, uniform_symbol(targets), horizon, opts);
            const auto rl = ramsey_number(restricted, uniform_symbol(targets), horizon, opts);
            if (rs.candidate && (!rl.candidate || *rl.candidate > *rs.candidate)) {
                detail = describe_counterexample("restricted base grew", trial);
                return false;
            }
        }
        detail = "40 randomized base restrictions kept the candidate from growing";
        return true;
    });

    suite.check("resolution-invariance", [&](std::string& detail) {
        std::mt19937 rng(5150);
        for (int trial = 0; trial < 15; ++trial) {
            const std::uint32_t alphabet = 2;
            RamseyBase base = maximal_base(alphabet);
            // targets deliberately include graphs that miss the low indices
            std::vector<LabelTarget> targets = {
                monochromatic_label_target(complete_graph(2 + rng() % 2), rng() % alphabet),
                monochromatic_label_target(complete_graph(3), rng() % alphabet)};
            if (!resolution_invariance_check(base, uniform_symbol(targets), 4, opts)) {
                detail = describe_counterexample("resolution changed the value", trial);
                return false;
            }
        }
        detail = "15 randomized paired computations agreed";
        return true;
    });

    suite.check("embedding-invariance", [&](std::string& detail) {
        std::mt19937 rng(613);
        for (int trial = 0; trial < 15; ++trial) {
            const std::uint32_t alphabet = 3;
            RamseyBase base = maximal_base(alphabet);
            base.family = GraphFamily::complete_family(0, 1);
            std::vector<LabelTarget> targets = {random_target(rng, alphabet)};
            const RamseySymbol symbol = uniform_symbol(targets);
            const long horizon = 4;

            const FieldSpec gf4(2, 2);
            std::vector<FieldElem> perm = {0, 1, 2, 3};
            std::shuffle(perm.begin(), perm.end(), rng);
            const std::vector<FieldElem> inj1 = {perm[0], perm[1], perm[2]};
            std::shuffle(perm.begin(), perm.end(), rng);
            const std::vector<FieldElem> inj2 = {perm[0], perm[1], perm[2]};

            auto run = [&](const std::vector<FieldElem>& inj) {
                auto [b, s] = embed_alphabet(
                    base, symbol, [gf4](long) { return gf4; },
                    [inj](long, std::uint64_t, const FieldSpec&) { return inj; });
                return ramsey_number(b, s, horizon, opts);
            };
            const auto r1 = run(inj1);
            const auto r2 = run(inj2);
            const auto r0 = ramsey_number(base, symbol, horizon, opts);
            if (r1.candidate != r2.candidate || r1.candidate != r0.candidate) {
                detail = describe_counterexample("injection changed the candidate", trial);
                return false;
            }
            for (long i = 1; i <= horizon; ++i)
                if (r1.at(i).arrows != r2.at(i).arrows || r1.at(i).arrows != r0.at(i).arrows) {
                    detail = describe_counterexample("injection changed the trace", i);
                    return false;
                }
        }
        detail = "15 randomized instances invariant under the alphabet injection";
        return true;
    });

    suite.check("prime-oracle-equivalence", [&](std::string& detail) {
        const PrimeTable table(2000);
        const auto primes = trial_division_primes(2000);
        if (primes != table.primes()) {
            detail = "sieve disagrees with trial division";
            return false;
        }
        for (long t = 1; t <= 2; ++t) {
            for (long k = 1; k <= 4; ++k) {
                for (long m = 1; m <= 3; ++m) {
                    const auto run = ap_ramsey(t, k, m, 10, table, opts);
                    if (!run.oracle_agreement) {
                        detail = "ap(" + std::to_string(t) + "," + std::to_string(k) + "," +
                                 std::to_string(m) + ") disagrees with the sieve oracle";
                        return false;
                    }
                }
            }
        }
        for (long m = 1; m <= 5; ++m) {
            const auto run = twin_prime_ramsey(m, 10, table, opts);
            if (!run.oracle_agreement) {
                detail = "twin(m=" + std::to_string(m) + ") disagrees with the sieve oracle";
                return false;
            }
        }
        detail = "window candidates match the direct sieve scans on the small grid";
        return true;
    });

    suite.check("polignac-mode-agreement", [&](std::string& detail) {
        const PrimeTable table(2000);
        for (long t = 1; t <= 2; ++t) {
            for (long m = 1; m <= 2; ++m) {
                const auto run = polignac_ramsey(t, m, 3, PolignacMode::Both, table, opts);
                if (!run.modes_agree) {
                    detail = "short-circuit and exhaustive modes disagree at t=" +
                             std::to_string(t) + ", m=" + std::to_string(m);
                    return false;
                }
                if (!run.run.oracle_agreement) {
                    detail = "polignac disagrees with the consecutive-gap oracle at t=" +
                             std::to_string(t) + ", m=" + std::to_string(m);
                    return false;
                }
            }
        }
        detail = "modes agree on every capacity-feasible index";
        return true;
    });

    suite.check("worker-determinism", [&](std::string& detail) {
        auto [base, symbol] = make_classical_instance({3, 3});
        auto render = [&](int nworkers) {
            RunOptions o = opts;
            o.workers = nworkers;
            const SearchReport rep = ramsey_number(base, symbol, 6, o);
            return report_to_json(rep, base.alphabet).dump(2);
        };
        const std::string one = render(1);
        const std::string four = render(4);
        if (one != four) {
            detail = "reports differ between 1 and 4 workers";
            return false;
        }
        detail = "byte-identical reports with 1 and 4 workers";
        return true;
    });

    return suite.results;
}

}  // namespace ramsey

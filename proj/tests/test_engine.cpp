#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/spec_io.hpp"

using namespace ramsey;

namespace {

RamseyBase maximal_complete_base(std::uint64_t alphabet_size) {
    RamseyBase base;
    base.family = GraphFamily::complete_family(0, 1);
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

RamseySymbol triangle_symbol() {
    return uniform_symbol({monochromatic_label_target(complete_graph(3), 0),
                           monochromatic_label_target(complete_graph(3), 1)});
}

LabelTarget random_target(std::mt19937& rng, std::uint32_t alphabet_size) {
    static const std::vector<Graph> pool = {complete_graph(2), path_graph(2),
                                            complete_graph(3), path_graph(3)};
    const Graph g = pool[rng() % pool.size()];
    std::vector<std::uint32_t> colors(g.edge_count());
    if (rng() % 2 == 0)
        std::fill(colors.begin(), colors.end(), rng() % alphabet_size);
    else
        for (auto& c : colors) c = rng() % alphabet_size;
    return LabelTarget{g, std::move(colors)};
}

}  // namespace

TEST_CASE("single-edge targets arrive at K2") {
    const auto base = maximal_complete_base(2);
    const auto symbol = uniform_symbol({monochromatic_label_target(complete_graph(2), 0),
                                        monochromatic_label_target(complete_graph(2), 1)});
    const SearchReport rep = ramsey_number(base, symbol, 4);
    CHECK(rep.candidate == 2);  // K_1 has no edge; any edge of K_2 is 0- or 1-colored
    CHECK(rep.soundness == Soundness::Exact);
    CHECK_FALSE(rep.at(1).arrows);
    CHECK(rep.at(2).arrows);
}

TEST_CASE("classical R(2,2) = 2") {
    auto [base, symbol] = make_classical_instance({2, 2});
    const SearchReport rep = ramsey_number(base, symbol, 4);
    CHECK(rep.candidate == 2);
    CHECK(rep.soundness == Soundness::Exact);
}

TEST_CASE("arrows on K4 fails with the worked-example witness") {
    // explicit single-coloring admissible set holding the worked coloring
    RamseyBase base;
    base.family = GraphFamily::explicit_family({oracles::worked_example_k4()}, 0);
    const Alphabet alpha{2, {}};
    base.alphabet = [alpha](long) { return alpha; };
    const std::vector<std::uint32_t> rho = {1, 1, 0, 0, 1, 0};
    base.admissible = [rho](long) { return Admissible::explicit_list({rho}); };
    const auto outcome = arrows(base, triangle_symbol(), 0);
    CHECK_FALSE(outcome.holds);
    REQUIRE(outcome.witness.has_value());
    CHECK(*outcome.witness == rho);

    // maximal base: arrows(K_4) is false and the least witness is triangle-free
    const auto maximal = maximal_complete_base(2);
    const auto all = arrows(maximal, triangle_symbol(), 4);
    CHECK_FALSE(all.holds);
    REQUIRE(all.witness.has_value());
    CHECK_FALSE(oracles::contains_colored(complete_graph(4), *all.witness, complete_graph(3),
                                          {0, 0, 0}));
    CHECK_FALSE(oracles::contains_colored(complete_graph(4), *all.witness, complete_graph(3),
                                          {1, 1, 1}));
    // and it is the least such coloring in scan order
    const auto space = ColoringSpace::all(6, 2);
    bool earlier_counterexample = false;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const auto coloring = space.at(i);
        if (coloring == *all.witness) break;
        if (!oracles::contains_any(complete_graph(4), coloring, triangle_symbol().targets(0)))
            earlier_counterexample = true;
    }
    CHECK_FALSE(earlier_counterexample);
}

TEST_CASE("arrows is false when no target embeds and a coloring exists") {
    const auto base = maximal_complete_base(2);
    const auto outcome = arrows(base, triangle_symbol(), 2);  // K_3 does not fit in K_2
    CHECK_FALSE(outcome.holds);
}

TEST_CASE("empty explicit admissible set is vacuously true") {
    RamseyBase base;
    base.family = GraphFamily::explicit_family({complete_graph(3)}, 0);
    const Alphabet alpha{2, {}};
    base.alphabet = [alpha](long) { return alpha; };
    base.admissible = [](long) { return Admissible::explicit_list({}); };
    const auto outcome = arrows(base, triangle_symbol(), 0);
    CHECK(outcome.holds);
}

TEST_CASE("classical R(3,3): candidate 6, exact, dual-computed") {
    auto [base, symbol] = make_classical_instance({3, 3});
    RunOptions opts;
    opts.workers = 2;
    const SearchReport rep = ramsey_number(base, symbol, 6, opts);
    CHECK(rep.candidate == 6);
    CHECK(rep.soundness == Soundness::Exact);
    CHECK(rep.trace_monotone);
    CHECK(rep.flags.galois_type);
    CHECK(rep.flags.maximal);
    CHECK(rep.flags.uniform);
    CHECK(rep.flags.finite_type);
    CHECK_FALSE(rep.flags.exact);      // K_3 does not embed in K_1
    CHECK(rep.resolution_index == 3);  // exact from K_3 onward
    for (const auto& r : rep.per_index) {
        CHECK(r.provenance == Provenance::BothBackends);
        if (!r.arrows) {
            REQUIRE(r.witness.has_value());
            CHECK_FALSE(oracles::contains_any(complete_graph(static_cast<VertexId>(r.index)),
                                              *r.witness, symbol.targets(r.index)));
        }
    }
}

TEST_CASE("monotone inference fills capacity-refused indices") {
    auto [base, symbol] = make_classical_instance({3, 3});
    RunOptions opts;
    opts.capacity = 1ull << 15;  // K_6 exactly fits; K_7 does not
    const SearchReport rep = ramsey_number(base, symbol, 7, opts);
    CHECK(rep.candidate == 6);
    CHECK(rep.soundness == Soundness::Exact);
    CHECK(rep.at(6).provenance == Provenance::BothBackends);
    CHECK(rep.at(7).provenance == Provenance::InferredMonotone);
    CHECK(rep.at(7).arrows);
}

TEST_CASE("capacity refusal without the monotone license") {
    auto [base, symbol] = make_classical_instance({3, 3});
    RunOptions opts;
    opts.capacity = 100;  // K_4 already needs 64 <= 100, K_5 needs 1024
    CHECK_THROWS_AS(ramsey_number(base, symbol, 5, opts), CapacityError);
}

TEST_CASE("direct and algebraic backends agree on randomized instances") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t alphabet = 2 + rng() % 2;
        const auto base = maximal_complete_base(alphabet);
        std::vector<LabelTarget> targets = {random_target(rng, alphabet)};
        if (rng() % 2) targets.push_back(random_target(rng, alphabet));
        const auto symbol = uniform_symbol(targets);
        const long horizon = 4;

        RunOptions direct;
        direct.backend = Backend::Direct;
        RunOptions algebraic;
        algebraic.backend = Backend::Algebraic;
        RunOptions both;
        both.backend = Backend::Both;

        const auto rd = ramsey_number(base, symbol, horizon, direct);
        const auto ra = ramsey_number(base, symbol, horizon, algebraic);
        const auto rb = ramsey_number(base, symbol, horizon, both);  // asserts internally
        CHECK(rd.candidate == ra.candidate);
        CHECK(rd.candidate == rb.candidate);
        for (long i = 1; i <= horizon; ++i) {
            CHECK(rd.at(i).arrows == ra.at(i).arrows);
            CHECK(rd.at(i).witness == ra.at(i).witness);
            CHECK(rb.at(i).provenance == Provenance::BothBackends);
        }
    }
}

TEST_CASE("classification flags") {
    // classical two colors: finite, maximal, uniform, galois
    {
        auto [base, symbol] = make_classical_instance({3, 3});
        const Classification c = classify(base, symbol, 1, 6);
        CHECK(c.locally_finite);
        CHECK(c.finite_type);
        CHECK(c.maximal);
        CHECK(c.uniform);
        CHECK(c.galois_type);
        CHECK_FALSE(c.exact);
        const Classification from_k3 = classify(base, symbol, 3, 6);
        CHECK(from_k3.exact);
    }
    // per-index alphabet sizes i(i-1)/2: locally finite but not finite type
    {
        RamseyBase base;
        base.family = GraphFamily::complete_family(0, 3);
        base.alphabet = [](long i) {
            return Alphabet{static_cast<std::uint64_t>(i * (i - 1) / 2), {}};
        };
        base.admissible = [](long) { return Admissible::maximal(); };
        const auto symbol = uniform_symbol({monochromatic_label_target(complete_graph(2), 0)});
        const Classification c = classify(base, symbol, 3, 6);
        CHECK(c.locally_finite);
        CHECK_FALSE(c.finite_type);
        CHECK_FALSE(c.galois_type);
    }
    // six labels: not a prime power, so not galois
    {
        const auto base = maximal_complete_base(6);
        const auto symbol = uniform_symbol({monochromatic_label_target(complete_graph(2), 0)});
        const Classification c = classify(base, symbol, 1, 4);
        CHECK(c.finite_type);
        CHECK_FALSE(c.galois_type);
    }
}

TEST_CASE("uniform symbols are verified") {
    const auto base = maximal_complete_base(2);
    RamseySymbol lying;
    lying.uniform = true;
    lying.targets = [](long i) {
        return std::vector<LabelTarget>{
            monochromatic_label_target(complete_graph(2), i % 2 ? 0 : 1)};
    };
    CHECK_THROWS_AS(ramsey_number(base, lying, 3), SpecError);
}

TEST_CASE("resolve finds the first constituent suffix") {
    const GraphFamily complete = GraphFamily::complete_family(0, 1);
    const std::vector<Graph> big_pair = {complete_graph(6), complete_graph(40)};
    CHECK(resolve(complete, big_pair, 10) == 6);

    const std::vector<Graph> k1 = {complete_graph(1)};
    CHECK(resolve(complete, k1, 5) == 1);

    const GraphFamily paths = GraphFamily::path_family(0, 1);
    const std::vector<Graph> p3 = {path_graph(3)};
    CHECK(resolve(paths, p3, 10) == 3);

    const std::vector<Graph> too_big = {complete_graph(40)};
    CHECK_FALSE(resolve(complete, too_big, 10).has_value());
}

TEST_CASE("resolution invariance") {
    auto [base, symbol] = make_classical_instance({3, 3});
    CHECK(resolution_invariance_check(base, symbol, 6));

    // already-exact instance: the resolution is the identity truncation
    const auto edge_symbol = uniform_symbol({monochromatic_label_target(complete_graph(2), 0),
                                             monochromatic_label_target(complete_graph(2), 1)});
    CHECK(resolution_invariance_check(maximal_complete_base(2), edge_symbol, 4));

    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const std::uint32_t alphabet = 2 + rng() % 2;
        const auto b = maximal_complete_base(alphabet);
        const auto s = uniform_symbol(
            {random_target(rng, alphabet),
             monochromatic_label_target(complete_graph(2 + rng() % 3), rng() % alphabet)});
        CHECK(resolution_invariance_check(b, s, 4));
        // exact candidates always sit at or after the resolution index
        const SearchReport rep = ramsey_number(b, s, 4);
        if (rep.candidate && rep.soundness == Soundness::Exact) {
            REQUIRE(rep.resolution_index.has_value());
            CHECK(*rep.resolution_index <= *rep.candidate);
        }
    }
}

TEST_CASE("alphabet embedding leaves the search invariant") {
    // relabeling {red, blue} into GF(2)
    RamseyBase base = maximal_complete_base(2);
    const Alphabet named{2, {"red", "blue"}};
    base.alphabet = [named](long) { return named; };
    const auto symbol = triangle_symbol();
    const SearchReport original = ramsey_number(base, symbol, 5);

    const FieldSpec gf2(2, 1);
    auto [image_base, image_symbol] = embed_alphabet(
        base, symbol, [gf2](long) { return gf2; },
        [](long, std::uint64_t count, const FieldSpec& f) { return inject_alphabet(count, f); });
    const SearchReport image = ramsey_number(image_base, image_symbol, 5);
    CHECK(original.candidate == image.candidate);
    for (long i = 1; i <= 5; ++i) {
        CHECK(original.at(i).arrows == image.at(i).arrows);
        CHECK(original.at(i).witness == image.at(i).witness);  // identity injection
    }
    CHECK(image.flags.maximal);  // the image covers all of GF(2)
    CHECK(image.flags.galois_type);

    // two different injections of a 3-letter alphabet into GF(4)
    const RamseyBase base3 = maximal_complete_base(3);
    const auto symbol3 = uniform_symbol({monochromatic_label_target(complete_graph(3), 0),
                                         monochromatic_label_target(complete_graph(2), 2)});
    const FieldSpec gf4(2, 2);
    auto run_with = [&](std::vector<FieldElem> inj) {
        auto [b, s] =
            embed_alphabet(base3, symbol3, [gf4](long) { return gf4; },
                           [inj](long, std::uint64_t, const FieldSpec&) { return inj; });
        return ramsey_number(b, s, 5);
    };
    const SearchReport r1 = run_with({0, 1, 2});
    const SearchReport r2 = run_with({3, 1, 0});
    const SearchReport r0 = ramsey_number(base3, symbol3, 5);
    CHECK(r1.candidate == r2.candidate);
    CHECK(r1.candidate == r0.candidate);
    for (long i = 1; i <= 5; ++i) {
        CHECK(r1.at(i).arrows == r2.at(i).arrows);
        CHECK(r1.at(i).arrows == r0.at(i).arrows);
    }
    CHECK(r1.flags.galois_type);    // image alphabet is GF(4)
    CHECK_FALSE(r1.flags.maximal);  // only 3 of 4 values are admissible
}

TEST_CASE("symbol extension and base restriction monotonicity (randomized)") {
    std::mt19937 rng(8086);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint32_t alphabet = 2;
        const auto base = maximal_complete_base(alphabet);
        std::vector<LabelTarget> small = {random_target(rng, alphabet)};
        std::vector<LabelTarget> large = small;
        large.push_back(random_target(rng, alphabet));
        const auto rs = ramsey_number(base, uniform_symbol(small), 4);
        const auto rl = ramsey_number(base, uniform_symbol(large), 4);
        if (rs.candidate) {
            REQUIRE(rl.candidate.has_value());
            CHECK(*rl.candidate <= *rs.candidate);
        }
    }
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint32_t alphabet = 2;
        const long horizon = 4;
        const auto full = maximal_complete_base(alphabet);
        const auto targets = uniform_symbol({random_target(rng, alphabet)});
        std::vector<std::vector<std::vector<std::uint32_t>>> subsets;
        for (long i = 1; i <= horizon; ++i) {
            const auto space = ColoringSpace::all(
                complete_graph(static_cast<VertexId>(i)).edge_count(), alphabet);
            std::vector<std::vector<std::uint32_t>> list;
            for (std::uint64_t idx = 0; idx < space.size(); ++idx)
                if (rng() % 3 != 0) list.push_back(space.at(idx));
            if (list.empty()) list.push_back(space.at(0));
            subsets.push_back(std::move(list));
        }
        RamseyBase restricted = full;
        restricted.admissible = [subsets](long i) {
            return Admissible::explicit_list(subsets.at(static_cast<std::size_t>(i - 1)));
        };
        const auto rs = ramsey_number(full, targets, horizon);
        const auto rl = ramsey_number(restricted, targets, horizon);
        if (rs.candidate) {
            REQUIRE(rl.candidate.has_value());
            CHECK(*rl.candidate <= *rs.candidate);
        }
    }
}

TEST_CASE("generated admissible sets: short circuit matches exhaustive") {
    RamseyBase base;
    base.family = GraphFamily::explicit_family({complete_graph(3)}, 0);
    const Alphabet alpha{7, {}};
    base.alphabet = [alpha](long) { return alpha; };
    base.admissible = [](long) {
        return Admissible::generated({{0, 1}, {1, 2}});  // free edge: 2
    };

    for (std::uint32_t target_color : {2u, 5u}) {
        const auto symbol =
            uniform_symbol({monochromatic_label_target(complete_graph(2), target_color)});
        RunOptions sc;
        sc.generated_mode = GeneratedMode::ShortCircuit;
        RunOptions ex;
        ex.generated_mode = GeneratedMode::Exhaustive;
        const auto a = arrows(base, symbol, 0, sc);
        const auto b = arrows(base, symbol, 0, ex);
        CHECK(a.holds == b.holds);
        CHECK(a.witness == b.witness);
        CHECK(a.provenance == Provenance::ShortCircuit);
        if (target_color == 2) {
            CHECK(a.holds);  // forced edge 1 carries color 2
            REQUIRE(a.match.has_value());
        } else {
            CHECK_FALSE(a.holds);
            REQUIRE(a.witness.has_value());
            CHECK(*a.witness == std::vector<std::uint32_t>{1, 2, 0});
        }
    }

    // short-circuit demanded where it cannot apply
    const auto triangle = uniform_symbol({monochromatic_label_target(complete_graph(3), 0)});
    RunOptions sc;
    sc.generated_mode = GeneratedMode::ShortCircuit;
    CHECK_THROWS_AS(arrows(base, triangle, 0, sc), SpecError);
}

TEST_CASE("non-hereditary explicit families are rejected with the failing pair") {
    RamseyBase base;
    base.family = GraphFamily::explicit_family(
        {complete_graph(3), complete_graph(2), complete_graph(4)}, 0);
    const Alphabet alpha{2, {}};
    base.alphabet = [alpha](long) { return alpha; };
    base.admissible = [](long) { return Admissible::maximal(); };
    try {
        ramsey_number(base, triangle_symbol(), 2);
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        const std::string what = e.what();
        CHECK(what.find("index 0") != std::string::npos);
        CHECK(what.find("index 1") != std::string::npos);
    }
}

TEST_CASE("horizon must stay within explicit families") {
    RamseyBase base;
    base.family = GraphFamily::explicit_family({complete_graph(2), complete_graph(3)}, 0);
    const Alphabet alpha{2, {}};
    base.alphabet = [alpha](long) { return alpha; };
    base.admissible = [](long) { return Admissible::maximal(); };
    CHECK_THROWS_AS(ramsey_number(base, triangle_symbol(), 5), SpecError);
}

TEST_CASE("reports are deterministic across worker counts") {
    auto [base, symbol] = make_classical_instance({3, 3});
    auto render = [&](int workers) {
        RunOptions o;
        o.workers = workers;
        return report_to_json(ramsey_number(base, symbol, 6, o), base.alphabet).dump();
    };
    CHECK(render(1) == render(4));
}

TEST_CASE("shrinking non-uniform symbols are flagged, not blocked") {
    const auto base = maximal_complete_base(2);
    RamseySymbol shrinking;
    shrinking.uniform = false;
    shrinking.targets = [](long i) {
        // target lists shrink from K3 to K2: the disjoint-union heredity fails
        return std::vector<LabelTarget>{
            monochromatic_label_target(i <= 1 ? complete_graph(3) : complete_graph(2), 0)};
    };
    const SearchReport rep = ramsey_number(base, shrinking, 4);
    CHECK(rep.symbol_heredity == SymbolHeredity::Violated);
    CHECK_FALSE(rep.flags.uniform);
    CHECK(rep.soundness == Soundness::HorizonConditional);
}

TEST_CASE("growing non-uniform symbols certify by inclusion") {
    const auto base = maximal_complete_base(2);
    RamseySymbol growing;
    growing.uniform = false;
    growing.targets = [](long i) {
        std::vector<LabelTarget> targets;
        for (long j = 0; j < std::min<long>(i, 2); ++j)
            targets.push_back(monochromatic_label_target(complete_graph(2),
                                                         static_cast<std::uint32_t>(j)));
        return targets;
    };
    const SearchReport rep = ramsey_number(base, growing, 4);
    CHECK(rep.symbol_heredity == SymbolHeredity::Certified);
    CHECK(rep.candidate == 2);  // both colors are targets from index 2 on
}

TEST_CASE("targets that never embed leave no candidate") {
    RamseyBase base;
    std::vector<Graph> members;
    for (VertexId n = 1; n <= 5; ++n) members.push_back(complete_graph(n));
    base.family = GraphFamily::explicit_family(members, 0);
    const Alphabet alpha{2, {}};
    base.alphabet = [alpha](long) { return alpha; };
    base.admissible = [](long) { return Admissible::maximal(); };
    const auto symbol = uniform_symbol({monochromatic_label_target(complete_graph(7), 0)});
    const SearchReport rep = ramsey_number(base, symbol, 4);
    CHECK_FALSE(rep.candidate.has_value());
    CHECK_FALSE(rep.resolution_index.has_value());
}

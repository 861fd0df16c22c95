// Command-line surface: classical and general Ramsey searches, indicator
// polynomial operations, prime-window encodings, and the selftest suite.
//
// Exit codes: 0 success, 1 spec error, 2 no candidate within the horizon,
// 3 capacity bound, 4 sieve bound, 5 selftest or internal consistency failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ramsey/engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/primes.hpp"
#include "ramsey/selftest.hpp"
#include "ramsey/spec_io.hpp"

namespace {

using ramsey::Json;

constexpr int kExitOk = 0;
constexpr int kExitSpec = 1;
constexpr int kExitNoCandidate = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitSieve = 4;
constexpr int kExitSelftest = 5;

void render_human(const Json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                os << pad << key << ":\n";
                render_human(value, os, indent + 1);
            } else {
                os << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                os << pad << "-\n";
                render_human(value, os, indent + 1);
            } else {
                os << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const Json& j, const std::string& format) {
    if (format == "table")
        render_human(j, std::cout, 0);
    else
        std::cout << j.dump(2) << "\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ramsey::SpecError("cannot open spec file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ramsey::SpecError("spec file " + path + " is not valid JSON: " + e.what());
    }
}

std::vector<ramsey::FieldElem> parse_coloring(const std::string& text,
                                              const ramsey::FieldSpec& field) {
    std::vector<ramsey::FieldElem> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long v = 0;
        try {
            v = std::stol(item);
        } catch (...) {
            throw ramsey::SpecError("coloring entry '" + item + "' is not an integer");
        }
        if (v < 0 || v >= static_cast<long>(field.q()))
            throw ramsey::SpecError("coloring value " + item + " outside GF(" +
                                    std::to_string(field.q()) + ")");
        out.push_back(static_cast<ramsey::FieldElem>(v));
    }
    return out;
}

struct CommonFlags {
    int workers = 1;
    std::uint64_t capacity = ramsey::kDefaultPointCapacity;
    std::string format = "json";

    void attach(CLI::App* cmd) {
        cmd->add_option("--workers", workers, "worker threads for coloring scans")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--capacity", capacity,
                        "max enumerated colorings / polynomial terms per step")
            ->envname("RAMSEY_CAPACITY")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    }

    ramsey::RunOptions options() const {
        ramsey::RunOptions o;
        o.workers = workers;
        o.capacity = capacity;
        return o;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Ramsey number engine"};
    app.require_subcommand(1);

    // classical
    auto* classical = app.add_subcommand("classical", "classical Ramsey number R(z_1,...,z_m)");
    std::vector<std::uint32_t> classical_z;
    long classical_horizon = 0;
    std::string classical_backend = "both";
    CommonFlags classical_flags;
    classical->add_option("z", classical_z, "clique sizes")->required()->expected(-1);
    classical->add_option("--horizon", classical_horizon, "largest K_n searched")->required();
    classical->add_option("--backend", classical_backend, "search backend")
        ->check(CLI::IsMember({"direct", "algebraic", "both"}));
    classical_flags.attach(classical);

    // general
    auto* general = app.add_subcommand("general", "run a JSON instance spec");
    std::string general_spec;
    CommonFlags general_flags;
    general->add_option("spec", general_spec, "path to the instance spec")->required();
    general_flags.attach(general);

    // indicator
    auto* indicator = app.add_subcommand("indicator", "indicator polynomial operations");
    indicator->require_subcommand(1);
    std::string ind_spec_path, ind_coloring;
    CommonFlags ind_flags;
    auto* ind_eval = indicator->add_subcommand("eval", "evaluate at a coloring");
    auto* ind_expand = indicator->add_subcommand("expand", "reduced polynomial modulo x^q - x");
    auto* ind_member = indicator->add_subcommand("member", "membership in <x_e^q - x_e>");
    for (auto* sub : {ind_eval, ind_expand, ind_member}) {
        sub->add_option("--spec", ind_spec_path, "indicator spec file")->required();
        ind_flags.attach(sub);
    }
    ind_eval->add_option("--coloring", ind_coloring,
                         "comma-separated packed field values, one per host edge")
        ->required();

    // primes
    auto* primes = app.add_subcommand("primes", "prime-gap window encodings");
    primes->require_subcommand(1);
    long pr_t = 1, pr_k = 1, pr_m = 1, pr_horizon = 12, pr_tmax = 3, pr_mmax = 10;
    std::uint64_t sieve_bound = ramsey::kDefaultSieveBound;
    std::string polignac_mode = "short-circuit";
    CommonFlags primes_flags;
    auto* pr_twin = primes->add_subcommand("twin", "pairs at distance 2");
    auto* pr_ap = primes->add_subcommand("ap", "gap-k progressions of length t");
    auto* pr_pol = primes->add_subcommand("polignac", "consecutive gaps 2t");
    auto* pr_gt = primes->add_subcommand("greentao", "progressions with some gap below the index");
    auto* pr_zhang = primes->add_subcommand("zhang-scan", "which even gaps recur per m");
    for (auto* sub : {pr_twin, pr_ap, pr_pol, pr_gt, pr_zhang}) {
        sub->add_option("--horizon", pr_horizon, "largest window index searched");
        sub->add_option("--sieve-bound", sieve_bound, "sieve limit")
            ->envname("RAMSEY_SIEVE_BOUND")
            ->check(CLI::PositiveNumber);
        primes_flags.attach(sub);
    }
    pr_ap->add_option("--t", pr_t, "path length (AP has t+1 terms)")->required();
    pr_ap->add_option("--k", pr_k, "gap")->required();
    pr_ap->add_option("--m", pr_m, "window start prime index");
    pr_twin->add_option("--m", pr_m, "window start prime index");
    pr_pol->add_option("--t", pr_t, "half the gap (target gap 2t)")->required();
    pr_pol->add_option("--m", pr_m, "window start prime index");
    pr_pol->add_option("--mode", polignac_mode, "evaluation mode")
        ->check(CLI::IsMember({"short-circuit", "exhaustive", "both"}));
    pr_gt->add_option("--t", pr_t, "path length (AP has t+1 terms)")->required();
    pr_zhang->add_option("--t-max", pr_tmax, "largest t scanned");
    pr_zhang->add_option("--m-max", pr_mmax, "largest m scanned");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
    CommonFlags selftest_flags;
    selftest_flags.attach(selftest);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classical->parsed()) {
            auto [base, symbol] = ramsey::make_classical_instance(classical_z);
            ramsey::RunOptions opts = classical_flags.options();
            opts.backend = classical_backend == "direct"      ? ramsey::Backend::Direct
                           : classical_backend == "algebraic" ? ramsey::Backend::Algebraic
                                                              : ramsey::Backend::Both;
            const ramsey::SearchReport rep =
                ramsey::ramsey_number(base, symbol, classical_horizon, opts);
            Json out{{"command", "classical"},
                     {"z", classical_z},
                     {"report", ramsey::report_to_json(rep, base.alphabet)}};
            emit(out, classical_flags.format);
            return rep.candidate ? kExitOk : kExitNoCandidate;
        }

        if (general->parsed()) {
            ramsey::InstanceSpec spec = ramsey::instance_from_json(load_json_file(general_spec));
            if (general->count("--workers")) spec.options.workers = general_flags.workers;
            if (general->count("--capacity")) spec.options.capacity = general_flags.capacity;
            const ramsey::SearchReport rep =
                ramsey::ramsey_number(spec.base, spec.symbol, spec.horizon, spec.options);
            Json out{{"command", "general"},
                     {"report", ramsey::report_to_json(rep, spec.base.alphabet)}};
            emit(out, general_flags.format);
            return rep.candidate ? kExitOk : kExitNoCandidate;
        }

        if (indicator->parsed()) {
            // --capacity caps both the term count and (for member) the point
            // count; defaults differ, so resolve them separately
            const bool capacity_set =
                ind_eval->count("--capacity") || ind_expand->count("--capacity") ||
                ind_member->count("--capacity");
            const std::uint64_t term_capacity =
                capacity_set ? ind_flags.capacity : ramsey::kDefaultTermCapacity;
            const std::uint64_t point_capacity =
                capacity_set ? ind_flags.capacity : ramsey::kDefaultPointCapacity;
            const ramsey::IndicatorSpec spec =
                ramsey::indicator_spec_from_json(load_json_file(ind_spec_path));
            const ramsey::IndicatorExpr expr = ramsey::build_indicator(
                spec.host, spec.targets, spec.field, point_capacity);
            if (ind_eval->parsed()) {
                const auto coloring = parse_coloring(ind_coloring, spec.field);
                if (coloring.size() != spec.host.edge_count())
                    throw ramsey::SpecError("coloring must list " +
                                            std::to_string(spec.host.edge_count()) + " values");
                const ramsey::FieldElem value = ramsey::evaluate(expr, coloring);
                emit(Json{{"command", "indicator-eval"},
                          {"value", ramsey::element_to_json(spec.field, value)},
                          {"value_packed", value}},
                     ind_flags.format);
                return kExitOk;
            }
            if (ind_expand->parsed()) {
                const ramsey::ReducedPoly poly = ramsey::expand_reduced(expr, term_capacity);
                emit(Json{{"command", "indicator-expand"},
                          {"poly", ramsey::reduced_poly_to_json(poly)}},
                     ind_flags.format);
                return kExitOk;
            }
            const ramsey::MembershipResult res = ramsey::ideal_membership(
                expr, term_capacity, point_capacity, ind_flags.workers);
            emit(Json{{"command", "indicator-member"},
                      {"member", res.member},
                      {"route", res.route == ramsey::MembershipRoute::Reduction    ? "reduction"
                                : res.route == ramsey::MembershipRoute::Evaluation ? "evaluation"
                                                                                   : "both"}},
                 ind_flags.format);
            return kExitOk;
        }

        if (primes->parsed()) {
            const ramsey::PrimeTable table(sieve_bound);
            const ramsey::RunOptions opts = primes_flags.options();
            if (pr_zhang->parsed()) {
                const auto rows =
                    ramsey::zhang_ramsey_scan(pr_mmax, pr_tmax, pr_horizon, table, opts);
                emit(Json{{"command", "primes-zhang-scan"},
                          {"table", ramsey::zhang_table_to_json(rows, pr_mmax, pr_horizon)}},
                     primes_flags.format);
                return kExitOk;
            }
            if (pr_pol->parsed()) {
                const ramsey::PolignacMode mode =
                    polignac_mode == "exhaustive" ? ramsey::PolignacMode::Exhaustive
                    : polignac_mode == "both"     ? ramsey::PolignacMode::Both
                                                  : ramsey::PolignacMode::ShortCircuit;
                const auto run = ramsey::polignac_ramsey(pr_t, pr_m, pr_horizon, mode, table, opts);
                emit(Json{{"command", "primes-polignac"},
                          {"run", ramsey::polignac_run_to_json(run)}},
                     primes_flags.format);
                return run.run.candidate ? kExitOk : kExitNoCandidate;
            }
            ramsey::PrimeRun run;
            if (pr_twin->parsed())
                run = ramsey::twin_prime_ramsey(pr_m, pr_horizon, table, opts);
            else if (pr_ap->parsed())
                run = ramsey::ap_ramsey(pr_t, pr_k, pr_m, pr_horizon, table, opts);
            else
                run = ramsey::greentao_ramsey(pr_t, pr_horizon, table, opts);
            emit(Json{{"command", "primes-" + run.kind},
                      {"run", ramsey::prime_run_to_json(run)}},
                 primes_flags.format);
            return run.candidate ? kExitOk : kExitNoCandidate;
        }

        if (selftest->parsed()) {
            const auto results = ramsey::run_selftest(selftest_flags.workers);
            bool all_pass = true;
            Json checks = Json::array();
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                checks.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
            }
            emit(Json{{"command", "selftest"}, {"all_pass", all_pass}, {"checks", checks}},
                 selftest_flags.format);
            return all_pass ? kExitOk : kExitSelftest;
        }
    } catch (const ramsey::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << " (bound " << e.bound() << ")\n";
        return kExitCapacity;
    } catch (const ramsey::SieveBoundError& e) {
        std::cerr << "sieve bound error: " << e.what() << "\n";
        return kExitSieve;
    } catch (const ramsey::SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const ramsey::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitSelftest;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    }
    return kExitSpec;
}

// permstat: exact combinatorics of the watershed permutation statistic.
//
// Subcommands: foata, watershed, count, hikita, sample, bulldozer, verify.
// All I/O is UTF-8 JSON on stdin/stdout; errors go to stderr as JSON.
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error,
// 4 internal contradiction, 5 resource limit.

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "permstat/bulldozer.hpp"
#include "permstat/counting.hpp"
#include "permstat/errors.hpp"
#include "permstat/hikita.hpp"
#include "permstat/json_io.hpp"
#include "permstat/perm.hpp"
#include "permstat/rational.hpp"
#include "permstat/sampler.hpp"
#include "permstat/verify.hpp"
#include "permstat/watershed.hpp"

namespace {

using permstat::json;

struct CliConfig {
    std::int64_t enumeration_cap = permstat::kDefaultEnumerationCap;
    std::uint64_t samples = 100000;
    std::optional<std::uint64_t> seed;
    std::string output_mode = "json"; // json | plain
    unsigned decimal_precision = 12;
    bool decimals = false;
};

int exit_code_for(const permstat::Error& e) {
    switch (e.code()) {
        case permstat::ErrorCode::parse: return 2;
        case permstat::ErrorCode::domain: return 3;
        case permstat::ErrorCode::internal_contradiction: return 4;
        case permstat::ErrorCode::resource_limit: return 5;
    }
    return 1;
}

void emit_error(const permstat::Error& e) {
    json err{{"error", json{{"code", e.tag()}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
}

// Positional argument if present, otherwise stdin.
json read_input(const std::optional<std::string>& arg) {
    if (arg) return permstat::parse_json(*arg);
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return permstat::parse_json(buffer.str());
}

void print_plain(const json& j, std::ostream& out, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object())) {
                out << pad << key << ":\n";
                print_plain(value, out, indent + 2);
            } else {
                out << pad << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) print_plain(item, out, indent);
        if (!j.empty() && j[0].is_object()) return;
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const CliConfig& config, const json& result) {
    if (config.output_mode == "plain")
        print_plain(result, std::cout);
    else
        std::cout << result.dump() << "\n";
}

json decimals_json(const std::vector<permstat::Rational>& values, unsigned precision) {
    json out = json::array();
    for (const auto& v : values) out.push_back(permstat::decimal_string(v, precision));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of the watershed permutation statistic"};
    app.require_subcommand(1);

    CliConfig config;
    app.add_option("--enumeration-cap", config.enumeration_cap,
                   "max 2n for exhaustive enumeration (even, default 8)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--output", config.output_mode, "output mode: json or plain")
        ->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--precision", config.decimal_precision,
                   "digits for decimal approximations (default 12)");

    // foata
    auto* cmd_foata = app.add_subcommand("foata", "Foata map between cycle form and orderings");
    bool foata_forward = false, foata_inverse_flag = false;
    std::optional<std::string> foata_input;
    cmd_foata->add_flag("--forward", foata_forward, "cycles -> ordering");
    cmd_foata->add_flag("--inverse", foata_inverse_flag, "ordering -> canonical cycles");
    cmd_foata->add_option("input", foata_input, "JSON input (stdin when omitted)");

    // watershed
    auto* cmd_watershed = app.add_subcommand("watershed", "watershed of an even-length ordering");
    bool watershed_trace = false;
    std::optional<std::string> watershed_input;
    cmd_watershed->add_flag("--trace", watershed_trace, "include the run-collapse trace");
    cmd_watershed->add_option("input", watershed_input, "ordering as a JSON array");

    // count
    auto* cmd_count = app.add_subcommand("count", "watershed counting formulas");
    std::int64_t count_n = 0;
    std::optional<std::int64_t> count_k;
    bool count_brute = false;
    cmd_count->add_option("--n", count_n, "half-length n")->required()->check(CLI::NonNegativeNumber);
    cmd_count->add_option("--k", count_k, "single watershed value");
    cmd_count->add_flag("--even-total-brute", count_brute,
                        "cross-check by exhaustive enumeration (capped)");

    // hikita
    auto* cmd_hikita = app.add_subcommand("hikita", "transition probabilities phi_k");
    std::optional<std::string> hikita_input;
    std::optional<std::int64_t> hikita_k;
    bool hikita_full = false;
    cmd_hikita->add_option("input", hikita_input, R"({"a": [...], "b": [...], "q": "p/q"})");
    cmd_hikita->add_option("--k", hikita_k, "single phi_k instead of the distribution");
    cmd_hikita->add_flag("--full", hikita_full, "object output with the exact sum");
    cmd_hikita->add_flag("--decimals", config.decimals, "include decimal approximations");

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "draw orderings from the weighted process");
    std::vector<std::int64_t> sample_a, sample_b;
    std::string sample_q = "1";
    std::uint64_t sample_count = 1;
    bool sample_report = false;
    cmd_sample->add_option("--a", sample_a, "block lengths a_1 a_2 ...")->required();
    cmd_sample->add_option("--b", sample_b, "block lengths b_1 b_2 ...")->required();
    cmd_sample->add_option("--q", sample_q, "positive rational q as p/q (default 1)");
    cmd_sample->add_option("--n-samples", sample_count, "number of orderings to draw");
    cmd_sample->add_option("--seed", config.seed, "64-bit seed (generated when omitted)");
    cmd_sample->add_flag("--report", sample_report,
                         "tally watersheds and compare against phi_k at 4 sigma");

    // bulldozer
    auto* cmd_bulldozer = app.add_subcommand("bulldozer", "unsweepable town of a line");
    std::optional<std::string> bulldozer_input;
    bool bulldozer_simulate = false;
    cmd_bulldozer->add_option("input", bulldozer_input,
                              "even-length sequence or {\"left\": [...], \"right\": [...]}");
    cmd_bulldozer->add_flag("--simulate", bulldozer_simulate,
                            "cross-check sweeps with the event-level simulator");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
    std::string verify_level = "full";
    std::uint64_t verify_seed = 0x5EED5EED;
    bool verify_mutate = false;
    cmd_verify->add_option("--level", verify_level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    cmd_verify->add_option("--seed", verify_seed, "seed for the randomized sweeps");
    cmd_verify->add_option("--samples", config.samples, "Monte Carlo sample count");
    cmd_verify->add_flag("--inject-ascent-flip", verify_mutate,
                         "fault injection: corrupt the fast watershed to prove the suites catch it")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::ostringstream message;
        const int rc = app.exit(e, message, message);
        (void)rc;
        json err{{"error", json{{"code", "usage"}, {"message", message.str()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (*cmd_foata) {
            if (foata_forward == foata_inverse_flag)
                throw permstat::DomainError("domain", "pass exactly one of --forward / --inverse");
            const json input = read_input(foata_input);
            if (foata_forward) {
                const auto perm = permstat::cycles_from_json(input);
                emit(config, permstat::ordering_to_json(permstat::foata(perm)));
            } else {
                const auto ordering = permstat::ordering_from_json(input);
                emit(config, permstat::cycles_to_json(permstat::foata_inverse(ordering)));
            }
        } else if (*cmd_watershed) {
            const auto ordering = permstat::ordering_from_json(read_input(watershed_input));
            const auto result = permstat::watershed_fast(ordering);
            const std::size_t brute = permstat::watershed_brute(ordering);
            json out{{"k", result.k}, {"fast_equals_brute", result.k == brute}};
            if (result.k != brute)
                throw permstat::InternalContradictionError(
                    "fast and brute-force watershed disagree on this input");
            if (watershed_trace) out["trace"] = permstat::trace_to_json(result.trace);
            emit(config, out);
        } else if (*cmd_count) {
            json counts = json::array();
            permstat::BigCount total = 0;
            const std::int64_t n = count_n;
            if (count_k && (*count_k < 0 || *count_k > n))
                throw permstat::DomainError("domain", "k must lie in 0..n");
            for (std::int64_t k = 0; k <= n; ++k) {
                const auto c = permstat::watershed_count(n, k);
                total += c;
                counts.push_back(c.str());
            }
            json out;
            if (count_k) {
                out = json{{"n", n},
                           {"k", *count_k},
                           {"count", permstat::watershed_count(n, *count_k).str()}};
            } else {
                out = json{{"counts", counts}, {"total", total.str()}};
            }
            if (count_brute) {
                const auto brute = permstat::even_total_distribution(n, config.enumeration_cap);
                json brute_json = json::array();
                for (const auto& c : brute) brute_json.push_back(c.str());
                out["even_total_brute"] = brute_json;
                out["matches_formula"] = [&] {
                    for (std::int64_t k = 0; k <= n; ++k)
                        if (brute[static_cast<std::size_t>(k)] != permstat::watershed_count(n, k))
                            return false;
                    return true;
                }();
            }
            emit(config, out);
        } else if (*cmd_hikita) {
            const auto params = permstat::params_from_json(read_input(hikita_input));
            if (hikita_k) {
                if (*hikita_k < 0 || static_cast<std::size_t>(*hikita_k) > params.n())
                    throw permstat::DomainError("domain", "k must lie in 0..n");
                const auto phi = permstat::hikita_phi(params, static_cast<std::size_t>(*hikita_k));
                json out;
                if (hikita_full || config.decimals) {
                    out = json{{"k", *hikita_k}, {"phi", permstat::rational_to_string(phi)}};
                    if (config.decimals)
                        out["decimal"] = permstat::decimal_string(phi, config.decimal_precision);
                } else {
                    out = json(permstat::rational_to_string(phi));
                }
                emit(config, out);
            } else {
                const auto phi = permstat::hikita_distribution(params);
                if (hikita_full || config.decimals) {
                    json out{{"phi", permstat::rationals_to_json(phi)}, {"sum", "1"}};
                    if (config.decimals)
                        out["decimals"] = decimals_json(phi, config.decimal_precision);
                    emit(config, out);
                } else {
                    emit(config, permstat::rationals_to_json(phi));
                }
            }
        } else if (*cmd_sample) {
            const permstat::HikitaParams params(sample_a, sample_b,
                                                permstat::rational_from_string(sample_q));
            const std::uint64_t seed = config.seed ? *config.seed : std::random_device{}();
            if (sample_report) {
                const auto report = permstat::monte_carlo_watershed(params, sample_count, seed);
                emit(config, permstat::report_to_json(report));
            } else {
                const auto weights = permstat::weights_from_params(params);
                std::vector<std::int64_t> elems(2 * params.n());
                std::iota(elems.begin(), elems.end(), std::int64_t{1});
                permstat::RandomSource rng(seed);
                json orderings = json::array();
                for (std::uint64_t s = 0; s < sample_count; ++s)
                    orderings.push_back(
                        permstat::ordering_to_json(permstat::process_w_sample(elems, weights, rng)));
                emit(config, json{{"seed", seed},
                                  {"weights", permstat::rationals_to_json(weights.values())},
                                  {"orderings", orderings}});
            }
        } else if (*cmd_bulldozer) {
            const json input = read_input(bulldozer_input);
            std::optional<permstat::TownLine> line;
            std::optional<permstat::LinearOrdering> seq;
            if (input.is_array()) {
                seq = permstat::ordering_from_json(input);
                line = permstat::line_from_sequence(*seq);
            } else {
                line = permstat::town_line_from_json(input);
                // interior bulldozers, read left to right, form the sequence
                std::vector<std::int64_t> interior;
                for (std::size_t t = 1; t < line->towns(); ++t) {
                    interior.push_back(line->right(t).value());
                    interior.push_back(line->left(t + 1).value());
                }
                seq = permstat::LinearOrdering(std::move(interior));
            }
            const std::size_t town = permstat::unique_unsweepable_town(*line);
            const std::size_t k = permstat::watershed_fast_k(*seq);
            json out{{"unsweepable_town", town},
                     {"watershed", k},
                     {"correspondence", town == k + 1}};
            if (bulldozer_simulate) {
                bool agrees = true;
                for (std::size_t i = 1; i <= line->towns() && agrees; ++i)
                    for (std::size_t j = 1; j <= line->towns() && agrees; ++j)
                        if (i != j &&
                            permstat::can_sweep(*line, i, j) !=
                                permstat::can_sweep_simulated(*line, i, j))
                            agrees = false;
                out["simulator_agrees"] = agrees;
            }
            emit(config, out);
        } else if (*cmd_verify) {
            permstat::VerifyOptions options;
            options.level = verify_level == "quick" ? permstat::VerifyLevel::quick
                                                    : permstat::VerifyLevel::full;
            options.seed = verify_seed;
            options.monte_carlo_samples = config.samples;
            options.mutate_watershed = verify_mutate;
            const auto suites = permstat::run_verification(options);
            emit(config, permstat::verification_to_json(suites, options));
            return permstat::all_passed(suites) ? 0 : 1;
        }
    } catch (const permstat::Error& e) {
        emit_error(e);
        return exit_code_for(e);
    } catch (const std::exception& e) {
        json err{{"error", json{{"code", "internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}

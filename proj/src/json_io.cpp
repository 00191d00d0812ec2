#include "permstat/json_io.hpp"

#include <limits>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

std::int64_t int64_from_json(const json& j, const char* what) {
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw ParseError(std::string(what) + " exceeds the 64-bit signed range");
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_array_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be a JSON array, got " + j.dump());
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(int64_from_json(item, what));
    return out;
}

Rational rational_from_json(const json& j, const char* what) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(int64_from_json(j, what));
    throw ParseError(std::string(what) + " must be a \"p/q\" string or an integer, got " + j.dump());
}

} // namespace

json parse_json(std::string_view text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

json ordering_to_json(const LinearOrdering& ordering) {
    return json(ordering.elements());
}

LinearOrdering ordering_from_json(const json& j) {
    return LinearOrdering(int_array_from_json(j, "ordering"));
}

json cycles_to_json(const CyclePermutation& perm) {
    json cycles = json::array();
    for (const auto& cycle : perm.cycles()) cycles.push_back(cycle);
    return json{{"cycles", cycles}};
}

CyclePermutation cycles_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cycles") || !j.at("cycles").is_array())
        throw ParseError("expected {\"cycles\": [[...], ...]}");
    std::vector<std::vector<std::int64_t>> cycles;
    for (const auto& cycle : j.at("cycles")) cycles.push_back(int_array_from_json(cycle, "cycle"));
    return CyclePermutation(std::move(cycles));
}

json trace_to_json(const WatershedTrace& trace) {
    json levels = json::array();
    for (std::size_t l = 0; l < trace.levels.size(); ++l) {
        json runs = json::array();
        for (const WatershedRun& run : trace.levels[l].runs) {
            json positions = json::array();
            for (std::size_t p = run.first_pos; p <= run.last_pos; ++p) positions.push_back(p);
            const char* assignment = run.assignment == RunAssignment::left    ? "left"
                                     : run.assignment == RunAssignment::right ? "right"
                                                                              : "carry";
            runs.push_back(json{{"label", run.label == RunLabel::ascent ? "A" : "D"},
                                {"positions", positions},
                                {"representative", run.representative},
                                {"assignment", assignment}});
        }
        levels.push_back(json{{"level", l + 1}, {"runs", runs}});
    }
    return json{{"left_cut", trace.left_cut}, {"levels", levels}};
}

HikitaParams params_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("q"))
        throw ParseError("expected {\"a\": [...], \"b\": [...], \"q\": \"p/q\"}");
    return HikitaParams(int_array_from_json(j.at("a"), "a"), int_array_from_json(j.at("b"), "b"),
                        rational_from_json(j.at("q"), "q"));
}

json rationals_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const Rational& v : values) out.push_back(rational_to_string(v));
    return out;
}

json report_to_json(const DistributionReport& report) {
    json within = json::array();
    for (bool b : report.within_tolerance) within.push_back(b);
    return json{{"seed", report.seed},
                {"shard_seeds", report.shard_seeds},
                {"sample_size", report.sample_size},
                {"exact", rationals_to_json(report.exact)},
                {"empirical_counts", report.empirical_counts},
                {"frequencies", report.frequencies},
                {"deviations", report.deviations},
                {"tolerances", report.tolerances},
                {"within_tolerance", within},
                {"tolerance_sigma", report.tolerance_sigma},
                {"chi_square", report.chi_square},
                {"verdict", report.passed ? "pass" : "fail"}};
}

json town_line_to_json(const TownLine& line) {
    json left = json::array(), right = json::array();
    for (std::size_t t = 1; t <= line.towns(); ++t) {
        left.push_back(line.left(t) ? json(*line.left(t)) : json(nullptr));
        right.push_back(line.right(t) ? json(*line.right(t)) : json(nullptr));
    }
    return json{{"left", left}, {"right", right}};
}

TownLine town_line_from_json(const json& j) {
    if (!j.is_object() || !j.contains("left") || !j.contains("right") ||
        !j.at("left").is_array() || !j.at("right").is_array())
        throw ParseError("expected {\"left\": [...], \"right\": [...]} with null for absent");
    auto slots = [](const json& arr, const char* what) {
        std::vector<std::optional<std::int64_t>> out;
        out.reserve(arr.size());
        for (const auto& item : arr) {
            if (item.is_null())
                out.push_back(std::nullopt);
            else
                out.push_back(int64_from_json(item, what));
        }
        return out;
    };
    return TownLine(slots(j.at("left"), "left size"), slots(j.at("right"), "right size"));
}

} // namespace permstat

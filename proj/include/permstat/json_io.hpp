#pragma once

#include <string_view>

#include <json.hpp>

#include "permstat/bulldozer.hpp"
#include "permstat/hikita.hpp"
#include "permstat/perm.hpp"
#include "permstat/rational.hpp"
#include "permstat/sampler.hpp"
#include "permstat/watershed.hpp"

namespace permstat {

// ordered_json keeps field order stable so golden outputs stay byte-exact.
using json = nlohmann::ordered_json;

json parse_json(std::string_view text); // ParseError on malformed input

// Orderings cross the wire as bare integer arrays.
json ordering_to_json(const LinearOrdering& ordering);
LinearOrdering ordering_from_json(const json& j);

// Cycle permutations as {"cycles": [[...], ...]}, canonical on output,
// any rotation accepted on input.
json cycles_to_json(const CyclePermutation& perm);
CyclePermutation cycles_from_json(const json& j);

json trace_to_json(const WatershedTrace& trace);

// {"a": [...], "b": [...], "q": "p/q"}; q also accepted as a JSON integer.
HikitaParams params_from_json(const json& j);

json report_to_json(const DistributionReport& report);

// {"left": [null, 6, ...], "right": [2, ..., null]}
json town_line_to_json(const TownLine& line);
TownLine town_line_from_json(const json& j);

json rationals_to_json(const std::vector<Rational>& values);

} // namespace permstat

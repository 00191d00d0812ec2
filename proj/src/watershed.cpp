#include "permstat/watershed.hpp"

#include <algorithm>
#include <string>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

void require_even_length(const LinearOrdering& ordering, const char* op) {
    if (ordering.size() % 2 != 0)
        throw DomainError("invalid-length", std::string(op) + " requires an even-length ordering, got length " +
                                                std::to_string(ordering.size()));
}

} // namespace

std::size_t watershed_brute(const LinearOrdering& ordering) {
    require_even_length(ordering, "watershed_brute");
    const std::size_t n = ordering.size() / 2;
    std::vector<std::size_t> passing;
    for (std::size_t k = 0; k <= n; ++k) {
        if (even_via_records(ordering.reversed_prefix(2 * k)) &&
            even_via_records(ordering.suffix(2 * k + 1)))
            passing.push_back(k);
    }
    if (passing.size() != 1)
        throw InternalContradictionError(
            "watershed uniqueness violated: " + std::to_string(passing.size()) +
            " values of k pass the even-cycle test on a length-" + std::to_string(2 * n) +
            " ordering");
    return passing.front();
}

namespace detail {

WatershedResult watershed_fast_impl(const LinearOrdering& ordering, bool with_trace,
                                    bool flip_comparison) {
    require_even_length(ordering, "watershed_fast");

    struct Item {
        std::int64_t value;    // largest original element over the span
        std::size_t lo, hi;    // 1-based inclusive span of original positions
    };

    WatershedResult result;
    const auto& elems = ordering.elements();

    std::vector<Item> items;
    items.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
        items.push_back({elems[i], i + 1, i + 1});

    std::size_t left_count = 0;
    std::size_t right_count = 0;

    while (!items.empty()) {
        if (items.size() % 2 != 0)
            throw InternalContradictionError("collapse level has odd length " +
                                             std::to_string(items.size()));
        const std::size_t pairs = items.size() / 2;

        // Letter of pair p, then maximal runs of equal letters.
        auto letter_of = [&](std::size_t p) {
            const bool asc = items[2 * p].value < items[2 * p + 1].value;
            return (asc != flip_comparison) ? RunLabel::ascent : RunLabel::descent;
        };

        struct PairRun {
            RunLabel label;
            std::size_t first_pair, last_pair;
        };
        std::vector<PairRun> runs;
        for (std::size_t p = 0; p < pairs; ++p) {
            const RunLabel l = letter_of(p);
            if (runs.empty() || runs.back().label != l)
                runs.push_back({l, p, p});
            else
                runs.back().last_pair = p;
        }

        std::size_t begin = 0, end = runs.size();
        const bool strip_left = runs.front().label == RunLabel::ascent;
        if (strip_left) ++begin;
        const bool strip_right = begin < end && runs.back().label == RunLabel::descent;
        if (strip_right) --end;

        WatershedLevel level;
        std::vector<Item> next;
        next.reserve(end - begin);

        auto run_extent = [&](const PairRun& run) {
            Item item;
            item.lo = items[2 * run.first_pair].lo;
            item.hi = items[2 * run.last_pair + 1].hi;
            item.value = items[2 * run.first_pair].value;
            for (std::size_t q = 2 * run.first_pair + 1; q <= 2 * run.last_pair + 1; ++q)
                item.value = std::max(item.value, items[q].value);
            return item;
        };

        std::size_t consumed = 0;
        for (std::size_t r = 0; r < runs.size(); ++r) {
            const Item extent = run_extent(runs[r]);
            RunAssignment assignment = RunAssignment::carry;
            if (strip_left && r == 0) {
                assignment = RunAssignment::left;
                left_count += extent.hi - extent.lo + 1;
            } else if (strip_right && r == runs.size() - 1) {
                assignment = RunAssignment::right;
                right_count += extent.hi - extent.lo + 1;
            } else {
                next.push_back(extent);
            }
            consumed += runs[r].last_pair - runs[r].first_pair + 1;
            if (with_trace)
                level.runs.push_back(
                    {runs[r].label, assignment, extent.lo, extent.hi, extent.value});
        }
        if (consumed != pairs)
            throw InternalContradictionError("run decomposition did not consume the level");
        if (with_trace) result.trace.levels.push_back(std::move(level));

        if (next.size() == items.size())
            throw InternalContradictionError("collapse level did not shrink");
        items = std::move(next);
    }

    if (left_count % 2 != 0 || left_count + right_count != elems.size())
        throw InternalContradictionError("left/right assignment does not partition the ordering");

    result.k = left_count / 2;
    result.trace.left_cut = left_count;
    return result;
}

} // namespace detail

WatershedResult watershed_fast(const LinearOrdering& ordering) {
    return detail::watershed_fast_impl(ordering, /*with_trace=*/true, /*flip_comparison=*/false);
}

std::size_t watershed_fast_k(const LinearOrdering& ordering) {
    return detail::watershed_fast_impl(ordering, /*with_trace=*/false, /*flip_comparison=*/false).k;
}

} // namespace permstat

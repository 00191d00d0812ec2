#pragma once

#include <cstdint>
#include <vector>

#include "permstat/perm.hpp"

namespace permstat {

enum class RunLabel { ascent, descent };
enum class RunAssignment { left, right, carry };

/// One maximal run of equal letters at some level of the collapse.
/// Positions are a contiguous 1-based span of the original ordering.
struct WatershedRun {
    RunLabel label;
    RunAssignment assignment;
    std::size_t first_pos;
    std::size_t last_pos;
    std::int64_t representative; // largest original element over the span

    bool operator==(const WatershedRun&) const = default;
};

struct WatershedLevel {
    std::vector<WatershedRun> runs;
    bool operator==(const WatershedLevel&) const = default;
};

/// Full record of the level-by-level run collapse.
/// Invariants: each representative is the maximum original element over its
/// run's positions; the left/right-assigned runs over all levels partition
/// positions 1..2n.
struct WatershedTrace {
    std::vector<WatershedLevel> levels;
    std::size_t left_cut = 0; // count of original positions assigned left

    bool operator==(const WatershedTrace&) const = default;
};

struct WatershedResult {
    std::size_t k = 0;
    WatershedTrace trace;
};

/// Definition-based watershed: scans every k in 0..n and tests whether the
/// reversed length-2k prefix and the length-(2n-2k) suffix both pass
/// even_via_records. Verifies uniqueness on every call; zero or multiple
/// passing k throws InternalContradictionError.
/// Throws DomainError("invalid-length") on odd length.
std::size_t watershed_brute(const LinearOrdering& ordering);

/// Run-collapse algorithm: pair consecutive terms into ascents/descents,
/// assign the initial ascent run left and the terminal descent run right,
/// collapse each surviving run to its largest element, repeat until empty.
/// Equals watershed_brute on every input.
WatershedResult watershed_fast(const LinearOrdering& ordering);

/// k only, no trace allocation.
std::size_t watershed_fast_k(const LinearOrdering& ordering);

namespace detail {

/// Core with a fault-injection hook: flip_comparison inverts the
/// ascent/descent test. Only the verification harness uses the hook, to
/// prove the suites catch a corrupted build.
WatershedResult watershed_fast_impl(const LinearOrdering& ordering, bool with_trace,
                                    bool flip_comparison);

} // namespace detail

} // namespace permstat

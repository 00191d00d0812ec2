#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permstat/perm.hpp"

namespace permstat {

/// A row of towns, each with a left-facing and right-facing bulldozer of
/// distinct positive size. Only the leftmost town's left bulldozer and the
/// rightmost town's right bulldozer may be absent; they never matter.
class TownLine {
public:
    /// left[t-1]/right[t-1] are the bulldozers of town t (1-based).
    TownLine(std::vector<std::optional<std::int64_t>> left_sizes,
             std::vector<std::optional<std::int64_t>> right_sizes);

    std::size_t towns() const noexcept { return left_.size(); }
    const std::optional<std::int64_t>& left(std::size_t town) const { return left_.at(town - 1); }
    const std::optional<std::int64_t>& right(std::size_t town) const { return right_.at(town - 1); }

private:
    std::vector<std::optional<std::int64_t>> left_;
    std::vector<std::optional<std::int64_t>> right_;
};

/// True iff town i can push its facing bulldozer all the way to town j:
/// for i < j, r_i must exceed every l_t for t in i+1..j (facing bulldozers
/// lose only to strictly larger ones; same-facing ones are rear-ended off
/// regardless of size). Symmetric for j < i.
bool can_sweep(const TownLine& line, std::size_t i, std::size_t j);

/// The same decision by stepping through the individual confrontations
/// between towns i and j. Cross-validation for can_sweep.
bool can_sweep_simulated(const TownLine& line, std::size_t i, std::size_t j);

/// Every town that no other town can sweep away, ascending.
std::vector<std::size_t> unsweepable_towns(const TownLine& line);

/// The unique unsweepable town; anything but a singleton result throws
/// InternalContradictionError.
std::size_t unique_unsweepable_town(const TownLine& line);

/// Builds the line of m+1 towns whose interior bulldozers, read left to
/// right, are the sequence: r_1, l_2, r_2, l_3, ..., l_{m+1}. The outer
/// two slots are absent. Throws DomainError on odd length or non-positive
/// entries.
TownLine line_from_sequence(const LinearOrdering& sequence);

/// True iff the unsweepable town of line_from_sequence(seq) is exactly
/// watershed(seq) + 1.
bool correspondence_check(const LinearOrdering& sequence);

} // namespace permstat

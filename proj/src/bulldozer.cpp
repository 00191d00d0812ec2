#include "permstat/bulldozer.hpp"

#include <string>
#include <unordered_set>

#include "permstat/errors.hpp"
#include "permstat/watershed.hpp"

namespace permstat {

namespace {

std::int64_t require_present(const std::optional<std::int64_t>& size, std::size_t town,
                             const char* side) {
    if (!size)
        throw DomainError("absent-bulldozer", std::string("the ") + side + " bulldozer of town " +
                                                  std::to_string(town) + " is absent");
    return *size;
}

void require_town_index(const TownLine& line, std::size_t t) {
    if (t < 1 || t > line.towns())
        throw DomainError("domain", "town index " + std::to_string(t) + " outside 1.." +
                                        std::to_string(line.towns()));
}

} // namespace

TownLine::TownLine(std::vector<std::optional<std::int64_t>> left_sizes,
                   std::vector<std::optional<std::int64_t>> right_sizes)
    : left_(std::move(left_sizes)), right_(std::move(right_sizes)) {
    if (left_.empty() || left_.size() != right_.size())
        throw DomainError("domain", "a town line needs n >= 1 towns with matching left/right lists");
    const std::size_t n = left_.size();
    std::unordered_set<std::int64_t> seen;
    auto check = [&](const std::optional<std::int64_t>& size, std::size_t idx, bool may_be_absent) {
        if (!size) {
            if (!may_be_absent)
                throw DomainError("domain", "only the outer two bulldozers may be absent (slot " +
                                                std::to_string(idx) + ")");
            return;
        }
        if (*size < 1)
            throw DomainError("domain", "bulldozer sizes must be positive, got " + std::to_string(*size));
        if (!seen.insert(*size).second)
            throw DomainError("domain", "bulldozer sizes must be distinct, repeated " + std::to_string(*size));
    };
    for (std::size_t t = 0; t < n; ++t) {
        check(left_[t], t + 1, /*may_be_absent=*/t == 0);
        check(right_[t], t + 1, /*may_be_absent=*/t == n - 1);
    }
}

bool can_sweep(const TownLine& line, std::size_t i, std::size_t j) {
    require_town_index(line, i);
    require_town_index(line, j);
    if (i == j) throw DomainError("domain", "can_sweep requires two distinct towns");
    if (i < j) {
        const std::int64_t mover = require_present(line.right(i), i, "right");
        for (std::size_t t = i + 1; t <= j; ++t)
            if (require_present(line.left(t), t, "left") > mover) return false;
        return true;
    }
    const std::int64_t mover = require_present(line.left(i), i, "left");
    for (std::size_t t = j; t < i; ++t)
        if (require_present(line.right(t), t, "right") > mover) return false;
    return true;
}

bool can_sweep_simulated(const TownLine& line, std::size_t i, std::size_t j) {
    require_town_index(line, i);
    require_town_index(line, j);
    if (i == j) throw DomainError("domain", "can_sweep_simulated requires two distinct towns");

    // Walk the mover across every bulldozer slot strictly between town i and
    // town j. Opposing bulldozers fight (larger wins, sizes are distinct);
    // same-facing ones are hit at the rear and pushed off whatever their size.
    if (i < j) {
        const std::int64_t mover = require_present(line.right(i), i, "right");
        for (std::size_t t = i + 1; t <= j; ++t) {
            const std::int64_t opposing = require_present(line.left(t), t, "left");
            if (opposing > mover) return false; // mover pushed off before reaching town t
            // town t reached; for t < j its right bulldozer is rear-ended off
        }
        return true;
    }
    const std::int64_t mover = require_present(line.left(i), i, "left");
    for (std::size_t t = i; t-- > j;) {
        const std::int64_t opposing = require_present(line.right(t), t, "right");
        if (opposing > mover) return false;
        // town t reached; for t > j its left bulldozer is rear-ended off
    }
    return true;
}

std::vector<std::size_t> unsweepable_towns(const TownLine& line) {
    std::vector<std::size_t> result;
    for (std::size_t target = 1; target <= line.towns(); ++target) {
        bool swept = false;
        for (std::size_t source = 1; source <= line.towns() && !swept; ++source)
            if (source != target && can_sweep(line, source, target)) swept = true;
        if (!swept) result.push_back(target);
    }
    return result;
}

std::size_t unique_unsweepable_town(const TownLine& line) {
    const auto towns = unsweepable_towns(line);
    if (towns.size() != 1)
        throw InternalContradictionError("expected exactly one unsweepable town, found " +
                                         std::to_string(towns.size()));
    return towns.front();
}

TownLine line_from_sequence(const LinearOrdering& sequence) {
    if (sequence.size() % 2 != 0)
        throw DomainError("invalid-length", "a town line needs an even-length sequence, got length " +
                                                std::to_string(sequence.size()));
    const std::size_t m = sequence.size() / 2;
    const std::size_t n = m + 1;
    std::vector<std::optional<std::int64_t>> left(n), right(n);
    for (std::size_t t = 1; t <= m; ++t) {
        right[t - 1] = sequence.at(2 * t - 1); // r_t
        left[t] = sequence.at(2 * t);          // l_{t+1}
    }
    return TownLine(std::move(left), std::move(right));
}

bool correspondence_check(const LinearOrdering& sequence) {
    const std::size_t k = watershed_fast_k(sequence);
    const auto towns = unsweepable_towns(line_from_sequence(sequence));
    return towns.size() == 1 && towns.front() == k + 1;
}

} // namespace permstat

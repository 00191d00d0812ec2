#include "permstat/perm.hpp"

#include <algorithm>
#include <unordered_set>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

void require_distinct(const std::vector<std::int64_t>& values, const char* what) {
    std::unordered_set<std::int64_t> seen;
    seen.reserve(values.size());
    for (std::int64_t v : values) {
        if (!seen.insert(v).second)
            throw DomainError("duplicate-element",
                              std::string(what) + " contains duplicate element " + std::to_string(v));
    }
}

} // namespace

LinearOrdering::LinearOrdering(std::vector<std::int64_t> elements) {
    require_distinct(elements, "linear ordering");
    elements_ = std::move(elements);
}

LinearOrdering LinearOrdering::unchecked(std::vector<std::int64_t> elements) {
    LinearOrdering result;
    result.elements_ = std::move(elements);
    return result;
}

LinearOrdering LinearOrdering::reversed_prefix(std::size_t len) const {
    std::vector<std::int64_t> out(elements_.begin(), elements_.begin() + len);
    std::reverse(out.begin(), out.end());
    return unchecked(std::move(out));
}

LinearOrdering LinearOrdering::suffix(std::size_t from) const {
    std::vector<std::int64_t> out(elements_.begin() + (from - 1), elements_.end());
    return unchecked(std::move(out));
}

CyclePermutation::CyclePermutation(std::vector<std::vector<std::int64_t>> cycles) {
    std::vector<std::int64_t> all;
    for (auto& cycle : cycles) {
        if (cycle.empty())
            throw DomainError("invalid-permutation", "cycle must be non-empty");
        all.insert(all.end(), cycle.begin(), cycle.end());
        // Rotate so the maximum leads.
        auto max_it = std::max_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), max_it, cycle.end());
    }
    try {
        require_distinct(all, "cycle permutation");
    } catch (const DomainError& e) {
        throw DomainError("invalid-permutation", e.what());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    cycles_ = std::move(cycles);
}

std::vector<std::int64_t> CyclePermutation::support() const {
    std::vector<std::int64_t> all;
    for (const auto& cycle : cycles_) all.insert(all.end(), cycle.begin(), cycle.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::size_t CyclePermutation::support_size() const noexcept {
    std::size_t n = 0;
    for (const auto& cycle : cycles_) n += cycle.size();
    return n;
}

CyclePermutation canonicalize(std::vector<std::vector<std::int64_t>> cycles) {
    return CyclePermutation(std::move(cycles));
}

LinearOrdering foata(const CyclePermutation& perm) {
    std::vector<std::int64_t> out;
    out.reserve(perm.support_size());
    for (const auto& cycle : perm.cycles()) out.insert(out.end(), cycle.begin(), cycle.end());
    return LinearOrdering::unchecked(std::move(out));
}

CyclePermutation foata_inverse(const LinearOrdering& ordering) {
    // Each record opens a cycle. Within a segment the record is the maximum
    // and records increase left to right, so the result is born canonical.
    std::vector<std::vector<std::int64_t>> cycles;
    const auto& elems = ordering.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (cycles.empty() || elems[i] > cycles.back().front())
            cycles.emplace_back();
        cycles.back().push_back(elems[i]);
    }
    return CyclePermutation(std::move(cycles), CyclePermutation::already_canonical_tag{});
}

std::vector<std::size_t> records(const LinearOrdering& ordering) {
    std::vector<std::size_t> positions;
    const auto& elems = ordering.elements();
    std::int64_t best = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i == 0 || elems[i] > best) {
            positions.push_back(i + 1);
            best = elems[i];
        }
    }
    return positions;
}

bool all_cycles_even(const CyclePermutation& perm) {
    for (const auto& cycle : perm.cycles())
        if (cycle.size() % 2 != 0) return false;
    return true;
}

bool even_via_records(const LinearOrdering& ordering) {
    const auto& elems = ordering.elements();
    if (elems.size() % 2 != 0)
        throw DomainError("invalid-length",
                          "even_via_records requires an even-length ordering, got length " +
                              std::to_string(elems.size()));
    std::int64_t best = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const bool is_record = (i == 0) || elems[i] > best;
        if (is_record) {
            if ((i + 1) % 2 == 0) return false;
            best = elems[i];
        }
    }
    return true;
}

CyclePermutation cycles_from_one_line(const std::vector<std::int64_t>& one_line) {
    const std::size_t m = one_line.size();
    std::vector<bool> visited(m, false);
    std::vector<std::vector<std::int64_t>> cycles;
    for (std::size_t start = 0; start < m; ++start) {
        if (visited[start]) continue;
        std::vector<std::int64_t> cycle;
        std::size_t i = start;
        while (!visited[i]) {
            visited[i] = true;
            cycle.push_back(static_cast<std::int64_t>(i + 1));
            const std::int64_t next = one_line[i];
            if (next < 1 || static_cast<std::size_t>(next) > m)
                throw DomainError("invalid-permutation",
                                  "one-line permutation value out of range: " + std::to_string(next));
            i = static_cast<std::size_t>(next - 1);
        }
        cycles.push_back(std::move(cycle));
    }
    return CyclePermutation(std::move(cycles));
}

} // namespace permstat

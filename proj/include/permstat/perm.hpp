#pragma once

#include <cstdint>
#include <vector>

namespace permstat {

/// A sequence of pairwise distinct 64-bit integers. Positions are 1-based
/// in the public contract; the empty ordering is legal.
class LinearOrdering {
public:
    LinearOrdering() = default;

    /// Validates distinctness; throws DomainError("duplicate-element") otherwise.
    explicit LinearOrdering(std::vector<std::int64_t> elements);

    /// Bypasses the distinctness check. Only for callers that construct
    /// from values already known to be distinct (slices, shuffles of a set).
    static LinearOrdering unchecked(std::vector<std::int64_t> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    /// 1-based access, pos in [1, size()].
    std::int64_t at(std::size_t pos) const { return elements_.at(pos - 1); }

    const std::vector<std::int64_t>& elements() const noexcept { return elements_; }

    /// First `len` elements in reverse order.
    LinearOrdering reversed_prefix(std::size_t len) const;

    /// Elements from 1-based position `from` to the end.
    LinearOrdering suffix(std::size_t from) const;

    bool operator==(const LinearOrdering&) const = default;

private:
    std::vector<std::int64_t> elements_;
};

/// A permutation of a finite integer set in disjoint-cycle form, kept
/// canonical: each cycle starts with its largest element, cycles sorted
/// ascending by that largest element.
class CyclePermutation {
public:
    CyclePermutation() = default; // empty permutation

    /// Accepts cycles in any rotation/order; rotates and sorts into canonical
    /// form. Throws DomainError("invalid-permutation") on duplicates or an
    /// empty cycle.
    explicit CyclePermutation(std::vector<std::vector<std::int64_t>> cycles);

    const std::vector<std::vector<std::int64_t>>& cycles() const noexcept { return cycles_; }

    /// Union of all cycle entries, ascending.
    std::vector<std::int64_t> support() const;

    std::size_t support_size() const noexcept;

    bool operator==(const CyclePermutation&) const = default;

private:
    struct already_canonical_tag {};
    CyclePermutation(std::vector<std::vector<std::int64_t>> cycles, already_canonical_tag)
        : cycles_(std::move(cycles)) {}

    std::vector<std::vector<std::int64_t>> cycles_;

    friend CyclePermutation foata_inverse(const LinearOrdering&);
};

/// Rotate each cycle so its maximum leads and sort cycles by maximum.
CyclePermutation canonicalize(std::vector<std::vector<std::int64_t>> cycles);

/// Concatenate the canonical cycles ("erase the parentheses").
LinearOrdering foata(const CyclePermutation& perm);

/// Cut the sequence immediately before each left-to-right maximum; each
/// segment is one cycle. Inverse of foata().
CyclePermutation foata_inverse(const LinearOrdering& ordering);

/// 1-based positions of the left-to-right maxima (records), ascending.
std::vector<std::size_t> records(const LinearOrdering& ordering);

/// True iff every cycle length is even (vacuously true when empty).
bool all_cycles_even(const CyclePermutation& perm);

/// Even-length orderings only: true iff no record sits at an even position,
/// i.e. max(rho_1..rho_{2j}) != rho_{2j} for every j.
/// Throws DomainError("invalid-length") on odd length.
bool even_via_records(const LinearOrdering& ordering);

/// Cycle decomposition of the one-line permutation i -> one_line[i-1]
/// on {1..m}. Enumeration/test utility.
CyclePermutation cycles_from_one_line(const std::vector<std::int64_t>& one_line);

} // namespace permstat

#pragma once

#include <cstdint>
#include <vector>

#include "permstat/counting.hpp"
#include "permstat/hikita.hpp"
#include "permstat/perm.hpp"
#include "permstat/random.hpp"
#include "permstat/rational.hpp"

namespace permstat {

/// Supplies the index choices that drive the sequential-ranking process.
/// Indices are 1-based positions into the ordering under construction.
/// The injectable interface lets a test force a specific choice sequence.
class ChoiceSource {
public:
    virtual ~ChoiceSource() = default;

    /// Pick one of `available` (ascending 1-based positions). scaled_weights
    /// holds the integer weight of every position (1-based, index 0 unused).
    virtual std::size_t choose(const std::vector<std::size_t>& available,
                               const std::vector<BigInt>& scaled_weights) = 0;
};

/// Draws proportionally to the weights: one uniform integer below the
/// remaining total, then a cumulative walk in ascending position order.
/// Exact integer arithmetic end to end; no floating point anywhere.
class WeightedChoice final : public ChoiceSource {
public:
    explicit WeightedChoice(RandomSource& rng) : rng_(&rng) {}
    std::size_t choose(const std::vector<std::size_t>& available,
                       const std::vector<BigInt>& scaled_weights) override;

private:
    RandomSource* rng_;
};

/// Replays a fixed sequence of 1-based positions; once exhausted, steps that
/// are forced by elimination (one position left) resolve themselves. Throws
/// DomainError when a forced position is not available or more than one
/// position remains open.
class ForcedChoice final : public ChoiceSource {
public:
    explicit ForcedChoice(std::vector<std::size_t> positions)
        : positions_(std::move(positions)) {}
    std::size_t choose(const std::vector<std::size_t>& available,
                       const std::vector<BigInt>& scaled_weights) override;

private:
    std::vector<std::size_t> positions_;
    std::size_t cursor_ = 0;
};

/// The sequential-ranking process: repeatedly choose an unassigned position
/// with probability proportional to its weight and place the largest
/// not-yet-placed element of `elements` there.
LinearOrdering process_w_sample(const std::vector<std::int64_t>& elements,
                                const WeightVector& weights, ChoiceSource& choices);
LinearOrdering process_w_sample(const std::vector<std::int64_t>& elements,
                                const WeightVector& weights, RandomSource& rng);

/// Per-step selection probabilities w_{i_t} / (remaining total) for the
/// choice sequence that produces `ordering`; the last factor is always 1.
std::vector<Rational> ordering_step_factors(const WeightVector& weights,
                                            const LinearOrdering& ordering);

/// Exact probability that the process yields `ordering`: the product of the
/// step factors.
Rational ordering_probability(const WeightVector& weights, const LinearOrdering& ordering);

/// Exact watershed distribution by full enumeration: sums
/// ordering_probability over all (2n)! orderings of {1..2n}, bucketed by
/// watershed. Sums to 1 exactly. Throws ResourceLimitError above the cap.
std::vector<Rational> exact_watershed_distribution(const WeightVector& weights,
                                                   std::int64_t cap_2n = kDefaultEnumerationCap);

/// Closed form (sum of weights over Q) / (sum over R) for the probability
/// that the position of max{pi_i : i in R} lies in Q. Q and R are sets of
/// 1-based positions with Q subseteq R. Throws DomainError otherwise.
Rational subset_max_probability(const WeightVector& weights, const std::vector<std::size_t>& q_set,
                                const std::vector<std::size_t>& r_set);

/// Companion oracle: the same probability obtained by enumerating every
/// ordering, weighted by ordering_probability.
Rational subset_max_probability_enumerated(const WeightVector& weights,
                                           const std::vector<std::size_t>& q_set,
                                           const std::vector<std::size_t>& r_set,
                                           std::int64_t cap_2n = kDefaultEnumerationCap);

/// Outcome of a Monte Carlo watershed run compared against the exact
/// transition probabilities. empirical_counts always sums to sample_size.
struct DistributionReport {
    std::vector<Rational> exact;        // phi_k; may be empty when unavailable
    std::vector<std::uint64_t> empirical_counts;
    std::uint64_t sample_size = 0;
    std::vector<double> frequencies;    // counts / sample_size
    std::vector<double> deviations;     // |frequency - phi_k|
    std::vector<double> tolerances;     // tolerance_sigma * sqrt(phi(1-phi)/N)
    std::vector<bool> within_tolerance;
    double tolerance_sigma = 4.0;
    double chi_square = 0.0;            // informational only
    bool passed = false;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> shard_seeds;
};

/// Draws sample_size orderings of {1..2n} via the weighted process, computes
/// the watershed of each, and checks every empirical frequency against
/// phi_k at the 4-sigma binomial tolerance (floating point for reporting
/// only; all sampling is exact integer arithmetic).
DistributionReport monte_carlo_watershed(const HikitaParams& params, std::uint64_t sample_size,
                                         std::uint64_t seed);

} // namespace permstat

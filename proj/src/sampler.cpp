#include "permstat/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "permstat/errors.hpp"
#include "permstat/watershed.hpp"

namespace permstat {

namespace {

// Scale the rational weights to integers by the LCM of denominators.
// Index 0 is unused so positions stay 1-based.
std::vector<BigInt> scale_to_integers(const WeightVector& weights) {
    BigInt lcm = 1;
    for (const Rational& w : weights.values())
        lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(w)));
    std::vector<BigInt> scaled(weights.size() + 1);
    for (std::size_t i = 1; i <= weights.size(); ++i) {
        const Rational& w = weights.at(i);
        scaled[i] = numerator(w) * (lcm / denominator(w));
    }
    return scaled;
}

void require_sizes_match(std::size_t elements, std::size_t weights) {
    if (elements != weights)
        throw DomainError("domain", "element count " + std::to_string(elements) +
                                        " does not match weight count " + std::to_string(weights));
}

std::vector<std::size_t> validated_position_set(const std::vector<std::size_t>& set,
                                                std::size_t size, const char* name) {
    std::vector<std::size_t> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("domain", std::string(name) + " contains a repeated position");
    for (std::size_t pos : sorted)
        if (pos < 1 || pos > size)
            throw DomainError("domain", std::string(name) + " position " + std::to_string(pos) +
                                            " outside 1.." + std::to_string(size));
    return sorted;
}

} // namespace

std::size_t WeightedChoice::choose(const std::vector<std::size_t>& available,
                                   const std::vector<BigInt>& scaled_weights) {
    BigInt total = 0;
    for (std::size_t pos : available) total += scaled_weights[pos];
    BigInt draw = rng_->uniform_below(total);
    for (std::size_t pos : available) {
        if (draw < scaled_weights[pos]) return pos;
        draw -= scaled_weights[pos];
    }
    throw InternalContradictionError("weighted choice walked past the cumulative total");
}

std::size_t ForcedChoice::choose(const std::vector<std::size_t>& available,
                                 const std::vector<BigInt>&) {
    if (cursor_ >= positions_.size()) {
        // the final step of the process is forced by elimination
        if (available.size() == 1) return available.front();
        throw DomainError("domain", "forced choice sequence exhausted with " +
                                        std::to_string(available.size()) + " positions open");
    }
    const std::size_t pos = positions_[cursor_++];
    if (!std::binary_search(available.begin(), available.end(), pos))
        throw DomainError("domain",
                          "forced choice position " + std::to_string(pos) + " is not available");
    return pos;
}

LinearOrdering process_w_sample(const std::vector<std::int64_t>& elements,
                                const WeightVector& weights, ChoiceSource& choices) {
    require_sizes_match(elements.size(), weights.size());
    std::vector<std::int64_t> ranked = elements;
    std::sort(ranked.begin(), ranked.end(), std::greater<>());
    if (std::adjacent_find(ranked.begin(), ranked.end()) != ranked.end())
        throw DomainError("duplicate-element", "process elements must be distinct");

    const std::vector<BigInt> scaled = scale_to_integers(weights);
    std::vector<std::size_t> available(elements.size());
    std::iota(available.begin(), available.end(), std::size_t{1});

    std::vector<std::int64_t> result(elements.size());
    for (std::int64_t value : ranked) {
        const std::size_t pos = choices.choose(available, scaled);
        result[pos - 1] = value;
        available.erase(std::find(available.begin(), available.end(), pos));
    }
    return LinearOrdering::unchecked(std::move(result));
}

LinearOrdering process_w_sample(const std::vector<std::int64_t>& elements,
                                const WeightVector& weights, RandomSource& rng) {
    WeightedChoice choice(rng);
    return process_w_sample(elements, weights, choice);
}

std::vector<Rational> ordering_step_factors(const WeightVector& weights,
                                            const LinearOrdering& ordering) {
    require_sizes_match(ordering.size(), weights.size());
    // Position of the t-th largest element, t = 1, 2, ...
    std::vector<std::size_t> by_rank(ordering.size());
    std::iota(by_rank.begin(), by_rank.end(), std::size_t{1});
    std::sort(by_rank.begin(), by_rank.end(),
              [&](std::size_t p, std::size_t q) { return ordering.at(p) > ordering.at(q); });

    Rational remaining = weights.total();
    std::vector<Rational> factors;
    factors.reserve(ordering.size());
    for (std::size_t pos : by_rank) {
        factors.push_back(weights.at(pos) / remaining);
        remaining -= weights.at(pos);
    }
    return factors;
}

Rational ordering_probability(const WeightVector& weights, const LinearOrdering& ordering) {
    Rational probability = 1;
    for (const Rational& factor : ordering_step_factors(weights, ordering))
        probability *= factor;
    return probability;
}

std::vector<Rational> exact_watershed_distribution(const WeightVector& weights,
                                                   std::int64_t cap_2n) {
    if (weights.size() % 2 != 0)
        throw DomainError("invalid-length", "exact_watershed_distribution requires an even number "
                                            "of weights, got " + std::to_string(weights.size()));
    if (static_cast<std::int64_t>(weights.size()) > cap_2n)
        throw ResourceLimitError("enumeration over (" + std::to_string(weights.size()) +
                                 ")! orderings exceeds the cap 2n <= " + std::to_string(cap_2n));
    const std::size_t n = weights.size() / 2;

    std::vector<Rational> distribution(n + 1, Rational(0));
    std::vector<std::int64_t> elems(weights.size());
    std::iota(elems.begin(), elems.end(), std::int64_t{1});
    Rational total = 0;
    do {
        const LinearOrdering ordering = LinearOrdering::unchecked(elems);
        const Rational p = ordering_probability(weights, ordering);
        distribution[watershed_brute(ordering)] += p;
        total += p;
    } while (std::next_permutation(elems.begin(), elems.end()));

    if (total != 1)
        throw InternalContradictionError("ordering probabilities sum to " +
                                         rational_to_string(total) + " instead of 1");
    return distribution;
}

Rational subset_max_probability(const WeightVector& weights, const std::vector<std::size_t>& q_set,
                                const std::vector<std::size_t>& r_set) {
    const auto q_sorted = validated_position_set(q_set, weights.size(), "Q");
    const auto r_sorted = validated_position_set(r_set, weights.size(), "R");
    if (!std::includes(r_sorted.begin(), r_sorted.end(), q_sorted.begin(), q_sorted.end()))
        throw DomainError("domain", "Q must be a subset of R");
    if (r_sorted.empty()) throw DomainError("domain", "R must be non-empty");

    Rational q_sum = 0, r_sum = 0;
    for (std::size_t pos : q_sorted) q_sum += weights.at(pos);
    for (std::size_t pos : r_sorted) r_sum += weights.at(pos);
    return q_sum / r_sum;
}

Rational subset_max_probability_enumerated(const WeightVector& weights,
                                           const std::vector<std::size_t>& q_set,
                                           const std::vector<std::size_t>& r_set,
                                           std::int64_t cap_2n) {
    const auto q_sorted = validated_position_set(q_set, weights.size(), "Q");
    const auto r_sorted = validated_position_set(r_set, weights.size(), "R");
    if (!std::includes(r_sorted.begin(), r_sorted.end(), q_sorted.begin(), q_sorted.end()))
        throw DomainError("domain", "Q must be a subset of R");
    if (r_sorted.empty()) throw DomainError("domain", "R must be non-empty");
    if (static_cast<std::int64_t>(weights.size()) > cap_2n)
        throw ResourceLimitError("enumeration over (" + std::to_string(weights.size()) +
                                 ")! orderings exceeds the cap " + std::to_string(cap_2n));

    std::vector<std::int64_t> elems(weights.size());
    std::iota(elems.begin(), elems.end(), std::int64_t{1});
    Rational hit = 0;
    do {
        const LinearOrdering ordering = LinearOrdering::unchecked(elems);
        std::size_t max_pos = 0;
        for (std::size_t pos : r_sorted)
            if (max_pos == 0 || ordering.at(pos) > ordering.at(max_pos)) max_pos = pos;
        if (std::binary_search(q_sorted.begin(), q_sorted.end(), max_pos))
            hit += ordering_probability(weights, ordering);
    } while (std::next_permutation(elems.begin(), elems.end()));
    return hit;
}

DistributionReport monte_carlo_watershed(const HikitaParams& params, std::uint64_t sample_size,
                                         std::uint64_t seed) {
    if (sample_size < 1) throw DomainError("domain", "sample_size must be >= 1");

    const WeightVector weights = weights_from_params(params);
    const std::vector<Rational> phi = hikita_distribution(params);
    const std::size_t n = params.n();

    std::vector<std::int64_t> elems(2 * n);
    std::iota(elems.begin(), elems.end(), std::int64_t{1});

    DistributionReport report;
    report.exact = phi;
    report.sample_size = sample_size;
    report.seed = seed;
    report.shard_seeds = {seed};
    report.empirical_counts.assign(n + 1, 0);

    RandomSource rng(seed);
    WeightedChoice choice(rng);
    for (std::uint64_t s = 0; s < sample_size; ++s) {
        const LinearOrdering ordering = process_w_sample(elems, weights, choice);
        report.empirical_counts[watershed_fast_k(ordering)] += 1;
    }

    report.passed = true;
    const double N = static_cast<double>(sample_size);
    for (std::size_t k = 0; k <= n; ++k) {
        const double p = static_cast<double>(phi[k]);
        const double freq = static_cast<double>(report.empirical_counts[k]) / N;
        const double tol = report.tolerance_sigma * std::sqrt(p * (1.0 - p) / N);
        report.frequencies.push_back(freq);
        report.deviations.push_back(std::abs(freq - p));
        report.tolerances.push_back(tol);
        report.within_tolerance.push_back(std::abs(freq - p) <= tol);
        if (!report.within_tolerance.back()) report.passed = false;
        const double expected = N * p;
        const double diff = static_cast<double>(report.empirical_counts[k]) - expected;
        report.chi_square += diff * diff / expected;
    }
    return report;
}

} // namespace permstat

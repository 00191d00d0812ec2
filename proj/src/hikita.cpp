#include "permstat/hikita.hpp"

#include <cassert>
#include <string>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw DomainError("domain", "parameter sum overflows 64-bit range");
    return out;
}

// prefix[i] = sum_{j=1..i} (a_j + b_j), prefix[0] = 0
std::vector<std::int64_t> block_prefix_sums(const HikitaParams& params) {
    std::vector<std::int64_t> prefix(params.n() + 1, 0);
    for (std::size_t i = 0; i < params.n(); ++i)
        prefix[i + 1] = checked_add(prefix[i], checked_add(params.a()[i], params.b()[i]));
    return prefix;
}

} // namespace

HikitaParams::HikitaParams(std::vector<std::int64_t> a, std::vector<std::int64_t> b, Rational q)
    : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {
    if (a_.empty() || a_.size() != b_.size())
        throw DomainError("domain", "a and b must be non-empty sequences of equal length");
    for (std::int64_t v : a_)
        if (v < 1) throw DomainError("domain", "all a_i must be >= 1, got " + std::to_string(v));
    for (std::int64_t v : b_)
        if (v < 1) throw DomainError("domain", "all b_i must be >= 1, got " + std::to_string(v));
    if (q_ <= 0) throw DomainError("domain", "q must be positive, got " + rational_to_string(q_));
}

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
    for (const Rational& w : weights_)
        if (w <= 0)
            throw DomainError("domain", "weights must be strictly positive, got " + rational_to_string(w));
}

Rational WeightVector::total() const {
    Rational sum = 0;
    for (const Rational& w : weights_) sum += w;
    return sum;
}

Rational q_int(std::int64_t m, const Rational& q) {
    if (q <= 0) throw DomainError("domain", "q must be positive, got " + rational_to_string(q));
    if (m < 0) throw DomainError("domain", "q_int requires m >= 0, got " + std::to_string(m));
    Rational result;
    if (q == 1) {
        result = m;
    } else {
        result = (pow_rational(q, static_cast<std::uint64_t>(m)) - 1) / (q - 1);
    }
#ifndef NDEBUG
    if (m <= 64) {
        Rational sum = 0;
        Rational power = 1;
        for (std::int64_t i = 0; i < m; ++i) {
            sum += power;
            power *= q;
        }
        assert(sum == result && "closed form disagrees with term-by-term q-integer");
    }
#endif
    return result;
}

Rational hikita_phi(const HikitaParams& params, std::size_t k) {
    const std::size_t n = params.n();
    if (k > n)
        throw DomainError("domain", "hikita_phi requires 0 <= k <= n, got k = " + std::to_string(k));
    const Rational& q = params.q();
    const auto prefix = block_prefix_sums(params);

    Rational result = 1;
    // i = 1..k, 1-based; prefix[y] - prefix[x-1] = sum_{j=x..y}(a_j+b_j)
    for (std::size_t i = 1; i <= k; ++i) {
        const std::int64_t a_i = params.a()[i - 1];
        const std::int64_t b_i = params.b()[i - 1];
        const std::int64_t tail = prefix[k] - prefix[i]; // sum over j = i+1..k
        result *= pow_rational(q, static_cast<std::uint64_t>(a_i)) * q_int(b_i + tail, q);
        result /= q_int(prefix[k] - prefix[i - 1], q);
    }
    for (std::size_t i = k + 1; i <= n; ++i) {
        const std::int64_t a_i = params.a()[i - 1];
        const std::int64_t mid = prefix[i - 1] - prefix[k]; // sum over j = k+1..i-1
        result *= q_int(a_i + mid, q);
        result /= q_int(prefix[i] - prefix[k], q);
    }
    return result;
}

std::vector<Rational> hikita_distribution(const HikitaParams& params) {
    std::vector<Rational> phi;
    phi.reserve(params.n() + 1);
    Rational sum = 0;
    for (std::size_t k = 0; k <= params.n(); ++k) {
        phi.push_back(hikita_phi(params, k));
        sum += phi.back();
    }
    if (sum != 1)
        throw InternalContradictionError("transition probabilities sum to " +
                                         rational_to_string(sum) + " instead of 1");
    return phi;
}

WeightVector weights_from_params(const HikitaParams& params) {
    const Rational& q = params.q();
    std::vector<Rational> weights;
    weights.reserve(2 * params.n());
    std::int64_t exponent = 0;
    for (std::size_t i = 0; i < params.n(); ++i) {
        for (std::int64_t len : {params.a()[i], params.b()[i]}) {
            // q^exponent + ... + q^{exponent+len-1} = q^exponent * [len]_q
            weights.push_back(pow_rational(q, static_cast<std::uint64_t>(exponent)) * q_int(len, q));
            exponent = checked_add(exponent, len);
        }
    }
    return WeightVector(std::move(weights));
}

} // namespace permstat

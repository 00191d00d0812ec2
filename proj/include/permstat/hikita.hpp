#pragma once

#include <cstdint>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

/// The 2n positive integers a_1,b_1,...,a_n,b_n plus a positive rational q.
/// q is restricted to rationals so every downstream identity can be checked
/// with exact equality.
class HikitaParams {
public:
    HikitaParams(std::vector<std::int64_t> a, std::vector<std::int64_t> b, Rational q);

    std::size_t n() const noexcept { return a_.size(); }
    const std::vector<std::int64_t>& a() const noexcept { return a_; }
    const std::vector<std::int64_t>& b() const noexcept { return b_; }
    const Rational& q() const noexcept { return q_; }

private:
    std::vector<std::int64_t> a_, b_;
    Rational q_;
};

/// Sequence of 2n strictly positive weights for the sequential-ranking
/// process. When built by weights_from_params the total is [sum(a_j+b_j)]_q.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> weights);

    std::size_t size() const noexcept { return weights_.size(); }
    const std::vector<Rational>& values() const noexcept { return weights_; }
    const Rational& at(std::size_t index1) const { return weights_.at(index1 - 1); }

    Rational total() const;

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<Rational> weights_;
};

/// [m]_q = 1 + q + ... + q^{m-1}; [0]_q = 0. Computed by the closed form
/// (q^m - 1)/(q - 1) when q != 1. Throws DomainError for q <= 0 or m < 0.
Rational q_int(std::int64_t m, const Rational& q);

/// The transition-probability product formula, evaluated exactly:
///   prod_{i=1..k} q^{a_i} [b_i + S(i+1,k)]_q / [S(i,k)]_q
///   * prod_{i=k+1..n} [a_i + S(k+1,i-1)]_q / [S(k+1,i)]_q
/// with S(x,y) = sum_{j=x..y} (a_j + b_j) and empty products equal to 1.
/// Strictly positive. Throws DomainError for k outside 0..n.
Rational hikita_phi(const HikitaParams& params, std::size_t k);

/// [phi_0, ..., phi_n]. Verifies the exact sum is 1 before returning;
/// a failed check throws InternalContradictionError.
std::vector<Rational> hikita_distribution(const HikitaParams& params);

/// Geometric blocks of q-powers: w_{2i-1} spans a_i exponents and w_{2i}
/// spans b_i exponents, consecutively from exponent 0.
WeightVector weights_from_params(const HikitaParams& params);

} // namespace permstat

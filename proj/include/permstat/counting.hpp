#pragma once

#include <cstdint>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

inline constexpr std::int64_t kDefaultEnumerationCap = 8; // max 2n for exhaustive scans

/// m!! = m(m-2)(m-4)...; (-1)!! = 0!! = 1 by the empty-product convention.
/// Throws DomainError for m < -1.
BigCount double_factorial(std::int64_t m);

BigCount factorial(std::int64_t n);

BigCount binomial(std::int64_t n, std::int64_t k);

/// Number of permutations of 2n elements whose cycle lengths are all even:
/// ((2n-1)!!)^2.
BigCount all_even_count(std::int64_t n);

/// Number of length-2n orderings with watershed k:
/// C(2n, 2k) * ((2k-1)!!)^2 * ((2n-2k-1)!!)^2.
/// Throws DomainError for k outside 0..n.
BigCount watershed_count(std::int64_t n, std::int64_t k);

/// Exhaustively counts permutations of {1..2n} whose even-length cycles have
/// total length exactly 2k. Throws ResourceLimitError when 2n > cap_2n.
BigCount even_total_brute(std::int64_t n, std::int64_t k,
                          std::int64_t cap_2n = kDefaultEnumerationCap);

/// even_total_brute for every k in 0..n from one pass over (2n)! permutations.
std::vector<BigCount> even_total_distribution(std::int64_t n,
                                              std::int64_t cap_2n = kDefaultEnumerationCap);

} // namespace permstat

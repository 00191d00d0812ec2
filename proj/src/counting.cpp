#include "permstat/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permstat/errors.hpp"

namespace permstat {

BigCount double_factorial(std::int64_t m) {
    if (m < -1)
        throw DomainError("domain", "double_factorial requires m >= -1, got " + std::to_string(m));
    BigCount result = 1;
    for (std::int64_t i = m; i >= 2; i -= 2) result *= i;
    return result;
}

BigCount factorial(std::int64_t n) {
    if (n < 0) throw DomainError("domain", "factorial requires n >= 0, got " + std::to_string(n));
    BigCount result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

BigCount binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is C(n-k+i, i) after each step
    }
    return result;
}

BigCount all_even_count(std::int64_t n) {
    if (n < 0) throw DomainError("domain", "all_even_count requires n >= 0");
    const BigCount df = double_factorial(2 * n - 1);
    return df * df;
}

BigCount watershed_count(std::int64_t n, std::int64_t k) {
    if (n < 0) throw DomainError("domain", "watershed_count requires n >= 0");
    if (k < 0 || k > n)
        throw DomainError("domain", "watershed_count requires 0 <= k <= n, got k = " +
                                        std::to_string(k) + " with n = " + std::to_string(n));
    return binomial(2 * n, 2 * k) * all_even_count(k) * all_even_count(n - k);
}

std::vector<BigCount> even_total_distribution(std::int64_t n, std::int64_t cap_2n) {
    if (n < 0) throw DomainError("domain", "even_total_distribution requires n >= 0");
    if (2 * n > cap_2n)
        throw ResourceLimitError("exhaustive enumeration over (" + std::to_string(2 * n) +
                                 ")! permutations exceeds the cap 2n <= " + std::to_string(cap_2n));

    std::vector<BigCount> counts(static_cast<std::size_t>(n) + 1, 0);
    const std::size_t m = static_cast<std::size_t>(2 * n);
    std::vector<std::size_t> one_line(m);
    std::iota(one_line.begin(), one_line.end(), std::size_t{0});
    std::vector<bool> visited(m);
    do {
        std::fill(visited.begin(), visited.end(), false);
        std::size_t even_total = 0;
        for (std::size_t start = 0; start < m; ++start) {
            if (visited[start]) continue;
            std::size_t len = 0;
            for (std::size_t i = start; !visited[i]; i = one_line[i]) {
                visited[i] = true;
                ++len;
            }
            if (len % 2 == 0) even_total += len;
        }
        counts[even_total / 2] += 1;
    } while (std::next_permutation(one_line.begin(), one_line.end()));
    return counts;
}

BigCount even_total_brute(std::int64_t n, std::int64_t k, std::int64_t cap_2n) {
    if (k < 0 || k > n)
        throw DomainError("domain", "even_total_brute requires 0 <= k <= n, got k = " +
                                        std::to_string(k) + " with n = " + std::to_string(n));
    return even_total_distribution(n, cap_2n)[static_cast<std::size_t>(k)];
}

} // namespace permstat

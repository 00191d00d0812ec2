#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "permstat/counting.hpp"
#include "permstat/errors.hpp"
#include "permstat/watershed.hpp"

using namespace permstat;

TEST_CASE("double factorial with the empty-product convention") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(7) == 105);
    CHECK_THROWS_AS(double_factorial(-2), DomainError);
}

TEST_CASE("all_even_count matches brute enumeration") {
    CHECK(all_even_count(0) == 1);
    // all cycles even <=> the even-length cycles cover everything
    CHECK(all_even_count(2) == 9);
    CHECK(all_even_count(2) == even_total_brute(2, 2));
    CHECK(all_even_count(3) == 225);
    CHECK(all_even_count(3) == even_total_brute(3, 3));
}

TEST_CASE("watershed_count distribution values") {
    CHECK(watershed_count(0, 0) == 1);
    CHECK(watershed_count(1, 0) == 1);
    CHECK(watershed_count(1, 1) == 1);
    CHECK(watershed_count(2, 0) == 9);
    CHECK(watershed_count(2, 1) == 6);
    CHECK(watershed_count(2, 2) == 9);
    CHECK_THROWS_AS(watershed_count(2, 3), DomainError);
    CHECK_THROWS_AS(watershed_count(2, -1), DomainError);
}

TEST_CASE("watershed_count equals the brute histogram at n = 2") {
    std::vector<BigCount> histogram(3, 0);
    std::vector<std::int64_t> elems = {1, 2, 3, 4};
    do {
        histogram[watershed_brute(LinearOrdering::unchecked(elems))] += 1;
    } while (std::next_permutation(elems.begin(), elems.end()));
    for (std::int64_t k = 0; k <= 2; ++k) CHECK(histogram[k] == watershed_count(2, k));
}

TEST_CASE("watershed_count sums to (2n)!") {
    for (std::int64_t n = 0; n <= 6; ++n) {
        BigCount sum = 0;
        for (std::int64_t k = 0; k <= n; ++k) sum += watershed_count(n, k);
        CHECK(sum == factorial(2 * n));
    }
}

TEST_CASE("even_total_brute counts even-cycle totals") {
    CHECK(even_total_brute(1, 0) == 1); // the identity
    CHECK(even_total_brute(1, 1) == 1); // the transposition
    CHECK(even_total_brute(2, 0) == 9);
    CHECK(even_total_brute(2, 1) == 6);
    CHECK(even_total_brute(2, 2) == 9);
    CHECK_THROWS_AS(even_total_brute(2, 5), DomainError);
}

TEST_CASE("even_total_brute respects the enumeration cap") {
    CHECK_THROWS_AS(even_total_brute(9, 0), ResourceLimitError);
    CHECK_NOTHROW(even_total_brute(5, 0, /*cap_2n=*/10));
}

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == BigCount("118264581564861424"));
}

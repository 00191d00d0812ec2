#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "permstat/errors.hpp"
#include "permstat/random.hpp"
#include "permstat/watershed.hpp"

using namespace permstat;

namespace {

LinearOrdering ord(std::vector<std::int64_t> v) { return LinearOrdering(std::move(v)); }

LinearOrdering random_ordering(RandomSource& rng, std::size_t m) {
    std::vector<std::int64_t> elems(m);
    std::iota(elems.begin(), elems.end(), std::int64_t{1});
    for (std::size_t i = m; i > 1; --i)
        std::swap(elems[i - 1], elems[rng.uniform_below_u64(i)]);
    return LinearOrdering::unchecked(std::move(elems));
}

} // namespace

TEST_CASE("brute-force watershed on the pinned sequences") {
    CHECK(watershed_brute(ord({2, 6, 1, 5, 4, 3})) == 2);
    CHECK(watershed_brute(ord({2, 5, 6, 7, 9, 3, 8, 4, 10, 1})) == 2);
    CHECK(watershed_brute(LinearOrdering()) == 0);
}

TEST_CASE("fast watershed on the pinned sequences") {
    CHECK(watershed_fast_k(ord({2, 6, 1, 5, 4, 3})) == 2);
    CHECK(watershed_fast_k(ord({2, 1})) == 0);
    CHECK(watershed_fast_k(ord({1, 2})) == 1);
    CHECK(watershed_fast_k(LinearOrdering()) == 0);
}

TEST_CASE("the 20-term collapse yields k = 7 with the expected right part") {
    const LinearOrdering rho({12, 20, 7, 15, 13, 11, 3, 9, 14, 5, 16, 10, 2, 19, 18, 4, 1, 8, 6, 17});
    const WatershedResult result = watershed_fast(rho);
    CHECK(result.k == 7);
    CHECK(result.trace.left_cut == 14);
    const std::vector<std::int64_t> right(rho.elements().begin() + 14, rho.elements().end());
    CHECK(right == std::vector<std::int64_t>{18, 4, 1, 8, 6, 17});

    // first level: initial ascent run 12,20,7,15 goes left
    REQUIRE(!result.trace.levels.empty());
    const WatershedRun& first = result.trace.levels[0].runs[0];
    CHECK(first.label == RunLabel::ascent);
    CHECK(first.assignment == RunAssignment::left);
    CHECK(first.first_pos == 1);
    CHECK(first.last_pos == 4);
    CHECK(first.representative == 20);
}

TEST_CASE("odd lengths are rejected") {
    CHECK_THROWS_AS(watershed_brute(ord({1, 2, 3})), DomainError);
    CHECK_THROWS_AS(watershed_fast(ord({9})), DomainError);
}

TEST_CASE("fast equals brute exhaustively through n = 3") {
    for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<std::int64_t> elems(2 * n);
        std::iota(elems.begin(), elems.end(), std::int64_t{1});
        do {
            const LinearOrdering rho = LinearOrdering::unchecked(elems);
            CHECK(watershed_fast_k(rho) == watershed_brute(rho));
        } while (std::next_permutation(elems.begin(), elems.end()));
    }
}

TEST_CASE("fast equals brute on random longer orderings") {
    RandomSource rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const LinearOrdering rho = random_ordering(rng, 2 * (1 + rng.uniform_below_u64(15)));
        CHECK(watershed_fast_k(rho) == watershed_brute(rho));
    }
}

TEST_CASE("trace invariants: representatives and the left/right partition") {
    RandomSource rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const LinearOrdering rho = random_ordering(rng, 2 * rng.uniform_below_u64(13));
        const WatershedResult result = watershed_fast(rho);

        std::vector<int> assigned(rho.size() + 1, 0);
        for (const WatershedLevel& level : result.trace.levels) {
            for (const WatershedRun& run : level.runs) {
                std::int64_t max_value = rho.at(run.first_pos);
                for (std::size_t p = run.first_pos; p <= run.last_pos; ++p)
                    max_value = std::max(max_value, rho.at(p));
                CHECK(run.representative == max_value);
                if (run.assignment != RunAssignment::carry)
                    for (std::size_t p = run.first_pos; p <= run.last_pos; ++p) ++assigned[p];
            }
        }
        for (std::size_t p = 1; p <= rho.size(); ++p) CHECK(assigned[p] == 1);

        // left assignments form the prefix of length left_cut
        CHECK(result.trace.left_cut == 2 * result.k);
        for (const WatershedLevel& level : result.trace.levels)
            for (const WatershedRun& run : level.runs) {
                if (run.assignment == RunAssignment::left) CHECK(run.last_pos <= result.trace.left_cut);
                if (run.assignment == RunAssignment::right) CHECK(run.first_pos > result.trace.left_cut);
            }
    }
}

TEST_CASE("watershed depends only on relative order") {
    RandomSource rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const LinearOrdering rho = random_ordering(rng, 2 * rng.uniform_below_u64(11));
        // strictly increasing map: spread the values and shift
        std::vector<std::int64_t> mapped(rho.size());
        for (std::size_t i = 0; i < rho.size(); ++i)
            mapped[i] = rho.elements()[i] * 17 - 1000 + static_cast<std::int64_t>(rho.elements()[i]);
        const LinearOrdering relabeled = LinearOrdering::unchecked(std::move(mapped));
        CHECK(watershed_fast_k(relabeled) == watershed_fast_k(rho));
        CHECK(watershed_brute(relabeled) == watershed_brute(rho));
    }
}

TEST_CASE("the fault-injection hook flips results and brute catches it") {
    const LinearOrdering rho = ord({1, 2});
    CHECK(detail::watershed_fast_impl(rho, false, /*flip_comparison=*/true).k == 0);
    CHECK(watershed_brute(rho) == 1);
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include "permstat/bulldozer.hpp"
#include "permstat/errors.hpp"
#include "permstat/random.hpp"
#include "permstat/watershed.hpp"

using namespace permstat;

namespace {

using Slots = std::vector<std::optional<std::int64_t>>;

LinearOrdering ord(std::vector<std::int64_t> v) { return LinearOrdering(std::move(v)); }

} // namespace

TEST_CASE("two towns, one confrontation") {
    const TownLine line = line_from_sequence(ord({9, 3}));
    CHECK(can_sweep(line, 1, 2));
    CHECK_FALSE(can_sweep(line, 2, 1));
    CHECK(unsweepable_towns(line) == std::vector<std::size_t>{1});
    CHECK(unique_unsweepable_town(line) == 1);
}

TEST_CASE("line construction unpacks r_1, l_2, r_2, l_3, ...") {
    const TownLine line = line_from_sequence(ord({2, 6, 1, 5, 4, 3}));
    REQUIRE(line.towns() == 4);
    CHECK_FALSE(line.left(1).has_value());
    CHECK_FALSE(line.right(4).has_value());
    CHECK(line.right(1) == 2);
    CHECK(line.left(2) == 6);
    CHECK(line.right(2) == 1);
    CHECK(line.left(3) == 5);
    CHECK(line.right(3) == 4);
    CHECK(line.left(4) == 3);
}

TEST_CASE("empty sequence gives the single town with no bulldozers") {
    const TownLine line = line_from_sequence(LinearOrdering());
    CHECK(line.towns() == 1);
    CHECK(unsweepable_towns(line) == std::vector<std::size_t>{1});
}

TEST_CASE("the pinned 4-town example") {
    const TownLine line = line_from_sequence(ord({2, 6, 1, 5, 4, 3}));
    CHECK(unsweepable_towns(line) == std::vector<std::size_t>{3});
    CHECK(correspondence_check(ord({2, 6, 1, 5, 4, 3})));
}

TEST_CASE("correspondence holds exhaustively through m = 3") {
    for (std::size_t m = 0; m <= 3; ++m) {
        std::vector<std::int64_t> elems(2 * m);
        std::iota(elems.begin(), elems.end(), std::int64_t{1});
        do {
            const LinearOrdering seq = LinearOrdering::unchecked(elems);
            CHECK(correspondence_check(seq));
            CHECK(unsweepable_towns(line_from_sequence(seq)).size() == 1);
        } while (std::next_permutation(elems.begin(), elems.end()));
    }
}

TEST_CASE("sweeping a town sweeps everything in between") {
    for (std::size_t m = 1; m <= 3; ++m) {
        std::vector<std::int64_t> elems(2 * m);
        std::iota(elems.begin(), elems.end(), std::int64_t{1});
        do {
            const TownLine line = line_from_sequence(LinearOrdering::unchecked(elems));
            const std::size_t n = line.towns();
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j) {
                    if (i == j || !can_sweep(line, i, j)) continue;
                    if (i < j)
                        for (std::size_t t = i + 1; t < j; ++t) CHECK(can_sweep(line, i, t));
                    else
                        for (std::size_t t = j + 1; t < i; ++t) CHECK(can_sweep(line, i, t));
                }
        } while (std::next_permutation(elems.begin(), elems.end()));
    }
}

TEST_CASE("the event-level simulator agrees with the closed form") {
    for (std::size_t m = 1; m <= 3; ++m) {
        std::vector<std::int64_t> elems(2 * m);
        std::iota(elems.begin(), elems.end(), std::int64_t{1});
        do {
            const TownLine line = line_from_sequence(LinearOrdering::unchecked(elems));
            for (std::size_t i = 1; i <= line.towns(); ++i)
                for (std::size_t j = 1; j <= line.towns(); ++j)
                    if (i != j) CHECK(can_sweep(line, i, j) == can_sweep_simulated(line, i, j));
        } while (std::next_permutation(elems.begin(), elems.end()));
    }
}

TEST_CASE("outcomes are invariant under increasing relabelings") {
    RandomSource rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng.uniform_below_u64(4);
        std::vector<std::int64_t> elems(2 * m);
        std::iota(elems.begin(), elems.end(), std::int64_t{1});
        for (std::size_t i = elems.size(); i > 1; --i)
            std::swap(elems[i - 1], elems[rng.uniform_below_u64(i)]);
        std::vector<std::int64_t> mapped = elems;
        for (auto& v : mapped) v = v * 13 + 5;
        const TownLine original = line_from_sequence(LinearOrdering::unchecked(elems));
        const TownLine relabeled = line_from_sequence(LinearOrdering::unchecked(mapped));
        CHECK(unsweepable_towns(original) == unsweepable_towns(relabeled));
        for (std::size_t i = 1; i <= original.towns(); ++i)
            for (std::size_t j = 1; j <= original.towns(); ++j)
                if (i != j) CHECK(can_sweep(original, i, j) == can_sweep(relabeled, i, j));
    }
}

TEST_CASE("the outer two bulldozers never matter") {
    const std::vector<std::int64_t> seq = {2, 6, 1, 5, 4, 3};
    const TownLine bare = line_from_sequence(ord(seq));
    // same line with the useless outer bulldozers present
    const TownLine dressed(Slots{100, 6, 5, 3}, Slots{2, 1, 4, 200});
    CHECK(unsweepable_towns(bare) == unsweepable_towns(dressed));
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = 1; j <= 4; ++j)
            if (i != j) CHECK(can_sweep(bare, i, j) == can_sweep(dressed, i, j));
}

TEST_CASE("validation of lines and queries") {
    CHECK_THROWS_AS(line_from_sequence(ord({1, 2, 3})), DomainError);
    CHECK_THROWS_AS(line_from_sequence(ord({0, 1})), DomainError);  // sizes must be positive
    CHECK_THROWS_AS(line_from_sequence(ord({-2, 1})), DomainError);
    CHECK_THROWS_AS(TownLine(Slots{1, 2}, Slots{2, std::nullopt}), DomainError); // repeated size
    CHECK_THROWS_AS(TownLine(Slots{std::nullopt, std::nullopt, 1}, Slots{2, 3, std::nullopt}),
                    DomainError); // interior absence
    CHECK_THROWS_AS(TownLine(Slots{}, Slots{}), DomainError);
    CHECK_THROWS_AS(TownLine(Slots{std::nullopt, 1}, Slots{2}), DomainError);

    const TownLine line = line_from_sequence(ord({9, 3}));
    CHECK_THROWS_AS(can_sweep(line, 1, 1), DomainError);
    CHECK_THROWS_AS(can_sweep(line, 0, 1), DomainError);
    CHECK_THROWS_AS(can_sweep(line, 1, 3), DomainError);
}

#include <doctest.h>

#include "permstat/errors.hpp"
#include "permstat/hikita.hpp"
#include "permstat/random.hpp"
#include "permstat/rational.hpp"
#include "permstat/sampler.hpp"

using namespace permstat;

TEST_CASE("rational string round trips") {
    CHECK(rational_to_string(Rational(1, 3)) == "1/3");
    CHECK(rational_to_string(Rational(4, 20)) == "1/5");
    CHECK(rational_to_string(Rational(7)) == "7");
    CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(rational_from_string("2") == Rational(2));
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK(rational_from_string(" -7/3 ") == Rational(-7, 3));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("a/b"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), ParseError);
}

TEST_CASE("decimal approximation is rounded, fixed width") {
    CHECK(decimal_string(Rational(2, 3), 12) == "0.666666666667");
    CHECK(decimal_string(Rational(1, 3), 6) == "0.333333");
    CHECK(decimal_string(Rational(1, 2), 0) == "1");
    CHECK(decimal_string(Rational(-1, 8), 3) == "-0.125");
    CHECK(decimal_string(Rational(5), 2) == "5.00");
    CHECK(decimal_string(Rational(1, 200), 2) == "0.01"); // 0.005 rounds away from zero
}

TEST_CASE("division undoes multiplication exactly") {
    RandomSource rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational x(static_cast<std::int64_t>(rng.uniform_below_u64(2000)) - 1000,
                         1 + rng.uniform_below_u64(999));
        const Rational y(1 + rng.uniform_below_u64(999), 1 + rng.uniform_below_u64(999));
        CHECK((x / y) * y == x);
    }
}

TEST_CASE("pow_rational") {
    CHECK(pow_rational(Rational(3, 2), 0) == 1);
    CHECK(pow_rational(Rational(3, 2), 3) == Rational(27, 8));
    CHECK(pow_rational(Rational(2), 40) == Rational(BigInt(1) << 40));
}

TEST_CASE("q-integers") {
    CHECK(q_int(3, Rational(1)) == 3);
    CHECK(q_int(0, Rational(7, 2)) == 0);
    CHECK(q_int(3, Rational(2)) == 7);
    CHECK(q_int(1, Rational(5, 3)) == 1);
    CHECK_THROWS_AS(q_int(2, Rational(0)), DomainError);
    CHECK_THROWS_AS(q_int(2, Rational(-1)), DomainError);
    CHECK_THROWS_AS(q_int(-1, Rational(2)), DomainError);
}

TEST_CASE("q-integer closed form equals the term-by-term sum") {
    for (const Rational& q : {Rational(2), Rational(1, 2), Rational(3, 2), Rational(7, 5)}) {
        Rational sum = 0;
        Rational power = 1;
        for (std::int64_t m = 0; m <= 64; ++m) {
            CHECK(q_int(m, q) == sum);
            sum += power;
            power *= q;
        }
    }
}

TEST_CASE("transition probabilities for the smallest parameter set") {
    const HikitaParams at_one({1}, {1}, Rational(1));
    CHECK(hikita_phi(at_one, 0) == Rational(1, 2));
    CHECK(hikita_phi(at_one, 1) == Rational(1, 2));
    CHECK(hikita_distribution(at_one) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    const HikitaParams at_two({1}, {1}, Rational(2));
    CHECK(hikita_phi(at_two, 0) == Rational(1, 3));
    CHECK(hikita_phi(at_two, 1) == Rational(2, 3));
    CHECK(hikita_distribution(at_two) == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});

    CHECK_THROWS_AS(hikita_phi(at_two, 2), DomainError);
}

TEST_CASE("distribution for uniform blocks matches the enumeration oracle") {
    const HikitaParams params({1, 1}, {1, 1}, Rational(1));
    const auto via_enumeration = exact_watershed_distribution(weights_from_params(params));
    CHECK(via_enumeration == std::vector<Rational>{Rational(3, 8), Rational(1, 4), Rational(3, 8)});
    CHECK(hikita_distribution(params) == via_enumeration);
}

TEST_CASE("probabilities sum to one and stay positive across a sweep") {
    RandomSource rng(55);
    const std::vector<Rational> qs = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 2),
                                      Rational(5)};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.uniform_below_u64(4);
        std::vector<std::int64_t> a(n), b(n);
        for (auto& v : a) v = 1 + rng.uniform_below_u64(4);
        for (auto& v : b) v = 1 + rng.uniform_below_u64(4);
        const HikitaParams params(a, b, qs[rng.uniform_below_u64(qs.size())]);
        Rational sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational phi = hikita_phi(params, k);
            CHECK(phi > 0);
            sum += phi;
        }
        CHECK(sum == 1);
    }
}

TEST_CASE("weights are consecutive geometric blocks") {
    CHECK(weights_from_params(HikitaParams({1}, {1}, Rational(2))).values() ==
          std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(weights_from_params(HikitaParams({1, 1}, {1, 1}, Rational(1))).values() ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(weights_from_params(HikitaParams({2}, {1}, Rational(2))).values() ==
          std::vector<Rational>{Rational(3), Rational(4)});
}

TEST_CASE("weight total telescopes to the q-integer of the block sum") {
    RandomSource rng(77);
    const std::vector<Rational> qs = {Rational(1), Rational(2), Rational(1, 2), Rational(5, 3)};
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.uniform_below_u64(4);
        std::vector<std::int64_t> a(n), b(n);
        std::int64_t total = 0;
        for (auto& v : a) total += v = 1 + rng.uniform_below_u64(4);
        for (auto& v : b) total += v = 1 + rng.uniform_below_u64(4);
        const Rational q = qs[rng.uniform_below_u64(qs.size())];
        const HikitaParams params(a, b, q);
        CHECK(weights_from_params(params).total() == q_int(total, q));
    }
}

TEST_CASE("at q = 1 the weights degenerate to the block lengths") {
    const HikitaParams params({3, 1}, {2, 4}, Rational(1));
    CHECK(weights_from_params(params).values() ==
          std::vector<Rational>{Rational(3), Rational(2), Rational(1), Rational(4)});
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(HikitaParams({}, {}, Rational(1)), DomainError);
    CHECK_THROWS_AS(HikitaParams({1, 2}, {1}, Rational(1)), DomainError);
    CHECK_THROWS_AS(HikitaParams({0}, {1}, Rational(1)), DomainError);
    CHECK_THROWS_AS(HikitaParams({1}, {-2}, Rational(1)), DomainError);
    CHECK_THROWS_AS(HikitaParams({1}, {1}, Rational(0)), DomainError);
    CHECK_THROWS_AS(HikitaParams({1}, {1}, Rational(-1, 2)), DomainError);
    CHECK_THROWS_AS(WeightVector({Rational(1), Rational(0)}), DomainError);
}

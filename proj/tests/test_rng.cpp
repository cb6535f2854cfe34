#include "doctest.h"

#include <vector>

#include "rwalk/rng.hpp"
#include "support/test_support.hpp"

using namespace rwalk;

TEST_CASE("seed_hash is stable and order-sensitive") {
    const auto a = seed_hash({1, 2, 3});
    CHECK(a == seed_hash({1, 2, 3}));
    CHECK(a != seed_hash({3, 2, 1}));
    CHECK(a != seed_hash({1, 2}));
    CHECK(seed_hash({0}) != seed_hash({1}));
    CHECK(seed_hash({}) == seed_hash({}));
}

TEST_CASE("make_engine reproduces the same stream") {
    Engine a = make_engine(42);
    Engine b = make_engine(42);
    for (int i = 0; i < 16; ++i) CHECK(a() == b());
}

TEST_CASE("uniform_below stays in range") {
    Engine eng = make_engine(7);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t bound = 1 + uniform_below(eng, 1000);
        CHECK(uniform_below(eng, bound) < bound);
    }
}

TEST_CASE("uniform_below with bound 1 consumes no engine output") {
    Engine a = make_engine(3);
    Engine b = make_engine(3);
    CHECK(uniform_below(a, 1) == 0);
    CHECK(a() == b());
}

TEST_CASE("uniform_below is unbiased at 3 sigma") {
    Engine eng = make_engine(11);
    constexpr std::uint64_t kBound = 7;
    constexpr std::uint64_t kTrials = 70000;
    std::vector<std::uint64_t> counts(kBound, 0);
    for (std::uint64_t i = 0; i < kTrials; ++i) ++counts[uniform_below(eng, kBound)];
    for (const std::uint64_t c : counts) {
        CHECK(testsupport::binomial_3sigma(c, kTrials, 1.0 / kBound));
    }
}

TEST_CASE("uniform_unit lies in [0,1) with mean near 1/2") {
    Engine eng = make_engine(5);
    constexpr int kTrials = 100000;
    double sum = 0.0;
    for (int i = 0; i < kTrials; ++i) {
        const double u = uniform_unit(eng);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    const double mean = sum / kTrials;
    // sd of the mean is 1/sqrt(12 * trials)
    CHECK(std::abs(mean - 0.5) < 3.0 / std::sqrt(12.0 * kTrials));
}

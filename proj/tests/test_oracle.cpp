#include "doctest.h"

#include <stdexcept>

#include "rwalk/graph.hpp"
#include "rwalk/oracle.hpp"
#include "support/test_support.hpp"

using namespace rwalk;

namespace {

double harmonic(int k) {
    double h = 0.0;
    for (int i = 1; i <= k; ++i) h += 1.0 / i;
    return h;
}

}  // namespace

TEST_CASE("two-node path has expected cover steps 1") {
    const Graph p2 = testsupport::make_path(2);
    CHECK(exact_cover_expectation(p2, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(exact_cover_expectation(p2, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(exact_cover_time(p2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("complete graphs match the coupon-collector closed form") {
    // from any start of K_n the walk is a coupon collector: (n-1) * H_{n-1}
    for (int n = 2; n <= 8; ++n) {
        const Graph g = generate_complete(static_cast<NodeId>(n));
        const double expected = (n - 1) * harmonic(n - 1);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            CHECK(exact_cover_expectation(g, v) == doctest::Approx(expected).epsilon(1e-9));
        }
        CHECK(exact_cover_time(g) == doctest::Approx(expected).epsilon(1e-9));
    }
    CHECK(exact_cover_time(generate_complete(4)) == doctest::Approx(5.5).epsilon(1e-9));
}

TEST_CASE("cycles match the classical n(n-1)/2 cover time") {
    CHECK(exact_cover_time(testsupport::make_cycle(4)) ==
          doctest::Approx(6.0).epsilon(1e-9));
    CHECK(exact_cover_time(testsupport::make_cycle(5)) ==
          doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("three-node path: ends cover in 4 expected steps, middle in 5") {
    const Graph p3 = testsupport::make_path(3);
    const auto per_start = exact_cover_expectations(p3);
    CHECK(per_start[0] == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(per_start[1] == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(per_start[2] == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(exact_cover_time(p3) == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("single node needs no steps") {
    CHECK(exact_cover_time(Graph::from_edges(1, {})) == 0.0);
}

TEST_CASE("oracle rejects disconnected and oversized graphs") {
    CHECK_THROWS_AS(exact_cover_time(Graph::from_edges(2, {})), std::domain_error);
    CHECK_THROWS_AS(exact_cover_time(generate_complete(21)), std::invalid_argument);
    CHECK_THROWS_AS(exact_cover_expectation(testsupport::make_path(3), 3),
                    std::invalid_argument);
}

TEST_CASE("vertex-transitive torus has equal expectations from every start") {
    const auto per_start = exact_cover_expectations(generate_torus(3, 3));
    for (const double e : per_start) {
        CHECK(e == doctest::Approx(per_start[0]).epsilon(1e-9));
    }
    CHECK(per_start[0] > 9.0);  // must exceed n - 1, the best conceivable cover
}

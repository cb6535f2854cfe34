#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "rwalk/errors.hpp"
#include "rwalk/graph.hpp"
#include "support/test_support.hpp"

using namespace rwalk;

TEST_CASE("connectivity_radius matches closed form") {
    CHECK(connectivity_radius(900) == doctest::Approx(0.04904951583055835).epsilon(1e-12));
    CHECK(2.0 * connectivity_radius(900) ==
          doctest::Approx(0.09809903166111671).epsilon(1e-12));
    CHECK(connectivity_radius(2) == doctest::Approx(0.33214123513398).epsilon(1e-12));
}

TEST_CASE("connectivity_radius satisfies pi*n*r^2 = ln n") {
    for (const NodeId n : {2u, 10u, 900u, 5000u}) {
        const double r = connectivity_radius(n);
        CHECK(std::numbers::pi * n * r * r == doctest::Approx(std::log(n)).epsilon(1e-12));
    }
}

TEST_CASE("connectivity_radius rejects n < 2") {
    CHECK_THROWS_AS(connectivity_radius(1), std::invalid_argument);
}

TEST_CASE("torus is 4-regular with wrap-around neighbors") {
    const Graph t33 = generate_torus(3, 3);
    CHECK(t33.node_count() == 9);
    CHECK(t33.edge_count() == 18);
    for (NodeId v = 0; v < 9; ++v) CHECK(t33.degree(v) == 4);
    const auto nbrs = t33.neighbors(0);
    CHECK(std::vector<NodeId>(nbrs.begin(), nbrs.end()) ==
          std::vector<NodeId>{1, 2, 3, 6});

    const Graph t = generate_torus(30, 30);
    CHECK(t.node_count() == 900);
    CHECK(t.edge_count() == 1800);
    CHECK(is_connected(t));

    for (const auto& [rows, cols] : {std::pair{3u, 4u}, {5u, 3u}, {4u, 7u}}) {
        const Graph g = generate_torus(rows, cols);
        for (NodeId v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) == 4);
        CHECK(is_connected(g));
    }
}

TEST_CASE("torus rejects sides below 3") {
    CHECK_THROWS_AS(generate_torus(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(generate_torus(5, 2), std::invalid_argument);
}

TEST_CASE("complete graph") {
    CHECK(generate_complete(1).edge_count() == 0);
    CHECK(generate_complete(4).edge_count() == 6);
    const Graph k5 = generate_complete(5);
    for (NodeId v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
}

TEST_CASE("from_edges validates input") {
    using E = std::vector<std::pair<NodeId, NodeId>>;
    CHECK_THROWS_AS(Graph::from_edges(3, E{{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, E{{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, E{{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(0, E{}), std::invalid_argument);
}

TEST_CASE("graph invariants hold on random instances") {
    Engine eng = make_engine(123);
    for (int iter = 0; iter < 50; ++iter) {
        const Graph g = testsupport::random_connected_graph(eng, 2, 16);
        std::uint64_t degree_sum = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto nbrs = g.neighbors(v);
            degree_sum += nbrs.size();
            CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
            CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
            for (const NodeId u : nbrs) {
                CHECK(u != v);
                const auto back = g.neighbors(u);
                CHECK(std::binary_search(back.begin(), back.end(), v));
            }
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("geometric graph basics") {
    SUBCASE("two points always connect at radius sqrt(2)") {
        Engine eng = make_engine(9);
        for (int iter = 0; iter < 20; ++iter) {
            const GeometricPoints pts = sample_points(2, eng);
            CHECK(geometric_graph(pts, std::sqrt(2.0)).edge_count() == 1);
        }
    }
    SUBCASE("collinear points at spacing 0.5 form a path at radius 0.5") {
        // distance exactly equal to the radius counts as an edge
        const GeometricPoints pts{{0.0, 0.0, 0.0}, {0.0, 0.5, 1.0}};
        const Graph g = geometric_graph(pts, 0.5);
        CHECK(g.edge_count() == 2);
        CHECK(g.degree(0) == 1);
        CHECK(g.degree(1) == 2);
        CHECK(g.degree(2) == 1);
    }
    SUBCASE("radius outside (0, sqrt(2)] is rejected") {
        const GeometricPoints pts{{0.1, 0.9}, {0.1, 0.9}};
        CHECK_THROWS_AS(geometric_graph(pts, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(geometric_graph(pts, 1.5), std::invalid_argument);
    }
}

TEST_CASE("cell grid agrees with brute-force distance test") {
    Engine eng = make_engine(77);
    for (int iter = 0; iter < 200; ++iter) {
        const auto n = static_cast<NodeId>(2 + uniform_below(eng, 59));
        const double radius = 0.02 + uniform_unit(eng) * (std::sqrt(2.0) - 0.02);
        const GeometricPoints pts = sample_points(n, eng);

        std::vector<std::pair<NodeId, NodeId>> brute;
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                const double dx = pts.x[u] - pts.x[v];
                const double dy = pts.y[u] - pts.y[v];
                if (dx * dx + dy * dy <= radius * radius) brute.emplace_back(u, v);
            }
        }
        CHECK(geometric_graph(pts, radius).edges() == brute);
    }
}

TEST_CASE("generate_rgg returns connected graphs when asked") {
    Engine eng = make_engine(31);
    for (int iter = 0; iter < 30; ++iter) {
        const auto result = generate_rgg(40, 0.35, eng, true, 200);
        CHECK(is_connected(result.graph));
        CHECK(result.points.size() == 40);
    }
}

TEST_CASE("generate_rgg fails loudly when connectivity is unreachable") {
    Engine eng = make_engine(13);
    try {
        generate_rgg(50, 0.01, eng, true, 5);
        FAIL("expected GenerationFailure");
    } catch (const GenerationFailure& e) {
        CHECK(e.attempts() == 6);  // initial attempt + 5 retries
    }
}

TEST_CASE("rgg mean degree is near n*pi*r^2") {
    Engine eng = make_engine(4242);
    const double radius = 2.0 * connectivity_radius(900);
    double total = 0.0;
    constexpr int kSamples = 5;
    for (int iter = 0; iter < kSamples; ++iter) {
        const auto result = generate_rgg(900, radius, eng, true, 100);
        total += stats(result.graph).mean_degree.value();
    }
    const double mean = total / kSamples;
    CHECK(mean > 22.0);
    CHECK(mean < 32.0);
}

TEST_CASE("stats reports exact mean degree and connectivity") {
    const GraphStats torus = stats(generate_torus(3, 3));
    CHECK(torus.connected);
    CHECK(torus.mean_degree == Rational{4, 1});
    CHECK(torus.min_degree == 4);
    CHECK(torus.max_degree == 4);

    const GraphStats isolated = stats(Graph::from_edges(2, {}));
    CHECK_FALSE(isolated.connected);
    CHECK(isolated.mean_degree == Rational{0, 1});

    const GraphStats path3 = stats(testsupport::make_path(3));
    CHECK(path3.mean_degree == Rational{4, 3});
}

TEST_CASE("edge list round trip") {
    const Graph path = load_edge_list("3 2\n0 1\n1 2\n");
    CHECK(path.node_count() == 3);
    CHECK(path.degree(0) == 1);
    CHECK(path.degree(1) == 2);

    CHECK(save_edge_list(load_edge_list("2 1\n0 1\n")) == "2 1\n0 1\n");

    Engine eng = make_engine(555);
    for (int iter = 0; iter < 25; ++iter) {
        const Graph g = testsupport::random_connected_graph(eng, 2, 20);
        const std::string text = save_edge_list(g);
        CHECK(save_edge_list(load_edge_list(text)) == text);
    }
}

TEST_CASE("edge list parse errors carry line numbers") {
    const auto line_of = [](const char* text) -> std::size_t {
        try {
            load_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("2 1\n0 2\n") == 2);      // id out of range
    CHECK(line_of("2 1\n1 1\n") == 2);      // self-loop
    CHECK(line_of("3 2\n1 0\n1 2\n") == 2); // u >= v
    CHECK(line_of("3 2\n0 1\n0 1\n") == 3); // duplicate edge
    CHECK(line_of("3 2\n0 1\n") == 3);      // missing edge line
    CHECK(line_of("3 x\n") == 1);           // malformed header
    CHECK(line_of("3 1\n0 1 junk\n") == 2); // trailing characters
    CHECK(line_of("") == 1);                // empty input
    CHECK(line_of("0 0\n") == 1);           // no nodes
}

TEST_CASE("content_hash distinguishes graphs") {
    const Graph a = generate_torus(3, 3);
    const Graph b = generate_torus(3, 4);
    CHECK(a.content_hash() == generate_torus(3, 3).content_hash());
    CHECK(a.content_hash() != b.content_hash());
    CHECK(a.content_hash() != testsupport::make_cycle(9).content_hash());
}

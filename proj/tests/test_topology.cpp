#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ac/graph.hpp"
#include "ac/rng.hpp"
#include "support/test_support.hpp"

using namespace ac;

TEST_CASE("laplacian of a 3-chain") {
    const Graph g = gen_chain(3);
    const Matrix l = build_laplacian(g);
    const double expected[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(l(r, c) == doctest::Approx(expected[r][c]));
}

TEST_CASE("laplacian of a single node is the 1x1 zero matrix") {
    const Graph g(1, {});
    const Matrix l = build_laplacian(g);
    CHECK(l.rows() == 1);
    CHECK(l(0, 0) == 0.0);
}

TEST_CASE("laplacian of a 4-star") {
    const Matrix l = build_laplacian(gen_star(4));
    CHECK(l(0, 0) == 3.0);
    for (int k = 1; k < 4; ++k) {
        CHECK(l(k, k) == 1.0);
        CHECK(l(0, k) == -1.0);
        CHECK(l(k, 0) == -1.0);
    }
}

TEST_CASE("graph constructor canonicalizes and validates") {
    const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{0, 2});
    CHECK(g.edges()[2] == Edge{1, 3});

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}}, {-1.0}), std::invalid_argument);
}

TEST_CASE("adjacency queries") {
    const Graph chain = gen_chain(3);
    const auto nb = chain.neighbors(1);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{0, 2});

    const Graph star = gen_star(4);
    CHECK(star.incident_edges(0).size() == 3);
    CHECK(star.degree(0) == 3);

    CHECK_THROWS_AS(star.neighbors(17), std::out_of_range);
    CHECK_THROWS_AS(star.incident_edges(-1), std::out_of_range);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(gen_chain(10)));
    const Graph split(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(split));
}

TEST_CASE("star and chain generators") {
    const Graph s4 = gen_star(4);
    CHECK(s4.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(gen_star(50).edge_count() == 49);

    const Graph c10 = gen_chain(10);
    CHECK(c10.edge_count() == 9);
    int max_degree = 0;
    for (int v = 0; v < 10; ++v) max_degree = std::max(max_degree, c10.degree(v));
    CHECK(max_degree == 2);

    CHECK_THROWS_AS(gen_star(1), std::invalid_argument);
}

TEST_CASE("uniform generator hits the target degree band and is deterministic") {
    const Graph g = gen_uniform(100, 5.0, 7);
    CHECK(is_connected(g));
    CHECK(g.edge_count() >= 225);
    CHECK(g.edge_count() <= 275);

    const Graph again = gen_uniform(100, 5.0, 7);
    CHECK(g == again);

    const Graph pair = gen_uniform(2, 1.0, 3);
    CHECK(pair.edges() == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS(gen_uniform(10, 0.5, 1), std::invalid_argument);
    // n=3 with d=1 admits no connected graph inside the degree tolerance
    CHECK_THROWS_AS(gen_uniform(3, 1.0, 1), GenerationError);
}

TEST_CASE("clustered generator shape") {
    const Graph g = gen_clustered(5);
    CHECK(g.node_count() == 100);
    CHECK(is_connected(g));

    int hubs = 0;
    long non_hub_degree = 0;
    int non_hubs = 0;
    for (int v = 0; v < 100; ++v) {
        if (g.degree(v) >= 50) {
            ++hubs;
        } else {
            non_hub_degree += g.degree(v);
            ++non_hubs;
        }
    }
    CHECK(hubs == 8);
    const double mean = static_cast<double>(non_hub_degree) / non_hubs;
    CHECK(mean >= 4.0);
    CHECK(mean <= 8.0);

    CHECK(g == gen_clustered(5));
    CHECK_FALSE(g == gen_clustered(6));
}

TEST_CASE("degree sum equals twice the edge count") {
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = test::random_connected_graph(rng, 2, 40, 60);
        long sum = 0;
        for (int v = 0; v < g.node_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2L * g.edge_count());
    }
}

TEST_CASE("x^T L x equals the sum of squared edge differences") {
    Rng rng(7);
    const Graph g = gen_uniform(40, 4.0, 11);
    const Matrix l = build_laplacian(g);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x(g.node_count());
        for (double& v : x) v = rng.normal();
        double edge_sum = 0.0;
        for (const Edge& e : g.edges()) {
            const double d = x[e.u] - x[e.v];
            edge_sum += d * d;
        }
        CHECK(std::fabs(quad_form(l, x) - edge_sum) <= 1e-9);
    }
}

TEST_CASE("edge list file round trip") {
    const Graph g = gen_uniform(30, 4.0, 9);
    std::stringstream buf;
    write_graph(g, buf);
    const Graph back = read_graph(buf);
    CHECK(g == back);
}

TEST_CASE("edge list loader validates") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
    };
    CHECK_THROWS_AS(load(""), std::invalid_argument);
    CHECK_THROWS_AS(load("2 1\n"), std::invalid_argument);          // truncated
    CHECK_THROWS_AS(load("2 1\n0 0 1\n"), std::invalid_argument);   // self-loop
    CHECK_THROWS_AS(load("2 1\n0 5 1\n"), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(load("2 1\n0 1 -2\n"), std::invalid_argument);  // negative cost
    CHECK_THROWS_AS(load("3 2\n0 1 1\n1 0 1\n"), std::invalid_argument);  // duplicate

    const Graph g = load("3 2\n1 2 1.5\n0 1 1\n");  // order canonicalized on load
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edge_costs()[1] == 1.5);
}

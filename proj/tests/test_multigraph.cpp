#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "graphlap/critical_group.hpp"
#include "graphlap/oracles.hpp"

using namespace graphlap;

TEST_CASE("multigraph basics") {
    Multigraph g(3);
    g.add_edges(1, 2);
    g.add_edges(2, 3, 2);
    CHECK(g.multiplicity(2, 1) == 1);
    CHECK(g.multiplicity(3, 2) == 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(2) == 3);
    CHECK(g.cycle_rank() == 1);
    CHECK(g.connected());
    CHECK(g.distance(1, 3) == 2);
    CHECK(g.diameter() == 2);
    CHECK(g.edge_pairs() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
    CHECK_THROWS(g.add_edges(1, 1));  // loops have no meaning here
    CHECK_THROWS(g.add_edges(0, 2));
    CHECK_THROWS(g.add_edges(1, 2, -1));
}

TEST_CASE("laplacian matrices") {
    CHECK(laplacian_matrix(banana_graph(2)) == IntMatrix::from({{-2, 2}, {2, -2}}));
    CHECK(laplacian_matrix(cycle_graph(3)) ==
          IntMatrix::from({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
    CHECK(laplacian_matrix(path_graph(2)) == IntMatrix::from({{-1, 1}, {1, -1}}));
    // Row sums vanish.
    IntMatrix m = laplacian_matrix(complete_bipartite(2, 3));
    for (int i = 0; i < m.rows(); ++i) {
        Int sum = 0;
        for (int j = 0; j < m.cols(); ++j) sum += m.at(i, j);
        CHECK(sum == 0);
    }
}

TEST_CASE("spanning tree counts") {
    CHECK(spanning_tree_count(complete_graph(4)) == 16);
    CHECK(spanning_tree_count(path_graph(5)) == 1);
    ChainGraph cg = chain_graph({1, 2, 3});
    CHECK(spanning_tree_count(cg.graph) == 11);
    CHECK(spanning_tree_count(Multigraph(1)) == 1);
}

TEST_CASE("spanning tree count matches the enumeration oracle") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_connected(n, 2))
            CHECK(spanning_tree_count(g) == spanning_tree_enumeration_oracle(g));
}

TEST_CASE("bridges") {
    CHECK(bridges(path_graph(4)) ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(bridges(cycle_graph(4)).empty());
    CHECK(bridges(banana_graph(2)).empty());

    // Two triangles sharing one vertex: bridgeless but with a cut vertex.
    Multigraph two(5);
    two.add_edges(1, 2);
    two.add_edges(2, 3);
    two.add_edges(3, 1);
    two.add_edges(3, 4);
    two.add_edges(4, 5);
    two.add_edges(5, 3);
    CHECK(bridges(two).empty());
    CHECK(is_multiply_connected(two));
    CHECK(is_multiply_connected(cycle_graph(5)));
    CHECK(!is_multiply_connected(path_graph(3)));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_connected(3, 1).size() == 4);
    CHECK(enumerate_connected(2, 3).size() == 3);
    CHECK(enumerate_connected(1, 1).size() == 1);
    CHECK_THROWS(enumerate_connected(7, 1));      // default guard
    CHECK_THROWS(enumerate_connected(5, 2));      // multigraph guard
    CHECK(enumerate_connected(5, 2, 5).size() > 0);  // explicit override
}

TEST_CASE("every enumerated graph is connected and within bounds") {
    for (const auto& g : enumerate_connected(4, 2)) {
        CHECK(g.connected());
        for (auto [i, j] : g.edge_pairs()) CHECK(g.multiplicity(i, j) <= 2);
    }
}

TEST_CASE("graph text round trip") {
    Multigraph g(4);
    g.add_edges(1, 2, 3);
    g.add_edges(2, 4);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(parse_graph(in) == g);

    std::istringstream acc("n 2\ne 1 2\ne 2 1 2\n");
    CHECK(parse_graph(acc).multiplicity(1, 2) == 3);  // repeats accumulate
    std::istringstream loop("n 2\ne 1 1\n");
    CHECK_THROWS(parse_graph(loop));
    std::istringstream empty("");
    CHECK_THROWS(parse_graph(empty));
}

TEST_CASE("builders") {
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(banana_graph(7).multiplicity(1, 2) == 7);
}

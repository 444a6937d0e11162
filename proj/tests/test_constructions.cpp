#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "graphlap/constructions.hpp"
#include "graphlap/oracles.hpp"

using namespace graphlap;

namespace {

// 4-cycle marked at the opposite pair {1, 3}: h = 2, weights (0, 1, 2, 1).
MarkedGraph marked_c4() { return make_marked(cycle_graph(4), 1, 3); }

}  // namespace

TEST_CASE("make_marked produces a verified certificate") {
    MarkedGraph mg = marked_c4();
    CHECK(mg.mk.h == 2);
    CHECK(verify_marking(mg.graph, mg.mk));
    CHECK(mg.mk.weights == Vec{0, 1, 2, 1});
}

TEST_CASE("add_graph") {
    MarkedGraph g2 = make_marked(banana_graph(2), 1, 2);
    MarkedGraph with_triangle = add_graph(g2, cycle_graph(3), 2, 1);
    CHECK(with_triangle.graph.order() == 4);
    CHECK(with_triangle.mk.h == 2);
    CHECK(pair_order(with_triangle.graph, 1, 2) == 2);
    // The attached vertices inherit the attachment weight.
    CHECK(with_triangle.mk.weights[2] == with_triangle.mk.weights[1]);
    CHECK(with_triangle.mk.weights[3] == with_triangle.mk.weights[1]);

    MarkedGraph c3 = make_marked(cycle_graph(3), 1, 3);
    MarkedGraph with_leaf = add_graph(c3, path_graph(2), 2, 1);
    CHECK(with_leaf.mk.h == 3);
    CHECK(with_leaf.graph.order() == 4);

    // A single-vertex attachment is the identity.
    CHECK(add_graph(c3, Multigraph(1), 2, 1) == c3);
    CHECK_THROWS(add_graph(c3, Multigraph(3), 2, 1));  // disconnected H
}

TEST_CASE("glue") {
    // Gluing the two weight-1 vertices of the marked 4-cycle yields the
    // double bundle with a midpoint; the order stays 2.
    MarkedGraph mg = marked_c4();
    MarkedGraph glued = glue(mg, 2, 4);
    CHECK(glued.graph.order() == 3);
    CHECK(glued.mk.h == 2);
    CHECK(glued.graph.multiplicity(1, 2) == 2);
    CHECK(glued.graph.multiplicity(2, 3) == 2);

    MarkedGraph c4 = make_marked(cycle_graph(4), 1, 4);  // weights 0,1,2,3
    CHECK_THROWS(glue(c4, 2, 3));  // unequal weights
    CHECK_THROWS(glue(mg, 1, 3));  // marked vertices cannot be glued
}

TEST_CASE("glueing equal-weight leaves") {
    MarkedGraph c3 = make_marked(cycle_graph(3), 1, 3);
    MarkedGraph two_leaves = add_graph(add_graph(c3, path_graph(2), 2, 1), path_graph(2), 2, 1);
    MarkedGraph glued = glue(two_leaves, 4, 5);
    CHECK(glued.mk.h == 3);
    CHECK(glued.graph.multiplicity(2, 4) == 2);
}

TEST_CASE("thicken") {
    // Single edge between weights 0 and 2 on the marked triangle.
    MarkedGraph c3 = make_marked(cycle_graph(3), 1, 3);
    MarkedGraph thick = thicken(c3, 1, 3);
    CHECK(thick.graph.order() == 4);
    CHECK(critical_group(thick.graph).order() == 12);  // 2 * 2 * 3
    CHECK(spanning_tree_enumeration_oracle(thick.graph) == 12);
    CHECK(thick.mk.h == 3);

    // Weight gap 1 is rejected as a no-op.
    MarkedGraph c4 = make_marked(cycle_graph(4), 1, 4);
    CHECK_THROWS(thicken(c4, 1, 2));
    // Equal weights cannot be thickened.
    CHECK_THROWS(thicken(marked_c4(), 2, 4));
    // Argument order does not matter.
    CHECK(thicken(c3, 3, 1) == thick);
}

TEST_CASE("thickening a double bundle with weight gap 2") {
    // Two vertices, two parallel edges, weights 0 and 2 (a doubled marking
    // relation): the thickened graph is a chain of two 4-bundles.
    ChainGraph cg = chain_graph({1, 1, 2});  // double edge plus a 2-chain
    MarkedGraph mg = make_marked(cg.graph, cg.v, cg.w);
    CHECK(abs(Int(mg.mk.weights[cg.w - 1] - mg.mk.weights[cg.v - 1])) == 2);
    MarkedGraph thick = thicken(mg, cg.v, cg.w);
    Int before = critical_group(cg.graph).order();
    CHECK(critical_group(thick.graph).order() == 2 * 4 * before);  // s(es)^{s-1}
    CHECK(spanning_tree_enumeration_oracle(thick.graph) ==
          critical_group(thick.graph).order());
}

TEST_CASE("remove_equal_weight_edges") {
    // 4-cycle plus a chord between the two weight-1 vertices.
    MarkedGraph mg = marked_c4();
    MarkedGraph with_chord = add_edges(mg, 2, 4, 1);
    MarkedGraph removed = remove_equal_weight_edges(with_chord, {EdgeRef{2, 4, 0}});
    CHECK(removed == mg);

    // Removal that disconnects: the far component is dropped.
    MarkedGraph c3 = make_marked(cycle_graph(3), 1, 3);
    MarkedGraph with_leaf = add_graph(c3, path_graph(2), 2, 1);  // leaf 4 at weight 1
    MarkedGraph pruned = remove_equal_weight_edges(with_leaf, {EdgeRef{2, 4, 0}});
    CHECK(pruned.graph.order() == 3);
    CHECK(pruned.mk.h == 3);

    CHECK(remove_equal_weight_edges(mg, {}) == mg);
    CHECK_THROWS(remove_equal_weight_edges(mg, {EdgeRef{1, 2, 0}}));  // unequal weights
    CHECK_THROWS(remove_equal_weight_edges(mg, {EdgeRef{2, 4, 0}}));  // no such edge
}

TEST_CASE("add_edges") {
    MarkedGraph mg = marked_c4();
    MarkedGraph more = add_edges(mg, 2, 4, 1);
    CHECK(more.mk.h == 2);
    CHECK(more.graph.multiplicity(2, 4) == 1);
    CHECK(add_edges(mg, 2, 4, 0) == mg);
    CHECK_THROWS(add_edges(mg, 1, 2, 1));  // unequal weights

    // Adding c edges equals attaching the c-bundle and gluing its far end.
    MarkedGraph via_glue = glue(add_graph(mg, banana_graph(2), 2, 1), 4, 5);
    CHECK(via_glue == add_edges(mg, 2, 4, 2));
}

TEST_CASE("subdivide_all") {
    MarkedGraph k2 = make_marked(path_graph(2), 1, 2);
    MarkedGraph p4 = subdivide_all(k2, 3);
    CHECK(p4.graph.order() == 4);
    CHECK(p4.mk.h == 1);
    CHECK(pair_order(p4.graph, p4.mk.i, p4.mk.j) == 1);

    MarkedGraph c3 = make_marked(cycle_graph(3), 1, 3);
    MarkedGraph c6 = subdivide_all(c3, 2);
    CHECK(c6.graph.order() == 6);
    CHECK(c6.mk.h == 3);
    CHECK(c6.mk.weights[0] == 0);
    CHECK(c6.mk.weights[1] == 2);
    CHECK(c6.mk.weights[2] == 4);

    // G_h subdivided by l: the equal-chains graph, order still h.
    for (long h = 2; h <= 4; ++h) {
        MarkedGraph gh = make_marked(banana_graph(h), 1, 2);
        MarkedGraph sub = subdivide_all(gh, 3);
        CHECK(sub.mk.h == h);
        CHECK(pair_order(sub.graph, sub.mk.i, sub.mk.j) == h);
    }

    CHECK(subdivide_all(c3, 1) == c3);
    // Each parallel copy gets its own chain: the double bundle becomes a 4-cycle.
    MarkedGraph g2 = make_marked(banana_graph(2), 1, 2);
    MarkedGraph quad = subdivide_all(g2, 2);
    CHECK(quad.graph.order() == 4);
    CHECK(quad.graph.cycle_rank() == 1);
    CHECK(quad.mk.h == 2);
}

TEST_CASE("coalesce") {
    MarkedGraph g2 = make_marked(banana_graph(2), 1, 2);
    MarkedGraph g3 = make_marked(banana_graph(3), 1, 2);
    MarkedGraph joined = coalesce(g2, g3);
    CHECK(joined.graph.order() == 3);
    CHECK(joined.mk.h == 6);  // lcm(2, 3)
    CHECK(pair_order(joined.graph, joined.mk.i, joined.mk.j) == 6);
    CHECK(Int(brute_force_pair_order(joined.graph, joined.mk.i, joined.mk.j)) == 6);

    for (long h = 2; h <= 4; ++h) {
        MarkedGraph gh = make_marked(banana_graph(h), 1, 2);
        CHECK(coalesce(gh, gh).mk.h == h);
    }
    MarkedGraph k2 = make_marked(path_graph(2), 1, 2);
    CHECK(coalesce(g3, k2).mk.h == 3);  // lcm(h, 1) = h
}

TEST_CASE("reduce_to_string") {
    // C_5 with the staircase marking: string of length 4, multiplicity 5.
    StringDecomposition c5 = reduce_to_string(make_marked(cycle_graph(5), 1, 5));
    CHECK(c5.h == 5);
    CHECK(c5.length == 4);
    CHECK(c5.result.graph.order() == 5);
    for (int k = 1; k < 5; ++k) {
        int a = 0, b = 0;
        for (int v = 1; v <= 5; ++v) {
            if (c5.result.mk.weights[v - 1] == k - 1) a = v;
            if (c5.result.mk.weights[v - 1] == k) b = v;
        }
        CHECK(c5.result.graph.multiplicity(a, b) == 5);
    }

    // G_h is a fixed point.
    MarkedGraph g4 = make_marked(banana_graph(4), 1, 2);
    StringDecomposition fixed = reduce_to_string(g4);
    CHECK(fixed.length == 1);
    CHECK(fixed.result == g4);

    // Chain graph (1,2,3): string of G_11 blocks of length lcm = 6.
    ChainGraph cg = chain_graph({1, 2, 3});
    StringDecomposition chain = reduce_to_string(make_marked(cg.graph, cg.v, cg.w));
    CHECK(chain.h == 11);
    CHECK(chain.length == 6);
    CHECK(chain.trace.size() == 5);
    for (const auto& step : chain.trace) CHECK(verify_marking(step.state.graph, step.state.mk));
}

TEST_CASE("marked graph text round trip") {
    MarkedGraph mg = marked_c4();
    std::ostringstream out;
    write_marked(out, mg);
    std::istringstream in(out.str());
    CHECK(parse_marked(in) == mg);

    std::istringstream missing("n 2\ne 1 2\nw 1 0\nw 2 1\n");
    CHECK_THROWS(parse_marked(missing));  // no pair line
    std::istringstream badmark("n 2\ne 1 2\nw 1 0\nw 2 2\np 1 2\n");
    CHECK_THROWS(parse_marked(badmark));  // gcd of differences is 2
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlap/collapsed.hpp"
#include "graphlap/critical_group.hpp"

using namespace graphlap;

namespace {

// Negated (positive-semidefinite) Laplacian.
IntMatrix psd_laplacian(const Multigraph& g) {
    IntMatrix m = laplacian_matrix(g);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
    return m;
}

// Block diagonal matrix with 2x2 blocks ((-1+5i, 1), (1, 1+5i)), i = 1..k.
IntMatrix block_family(int k) {
    IntMatrix m(2 * k, 2 * k);
    for (int i = 1; i <= k; ++i) {
        int b = 2 * (i - 1);
        m.at(b, b) = -1 + 5 * i;
        m.at(b, b + 1) = 1;
        m.at(b + 1, b) = 1;
        m.at(b + 1, b + 1) = 1 + 5 * i;
    }
    return m;
}

}  // namespace

TEST_CASE("is_spread") {
    // C_4: the smallest pair order is 2, so no basis difference is hit.
    CHECK(is_spread(laplacian_matrix(cycle_graph(4))));
    // A tree has trivial cokernel torsion: every basis difference is hit.
    CHECK(!is_spread(laplacian_matrix(path_graph(3))));
    CHECK(!is_spread(IntMatrix::identity(3)));
    CHECK_THROWS(is_spread(IntMatrix(2, 3)));
}

TEST_CASE("collapse_witness produces verifiable solutions") {
    IntMatrix m = IntMatrix::from({{-1, 1}, {1, 1}});
    for (long mu = -2; mu <= 2; ++mu) {
        auto w = collapse_witness(m, mu);
        REQUIRE(w.has_value());
        CHECK(shift_diagonal(m, mu) * w->v == basis_difference(2, w->i, w->j));
    }
    // kappa(C_5) = 5 is odd and prime: only multiples of 5 can collapse the
    // shifted matrix, and mu = 0 does not (pair orders are all 5).
    CHECK(!collapse_witness(laplacian_matrix(cycle_graph(5)), 0).has_value());
}

TEST_CASE("collapsed_values: fixed sets") {
    // Triangle, positive-semidefinite convention: exactly {2, 4} over the
    // whole certified interval.
    CHECK(collapsed_values(psd_laplacian(cycle_graph(3))).collapsed_set() ==
          std::vector<Int>{2, 4});

    // The 2x2 matrix ((-1,1),(1,1)) has determinant -2 and is collapsed on
    // every mu in [-2, 2] and nowhere else.
    IntMatrix m = IntMatrix::from({{-1, 1}, {1, 1}});
    CollapsedReport rep = collapsed_values(m);
    CHECK(rep.collapsed_set() == std::vector<Int>{-2, -1, 0, 1, 2});
    CHECK(rep.is_collapsed(0));
    CHECK(!rep.is_collapsed(3));
    // Explicit interval gives the matching slice.
    CHECK(collapsed_values(m, 0, 10).collapsed_set() == std::vector<Int>{0, 1, 2});

    // Path on 5 vertices, positive-semidefinite convention.
    CHECK(collapsed_values(psd_laplacian(path_graph(5))).collapsed_set() ==
          std::vector<Int>{0, 1, 2, 3});

    CHECK_THROWS(collapsed_values(m, 2, 1));
}

TEST_CASE("norm_bound certifies the scan radius") {
    NormBound nb = norm_bound(IntMatrix::from({{3, 4}, {0, 0}}));
    CHECK(nb.frobenius_sq == 25);
    CHECK(nb.bound == 5);
    CHECK(nb.scan_radius == 7);
    NormBound ceil = norm_bound(IntMatrix::from({{2, 1}, {1, 1}}));
    CHECK(ceil.frobenius_sq == 7);
    CHECK(ceil.bound == 3);  // rounded up
    CHECK(ceil.scan_radius == 5);
}

TEST_CASE("eigenvector_collapse_pairs") {
    // E_12 is fixed by the identity: lambda = 1 yields {0, 2}.
    CHECK(eigenvector_collapse_pairs(IntMatrix::identity(2)) == std::vector<Int>{0, 2});
    // Two equal columns kill E_12: lambda = 0 yields {-1, 1}.
    IntMatrix eq = IntMatrix::from({{1, 1}, {1, 1}});
    CHECK(eigenvector_collapse_pairs(eq) == std::vector<Int>{-1, 1});
    CHECK(collapse_witness(eq, -1).has_value());
    CHECK(collapse_witness(eq, 1).has_value());
    CHECK_THROWS(eigenvector_collapse_pairs(IntMatrix(2, 3)));
}

TEST_CASE("high-symmetry family with 1 + n/2 collapsed values") {
    Multigraph g = example_3_5_graph(8);
    std::vector<int> degrees;
    for (int v = 1; v <= 8; ++v) degrees.push_back(g.degree(v));
    CHECK(degrees == std::vector<int>{7, 7, 4, 4, 4, 4, 2, 2});
    CHECK(is_multiply_connected(g));

    IntMatrix lap = laplacian_matrix(g);
    CHECK(is_spread(lap));  // not 0-collapsed
    std::vector<Int> expected{-9, -7, -5, -3, -1};
    CHECK(collapsed_values(lap).collapsed_set() == expected);
    // Every one of the five values is read off an integer eigenvector pair.
    CHECK(eigenvector_collapse_pairs(lap) == expected);

    CHECK_THROWS(example_3_5_graph(7));
    CHECK_THROWS(example_3_5_graph(6));
}

TEST_CASE("no negative collapsed values for positive-semidefinite Laplacians") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_connected(n, 1))
            CHECK(theorem_3_1_scan(g, Int(-6), Int(-1)).collapsed.empty());
}

TEST_CASE("block family is collapsed exactly on [3, 5k + 2]") {
    for (int k = 1; k <= 3; ++k) {
        IntMatrix m = block_family(k);
        for (long mu = 3; mu <= 5 * k + 2; ++mu) CHECK(collapse_witness(m, mu).has_value());
        CHECK(!collapse_witness(m, 2).has_value());
        CHECK(!collapse_witness(m, 5 * k + 3).has_value());
    }
    // Full certified scan for k = 1 finds nothing outside the window.
    CHECK(collapsed_values(block_family(1)).collapsed_set() ==
          std::vector<Int>{3, 4, 5, 6, 7});
}

TEST_CASE("two-by-two family with prescribed collapsed values") {
    GranvillePomerance single = granville_pomerance({Int(3)});
    CHECK(single.ell == 4);
    CHECK(single.m == IntMatrix::from({{8, 1}, {-16, 0}}));
    CHECK(single.expected_mu == std::vector<Int>{1});
    CHECK(single.witnesses[0].v == Vec{0, 1});

    CHECK(granville_pomerance({Int(2)}).ell == 3);

    GranvillePomerance two = granville_pomerance({Int(3), Int(5)});
    CHECK(two.ell == 31);
    CHECK(two.expected_mu == std::vector<Int>{28, 26});
    CHECK(two.witnesses[0].v == Vec{-3, 103});
    CHECK(two.witnesses[1].v == Vec{-1, 37});
    for (const Int& mu : two.expected_mu) CHECK(collapse_witness(two.m, mu).has_value());

    CHECK_THROWS(granville_pomerance({Int(3), Int(3)}));
    CHECK_THROWS(granville_pomerance({}));
}

TEST_CASE("scan over the certified interval for small simple graphs") {
    ScanVerdict k5 = theorem_3_1_scan(complete_graph(5));
    CHECK(k5.collapsed == std::vector<Int>{4, 6});
    CHECK(k5.within_bound);

    CHECK(theorem_3_1_scan(cycle_graph(4)).collapsed == std::vector<Int>{1, 3});
    CHECK(theorem_3_1_scan(complete_bipartite(2, 2)).collapsed == std::vector<Int>{1, 3});
    CHECK(theorem_3_1_scan(complete_bipartite(2, 3)).collapsed ==
          std::vector<Int>{1, 2, 3, 4, 5});
    CHECK(theorem_3_1_scan(complete_bipartite(3, 3)).collapsed == std::vector<Int>{2, 4});

    CHECK_THROWS(theorem_3_1_scan(banana_graph(2)));  // multigraph
    CHECK_THROWS(theorem_3_1_scan(Multigraph(3)));    // disconnected
}

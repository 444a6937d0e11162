#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "graphlap/multigraph.hpp"
#include "graphlap/oracles.hpp"
#include "graphlap/snf.hpp"

using namespace graphlap;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int span = 9) {
    std::uniform_int_distribution<int> d(-span, span);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("matrix basics and text round trip") {
    IntMatrix m = IntMatrix::from({{1, 2, 3}, {4, 5, 6}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(1, 2) == 6);
    std::ostringstream out;
    write_matrix(out, m);
    std::istringstream in(out.str());
    CHECK(parse_matrix(in) == m);

    std::istringstream bad("m 2 2\n1 2 3\n");
    CHECK_THROWS(parse_matrix(bad));
    std::istringstream comments("# header\nm 1 2\n# row\n7 -8\n");
    CHECK(parse_matrix(comments) == IntMatrix::from({{7, -8}}));
}

TEST_CASE("shift_diagonal subtracts mu on the diagonal") {
    IntMatrix m = IntMatrix::from({{1, 2}, {3, 4}});
    CHECK(shift_diagonal(m, 3) == IntMatrix::from({{-2, 2}, {3, 1}}));
    CHECK_THROWS(shift_diagonal(IntMatrix(2, 3), 1));
}

TEST_CASE("smith normal form: fixed examples") {
    SUBCASE("identity") {
        auto snf = smith_normal_form(IntMatrix::identity(3));
        CHECK(snf.invariant_factors == Vec{1, 1, 1});
    }
    SUBCASE("two-vertex double bundle") {
        auto snf = smith_normal_form(IntMatrix::from({{-2, 2}, {2, -2}}));
        CHECK(snf.invariant_factors == Vec{2, 0});
    }
    SUBCASE("triangle Laplacian shifted by 1") {
        IntMatrix m = IntMatrix::from({{-3, 1, 1}, {1, -3, 1}, {1, 1, -3}});
        auto snf = smith_normal_form(m);
        CHECK(snf.invariant_factors == Vec{1, 4, 4});
    }
}

TEST_CASE("smith normal form: reconstruction, unimodularity, divisibility") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        IntMatrix m = random_matrix(rng, r, c);
        auto snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.d);
        CHECK(abs(determinant(snf.u)) == 1);
        CHECK(abs(determinant(snf.v)) == 1);
        bool seen_zero = false;
        for (size_t k = 0; k < snf.invariant_factors.size(); ++k) {
            const Int& d = snf.invariant_factors[k];
            CHECK(d >= 0);
            if (d == 0) seen_zero = true;
            if (seen_zero) CHECK(d == 0);
            if (k > 0 && d != 0) {
                CHECK(snf.invariant_factors[k - 1] != 0);
                CHECK(d % snf.invariant_factors[k - 1] == 0);
            }
        }
    }
}

TEST_CASE("determinant: fixed examples") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    // Reduced Laplacian of the complete graph on 4 vertices.
    IntMatrix red = IntMatrix::from({{-3, 1, 1}, {1, -3, 1}, {1, 1, -3}});
    CHECK(abs(determinant(red)) == 16);
    CHECK(determinant(IntMatrix::from({{-1, 1}, {1, 1}})) == -2);
    CHECK_THROWS(determinant(IntMatrix(2, 3)));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937 rng(99);
    auto cofactor_det = [](auto&& self, const IntMatrix& m) -> Int {
        if (m.rows() == 1) return m.at(0, 0);
        Int acc = 0, sign = 1;
        for (int j = 0; j < m.cols(); ++j) {
            IntMatrix minor(m.rows() - 1, m.cols() - 1);
            for (int a = 1; a < m.rows(); ++a)
                for (int b = 0, t = 0; b < m.cols(); ++b)
                    if (b != j) minor.at(a - 1, t++) = m.at(a, b);
            acc += sign * m.at(0, j) * self(self, minor);
            sign = -sign;
        }
        return acc;
    };
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        IntMatrix m = random_matrix(rng, n, n);
        CHECK(determinant(m) == cofactor_det(cofactor_det, m));
    }
}

TEST_CASE("basis_difference") {
    CHECK(basis_difference(3, 1, 2) == Vec{1, -1, 0});
    CHECK(basis_difference(3, 3, 1) == Vec{-1, 0, 1});
    CHECK(basis_difference(2, 1, 2) == Vec{1, -1});
    CHECK_THROWS(basis_difference(3, 2, 2));
}

TEST_CASE("lattice_solve: fixed examples") {
    CHECK(lattice_solve(IntMatrix::identity(2), Vec{5, 7}) == Vec{5, 7});
    IntMatrix g2 = IntMatrix::from({{-2, 2}, {2, -2}});
    auto s = lattice_solve(g2, Vec{-2, 2});
    REQUIRE(s.has_value());
    CHECK(g2 * *s == Vec{-2, 2});
    CHECK(!lattice_solve(g2, Vec{1, -1}).has_value());
}

TEST_CASE("cokernel_class_order: fixed examples") {
    CHECK(cokernel_class_order(IntMatrix::from({{-2, 2}, {2, -2}}), Vec{1, -1}) == Int(2));
    IntMatrix c3 = IntMatrix::from({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
    CHECK(cokernel_class_order(c3, basis_difference(3, 1, 3)) == Int(3));
    CHECK(cokernel_class_order(IntMatrix::identity(3), basis_difference(3, 1, 2)) == Int(1));
    // Zero map: every nonzero class has infinite order.
    CHECK(!cokernel_class_order(IntMatrix(2, 2), Vec{1, 0}).has_value());
    CHECK(cokernel_class_order(IntMatrix(2, 2), Vec{0, 0}) == Int(1));
}

TEST_CASE("solver and class order agree with the elimination oracle") {
    std::mt19937 rng(1771);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        IntMatrix m = random_matrix(rng, n, n, 4);
        Vec w(n);
        for (int k = 0; k < n; ++k) w[k] = d(rng);
        auto s = lattice_solve(m, w);
        CHECK(s.has_value() == column_elimination_member(m, w));
        if (s) CHECK(m * *s == w);
        auto order = cokernel_class_order(m, w);
        auto brute = brute_force_class_order(m, w, 50);
        if (brute) {
            CHECK(order == Int(*brute));
        } else {
            CHECK((!order || *order > 50));
        }
    }
}

TEST_CASE("hermite form: membership matches the solver, pivots reduced") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int r = 2 + static_cast<int>(rng() % 3), c = 1 + static_cast<int>(rng() % 4);
        IntMatrix m = random_matrix(rng, r, c, 5);
        LatticeBasis hnf = column_hermite_form(m);
        REQUIRE(hnf.basis.cols() == static_cast<int>(hnf.pivot_rows.size()));
        for (size_t k = 0; k < hnf.pivot_rows.size(); ++k) {
            if (k > 0) CHECK(hnf.pivot_rows[k] > hnf.pivot_rows[k - 1]);
            const Int& pivot = hnf.basis.at(hnf.pivot_rows[k], static_cast<int>(k));
            CHECK(pivot > 0);
            for (size_t t = 0; t < k; ++t) {
                const Int& e = hnf.basis.at(hnf.pivot_rows[k], static_cast<int>(t));
                CHECK(e >= 0);
                CHECK(e < pivot);
            }
        }
        // Each original column lies in the Hermite lattice and vice versa.
        for (int j = 0; j < c; ++j) {
            Vec col(r);
            for (int i = 0; i < r; ++i) col[i] = m.at(i, j);
            CHECK(lattice_contains(hnf, col));
        }
        for (int j = 0; j < hnf.basis.cols(); ++j) {
            Vec col(r);
            for (int i = 0; i < r; ++i) col[i] = hnf.basis.at(i, j);
            CHECK(lattice_solve(m, col).has_value());
        }
        Vec w(r);
        for (int k = 0; k < r; ++k) w[k] = d(rng);
        CHECK(lattice_contains(hnf, w) == lattice_solve(m, w).has_value());
    }
}

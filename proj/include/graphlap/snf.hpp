#pragma once

#include <optional>

#include "graphlap/intmatrix.hpp"

namespace graphlap {

/// U * M * V = D with U, V unimodular and D diagonal, d_k | d_{k+1},
/// nonzero factors positive, zeros trailing.
struct SmithDecomposition {
    IntMatrix u;                 // rows x rows
    IntMatrix d;                 // rows x cols, diagonal
    IntMatrix v;                 // cols x cols
    Vec invariant_factors;       // length min(rows, cols)
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Exact determinant by fraction-free elimination. Throws on non-square input.
Int determinant(const IntMatrix& m);

/// E_ij = e_i - e_j in Z^n, 1-based indices, i != j.
Vec basis_difference(int n, int i, int j);

/// Some integer S with M*S = w, if one exists.
std::optional<Vec> lattice_solve(const IntMatrix& m, const Vec& w);
std::optional<Vec> lattice_solve(const SmithDecomposition& snf, const Vec& w);

/// Order of the class of w in Z^rows / Im(M); nullopt means infinite.
std::optional<Int> cokernel_class_order(const IntMatrix& m, const Vec& w);
std::optional<Int> cokernel_class_order(const SmithDecomposition& snf, const Vec& w);

/// Column echelon basis of the image lattice Im(M): pivot rows strictly
/// increase with the column index, pivots positive, entries of a pivot row in
/// earlier columns reduced to [0, pivot).
struct LatticeBasis {
    IntMatrix basis;             // rows x rank
    std::vector<int> pivot_rows; // one per column of `basis`
};

LatticeBasis column_hermite_form(const IntMatrix& m);

/// Membership of w in the column span, by back-substitution on the Hermite basis.
bool lattice_contains(const LatticeBasis& hnf, const Vec& w);

}  // namespace graphlap

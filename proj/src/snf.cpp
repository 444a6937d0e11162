#include "graphlap/snf.hpp"

#include <cstdlib>

namespace graphlap {

namespace {

// Position of the nonzero entry of minimal |value| in A[t.., t..], if any.
// Minimal-abs pivoting keeps coefficient growth in check during elimination.
bool min_abs_pivot(const IntMatrix& a, int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            const Int& e = a.at(i, j);
            if (e == 0) continue;
            Int ae = abs(e);
            if (!found || ae < best) {
                found = true;
                best = ae;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    if (m.empty()) throw std::invalid_argument("smith_normal_form: empty matrix");
    const int r = m.rows(), c = m.cols();
    const int mn = std::min(r, c);
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    for (int t = 0; t < mn; ++t) {
        int pi, pj;
        if (!min_abs_pivot(a, t, pi, pj)) break;  // remaining submatrix is zero
        for (;;) {
            min_abs_pivot(a, t, pi, pj);
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < r; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                if (q != 0) {
                    a.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (a.at(i, t) != 0) dirty = true;
            }
            if (dirty) continue;
            for (int j = t + 1; j < c; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (q != 0) {
                    a.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide the rest of the submatrix for the
            // divisibility chain; merge an offending row and go round again.
            bool fixed = true;
            for (int i = t + 1; i < r && fixed; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
    }

    for (int t = 0; t < mn; ++t)
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }

    SmithDecomposition out;
    out.invariant_factors.resize(mn);
    for (int t = 0; t < mn; ++t) out.invariant_factors[t] = a.at(t, t);
    out.u = std::move(u);
    out.d = std::move(a);
    out.v = std::move(v);
    return out;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

Vec basis_difference(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("basis_difference: index out of range");
    if (i == j) throw std::invalid_argument("basis_difference: i == j");
    Vec e(n);
    e[i - 1] = 1;
    e[j - 1] = -1;
    return e;
}

std::optional<Vec> lattice_solve(const SmithDecomposition& snf, const Vec& w) {
    const int r = snf.u.rows(), c = snf.v.rows();
    if (static_cast<int>(w.size()) != r) throw std::invalid_argument("lattice_solve: dimension mismatch");
    Vec y = snf.u * w;
    const int mn = std::min(r, c);
    Vec x(c);
    for (int k = 0; k < r; ++k) {
        const Int d = k < mn ? snf.invariant_factors[k] : Int(0);
        if (d == 0) {
            if (y[k] != 0) return std::nullopt;
        } else {
            if (y[k] % d != 0) return std::nullopt;
            x[k] = y[k] / d;
        }
    }
    return snf.v * x;
}

std::optional<Vec> lattice_solve(const IntMatrix& m, const Vec& w) {
    return lattice_solve(smith_normal_form(m), w);
}

std::optional<Int> cokernel_class_order(const SmithDecomposition& snf, const Vec& w) {
    const int r = snf.u.rows();
    if (static_cast<int>(w.size()) != r)
        throw std::invalid_argument("cokernel_class_order: dimension mismatch");
    Vec y = snf.u * w;
    const int mn = static_cast<int>(snf.invariant_factors.size());
    Int h = 1;
    for (int k = 0; k < r; ++k) {
        const Int d = k < mn ? snf.invariant_factors[k] : Int(0);
        if (d == 0) {
            if (y[k] != 0) return std::nullopt;  // nonzero free coordinate
        } else {
            h = lcm(h, Int(d / gcd(d, y[k])));
        }
    }
    return h;
}

std::optional<Int> cokernel_class_order(const IntMatrix& m, const Vec& w) {
    return cokernel_class_order(smith_normal_form(m), w);
}

LatticeBasis column_hermite_form(const IntMatrix& m) {
    const int r = m.rows(), c = m.cols();
    IntMatrix a = m;
    std::vector<int> pivots;
    int col = 0;
    for (int row = 0; row < r && col < c; ++row) {
        for (;;) {
            int best = -1;
            Int bestabs;
            for (int j = col; j < c; ++j) {
                if (a.at(row, j) == 0) continue;
                Int ae = abs(a.at(row, j));
                if (best < 0 || ae < bestabs) {
                    best = j;
                    bestabs = ae;
                }
            }
            if (best < 0) break;
            a.swap_cols(col, best);
            bool clean = true;
            for (int j = col + 1; j < c; ++j) {
                if (a.at(row, j) == 0) continue;
                Int q = a.at(row, j) / a.at(row, col);
                if (q != 0) a.add_col_multiple(j, col, -q);
                if (a.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(row, col) == 0) continue;  // no pivot in this row
        if (a.at(row, col) < 0) a.negate_col(col);
        // Reduce the pivot row's entries in earlier columns to [0, pivot).
        for (int u = 0; u < col; ++u) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(row, u).get_mpz_t(), a.at(row, col).get_mpz_t());
            if (q != 0) a.add_col_multiple(u, col, -q);
        }
        pivots.push_back(row);
        ++col;
    }
    LatticeBasis out;
    out.pivot_rows = pivots;
    out.basis = IntMatrix(r, static_cast<int>(pivots.size()));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < static_cast<int>(pivots.size()); ++j) out.basis.at(i, j) = a.at(i, j);
    return out;
}

bool lattice_contains(const LatticeBasis& hnf, const Vec& w) {
    const int r = hnf.basis.rows();
    if (static_cast<int>(w.size()) != r)
        throw std::invalid_argument("lattice_contains: dimension mismatch");
    Vec rem = w;
    for (int t = 0; t < hnf.basis.cols(); ++t) {
        const int pr = hnf.pivot_rows[t];
        const Int& p = hnf.basis.at(pr, t);
        if (rem[pr] % p != 0) return false;
        Int x = rem[pr] / p;
        if (x != 0)
            for (int i = 0; i < r; ++i) rem[i] -= x * hnf.basis.at(i, t);
    }
    for (const Int& e : rem)
        if (e != 0) return false;
    return true;
}

}  // namespace graphlap

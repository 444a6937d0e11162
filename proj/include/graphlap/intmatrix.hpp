#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace graphlap {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static IntMatrix identity(int n);
    /// Convenience constructor for literal test matrices.
    static IntMatrix from(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void negate_row(int i);
    void negate_col(int j);
    /// row[a] += c * row[b]
    void add_row_multiple(int a, int b, const Int& c);
    /// col[a] += c * col[b]
    void add_col_multiple(int a, int b, const Int& c);

    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
Vec operator*(const IntMatrix& a, const Vec& v);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// M - mu * Id (square M).
IntMatrix shift_diagonal(const IntMatrix& m, const Int& mu);

/// Text format: header `m <rows> <cols>`, then whitespace-separated rows.
/// Lines starting with `#` are ignored.
IntMatrix parse_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMatrix& m);

}  // namespace graphlap

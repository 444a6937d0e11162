#include "graphlap/intmatrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace graphlap {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw std::invalid_argument("ragged matrix literal");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_row(int i) {
    for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(int j) {
    for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void IntMatrix::add_row_multiple(int a, int b, const Int& c) {
    for (int j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col_multiple(int a, int b, const Int& c) {
    for (int i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Vec operator*(const IntMatrix& a, const Vec& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

IntMatrix shift_diagonal(const IntMatrix& m, const Int& mu) {
    if (m.rows() != m.cols()) throw std::invalid_argument("diagonal shift needs a square matrix");
    IntMatrix r = m;
    for (int i = 0; i < r.rows(); ++i) r.at(i, i) -= mu;
    return r;
}

namespace {

// Strips `#` comment lines and blank lines, concatenating the rest.
std::string strip_comments(std::istream& in) {
    std::string out, line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

IntMatrix parse_matrix(std::istream& in) {
    std::istringstream ss(strip_comments(in));
    std::string tag;
    int rows, cols;
    if (!(ss >> tag >> rows >> cols) || tag != "m")
        throw std::runtime_error("matrix file: expected header `m <rows> <cols>`");
    if (rows <= 0 || cols <= 0) throw std::runtime_error("matrix file: non-positive dimensions");
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::string word;
            if (!(ss >> word)) throw std::runtime_error("matrix file: not enough entries");
            try {
                m.at(i, j) = Int(word);
            } catch (const std::invalid_argument&) {
                throw std::runtime_error("matrix file: bad integer `" + word + "`");
            }
        }
    std::string extra;
    if (ss >> extra) throw std::runtime_error("matrix file: trailing data `" + extra + "`");
    return m;
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << "m " << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j);
        out << '\n';
    }
}

}  // namespace graphlap

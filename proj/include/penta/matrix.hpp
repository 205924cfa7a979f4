#pragma once

#include "penta/errors.hpp"
#include "penta/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <vector>

namespace penta {

/// Dense row-major matrix over a commutative scalar (Rat for exact work,
/// double for float-mode timing runs) or over a polynomial ring.  All
/// entries of one matrix share the scalar type; mixing modes is a type
/// error rather than a runtime one.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Mat(int rows, int cols, std::initializer_list<T> entries) : Mat(rows, cols) {
        size_t k = 0;
        for (const T& v : entries) a_[k++] = v;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        check_same_shape(o, "Mat::operator+");
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o, "Mat::operator-");
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
        return r;
    }
    Mat& operator+=(const Mat& o) { return *this = *this + o; }
    Mat& operator-=(const Mat& o) { return *this = *this - o; }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("Mat::operator*: inner dimensions differ");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& aik = at(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    T trace() const {
        if (!square()) throw DimensionMismatch("Mat::trace: non-square");
        T t(0);
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const T& v : a_)
            if (!(v == T(0))) return false;
        return true;
    }
    bool is_identity() const {
        if (!square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(at(i, j) == (i == j ? T(1) : T(0)))) return false;
        return true;
    }

    Mat cols_slice(int j0, int j1) const { // columns [j0, j1)
        Mat r(rows_, j1 - j0);
        for (int i = 0; i < rows_; ++i)
            for (int j = j0; j < j1; ++j) r.at(i, j - j0) = at(i, j);
        return r;
    }
    Mat rows_slice(int i0, int i1) const {
        Mat r(i1 - i0, cols_);
        for (int i = i0; i < i1; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i - i0, j) = at(i, j);
        return r;
    }

private:
    void check_same_shape(const Mat& o, const char* who) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch(std::string(who) + ": shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

/// Horizontal concatenation of equal-height blocks.
template <class T>
Mat<T> block_row(const std::vector<Mat<T>>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("block_row: empty");
    int rows = blocks[0].rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw DimensionMismatch("block_row: row mismatch");
        cols += b.cols();
    }
    Mat<T> r(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < b.cols(); ++j) r.at(i, off + j) = b.at(i, j);
        off += b.cols();
    }
    return r;
}

/// Assemble a square block matrix from an N-block grid; blocks[i][j] may be
/// empty (treated as a zero block of the common size).
template <class T>
Mat<T> block_grid(const std::vector<std::vector<Mat<T>>>& blocks, int block_size) {
    int nb = static_cast<int>(blocks.size());
    Mat<T> r(nb * block_size, nb * block_size);
    for (int bi = 0; bi < nb; ++bi)
        for (int bj = 0; bj < nb; ++bj) {
            const Mat<T>& b = blocks[bi][bj];
            if (b.rows() == 0) continue;
            for (int i = 0; i < block_size; ++i)
                for (int j = 0; j < block_size; ++j) r.at(bi * block_size + i, bj * block_size + j) = b.at(i, j);
        }
    return r;
}

/// Determinant by cofactor expansion; works over any commutative ring
/// (no division), for the small matrices where it is used.
template <class T>
T det_laplace(const Mat<T>& m) {
    if (!m.square()) throw DimensionMismatch("det_laplace: non-square");
    int n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m.at(0, 0);
    T acc = T(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == T(0)) continue;
        Mat<T> minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        T term = m.at(0, j) * det_laplace(minor);
        acc = (j % 2 == 0) ? T(acc + term) : T(acc - term);
    }
    return acc;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

} // namespace penta

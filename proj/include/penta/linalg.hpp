#pragma once

#include "penta/matrix.hpp"

#include <vector>

namespace penta {

/// Reduced row echelon form in place.  Returns the pivot column indices.
/// T must be a field (Rat, double).
template <class T>
std::vector<int> rref_inplace(Mat<T>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!(m.at(i, c) == T(0))) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        T inv = T(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == T(0)) continue;
            T f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Mat<T> m) {
    return static_cast<int>(rref_inplace(m).size());
}

/// Basis of the right null space, one column per free variable.
template <class T>
Mat<T> null_space(Mat<T> m) {
    int n = m.cols();
    std::vector<int> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<T> basis(n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = T(1);
        for (size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
    }
    return basis;
}

/// Determinant by fraction-free Bareiss elimination: over Rat every
/// intermediate division is exact, so no spurious growth beyond the entries'
/// own arithmetic.
template <class T>
T det(const Mat<T>& m0) {
    if (!m0.square()) throw DimensionMismatch("det: non-square");
    int n = m0.rows();
    if (n == 0) return T(1);
    Mat<T> m = m0;
    T sign(1), prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == T(0)) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(m.at(i, k) == T(0))) { p = i; break; }
            if (p < 0) return T(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

/// Inverse via Gauss-Jordan.  Throws SingularMatrix.
template <class T>
Mat<T> inverse(const Mat<T>& m0) {
    if (!m0.square()) throw DimensionMismatch("inverse: non-square");
    int n = m0.rows();
    Mat<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m0.at(i, j);
        aug.at(i, n + i) = T(1);
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) throw SingularMatrix("inverse: singular matrix");
    return aug.cols_slice(n, 2 * n);
}

template <class T>
bool is_invertible(const Mat<T>& m) {
    return m.square() && !(det(m) == T(0));
}

/// A linear subspace of an ambient coordinate space, stored with a
/// canonical basis: reduced column echelon form, so two Subspace values are
/// equal iff the spans coincide.
template <class T>
class Subspace {
public:
    Subspace(int ambient_dim, const Mat<T>& spanning_columns) : ambient_(ambient_dim) {
        if (spanning_columns.rows() != ambient_dim) throw DimensionMismatch("Subspace: ambient mismatch");
        Mat<T> t = spanning_columns.transpose();
        std::vector<int> piv = rref_inplace(t);
        basis_ = Mat<T>(ambient_dim, static_cast<int>(piv.size()));
        for (size_t r = 0; r < piv.size(); ++r)
            for (int j = 0; j < ambient_dim; ++j) basis_.at(j, static_cast<int>(r)) = t.at(static_cast<int>(r), j);
    }

    static Subspace span_of(const Mat<T>& columns) { return Subspace(columns.rows(), columns); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Mat<T>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    bool contains(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw DimensionMismatch("Subspace::contains");
        Mat<T> joint = block_row<T>({basis_, o.basis_});
        return rank(joint) == dim();
    }

private:
    int ambient_;
    Mat<T> basis_;
};

/// Intersection basis from the null space of [A | -B]: a null vector
/// (u; v) encodes the common element A u = B v.
template <class T>
Subspace<T> subspace_intersect(const Subspace<T>& a, const Subspace<T>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace<T>(a.ambient_dim(), Mat<T>(a.ambient_dim(), 0));
    Mat<T> cat = block_row<T>({a.basis(), -b.basis()});
    Mat<T> ns = null_space(cat);
    Mat<T> gens(a.ambient_dim(), ns.cols());
    for (int k = 0; k < ns.cols(); ++k)
        for (int i = 0; i < a.ambient_dim(); ++i) {
            T s(0);
            for (int j = 0; j < a.dim(); ++j) s += a.basis().at(i, j) * ns.at(j, k);
            gens.at(i, k) = s;
        }
    return Subspace<T>(a.ambient_dim(), gens);
}

template <class T>
bool span_equal(const Subspace<T>& a, const Subspace<T>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("span_equal: ambient mismatch");
    return a == b; // canonical bases
}

template <class T>
Subspace<T> column_span(const Mat<T>& m) {
    return Subspace<T>(m.rows(), m);
}

using RatMat = Mat<Rat>;
using RatSubspace = Subspace<Rat>;

/// Random integer-entry matrix with entries in [-m, m].
inline RatMat random_int_matrix(Rng& rng, int rows, int cols, long m = 5) {
    RatMat r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = rat(rng.uniform(-m, m));
    return r;
}

/// Random invertible matrix, retrying until det != 0.
inline RatMat random_invertible(Rng& rng, int n, long m = 5) {
    for (;;) {
        RatMat r = random_int_matrix(rng, n, n, m);
        if (is_invertible(r)) return r;
    }
}

} // namespace penta

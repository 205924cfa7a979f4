#pragma once

#include "penta/laurent.hpp"
#include "penta/matrix.hpp"

#include <map>

namespace penta {

// zero tests and multiplicative units for the coefficient rings that the
// generic containers carry
inline bool value_is_zero(const Rat& v) { return sgn(v) == 0; }
inline bool value_is_zero(double v) { return v == 0.0; }
inline bool value_is_zero(const CLaurent& p) { return p.is_zero(); }
template <class T>
bool value_is_zero(const Mat<T>& m) {
    return m.is_zero();
}

inline Rat weight_one(const Rat&) { return rat(1); }
inline double weight_one(double) { return 1.0; }
inline CLaurent weight_one(const CLaurent&) { return CLaurent(1); }
template <class T>
Mat<T> weight_one(const Mat<T>& proto) {
    return Mat<T>::identity(proto.rows());
}

/// Scalar Laurent polynomial in the central cut parameter, with
/// coefficients in an arbitrary ring T.
template <class T>
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const T& c) { set(0, c); }
    static Laurent term(int exp, const T& c) {
        Laurent p;
        p.set(exp, c);
        return p;
    }

    const std::map<int, T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    T coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? T{} : it->second;
    }

    void set(int exp, const T& v) {
        if (value_is_zero(v)) c_.erase(exp);
        else c_[exp] = v;
    }
    void add(int exp, const T& v) {
        auto it = c_.find(exp);
        if (it == c_.end()) { set(exp, v); return; }
        it->second += v;
        if (value_is_zero(it->second)) c_.erase(it);
    }

    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, v] : o.c_) add(e, v);
        return *this;
    }
    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        r += o;
        return r;
    }
    Laurent operator-(const Laurent& o) const {
        Laurent r = *this;
        for (auto& [e, v] : o.c_) r.add(e, -v);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (auto& [ea, va] : c_)
            for (auto& [eb, vb] : o.c_) r.add(ea + eb, va * vb);
        return r;
    }

private:
    std::map<int, T> c_;
};

/// Laurent polynomial in the central parameter with square matrix
/// coefficients.  The parameter commutes with everything by construction:
/// it only lives in the exponent bookkeeping.
template <class T>
class MatLaurent {
public:
    MatLaurent() = default;
    explicit MatLaurent(int dim) : dim_(dim) {}

    static MatLaurent identity(int dim) { return term(dim, 0, Mat<T>::identity(dim)); }
    static MatLaurent term(int dim, int exp, const Mat<T>& m) {
        MatLaurent p(dim);
        p.add(exp, m);
        return p;
    }

    int dim() const { return dim_; }
    const std::map<int, Mat<T>>& coeffs() const { return c_; }
    Mat<T> coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Mat<T>::zero(dim_, dim_) : it->second;
    }
    std::pair<int, int> degree_range() const { // [min, max] over stored terms
        if (c_.empty()) return {0, 0};
        return {c_.begin()->first, c_.rbegin()->first};
    }

    void add(int exp, const Mat<T>& m) {
        if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("MatLaurent::add: bad block");
        auto it = c_.find(exp);
        if (it == c_.end()) {
            if (!m.is_zero()) c_[exp] = m;
            return;
        }
        it->second = it->second + m;
        if (it->second.is_zero()) c_.erase(it);
    }

    bool operator==(const MatLaurent& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const MatLaurent& o) const { return !(*this == o); }

    MatLaurent operator+(const MatLaurent& o) const {
        check(o);
        MatLaurent r = *this;
        for (auto& [e, m] : o.c_) r.add(e, m);
        return r;
    }
    MatLaurent operator-(const MatLaurent& o) const {
        check(o);
        MatLaurent r = *this;
        for (auto& [e, m] : o.c_) r.add(e, -m);
        return r;
    }

    /// Cauchy product: the coefficient of degree k is the convolution of the
    /// factors' coefficients.  Matrix order is preserved.
    MatLaurent operator*(const MatLaurent& o) const {
        check(o);
        MatLaurent r(dim_);
        for (auto& [ea, ma] : c_)
            for (auto& [eb, mb] : o.c_) r.add(ea + eb, ma * mb);
        return r;
    }

    MatLaurent pow(int k) const {
        MatLaurent r = identity(dim_);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    Laurent<T> trace() const {
        Laurent<T> t;
        for (auto& [e, m] : c_) t.add(e, m.trace());
        return t;
    }

private:
    void check(const MatLaurent& o) const {
        if (dim_ != o.dim_) throw DimensionMismatch("MatLaurent: dim mismatch");
    }

    int dim_ = 0;
    std::map<int, Mat<T>> c_;
};

/// Trace as a commutative Laurent polynomial in the cut variable.
inline CLaurent ml_trace_poly(const MatLaurent<Rat>& p) {
    CLaurent out;
    for (auto& [e, m] : p.coeffs()) out += CLaurent::monomial(Mono{{vars::lambda, e}}, m.trace());
    return out;
}

} // namespace penta

#pragma once

#include "penta/rational.hpp"
#include "penta/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace penta {

/// Variable ids for the commutative Laurent ring.  Fixed scheme so that
/// polynomials print and order deterministically: x1..xn, y1..yn, z,
/// l (the cut parameter), t (the characteristic-polynomial parameter).
namespace vars {
inline int x(int i) { return i; }               // 1-based
inline int y(int i) { return 1000 + i; }        // 1-based
constexpr int z = 2000;
constexpr int lambda = 2001;
constexpr int t = 2002;

inline std::string name(int id) {
    if (id >= 1 && id < 1000) return "x" + std::to_string(id);
    if (id > 1000 && id < 2000) return "y" + std::to_string(id - 1000);
    if (id == z) return "z";
    if (id == lambda) return "l";
    if (id == t) return "t";
    return "v" + std::to_string(id);
}
} // namespace vars

/// Sparse monomial: sorted (variable id, exponent) pairs, exponents nonzero
/// (may be negative - these are Laurent monomials).
using Mono = std::vector<std::pair<int, int>>;

inline long mono_degree(const Mono& m) {
    long d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

/// Graded-lexicographic order: total degree first, then the sparse
/// representation lexicographically.  Total and deterministic.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        long da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Multivariate commutative Laurent polynomial with exact rational
/// coefficients.  Zero coefficients are never stored.
class CLaurent {
public:
    CLaurent() = default;
    explicit CLaurent(const Rat& c) {
        if (!penta::is_zero(c)) terms_[Mono{}] = c;
    }
    explicit CLaurent(int c) : CLaurent(rat(c)) {}

    static CLaurent constant(const Rat& c) { return CLaurent(c); }
    static CLaurent variable(int var, int exp = 1) {
        CLaurent p;
        if (exp != 0)
            p.terms_[Mono{{var, exp}}] = rat(1);
        else
            p.terms_[Mono{}] = rat(1);
        return p;
    }
    static CLaurent monomial(const Mono& m, const Rat& c) {
        CLaurent p;
        if (!penta::is_zero(c)) p.terms_[m] = c;
        return p;
    }

    const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const CLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const CLaurent& o) const { return !(*this == o); }
    bool operator==(const Rat& c) const { return *this == CLaurent(c); }

    CLaurent& operator+=(const CLaurent& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CLaurent& operator-=(const CLaurent& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    CLaurent operator+(const CLaurent& o) const { CLaurent r = *this; r += o; return r; }
    CLaurent operator-(const CLaurent& o) const { CLaurent r = *this; r -= o; return r; }
    CLaurent operator-() const {
        CLaurent r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    CLaurent operator*(const CLaurent& o) const {
        CLaurent r;
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    CLaurent& operator*=(const CLaurent& o) { *this = *this * o; return *this; }

    CLaurent scaled(const Rat& s) const {
        CLaurent r;
        if (penta::is_zero(s)) return r;
        for (auto& [m, c] : terms_) r.terms_[m] = c * s;
        return r;
    }

    /// Multiplicative inverse of a single-term polynomial (monomials are the
    /// only units we ever need to invert).
    CLaurent inv_monomial() const {
        if (terms_.size() != 1) throw DimensionMismatch("CLaurent::inv_monomial: not a monomial");
        auto& [m, c] = *terms_.begin();
        Mono im = m;
        for (auto& [v, e] : im) e = -e;
        std::sort(im.begin(), im.end());
        return monomial(im, rat(1) / c);
    }

    /// Exact partial derivative with respect to one variable.
    CLaurent derivative(int var) const {
        CLaurent r;
        for (auto& [m, c] : terms_) {
            for (size_t k = 0; k < m.size(); ++k) {
                if (m[k].first != var) continue;
                Mono d = m;
                Rat nc = c * rat(m[k].second);
                if (d[k].second == 1)
                    d.erase(d.begin() + static_cast<long>(k));
                else
                    d[k].second -= 1;
                r.add_term(d, nc);
            }
        }
        return r;
    }

    /// Coefficient of l^i t^j, as a polynomial in the remaining variables.
    CLaurent coefficient_of(int var, int exp) const {
        CLaurent r;
        for (auto& [m, c] : terms_) {
            int e = 0;
            Mono rest;
            for (auto& [v, ev] : m)
                if (v == var) e = ev; else rest.push_back({v, ev});
            if (e == exp) r.add_term(rest, c);
        }
        return r;
    }

    /// Substitute a value for one variable (value must be nonzero if
    /// negative exponents occur).
    CLaurent substitute(int var, const Rat& value) const {
        CLaurent r;
        for (auto& [m, c] : terms_) {
            Rat coef = c;
            Mono rest;
            for (auto& [v, ev] : m) {
                if (v != var) { rest.push_back({v, ev}); continue; }
                if (ev >= 0)
                    for (int k = 0; k < ev; ++k) coef *= value;
                else {
                    if (penta::is_zero(value)) throw ZeroDenominator("CLaurent::substitute: zero to negative power");
                    for (int k = 0; k < -ev; ++k) coef /= value;
                }
            }
            r.add_term(rest, coef);
        }
        return r;
    }

    /// Evaluate fully; `point` maps every occurring variable to a value.
    Rat eval(const std::map<int, Rat>& point) const {
        Rat total(0);
        for (auto& [m, c] : terms_) {
            Rat v = c;
            for (auto& [var, e] : m) {
                auto it = point.find(var);
                if (it == point.end()) throw ConfigError("CLaurent::eval: unbound variable " + vars::name(var));
                if (e >= 0)
                    for (int k = 0; k < e; ++k) v *= it->second;
                else {
                    if (penta::is_zero(it->second)) throw ZeroDenominator("CLaurent::eval: zero to negative power");
                    for (int k = 0; k < -e; ++k) v /= it->second;
                }
            }
            total += v;
        }
        return total;
    }

    std::vector<int> variables() const {
        std::vector<int> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m)
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    /// "3*l^2*t - 1/2*x1*y3^-1" style canonical text, highest term first.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rat ac = abs(c);
            os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
            first = false;
            bool coef_one = (ac == 1) && !m.empty();
            if (!coef_one) os << ac.get_str();
            bool need_star = !coef_one;
            for (auto& [v, e] : m) {
                if (need_star) os << "*";
                need_star = true;
                os << vars::name(v);
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono r;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
            else {
                int e = a[i].second + b[j].second;
                if (e != 0) r.push_back({a[i].first, e});
                ++i; ++j;
            }
        }
        return r;
    }

    void add_term(const Mono& m, const Rat& c) {
        if (penta::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) { terms_[m] = c; return; }
        it->second += c;
        if (penta::is_zero(it->second)) terms_.erase(it);
    }

    std::map<Mono, Rat, MonoLess> terms_;
};

inline CLaurent operator*(const Rat& s, const CLaurent& p) { return p.scaled(s); }

/// Antisymmetric log-canonical coefficient table: bracket(a,b) returns
/// c_ab with {w_a, w_b} = c_ab w_a w_b.
class BracketTable {
public:
    void set(int a, int b, const Rat& c) {
        table_[{a, b}] = c;
        table_[{b, a}] = -c;
    }
    Rat get(int a, int b) const {
        auto it = table_.find({a, b});
        return it == table_.end() ? rat(0) : it->second;
    }
    const std::map<std::pair<int, int>, Rat>& entries() const { return table_; }

private:
    std::map<std::pair<int, int>, Rat> table_;
};

/// Log-canonical Poisson bracket extended to Laurent polynomials as an
/// exact biderivation:
///   {F,G} = sum_{a,b} c_ab w_a w_b (dF/dw_a)(dG/dw_b).
inline CLaurent cl_bracket(const CLaurent& f, const CLaurent& g, const BracketTable& table) {
    CLaurent out;
    std::vector<int> va = f.variables(), vb = g.variables();
    for (int a : va) {
        CLaurent dfa = f.derivative(a);
        if (dfa.is_zero()) continue;
        for (int b : vb) {
            Rat c = table.get(a, b);
            if (is_zero(c)) continue;
            CLaurent dgb = g.derivative(b);
            if (dgb.is_zero()) continue;
            CLaurent wab = CLaurent::variable(a) * CLaurent::variable(b);
            out += wab.scaled(c) * dfa * dgb;
        }
    }
    return out;
}

} // namespace penta

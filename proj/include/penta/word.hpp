#pragma once

#include "penta/linalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace penta {

/// Freely reduced word over an integer generator alphabet.  A factor is a
/// signed generator id: +g is the generator, -g its inverse (g >= 1).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> factors) : f_(std::move(factors)) { reduce(); }
    static Word one() { return Word(); }
    static Word gen(int g, int exp = 1) {
        Word w;
        for (int k = 0; k < (exp >= 0 ? exp : -exp); ++k) w.f_.push_back(exp >= 0 ? g : -g);
        return w;
    }

    const std::vector<int>& factors() const { return f_; }
    bool empty() const { return f_.empty(); }
    size_t size() const { return f_.size(); }

    bool operator==(const Word& o) const { return f_ == o.f_; }
    bool operator<(const Word& o) const {
        if (f_.size() != o.f_.size()) return f_.size() < o.f_.size();
        return f_ < o.f_;
    }

    Word operator*(const Word& o) const {
        std::vector<int> cat = f_;
        cat.insert(cat.end(), o.f_.begin(), o.f_.end());
        return Word(std::move(cat));
    }

    Word inverse() const {
        std::vector<int> inv(f_.rbegin(), f_.rend());
        for (int& x : inv) x = -x;
        Word w;
        w.f_ = std::move(inv); // already reduced
        return w;
    }

    /// Number of factors equal to +g or -g.
    int count(int g) const {
        int n = 0;
        for (int x : f_)
            if (x == g || x == -g) ++n;
        return n;
    }

    /// Cyclically reduce, then rotate to the lexicographically least
    /// rotation.  This is the canonical representative used for the cyclic
    /// space: rotation- and conjugation-invariant by construction.
    Word cyclic_canonical() const {
        std::vector<int> v = f_;
        size_t lo = 0, hi = v.size();
        while (hi - lo >= 2 && v[lo] == -v[hi - 1]) { ++lo; --hi; }
        std::vector<int> core(v.begin() + static_cast<long>(lo), v.begin() + static_cast<long>(hi));
        if (core.size() <= 1) { Word w; w.f_ = core; return w; }
        size_t n = core.size(), best = 0;
        for (size_t s = 1; s < n; ++s) {
            for (size_t k = 0; k < n; ++k) {
                int a = core[(s + k) % n], b = core[(best + k) % n];
                if (a != b) {
                    if (a < b) best = s;
                    break;
                }
            }
        }
        std::vector<int> rot(n);
        for (size_t k = 0; k < n; ++k) rot[k] = core[(best + k) % n];
        Word w;
        w.f_ = std::move(rot);
        return w;
    }

    std::string str(const std::function<std::string(int)>& name) const {
        if (f_.empty()) return "1";
        std::ostringstream os;
        size_t i = 0;
        while (i < f_.size()) {
            int g = f_[i] > 0 ? f_[i] : -f_[i];
            int sgn = f_[i] > 0 ? 1 : -1;
            size_t j = i;
            while (j < f_.size() && f_[j] == f_[i]) ++j;
            int e = sgn * static_cast<int>(j - i);
            if (i) os << "*";
            os << name(g);
            if (e != 1) os << "^" << e;
            i = j;
        }
        return os.str();
    }

private:
    void reduce() {
        std::vector<int> out;
        for (int x : f_) {
            if (!out.empty() && out.back() == -x) out.pop_back();
            else out.push_back(x);
        }
        f_ = std::move(out);
    }

    std::vector<int> f_;
};

/// Finitely supported rational combination of words; no zero coefficients
/// stored, words kept in a canonical order for deterministic equality.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(const Rat& c) {
        if (!penta::is_zero(c)) t_[Word::one()] = c;
    }
    explicit NCPoly(const Word& w, const Rat& c = rat(1)) {
        if (!penta::is_zero(c)) t_[w] = c;
    }

    static NCPoly one() { return NCPoly(rat(1)); }

    const std::map<Word, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool operator==(const NCPoly& o) const { return t_ == o.t_; }

    void add(const Word& w, const Rat& c) {
        if (penta::is_zero(c)) return;
        auto it = t_.find(w);
        if (it == t_.end()) { t_[w] = c; return; }
        it->second += c;
        if (penta::is_zero(it->second)) t_.erase(it);
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (auto& [w, c] : o.t_) add(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (auto& [w, c] : o.t_) add(w, -c);
        return *this;
    }
    NCPoly operator+(const NCPoly& o) const { NCPoly r = *this; r += o; return r; }
    NCPoly operator-(const NCPoly& o) const { NCPoly r = *this; r -= o; return r; }
    NCPoly operator-() const { return scaled(rat(-1)); }

    /// Distributive concatenation product with free reduction.
    NCPoly operator*(const NCPoly& o) const {
        NCPoly r;
        for (auto& [wa, ca] : t_)
            for (auto& [wb, cb] : o.t_) r.add(wa * wb, ca * cb);
        return r;
    }

    NCPoly scaled(const Rat& s) const {
        NCPoly r;
        if (penta::is_zero(s)) return r;
        for (auto& [w, c] : t_) r.t_[w] = c * s;
        return r;
    }

    std::string str(const std::function<std::string(int)>& name) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [w, c] : t_) {
            Rat ac = abs(c);
            os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
            first = false;
            if (ac == 1 && !w.empty()) os << w.str(name);
            else {
                os << ac.get_str();
                if (!w.empty()) os << "*" << w.str(name);
            }
        }
        return os.str();
    }

private:
    std::map<Word, Rat> t_;
};

/// Projection to the cyclic space: words collapse to their canonical
/// cyclic representatives, coefficients summed.
inline std::map<Word, Rat> cyclic_project(const NCPoly& p) {
    std::map<Word, Rat> out;
    for (auto& [w, c] : p.terms()) {
        Word cw = w.cyclic_canonical();
        auto it = out.find(cw);
        if (it == out.end()) out[cw] = c;
        else {
            it->second += c;
            if (is_zero(it->second)) out.erase(it);
        }
    }
    return out;
}

inline bool cyclic_equal(const NCPoly& a, const NCPoly& b) {
    return cyclic_project(a - b).empty();
}

/// Bilinear container for double-bracket values in the tensor square.
class Tensor2 {
public:
    const std::map<std::pair<Word, Word>, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Word& u, const Word& v, const Rat& c) {
        if (penta::is_zero(c)) return;
        auto key = std::make_pair(u, v);
        auto it = t_.find(key);
        if (it == t_.end()) { t_[key] = c; return; }
        it->second += c;
        if (penta::is_zero(it->second)) t_.erase(it);
    }

    Tensor2& operator+=(const Tensor2& o) {
        for (auto& [uv, c] : o.t_) add(uv.first, uv.second, c);
        return *this;
    }

    /// Flip u (x) v -> v (x) u with a sign: the skew image of the tensor.
    Tensor2 flipped_negated() const {
        Tensor2 r;
        for (auto& [uv, c] : t_) r.add(uv.second, uv.first, -c);
        return r;
    }

    /// Outer bimodule action: (l1 (x) l2) . T . (r1 (x) r2).
    Tensor2 sandwich(const Word& l1, const Word& l2, const Word& r1, const Word& r2) const {
        Tensor2 r;
        for (auto& [uv, c] : t_) r.add(l1 * uv.first * r1, l2 * uv.second * r2, c);
        return r;
    }

    /// Multiplication map A (x) A -> A.
    NCPoly mu() const {
        NCPoly r;
        for (auto& [uv, c] : t_) r.add(uv.first * uv.second, c);
        return r;
    }

private:
    std::map<std::pair<Word, Word>, Rat> t_;
};

/// Evaluate a word as a ring homomorphism into matrices.  `assign` maps
/// generator id -> matrix; inverses are computed on demand and cached.
class WordEvaluator {
public:
    WordEvaluator(int dim, std::map<int, RatMat> assign) : dim_(dim), a_(std::move(assign)) {}

    const RatMat& gen(int g) const {
        auto it = a_.find(g);
        if (it == a_.end()) throw ConfigError("WordEvaluator: unassigned generator " + std::to_string(g));
        return it->second;
    }

    RatMat eval(const Word& w) const {
        RatMat m = RatMat::identity(dim_);
        for (int x : w.factors()) m = m * factor(x);
        return m;
    }

    RatMat eval(const NCPoly& p) const {
        RatMat m = RatMat::zero(dim_, dim_);
        for (auto& [w, c] : p.terms()) m = m + eval(w).scaled(c);
        return m;
    }

    Rat trace(const NCPoly& p) const { return eval(p).trace(); }

private:
    const RatMat& factor(int x) const {
        if (x > 0) return gen(x);
        auto it = inv_.find(-x);
        if (it == inv_.end()) it = inv_.emplace(-x, inverse(gen(-x))).first;
        return it->second;
    }

    int dim_;
    std::map<int, RatMat> a_;
    mutable std::map<int, RatMat> inv_;
};

} // namespace penta

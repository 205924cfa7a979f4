#pragma once

#include "penta/word.hpp"

namespace penta {

/// Truncation of (perturb + base)^-1 expanded by factoring out `base`:
///   base^-1 - base^-1 perturb base^-1 + ...  (`order` terms).
/// This is the expansion whose support is well ordered for the graded order
/// with perturb < base; factoring out `perturb` instead gives the
/// ill-ordered one (see magnus_order_key).
inline NCPoly nc_series_inverse(int base, int perturb, int order) {
    if (order < 1) throw ConfigError("nc_series_inverse: order must be >= 1");
    NCPoly out;
    Word binv = Word::gen(base, -1);
    Word cur = binv;
    Rat sign = rat(1);
    for (int m = 0; m < order; ++m) {
        out.add(cur, sign);
        cur = cur * Word::gen(perturb) * binv;
        sign = -sign;
    }
    return out;
}

/// Truncated image of a group word under the embedding that sends each
/// generator g to 1+g and g^-1 to the geometric series 1-g+g^2-...
/// Words of total degree > depth are dropped.
inline NCPoly magnus_embed(const Word& w, int depth) {
    NCPoly acc = NCPoly::one();
    auto truncate = [depth](const NCPoly& p) {
        NCPoly r;
        for (auto& [word, c] : p.terms())
            if (static_cast<int>(word.size()) <= depth) r.add(word, c);
        return r;
    };
    for (int x : w.factors()) {
        int g = x > 0 ? x : -x;
        NCPoly f;
        if (x > 0) {
            f.add(Word::one(), rat(1));
            f.add(Word::gen(g), rat(1));
        } else {
            Rat s = rat(1);
            for (int k = 0; k <= depth; ++k) {
                f.add(Word::gen(g, k), s);
                s = -s;
            }
        }
        acc = truncate(acc * f);
    }
    return acc;
}

/// Positive words of length <= depth over an alphabet, in graded-lex order.
inline std::vector<Word> magnus_basis(const std::vector<int>& alphabet, int depth) {
    std::vector<Word> basis{Word::one()};
    std::vector<Word> layer{Word::one()};
    for (int d = 1; d <= depth; ++d) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (int g : alphabet) next.push_back(w * Word::gen(g));
        std::sort(next.begin(), next.end());
        basis.insert(basis.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return basis;
}

/// Comparison key for the order induced by the Magnus embedding: the
/// coefficients of the embedded word on the graded-lex monomial basis up to
/// the given depth.  f < g iff the keys differ first at a place where f's
/// coefficient is smaller.
inline std::vector<Rat> magnus_order_key(const Word& w, int depth, const std::vector<int>& alphabet) {
    NCPoly img = magnus_embed(w, depth);
    std::vector<Rat> key;
    for (const Word& b : magnus_basis(alphabet, depth)) {
        auto it = img.terms().find(b);
        key.push_back(it == img.terms().end() ? rat(0) : it->second);
    }
    return key;
}

} // namespace penta

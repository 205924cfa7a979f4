#include "penta/grass.hpp"

namespace penta {

std::string convention_name(Convention c) {
    switch (c) {
        case Convention::Prop4: return "prop4";
        case Convention::Network: return "network";
        case Convention::Lax: return "lax";
    }
    return "?";
}

Convention convention_from_name(const std::string& s) {
    if (s == "prop4") return Convention::Prop4;
    if (s == "network") return Convention::Network;
    if (s == "lax") return Convention::Lax;
    throw ConfigError("unknown convention: " + s);
}

RatMat GrassWeights::wrapped(const std::vector<RatMat>& v, int i) const {
    int k = i;
    RatMat m = RatMat::identity(N);
    // X_{i+n} = Z^-1 X_i Z, so stepping an index down past 1 conjugates by Z
    // the other way.
    int shifts = 0;
    while (k > n) { k -= n; ++shifts; }
    while (k < 1) { k += n; --shifts; }
    m = v[static_cast<size_t>(k - 1)];
    RatMat zinv = inverse(Z);
    for (int s = 0; s < shifts; ++s) m = zinv * m * Z;
    for (int s = 0; s < -shifts; ++s) m = Z * m * zinv;
    return m;
}

GrassWeights random_grass_weights(Rng& rng, int n, int N, Convention conv, long box) {
    GrassWeights w;
    w.n = n;
    w.N = N;
    w.conv = conv;
    for (int i = 0; i < n; ++i) {
        w.X.push_back(random_invertible(rng, N, box));
        w.Y.push_back(random_invertible(rng, N, box));
    }
    w.Z = random_invertible(rng, N, box);
    return w;
}

GrassWeights convert(const GrassWeights& w, Convention to) {
    auto lax_like = [](Convention c) { return c != Convention::Prop4; };
    GrassWeights r = w;
    r.conv = to;
    if (lax_like(w.conv) == lax_like(to)) return r;
    // Prop4 -> Lax: Y^lax_i = Y^prop4_{i+1}; back: Y^prop4_i = Y^lax_{i-1}
    for (int i = 1; i <= w.n; ++i) {
        int j = lax_like(to) ? i + 1 : i - 1;
        r.Y[static_cast<size_t>(i - 1)] = w.Yat(j);
    }
    return r;
}

GrassWeights shift_labels(const GrassWeights& w, int s) {
    GrassWeights r = w;
    for (int i = 1; i <= w.n; ++i) {
        r.X[static_cast<size_t>(i - 1)] = w.Xat(i + s);
        r.Y[static_cast<size_t>(i - 1)] = w.Yat(i + s);
    }
    return r;
}

GrassWeights grass_map_algebraic(const GrassWeights& w) {
    GrassWeights r = w;
    bool prop4 = w.conv == Convention::Prop4;
    for (int i = 1; i <= w.n; ++i) {
        RatMat s1 = prop4 ? w.Xat(i) + w.Yat(i + 1) : w.Xat(i) + w.Yat(i);
        RatMat s2 = prop4 ? w.Xat(i + 2) + w.Yat(i + 3) : w.Xat(i + 2) + w.Yat(i + 2);
        RatMat s1inv = inverse(s1); // SingularMatrix on degeneracy
        r.X[static_cast<size_t>(i - 1)] = s1inv * w.Xat(i) * s2;
        if (prop4) {
            r.Y[static_cast<size_t>(i - 1)] = s1inv * w.Yat(i + 1) * s2;
        } else {
            RatMat t1 = w.Xat(i + 1) + w.Yat(i + 1);
            RatMat t2 = w.Xat(i + 3) + w.Yat(i + 3);
            r.Y[static_cast<size_t>(i - 1)] = inverse(t1) * w.Yat(i + 1) * t2;
        }
    }
    return r;
}

void GrassLift::extend(int m) {
    if (static_cast<int>(V.size()) >= m) return;
    if (!monodromy) throw ConfigError("GrassLift::extend: no monodromy to extend with");
    while (static_cast<int>(V.size()) < m) {
        int i = static_cast<int>(V.size()) + 1 - n; // V_{i+n} = M V_i
        V.push_back(*monodromy * at(i));
    }
}

void weights_at(const GrassLift& l, int i, RatMat& A, RatMat& B, RatMat& C) {
    RatMat vb = l.vblock(i);
    RatMat s = inverse(vb) * l.at(i + 3);
    int N = l.N;
    A = s.rows_slice(0, N);
    B = s.rows_slice(N, 2 * N);
    C = s.rows_slice(2 * N, 3 * N);
}

ABCWeights weights_from_lift(const GrassLift& l) {
    GrassLift copy = l;
    copy.extend(l.n + 3);
    ABCWeights out;
    out.n = l.n;
    out.N = l.N;
    for (int i = 1; i <= l.n; ++i) {
        RatMat A(0, 0), B(0, 0), C(0, 0);
        weights_at(copy, i, A, B, C);
        out.A.push_back(A);
        out.B.push_back(B);
        out.C.push_back(C);
    }
    return out;
}

std::pair<GrassLift, GrassWeights> normalize_lift(const GrassLift& l0, int window) {
    int n = l0.n, N = l0.N;
    if (window <= 0) window = n + 6;
    GrassLift l = l0;
    l.extend(window + 3);

    // coefficients on the whole window
    std::vector<RatMat> A(window), B(window), C(window);
    for (int i = 1; i <= window; ++i) weights_at(l, i, A[i - 1], B[i - 1], C[i - 1]);

    // gauge recurrence G_{j+1} = C_{j-2}^-1 G_j, G_1 = Id.  C at index
    // j <= 0 uses periodicity of the twisted coefficients.
    auto Cat = [&](int j) {
        while (j < 1) j += n;
        return C[static_cast<size_t>(j - 1)];
    };
    std::vector<RatMat> G(window + 3);
    G[0] = RatMat::identity(N);
    for (int j = 1; j < window + 3; ++j) G[j] = inverse(Cat(j - 2)) * G[j - 1];

    GrassLift nl;
    nl.n = n;
    nl.N = N;
    for (int i = 1; i <= window; ++i) nl.V.push_back(l.at(i) * G[i - 1]);

    GrassWeights w;
    w.n = n;
    w.N = N;
    w.conv = Convention::Prop4;
    for (int i = 1; i <= n; ++i) {
        w.Y.push_back(inverse(G[i - 1]) * A[i - 1] * G[i + 2]);
        w.X.push_back(inverse(G[i]) * B[i - 1] * G[i + 2]);
    }
    // conjugator: the normalized weights repeat by X_{i+n} = Z^-1 X_i Z
    // with Z the inverse of the cyclic product C_{n-1} C_n C_1 ... C_{n-2}
    RatMat P = Cat(n - 1) * Cat(n);
    for (int j = 1; j <= n - 2; ++j) P = P * Cat(j);
    w.Z = inverse(P);
    return {std::move(nl), std::move(w)};
}

GrassLift lift_from_weights(const GrassWeights& w0) {
    GrassWeights w = convert(w0, Convention::Prop4);
    int n = w.n, N = w.N;
    int window = 2 * n + 6;
    std::vector<RatMat> V;
    for (int c = 0; c < 3; ++c) { // VBlock_1 = Id
        RatMat v(3 * N, N);
        for (int r = 0; r < N; ++r) v.at(c * N + r, r) = rat(1);
        V.push_back(v);
    }
    for (int i = 1; static_cast<int>(V.size()) < window; ++i)
        V.push_back(V[i - 1] * w.Yat(i) + V[i] * w.Xat(i) + V[i + 1]);

    // re-twist: multiply the m-th period by Z^-m on the right
    RatMat zinv = inverse(w.Z);
    std::vector<RatMat> H{RatMat::identity(N)};
    GrassLift out;
    out.n = n;
    out.N = N;
    for (int i = 1; i <= window; ++i) {
        int m = (i - 1) / n;
        while (static_cast<int>(H.size()) <= m) H.push_back(H.back() * zinv);
        out.V.push_back(V[static_cast<size_t>(i - 1)] * H[static_cast<size_t>(m)]);
    }
    out.monodromy = out.vblock(n + 1); // VBlock_1 = Id
    out.V.resize(static_cast<size_t>(n + 3));
    return out;
}

GrassLift grass_map_geometric(const GrassLift& l) {
    int n = l.n, N = l.N;
    int window = 2 * n + 6;
    auto [nl, w] = normalize_lift(l, window + 3);

    std::vector<RatMat> W;
    for (int i = 1; i <= window; ++i) {
        // intersection of the spans of (V_i | V_{i+2}) and (V_{i+1} | V_{i+3})
        RatSubspace d1 = column_span(block_row<Rat>({nl.at(i), nl.at(i + 2)}));
        RatSubspace d2 = column_span(block_row<Rat>({nl.at(i + 1), nl.at(i + 3)}));
        RatSubspace meet = subspace_intersect(d1, d2);
        if (meet.dim() != N)
            throw DegenerateIntersection("grass_map_geometric: intersection dimension " +
                                         std::to_string(meet.dim()));
        RatMat A(0, 0), B(0, 0), C(0, 0); // normalized window: C_i = Id, Y_i = A_i
        weights_at(nl, i, A, B, C);
        W.push_back(nl.at(i) * A + nl.at(i + 2));
    }

    RatMat zinv = inverse(w.Z);
    GrassLift out;
    out.n = n;
    out.N = N;
    std::vector<RatMat> K{RatMat::identity(N)};
    std::vector<RatMat> WT;
    for (int i = 1; i <= window; ++i) {
        int m = (i - 1) / n;
        while (static_cast<int>(K.size()) <= m) K.push_back(K.back() * zinv);
        WT.push_back(W[static_cast<size_t>(i - 1)] * K[static_cast<size_t>(m)]);
    }
    out.V = WT;
    RatMat wb1 = block_row<Rat>({WT[0], WT[1], WT[2]});
    RatMat wbn = block_row<Rat>({WT[n], WT[n + 1], WT[n + 2]});
    out.monodromy = wbn * inverse(wb1);
    out.V.resize(static_cast<size_t>(n + 3));
    return out;
}

WordEvaluator evaluator(const GrassWeights& w) {
    std::map<int, RatMat> assign;
    for (int i = 1; i <= w.n; ++i) {
        assign[i] = w.X[static_cast<size_t>(i - 1)];
        assign[w.n + i] = w.Y[static_cast<size_t>(i - 1)];
    }
    assign[2 * w.n + 1] = w.Z;
    return WordEvaluator(w.N, std::move(assign));
}

std::vector<Word> standard_trace_words(int n) {
    std::vector<Word> words;
    int z = 2 * n + 1;
    for (int g = 1; g <= 2 * n + 1; ++g) {
        words.push_back(Word::gen(g));
        words.push_back(Word::gen(g) * Word::gen(g));
    }
    for (int i = 1; i <= n; ++i) {
        int ip = i % n + 1;
        words.push_back(Word::gen(i) * Word::gen(ip));         // X_i X_{i+1}
        words.push_back(Word::gen(n + i) * Word::gen(n + ip)); // Y_i Y_{i+1}
        words.push_back(Word::gen(i) * Word::gen(n + i));      // X_i Y_i
        words.push_back(Word::gen(i) * Word::gen(n + ip));     // X_i Y_{i+1}
        words.push_back(Word::gen(i) * Word::gen(z));          // X_i Z
        words.push_back(Word::gen(n + i) * Word::gen(z));      // Y_i Z
        words.push_back(Word::gen(i) * Word::gen(n + i) * Word::gen(z));
    }
    return words;
}

std::vector<Rat> trace_coordinates(const GrassWeights& w, const std::vector<Word>& words) {
    WordEvaluator ev = evaluator(w);
    std::vector<Rat> out;
    for (const Word& word : words) out.push_back(ev.eval(word).trace());
    return out;
}

RatMat trace_word_gradient(const WordEvaluator& ev, const Word& w, int gen, int dim) {
    // d tr(... U g V ...) / d g_{rs} = (V U)_{sr}; inverse occurrences use
    // d(g^-1) = -g^-1 dg g^-1.
    RatMat grad = RatMat::zero(dim, dim);
    const auto& fs = w.factors();
    int m = static_cast<int>(fs.size());
    for (int k = 0; k < m; ++k) {
        if (fs[k] != gen && fs[k] != -gen) continue;
        RatMat after = RatMat::identity(dim);
        for (int t = k + 1; t < m; ++t) after = after * ev.eval(Word(std::vector<int>{fs[t]}));
        RatMat before = RatMat::identity(dim);
        for (int t = 0; t < k; ++t) before = before * ev.eval(Word(std::vector<int>{fs[t]}));
        RatMat cycle = after * before; // tr(U g V) -> V U
        if (fs[k] > 0) {
            grad = grad + cycle.transpose();
        } else {
            RatMat ginv = ev.eval(Word(std::vector<int>{fs[k]}));
            grad = grad - (ginv * cycle * ginv).transpose();
        }
    }
    return grad;
}

GrassDual grass_map_algebraic_dual(const GrassWeights& w, int gen, int row, int col) {
    int n = w.n, N = w.N;
    bool prop4 = w.conv == Convention::Prop4;
    auto lift = [&](const RatMat& m, bool hit) {
        DualMat d = DualMat::constant(m);
        if (hit) d.d.at(row, col) = rat(1);
        return d;
    };
    std::vector<DualMat> X, Y;
    for (int i = 1; i <= n; ++i) {
        X.push_back(lift(w.X[static_cast<size_t>(i - 1)], gen == i));
        Y.push_back(lift(w.Y[static_cast<size_t>(i - 1)], gen == n + i));
    }
    DualMat Z = lift(w.Z, gen == 2 * n + 1);
    DualMat Zi = Z.inv();
    auto Xat = [&](int i) {
        if (i > n) return Zi * X[static_cast<size_t>(i - n - 1)] * Z;
        return X[static_cast<size_t>(i - 1)];
    };
    auto Yat = [&](int i) {
        if (i > n) return Zi * Y[static_cast<size_t>(i - n - 1)] * Z;
        return Y[static_cast<size_t>(i - 1)];
    };
    GrassDual out;
    out.Z = Z;
    for (int i = 1; i <= n; ++i) {
        DualMat s1 = prop4 ? Xat(i) + Yat(i + 1) : Xat(i) + Yat(i);
        DualMat s2 = prop4 ? Xat(i + 2) + Yat(i + 3) : Xat(i + 2) + Yat(i + 2);
        DualMat s1i = s1.inv();
        out.X.push_back(s1i * Xat(i) * s2);
        if (prop4) {
            out.Y.push_back(s1i * Yat(i + 1) * s2);
        } else {
            DualMat t1 = Xat(i + 1) + Yat(i + 1);
            DualMat t2 = Xat(i + 3) + Yat(i + 3);
            out.Y.push_back(t1.inv() * Yat(i + 1) * t2);
        }
    }
    return out;
}

} // namespace penta

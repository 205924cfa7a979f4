#include "penta/spectral.hpp"

namespace penta {

namespace {
Mat<Rat> zblock(int N) { return RatMat::zero(N, N); }

MatLaurent<Rat> from_blocks(int N, int exp_grid[3][3], std::vector<std::vector<RatMat>> blocks) {
    MatLaurent<Rat> out(3 * N);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (blocks[i][j].is_zero()) continue;
            std::vector<std::vector<RatMat>> grid(3, std::vector<RatMat>(3, zblock(N)));
            grid[i][j] = blocks[i][j];
            out.add(exp_grid[i][j], block_grid(grid, N));
        }
    return out;
}
} // namespace

MatLaurent<Rat> elementary_B(const RatMat& X, const RatMat& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols() || !X.square())
        throw DimensionMismatch("elementary_B: block size mismatch");
    int N = X.rows();
    RatMat I = RatMat::identity(N), Z = zblock(N);
    int exps[3][3] = {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}};
    return from_blocks(N, exps, {{Z, X, X + Y}, {I, Z, Z}, {Z, I, I}});
}

MatLaurent<Rat> lax_L(const RatMat& A, const RatMat& B, const RatMat& C) {
    int N = A.rows();
    RatMat I = RatMat::identity(N), Z = zblock(N);
    int exps[3][3] = {{0, 0, 0}, {0, 0, -1}, {0, 0, 1}};
    return from_blocks(N, exps, {{Z, Z, A}, {I, Z, B}, {Z, I, C}});
}

MatLaurent<Rat> lax_Ltilde(const RatMat& A, const RatMat& B, const RatMat& C) {
    int N = A.rows();
    RatMat I = RatMat::identity(N), Z = zblock(N);
    int exps[3][3] = {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}};
    return from_blocks(N, exps, {{Z, Z, A}, {I, Z, B}, {Z, I, C}});
}

MatLaurent<Rat> lax_A(const RatMat& X) {
    int N = X.rows();
    RatMat I = RatMat::identity(N), Z = zblock(N);
    int exps[3][3] = {{-1, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    return from_blocks(N, exps, {{I, Z, X}, {Z, I, Z}, {Z, Z, I}});
}

MatLaurent<Rat> lax_A_inv(const RatMat& X) {
    int N = X.rows();
    RatMat I = RatMat::identity(N), Z = zblock(N);
    int exps[3][3] = {{1, 0, 1}, {0, 0, 0}, {0, 0, 0}};
    return from_blocks(N, exps, {{I, Z, -X}, {Z, I, Z}, {Z, Z, I}});
}

MatLaurent<Rat> assemble_B(const GrassWeights& w0) {
    GrassWeights w = convert(w0, Convention::Lax);
    MatLaurent<Rat> B = MatLaurent<Rat>::identity(3 * w.N);
    for (int i = 1; i <= w.n; ++i)
        B = B * elementary_B(w.X[static_cast<size_t>(i - 1)], w.Y[static_cast<size_t>(i - 1)]);
    return B;
}

std::map<std::pair<int, int>, Rat> numeric_invariants(const GrassWeights& w, int imax) {
    std::map<std::pair<int, int>, Rat> out;
    MatLaurent<Rat> B = assemble_B(w);
    MatLaurent<Rat> P = MatLaurent<Rat>::identity(B.dim());
    for (int i = 1; i <= imax; ++i) {
        P = P * B;
        for (auto& [k, coeff] : P.coeffs()) out[{i, k}] = coeff.trace();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classical invariants
// ---------------------------------------------------------------------------

CLaurent cl_char_poly(const Mat<CLaurent>& B) {
    if (!B.square()) throw DimensionMismatch("cl_char_poly: non-square");
    int n = B.rows();
    Mat<CLaurent> M(n, n);
    CLaurent t = CLaurent::variable(vars::t);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            M.at(i, j) = t * B.at(i, j);
            if (i == j) M.at(i, j) += CLaurent(1);
        }
    return det_laplace(M);
}

Mat<CLaurent> symbolic_B(int n) {
    CLaurent l = CLaurent::variable(vars::lambda);
    Mat<CLaurent> B(3, 3);
    B.at(0, 0) = CLaurent(1);
    B.at(1, 1) = CLaurent(1);
    B.at(2, 2) = CLaurent(1);
    for (int i = 1; i <= n; ++i) {
        Mat<CLaurent> E(3, 3);
        CLaurent x = CLaurent::variable(vars::x(i)), y = CLaurent::variable(vars::y(i));
        E.at(0, 1) = x;
        E.at(0, 2) = x + y;
        E.at(1, 0) = l;
        E.at(2, 1) = CLaurent(1);
        E.at(2, 2) = CLaurent(1);
        B = B * E;
    }
    return B;
}

std::map<std::pair<int, int>, Rat> classical_invariants(const ClassicalCoords& c) {
    // network-convention weights: the bottom edge of face i carries y_{i+1}
    GrassWeights w;
    w.n = c.n;
    w.N = 1;
    w.conv = Convention::Lax;
    w.Z = RatMat::identity(1);
    for (int i = 1; i <= c.n; ++i) {
        RatMat x(1, 1), y(1, 1);
        x.at(0, 0) = c.xat(i);
        y.at(0, 0) = c.yat(i + 1);
        w.X.push_back(x);
        w.Y.push_back(y);
    }
    MatLaurent<Rat> B = assemble_B(w);
    Mat<CLaurent> M(3, 3);
    for (auto& [k, coeff] : B.coeffs())
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                M.at(i, j) += CLaurent::monomial(Mono{{vars::lambda, k}}, coeff.at(i, j));
    CLaurent chi = cl_char_poly(M);
    std::map<std::pair<int, int>, Rat> out;
    for (auto& [mono, coeff] : chi.terms()) {
        int li = 0, tj = 0;
        for (auto& [v, e] : mono) {
            if (v == vars::lambda) li = e;
            else if (v == vars::t) tj = e;
        }
        out[{li, tj}] = coeff;
    }
    return out;
}

BracketTable xy_bracket_table(int n) {
    BracketTable tb;
    auto X = [n](int i) { return vars::x(((i - 1) % n + n) % n + 1); };
    auto Y = [n](int i) { return vars::y(((i - 1) % n + n) % n + 1); };
    for (int i = 1; i <= n; ++i) {
        tb.set(X(i + 1), X(i), rat(1));
        tb.set(Y(i + 1), Y(i), rat(1));
        tb.set(Y(i + 2), Y(i), rat(1));
        tb.set(Y(i), X(i), rat(1));
        tb.set(Y(i + 1), X(i), rat(1));
        tb.set(X(i + 1), Y(i), rat(1));
        tb.set(X(i + 2), Y(i), rat(1));
    }
    return tb;
}

std::vector<std::pair<std::string, CLaurent>> involutivity_commutative(int n) {
    CLaurent chi = cl_char_poly(symbolic_B(n));
    // collect I_{ij} as polynomials in x, y
    std::map<std::pair<int, int>, CLaurent> I;
    for (auto& [mono, coeff] : chi.terms()) {
        int li = 0, tj = 0;
        Mono rest;
        for (auto& [v, e] : mono) {
            if (v == vars::lambda) li = e;
            else if (v == vars::t) tj = e;
            else rest.push_back({v, e});
        }
        I[{li, tj}] += CLaurent::monomial(rest, coeff);
    }
    BracketTable tb = xy_bracket_table(n);
    std::vector<std::pair<std::string, CLaurent>> bad;
    for (auto it = I.begin(); it != I.end(); ++it)
        for (auto jt = it; jt != I.end(); ++jt) {
            CLaurent br = cl_bracket(it->second, jt->second, tb);
            if (!br.is_zero())
                bad.push_back({"{I" + std::to_string(it->first.first) + "," + std::to_string(it->first.second) +
                                   "; I" + std::to_string(jt->first.first) + "," + std::to_string(jt->first.second) + "}",
                               br});
        }
    return bad;
}

// ---------------------------------------------------------------------------
// Symbolic walks
// ---------------------------------------------------------------------------

WalkTable symbolic_invariants(const PentagramNet& pn, int imax) {
    int n = pn.n();
    const Network& g = pn.torus();
    WalkTable out;
    out.n = n;
    out.imax = imax;

    struct State {
        int wire; // 0: entering BL(f), 1: passing the bottom of f, 2: entering TL(f)
        std::vector<int> steps;
    };
    for (int winding = 1; winding <= imax; ++winding) {
        for (int start = 0; start < 3; ++start) {
            std::vector<State> frontier{{start, {}}};
            for (int b = 0; b < winding * n; ++b) {
                int f = b % n;
                std::vector<State> next;
                for (State& s : frontier) {
                    auto push = [&](int wire, std::initializer_list<int> edges) {
                        State t{wire, s.steps};
                        for (int e : edges) t.steps.push_back(e + 1);
                        next.push_back(std::move(t));
                    };
                    if (s.wire == 0) {
                        push(1, {pn.aE(f), pn.dE(f), pn.eE(f)});
                        push(2, {pn.aE(f), pn.dE(f), pn.cE(f), pn.ebarE(f)});
                        push(2, {pn.bE(f), pn.ebarE(f)});
                    } else if (s.wire == 1) {
                        push(0, {});
                    } else {
                        push(1, {pn.dE(f), pn.eE(f)});
                        push(2, {pn.dE(f), pn.cE(f), pn.ebarE(f)});
                    }
                }
                frontier = std::move(next);
            }
            for (State& s : frontier) {
                if (s.wire != start) continue;
                BasedLoop loop;
                loop.steps = std::move(s.steps);
                validate_loop(g, loop);
                int k = walk_cut_degree(g, loop);
                out.entries[{winding, k}].push_back(std::move(loop));
            }
        }
    }
    return out;
}

int walk_cut_degree(const Network& g, const BasedLoop& loop) {
    int k = 0;
    for (int s : loop.steps) k += (step_forward(s) ? 1 : -1) * g.edges[step_edge(s)].cut;
    return k;
}

WordEvaluator walk_evaluator(const PentagramNet& pn, const GrassWeights& w0) {
    GrassWeights w = convert(w0, Convention::Lax);
    const Network& g = pn.torus();
    std::map<int, RatMat> assign;
    RatMat I = RatMat::identity(w.N);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        int s = g.edges[e].sym;
        if (s < 0) assign[e + 1] = I;
        else if (s < w.n) assign[e + 1] = w.X[static_cast<size_t>(s)];
        else assign[e + 1] = w.Y[static_cast<size_t>(s - w.n)];
    }
    return WordEvaluator(w.N, std::move(assign));
}

WordEvaluator based_evaluator(const PentagramNet& pn, const GrassWeights& w0) {
    GrassWeights w = convert(w0, Convention::Network);
    int n = w.n;
    const Network& g = pn.torus();
    std::map<int, RatMat> assign;
    RatMat I = RatMat::identity(w.N);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) assign[e + 1] = I;
    assign[pn.cE(n - 1) + 1] = w.Z;
    for (int i = 1; i <= n; ++i) {
        // x_i and y_i traverse the c edge of faces i-1 and i-2 (and i
        // itself for y) in reverse; only the last face's c edge is not 1
        bool x_hits = (i == 1 || i == 2);
        bool y_hits = (i == 1 || i == 2 || i == n);
        RatMat X = w.X[static_cast<size_t>(i - 1)], Y = w.Y[static_cast<size_t>(i - 1)];
        assign[pn.aE(i - 1) + 1] = x_hits ? X * w.Z : X;
        assign[pn.bE(i - 1) + 1] = y_hits ? Y * w.Z : Y;
    }
    return WordEvaluator(w.N, std::move(assign));
}

std::map<std::pair<int, int>, NCPoly> walk_bracket_table(const PentagramNet& pn,
                                                         const std::vector<BasedLoop>& wi,
                                                         const std::vector<BasedLoop>& wj,
                                                         const BracketCoeffs& c) {
    const Network& g = pn.torus();
    std::map<std::pair<int, int>, NCPoly> out;
    for (const BasedLoop& f : wi) {
        int kf = walk_cut_degree(g, f);
        for (const BasedLoop& gl : wj) {
            int lg = walk_cut_degree(g, gl);
            out[{kf, lg}] += loop_bracket(g, f, gl, c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

DriftReport invariance_report(const GrassWeights& w0, int steps, int imax, bool shifted_variant) {
    DriftReport rep;
    GrassWeights w = w0;
    rep.values.push_back(numeric_invariants(w, imax));
    for (int s = 1; s <= steps; ++s) {
        try {
            w = grass_map_algebraic(w);
            if (shifted_variant) w = shift_labels(w, 2);
        } catch (const SingularMatrix&) {
            rep.truncated_at = s;
            break;
        }
        rep.values.push_back(numeric_invariants(w, imax));
        if (rep.values.back() != rep.values.front()) rep.exact_constant = false;
    }
    return rep;
}

ClassicalDriftReport classical_invariance_report(const ClassicalCoords& c0, int steps) {
    ClassicalDriftReport rep;
    ClassicalCoords c = c0;
    rep.values.push_back(classical_invariants(c));
    for (int s = 1; s <= steps; ++s) {
        try {
            c = classical_map(c);
        } catch (const ZeroDenominator&) {
            rep.truncated_at = s;
            break;
        }
        rep.values.push_back(classical_invariants(c));
        if (rep.values.back() != rep.values.front()) rep.exact_constant = false;
    }
    return rep;
}

} // namespace penta

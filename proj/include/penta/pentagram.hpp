#pragma once

#include "penta/network.hpp"

#include <vector>

namespace penta {

/// Twisted-polygon coordinates (x_i, y_i), cyclic indices, exact entries.
struct ClassicalCoords {
    int n = 0;
    std::vector<Rat> x, y;

    const Rat& xat(int i) const { return x[wrap(i)]; } // 1-based cyclic
    const Rat& yat(int i) const { return y[wrap(i)]; }
    size_t wrap(int i) const { return static_cast<size_t>(((i - 1) % n + n) % n); }
    bool operator==(const ClassicalCoords& o) const { return n == o.n && x == o.x && y == o.y; }
};

inline ClassicalCoords random_classical(Rng& rng, int n) {
    ClassicalCoords c{n, {}, {}};
    for (int i = 0; i < n; ++i) {
        c.x.push_back(rng.rational());
        c.y.push_back(rng.rational());
    }
    return c;
}

/// The map in the x,y coordinates:
///   x_i -> x_i (x_{i+2}+y_{i+3}) / (x_i+y_{i+1})
///   y_i -> y_{i+1} (x_{i+2}+y_{i+3}) / (x_i+y_{i+1})
inline ClassicalCoords classical_map(const ClassicalCoords& c) {
    ClassicalCoords r{c.n, std::vector<Rat>(c.n), std::vector<Rat>(c.n)};
    for (int i = 1; i <= c.n; ++i) {
        Rat den = c.xat(i) + c.yat(i + 1);
        if (is_zero(den)) throw ZeroDenominator("classical_map: x_i + y_{i+1} = 0");
        Rat ratio = (c.xat(i + 2) + c.yat(i + 3)) / den;
        r.x[c.wrap(i)] = c.xat(i) * ratio;
        r.y[c.wrap(i)] = c.yat(i + 1) * ratio;
    }
    return r;
}

/// The same map written on the network's edge weights (the y-indices sit
/// one step lower):
///   x_i -> x_i (x_{i+2}+y_{i+2}) / (x_i+y_i),
///   y_i -> y_{i+1} (x_{i+3}+y_{i+3}) / (x_{i+1}+y_{i+1}).
inline ClassicalCoords network_xy_map(const ClassicalCoords& c) {
    ClassicalCoords r{c.n, std::vector<Rat>(c.n), std::vector<Rat>(c.n)};
    for (int i = 1; i <= c.n; ++i) {
        Rat d1 = c.xat(i) + c.yat(i);
        Rat d2 = c.xat(i + 1) + c.yat(i + 1);
        if (is_zero(d1) || is_zero(d2)) throw ZeroDenominator("network_xy_map: x_i + y_i = 0");
        r.x[c.wrap(i)] = c.xat(i) * (c.xat(i + 2) + c.yat(i + 2)) / d1;
        r.y[c.wrap(i)] = c.yat(i + 1) * (c.xat(i + 3) + c.yat(i + 3)) / d2;
    }
    return r;
}

/// Adapter between the two conventions: network y_i = classical y_{i+1}.
inline ClassicalCoords to_network_convention(const ClassicalCoords& c) {
    ClassicalCoords r{c.n, c.x, std::vector<Rat>(c.n)};
    for (int i = 1; i <= c.n; ++i) r.y[c.wrap(i)] = c.yat(i + 1);
    return r;
}
inline ClassicalCoords from_network_convention(const ClassicalCoords& c) {
    ClassicalCoords r{c.n, c.x, std::vector<Rat>(c.n)};
    for (int i = 1; i <= c.n; ++i) r.y[c.wrap(i)] = c.yat(i - 1);
    return r;
}

// ---------------------------------------------------------------------------
// Face weights and cluster dynamics
// ---------------------------------------------------------------------------

struct PQCoords {
    int n = 0;
    std::vector<Rat> p, q;
    const Rat& pat(int i) const { return p[wrap(i)]; }
    const Rat& qat(int i) const { return q[wrap(i)]; }
    size_t wrap(int i) const { return static_cast<size_t>(((i - 1) % n + n) % n); }
    bool operator==(const PQCoords& o) const { return n == o.n && p == o.p && q == o.q; }
};

/// p_i = y_i/x_i, q_i = x_{i+1}/y_i.
inline PQCoords pq_from_xy(const ClassicalCoords& c) {
    PQCoords r{c.n, std::vector<Rat>(c.n), std::vector<Rat>(c.n)};
    for (int i = 1; i <= c.n; ++i) {
        if (is_zero(c.xat(i)) || is_zero(c.yat(i))) throw ZeroDenominator("pq_from_xy: zero coordinate");
        r.p[c.wrap(i)] = c.yat(i) / c.xat(i);
        r.q[c.wrap(i)] = c.xat(i + 1) / c.yat(i);
    }
    return r;
}

/// Closed form of the map on face weights:
///   q_i -> 1/p_{i+1},
///   p_i -> q_{i+2} (1+p_i)(1+p_{i+3}) / ((1+1/p_{i+1})(1+1/p_{i+2})).
inline PQCoords pq_map(const PQCoords& c) {
    PQCoords r{c.n, std::vector<Rat>(c.n), std::vector<Rat>(c.n)};
    for (int i = 1; i <= c.n; ++i) {
        if (is_zero(c.pat(i + 1)) || is_zero(c.pat(i + 2))) throw ZeroDenominator("pq_map: p = 0");
        r.q[c.wrap(i)] = rat(1) / c.pat(i + 1);
        Rat d1 = rat(1) + rat(1) / c.pat(i + 1);
        Rat d2 = rat(1) + rat(1) / c.pat(i + 2);
        if (is_zero(d1) || is_zero(d2)) throw ZeroDenominator("pq_map: 1 + 1/p = 0");
        r.p[c.wrap(i)] = c.qat(i + 2) * (rat(1) + c.pat(i)) * (rat(1) + c.pat(i + 3)) / (d1 * d2);
    }
    return r;
}

/// Cluster seed in tau-coordinates: variables with an antisymmetric integer
/// exchange matrix.  Mutation transforms both, and is an involution.
class ClusterSeed {
public:
    ClusterSeed(std::vector<Rat> tau, std::vector<std::vector<int>> b) : tau_(std::move(tau)), b_(std::move(b)) {}

    const std::vector<Rat>& tau() const { return tau_; }
    const std::vector<std::vector<int>>& exchange() const { return b_; }

    void mutate(int k) {
        int m = static_cast<int>(tau_.size());
        Rat tk = tau_[k];
        if (is_zero(tk) || is_zero(rat(1) + tk)) throw ZeroDenominator("ClusterSeed::mutate: tau_k in {0,-1}");
        std::vector<Rat> nt = tau_;
        nt[k] = rat(1) / tk;
        for (int i = 0; i < m; ++i) {
            if (i == k || b_[i][k] == 0) continue;
            int e = b_[i][k];
            Rat f = e > 0 ? Rat(rat(1) + tk) : Rat(rat(1) + rat(1) / tk);
            if (is_zero(f)) throw ZeroDenominator("ClusterSeed::mutate: vanishing exchange factor");
            for (int a = 0; a < std::abs(e); ++a) nt[i] = e > 0 ? Rat(nt[i] * f) : Rat(nt[i] / f);
        }
        std::vector<std::vector<int>> nb = b_;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == k || j == k) nb[i][j] = -b_[i][j];
                else nb[i][j] = b_[i][j] + (std::abs(b_[i][k]) * b_[k][j] + b_[i][k] * std::abs(b_[k][j])) / 2;
            }
        tau_ = std::move(nt);
        b_ = std::move(nb);
    }

private:
    std::vector<Rat> tau_;
    std::vector<std::vector<int>> b_;
};

/// Seed for the face-weight quiver: variables (p_1..p_n, q_1..q_n), arrows
/// p_i -> q_{i-1}, p_i -> q_{i+2}, q_i -> p_i, q_{i+1} -> p_i; the exchange
/// matrix is its signed adjacency matrix.
inline ClusterSeed pq_cluster_seed(const PQCoords& c) {
    int n = c.n;
    std::vector<Rat> tau(2 * n);
    for (int i = 0; i < n; ++i) {
        tau[i] = c.p[i];
        tau[n + i] = c.q[i];
    }
    std::vector<std::vector<int>> b(2 * n, std::vector<int>(2 * n, 0));
    auto qi = [n](int i) { return n + ((i % n) + n) % n; }; // q_{i+1} at index qi(i)
    auto pi = [n](int i) { return ((i % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
        // b_{target,source} = +1 per arrow source -> target
        b[qi(i - 1)][pi(i)] += 1; // p_{i+1} -> q_i
        b[pi(i)][qi(i - 1)] -= 1;
        b[qi(i + 2)][pi(i)] += 1; // p_{i+1} -> q_{i+3}
        b[pi(i)][qi(i + 2)] -= 1;
        b[pi(i)][qi(i)] += 1; // q_{i+1} -> p_{i+1}
        b[qi(i)][pi(i)] -= 1;
        b[pi(i)][qi(i + 1)] += 1; // q_{i+2} -> p_{i+1}
        b[qi(i + 1)][pi(i)] -= 1;
    }
    return ClusterSeed(std::move(tau), std::move(b));
}

// ---------------------------------------------------------------------------
// The move sequence realizing the map on the network
// ---------------------------------------------------------------------------

int chain_corridor_out(const Network& g, const SquareFace& f);
int chain_long_corridor(const Network& g, const SquareFace& f);
std::vector<SquareFace> face_chain(const Network& g, const std::vector<SquareFace>& faces);
BasedLoop chain_x_loop(const Network& g, const std::vector<SquareFace>& chain, int j);
BasedLoop chain_y_loop(const Network& g, const std::vector<SquareFace>& chain, int j);

template <class T>
T loop_weight(const WNet<T>& net, const BasedLoop& loop) {
    bool first = true;
    T m{};
    for (int s : loop.steps) {
        T f = step_forward(s) ? net.w[step_edge(s)] : weight_inverse(net.w[step_edge(s)]);
        m = first ? f : m * f;
        first = false;
    }
    return m;
}

template <class T>
struct MoveSequenceResult {
    std::vector<T> x, y;   // updated weights, aligned with the input face labels
    int face_shift = 2;    // graph isomorphism shifts face labels by this amount
    WNet<T> net;           // the rewritten network
};

/// Square move at every face, white swap at every white-white corridor,
/// black swap at every black-black corridor, then read the new x,y weights
/// off the resulting isomorphic network as gauge-invariant face monomials.
/// The updated weights satisfy the closed form
///   x_i -> x_i (x_{i+2}+y_{i+2}) / (x_i+y_i),
///   y_i -> y_{i+1} (x_{i+3}+y_{i+3}) / (x_{i+1}+y_{i+1})
/// (noncommutative ordering (x_i+y_i)^-1 x_i (x_{i+2}+y_{i+2}) in matrix
/// mode, up to basepoint conjugation per index).
template <class T>
MoveSequenceResult<T> pentagram_move_sequence(const PentagramNet& pn, const std::vector<T>& x,
                                              const std::vector<T>& y, const T& one) {
    int n = pn.n();
    WNet<T> net = pn.torus_weights(x, y, one);
    for (int f = 0; f < n; ++f) {
        SquareFace face{pn.BL(f), pn.TL(f), pn.TR(f), pn.BR(f), pn.aE(f), pn.bE(f), pn.cE(f), pn.dE(f)};
        net = square_move(std::move(net), face);
    }
    for (int f = 0; f < n; ++f) net = white_swap(std::move(net), pn.ebarE(f), pn.aE((f + 1) % n));
    for (int f = 0; f < n; ++f) net = black_swap(std::move(net), pn.eE(f), pn.cE(f));

    std::vector<SquareFace> faces = find_square_faces(net.g);
    if (static_cast<int>(faces.size()) != n)
        throw PatternMismatch("pentagram_move_sequence: rewritten network is not pentagram-shaped");
    std::vector<SquareFace> chain = face_chain(net.g, faces);

    // the new face whose top edge is the old bottom edge of face f gets label f
    std::vector<T> ex(n, one), ey(n, one);
    for (int j = 0; j < n; ++j) {
        int sym = net.g.edges[chain[j].d].sym;
        if (sym < n) throw PatternMismatch("pentagram_move_sequence: unexpected top-edge label");
        int label = sym - n;
        ex[label] = loop_weight(net, chain_x_loop(net.g, chain, j));
        ey[label] = loop_weight(net, chain_y_loop(net.g, chain, j));
    }
    MoveSequenceResult<T> out{std::vector<T>(n, one), std::vector<T>(n, one), 2, std::move(net)};
    for (int i = 0; i < n; ++i) {
        out.x[i] = ex[(i + 2) % n];
        out.y[i] = ey[(i + 2) % n];
    }
    return out;
}

} // namespace penta

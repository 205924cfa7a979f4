#pragma once

#include "penta/matlaurent.hpp"
#include "penta/word.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace penta {

enum class VColor { White, Black, Boundary };
enum class Surface { Disk, Annulus, Torus };

/// Cut convention for the spectral parameter grading.
///   Rim      - the identified top/bottom edge of the drawn rectangle.
///   Diagonal - down-and-right through the white-white corridor edges;
///              this is the convention the transfer-matrix factorization uses.
enum class CutConvention { Rim, Diagonal };

/// One end of an edge.  Vertices store these in counterclockwise order;
/// that cyclic order is the fat-graph structure and is what touch/cross
/// classification reads.
struct Half {
    int edge;
    bool at_dst;
    bool operator==(const Half& o) const { return edge == o.edge && at_dst == o.at_dst; }
};

struct NetVertex {
    VColor color = VColor::White;
    std::vector<Half> ccw;
};

struct NetEdge {
    int src = -1, dst = -1;
    int cut = 0;        // signed cut-crossing exponent of the spectral parameter
    int sym = -1;       // symbolic weight slot (see PentagramNet), -1 = unit weight
    std::string label;  // printable name
};

class Network {
public:
    Surface surface = Surface::Torus;
    std::vector<NetVertex> verts;
    std::vector<NetEdge> edges;
    std::vector<int> sources, sinks; // boundary vertices, in wire-label order

    int add_vertex(VColor c) {
        verts.push_back({c, {}});
        return static_cast<int>(verts.size()) - 1;
    }
    /// Adds an edge; endpoints' ccw lists must be arranged afterwards (the
    /// builders do this explicitly).
    int add_edge(int src, int dst, std::string label = "", int sym = -1, int cut = 0) {
        edges.push_back({src, dst, cut, sym, std::move(label)});
        return static_cast<int>(edges.size()) - 1;
    }

    std::vector<int> out_edges(int v) const {
        std::vector<int> r;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            if (edges[e].src == v) r.push_back(e);
        return r;
    }
    std::vector<int> in_edges(int v) const {
        std::vector<int> r;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            if (edges[e].dst == v) r.push_back(e);
        return r;
    }

    /// Index of a half-edge in its vertex's ccw list.
    int ccw_index(int v, Half h) const {
        const auto& list = verts[v].ccw;
        for (size_t k = 0; k < list.size(); ++k)
            if (list[k] == h) return static_cast<int>(k);
        throw PatternMismatch("Network::ccw_index: half-edge not at vertex");
    }

    int endpoint(Half h) const { return h.at_dst ? edges[h.edge].dst : edges[h.edge].src; }
};

/// Signed steps of a closed walk: +(e+1) traverses edge e forward,
/// -(e+1) backward.  Consecutive steps compose and the walk is closed.
struct BasedLoop {
    std::vector<int> steps;

    size_t size() const { return steps.size(); }
    int step(long i) const { // cyclic access
        long n = static_cast<long>(steps.size());
        return steps[((i % n) + n) % n];
    }
    BasedLoop rotated(long start) const {
        BasedLoop r;
        long n = static_cast<long>(steps.size());
        for (long k = 0; k < n; ++k) r.steps.push_back(step(start + k));
        return r;
    }
    BasedLoop reversed() const {
        BasedLoop r(*this);
        std::reverse(r.steps.begin(), r.steps.end());
        for (int& s : r.steps) s = -s;
        return r;
    }
    /// Word over the edge alphabet (generator id = edge id + 1).
    Word word() const { return Word(steps); }
};

inline int step_edge(int step) { return (step > 0 ? step : -step) - 1; }
inline bool step_forward(int step) { return step > 0; }

inline int step_src(const Network& net, int step) {
    const NetEdge& e = net.edges[step_edge(step)];
    return step_forward(step) ? e.src : e.dst;
}
inline int step_dst(const Network& net, int step) {
    const NetEdge& e = net.edges[step_edge(step)];
    return step_forward(step) ? e.dst : e.src;
}
/// Half-edge occupied at the step's source vertex.
inline Half step_src_half(int step) { return {step_edge(step), !step_forward(step)}; }
/// Half-edge occupied at the step's target vertex.
inline Half step_dst_half(int step) { return {step_edge(step), step_forward(step)}; }

void validate_loop(const Network& net, const BasedLoop& loop);

/// A network together with one weight value per edge.  Moves below are the
/// local rewrites; they return rewritten copies (values are persistent).
template <class T>
struct WNet {
    Network g;
    std::vector<T> w;
};

inline Rat weight_inverse(const Rat& x) {
    if (is_zero(x)) throw SingularMatrix("weight_inverse: zero weight");
    return rat(1) / x;
}
inline RatMat weight_inverse(const RatMat& m) { return inverse(m); }

// ---------------------------------------------------------------------------
// Boundary measurements
// ---------------------------------------------------------------------------

/// Source-to-sink path sums with modified edge weights w * lambda^cut,
/// computed by dynamic programming over a topological order.  Weights
/// multiply in path order (left factor first), which matters in matrix mode.
template <class T>
struct PathWeightMatrix {
    int n_sources = 0, n_sinks = 0;
    std::vector<Laurent<T>> entries; // row-major sources x sinks
    Laurent<T>& at(int i, int j) { return entries[static_cast<size_t>(i) * n_sinks + j]; }
    const Laurent<T>& at(int i, int j) const { return entries[static_cast<size_t>(i) * n_sinks + j]; }
    bool operator==(const PathWeightMatrix& o) const {
        return n_sources == o.n_sources && n_sinks == o.n_sinks && entries == o.entries;
    }
};

template <class T>
PathWeightMatrix<T> boundary_measurements(const WNet<T>& net) {
    const Network& g = net.g;
    int nv = static_cast<int>(g.verts.size());
    std::vector<int> indeg(nv, 0);
    for (const auto& e : g.edges) ++indeg[e.dst];
    std::vector<int> order;
    for (int v = 0; v < nv; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (size_t k = 0; k < order.size(); ++k)
        for (int e : g.out_edges(order[k]))
            if (--indeg[g.edges[e].dst] == 0) order.push_back(g.edges[e].dst);
    if (order.size() != static_cast<size_t>(nv))
        throw PatternMismatch("boundary_measurements: directed cycle detected");

    int ns = static_cast<int>(g.sources.size()), nk = static_cast<int>(g.sinks.size());
    if (net.w.empty()) throw DimensionMismatch("boundary_measurements: no weights");
    // value[v][s] = sum over paths source s -> v of modified weights
    std::vector<std::vector<Laurent<T>>> value(nv, std::vector<Laurent<T>>(ns));
    for (int s = 0; s < ns; ++s) value[g.sources[s]][s] = Laurent<T>(weight_one(net.w.front()));
    for (int v : order)
        for (int e : g.out_edges(v)) {
            Laurent<T> step = Laurent<T>::term(g.edges[e].cut, net.w[e]);
            int u = g.edges[e].dst;
            for (int s = 0; s < ns; ++s) {
                if (value[v][s].is_zero()) continue;
                Laurent<T> add = value[v][s] * step;
                value[u][s] = value[u][s] + add;
            }
        }

    PathWeightMatrix<T> out;
    out.n_sources = ns;
    out.n_sinks = nk;
    out.entries.assign(static_cast<size_t>(ns) * nk, Laurent<T>());
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < nk; ++t) out.at(s, t) = value[g.sinks[t]][s];
    return out;
}

// ---------------------------------------------------------------------------
// Local rewrites
// ---------------------------------------------------------------------------

/// A square face in the standard orientation: sw white, nw black, ne white,
/// se black; a: sw->nw, d: nw->ne, b: sw->se, c: ne->se.
struct SquareFace {
    int sw = -1, nw = -1, ne = -1, se = -1;
    int a = -1, b = -1, c = -1, d = -1;
};

std::vector<SquareFace> find_square_faces(const Network& g);
SquareFace face_at(const Network& g, int a_edge);

namespace detail {
void replace_half(Network& g, int v, Half from, Half to);
void move_half(Network& g, int from_v, int to_v, Half h, Half before_at_to);
} // namespace detail

/// Square move.  New weights (noncommutative form, commutative is a special
/// case):  b~ = b + adc,  a~ = dc b~^-1,  c~ = b~^-1 ad,  d~ = a~ b c^-1.
/// Colors flip, the two vertical edges reverse.  Boundary measurements are
/// unchanged; throws SingularMatrix if b+adc (or c) is not invertible.
template <class T>
WNet<T> square_move(WNet<T> net, const SquareFace& f) {
    Network& g = net.g;
    auto col = [&](int v) { return g.verts[v].color; };
    if (col(f.sw) != VColor::White || col(f.ne) != VColor::White || col(f.nw) != VColor::Black ||
        col(f.se) != VColor::Black)
        throw PatternMismatch("square_move: colors do not match pattern");
    if (g.edges[f.a].src != f.sw || g.edges[f.a].dst != f.nw || g.edges[f.d].src != f.nw ||
        g.edges[f.d].dst != f.ne || g.edges[f.b].src != f.sw || g.edges[f.b].dst != f.se ||
        g.edges[f.c].src != f.ne || g.edges[f.c].dst != f.se)
        throw PatternMismatch("square_move: edges do not match pattern");

    const T a = net.w[f.a], b = net.w[f.b], c = net.w[f.c], d = net.w[f.d];
    T delta = b + a * d * c;
    T delta_inv = weight_inverse(delta);
    T a_new = d * c * delta_inv;
    T c_new = delta_inv * a * d;
    T d_new = a_new * b * weight_inverse(c);

    net.w[f.b] = delta;
    net.w[f.a] = a_new;
    net.w[f.c] = c_new;
    net.w[f.d] = d_new;

    // reverse the vertical edges; their attachment slots stay put
    detail::replace_half(g, f.sw, {f.a, false}, {f.a, true});
    detail::replace_half(g, f.nw, {f.a, true}, {f.a, false});
    std::swap(g.edges[f.a].src, g.edges[f.a].dst);
    detail::replace_half(g, f.ne, {f.c, false}, {f.c, true});
    detail::replace_half(g, f.se, {f.c, true}, {f.c, false});
    std::swap(g.edges[f.c].src, g.edges[f.c].dst);

    g.verts[f.sw].color = VColor::Black;
    g.verts[f.nw].color = VColor::White;
    g.verts[f.ne].color = VColor::Black;
    g.verts[f.se].color = VColor::White;
    return net;
}

/// White swap across edge b (both endpoints white).  The non-b output of
/// w1 moves to w2 with weight b^-1 x; `w2_mover` (an output of w2) moves to
/// w1 with weight b y.
template <class T>
WNet<T> white_swap(WNet<T> net, int b_edge, int w2_mover) {
    Network& g = net.g;
    int w1 = g.edges[b_edge].src, w2 = g.edges[b_edge].dst;
    if (g.verts[w1].color != VColor::White || g.verts[w2].color != VColor::White)
        throw PatternMismatch("white_swap: endpoints not white");
    int x_edge = -1;
    for (int e : g.out_edges(w1))
        if (e != b_edge) x_edge = e;
    if (x_edge < 0 || g.edges[w2_mover].src != w2 || w2_mover == b_edge)
        throw PatternMismatch("white_swap: pattern mismatch");

    net.w[x_edge] = weight_inverse(net.w[b_edge]) * net.w[x_edge];
    net.w[w2_mover] = net.w[b_edge] * net.w[w2_mover];

    detail::move_half(g, w1, w2, {x_edge, false}, {b_edge, true});
    g.edges[x_edge].src = w2;
    detail::move_half(g, w2, w1, {w2_mover, false}, {b_edge, false});
    g.edges[w2_mover].src = w1;
    return net;
}

/// Black swap across edge b (both endpoints black).  `b1_mover` (an input
/// of b1) moves to b2 with weight x b; the non-b input of b2 moves to b1
/// with weight y b^-1.
template <class T>
WNet<T> black_swap(WNet<T> net, int b_edge, int b1_mover) {
    Network& g = net.g;
    int b1 = g.edges[b_edge].src, b2 = g.edges[b_edge].dst;
    if (g.verts[b1].color != VColor::Black || g.verts[b2].color != VColor::Black)
        throw PatternMismatch("black_swap: endpoints not black");
    int y_edge = -1;
    for (int e : g.in_edges(b2))
        if (e != b_edge) y_edge = e;
    if (y_edge < 0 || g.edges[b1_mover].dst != b1 || b1_mover == b_edge)
        throw PatternMismatch("black_swap: pattern mismatch");

    net.w[b1_mover] = net.w[b1_mover] * net.w[b_edge];
    net.w[y_edge] = net.w[y_edge] * weight_inverse(net.w[b_edge]);

    detail::move_half(g, b1, b2, {b1_mover, true}, {b_edge, true});
    g.edges[b1_mover].dst = b2;
    detail::move_half(g, b2, b1, {y_edge, true}, {b_edge, false});
    g.edges[y_edge].dst = b1;
    return net;
}

/// Gauge transformation at a vertex: incoming weights are multiplied by t
/// on the right, outgoing by t^-1 on the left.  Path products through the
/// vertex, and hence all boundary measurements, are unchanged.
template <class T>
WNet<T> gauge(WNet<T> net, int vertex, const T& t) {
    T tinv = weight_inverse(t);
    for (int e : net.g.in_edges(vertex)) net.w[e] = net.w[e] * t;
    for (int e : net.g.out_edges(vertex)) net.w[e] = tinv * net.w[e];
    return net;
}

// ---------------------------------------------------------------------------
// The pentagram-map network
// ---------------------------------------------------------------------------

/// The annular/toric network with n square faces: the bottom right of face
/// i feeds the top left of face i+1, the top right feeds the bottom left of
/// face i+2.  Faces and edges are 0-indexed internally; the printable
/// labels are 1-indexed.
class PentagramNet {
public:
    PentagramNet(int n, CutConvention cut);

    int n() const { return n_; }
    const Network& torus() const { return torus_; }
    /// Torus cut open along the seam between face n-1 and face 0; three
    /// sources and three sinks, wire-labeled so that the boundary
    /// measurement matrix is the ordered product of the elementary blocks.
    const Network& annulus() const { return annulus_; }

    // face-edge ids on the torus, faces 0-based
    int aE(int i) const { return 6 * idx(i); }     // left edge, carries x
    int bE(int i) const { return 6 * idx(i) + 1; } // bottom edge, carries y
    int cE(int i) const { return 6 * idx(i) + 2; } // right edge
    int dE(int i) const { return 6 * idx(i) + 3; } // top edge
    int ebarE(int i) const { return 6 * idx(i) + 4; } // corridor to face i+1
    int eE(int i) const { return 6 * idx(i) + 5; }    // corridor to face i+2

    int BL(int i) const { return 4 * idx(i); }
    int TL(int i) const { return 4 * idx(i) + 1; }
    int TR(int i) const { return 4 * idx(i) + 2; }
    int BR(int i) const { return 4 * idx(i) + 3; }

    /// Edge weights on the torus for given x,y values (all other edges 1).
    template <class T>
    WNet<T> torus_weights(const std::vector<T>& x, const std::vector<T>& y, const T& one) const {
        return weighted(torus_, x, y, one);
    }
    /// Same for the cut-open annulus.
    template <class T>
    WNet<T> annulus_weights(const std::vector<T>& x, const std::vector<T>& y, const T& one) const {
        return weighted(annulus_, x, y, one);
    }

    // closed loops representing the weight monomials (1-based face index i)
    BasedLoop x_loop(int i) const;
    BasedLoop y_loop(int i) const;
    BasedLoop z_loop() const;
    BasedLoop p_face_loop(int i) const;
    BasedLoop q_face_loop(int i) const;
    /// Path from the basepoint (top-left corner of face 1) to the top-right
    /// corner of face k; conjugating by it bases the x/y/z loops.
    BasedLoop z_path(int k) const;
    // based loops at the common basepoint
    BasedLoop X_loop(int i) const;
    BasedLoop Y_loop(int i) const;
    BasedLoop Z_loop() const;
    BasedLoop P_loop(int i) const;
    BasedLoop Q_loop(int i) const;

    std::string edge_sym_name(int e) const;

private:
    template <class T>
    WNet<T> weighted(const Network& g, const std::vector<T>& x, const std::vector<T>& y, const T& one) const {
        if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
            throw DimensionMismatch("PentagramNet: need n x and y weights");
        WNet<T> net{g, std::vector<T>(g.edges.size(), one)};
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            int s = g.edges[e].sym;
            if (s < 0) continue;
            net.w[e] = s < n_ ? x[s] : y[s - n_];
        }
        return net;
    }

    int idx(int i) const { return ((i % n_) + n_) % n_; }

    int n_;
    Network torus_, annulus_;
};

/// Disk-embedded local patterns used to exercise the moves in isolation.
/// Each has the figure's boundary legs as sources/sinks and returns the
/// ids of the named edges.
struct SquarePatch {
    Network g;
    SquareFace face;
    int e1, e2, e3, e4;
};
SquarePatch make_square_patch();

struct SwapPatch {
    Network g;
    int a, b, c, x, y;
};
SwapPatch make_white_swap_patch();
SwapPatch make_black_swap_patch();

} // namespace penta

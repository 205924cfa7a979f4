#include "penta/network.hpp"

namespace penta {

void validate_loop(const Network& net, const BasedLoop& loop) {
    if (loop.steps.empty()) throw PatternMismatch("validate_loop: empty loop");
    long n = static_cast<long>(loop.steps.size());
    for (long k = 0; k < n; ++k)
        if (step_dst(net, loop.step(k)) != step_src(net, loop.step(k + 1)))
            throw PatternMismatch("validate_loop: steps do not compose");
}

namespace detail {

void replace_half(Network& g, int v, Half from, Half to) {
    auto& list = g.verts[v].ccw;
    for (auto& h : list)
        if (h == from) { h = to; return; }
    throw PatternMismatch("replace_half: half-edge not found");
}

/// Detach a half-edge from one vertex and insert it at another, immediately
/// before `before_at_to` in the receiving counterclockwise order.
void move_half(Network& g, int from_v, int to_v, Half h, Half before_at_to) {
    auto& src = g.verts[from_v].ccw;
    src.erase(std::remove(src.begin(), src.end(), h), src.end());
    auto& dst = g.verts[to_v].ccw;
    for (size_t k = 0; k < dst.size(); ++k)
        if (dst[k] == before_at_to) {
            dst.insert(dst.begin() + static_cast<long>(k), h);
            return;
        }
    throw PatternMismatch("move_half: anchor half-edge not found");
}

} // namespace detail

SquareFace face_at(const Network& g, int a_edge) {
    SquareFace f;
    f.a = a_edge;
    f.sw = g.edges[a_edge].src;
    f.nw = g.edges[a_edge].dst;
    if (g.verts[f.sw].color != VColor::White || g.verts[f.nw].color != VColor::Black)
        throw PatternMismatch("face_at: left edge colors");
    for (int b : g.out_edges(f.sw))
        if (b != a_edge) f.b = b;
    for (int d : g.out_edges(f.nw)) f.d = d;
    if (f.b < 0 || f.d < 0) throw PatternMismatch("face_at: missing b or d");
    f.se = g.edges[f.b].dst;
    f.ne = g.edges[f.d].dst;
    if (g.verts[f.se].color != VColor::Black || g.verts[f.ne].color != VColor::White)
        throw PatternMismatch("face_at: corner colors");
    f.c = -1;
    for (int c : g.out_edges(f.ne))
        if (g.edges[c].dst == f.se) f.c = c;
    if (f.c < 0) throw PatternMismatch("face_at: no closing edge");
    return f;
}

std::vector<SquareFace> find_square_faces(const Network& g) {
    std::vector<SquareFace> out;
    for (int v = 0; v < static_cast<int>(g.verts.size()); ++v) {
        if (g.verts[v].color != VColor::White) continue;
        for (int a : g.out_edges(v)) {
            if (g.verts[g.edges[a].dst].color != VColor::Black) continue;
            SquareFace f;
            try {
                f = face_at(g, a);
            } catch (const PatternMismatch&) {
                continue;
            }
            out.push_back(f);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// PentagramNet
// ---------------------------------------------------------------------------

PentagramNet::PentagramNet(int n, CutConvention cut) : n_(n) {
    if (n < 5) throw ConfigError("PentagramNet: n >= 5 required (wrap-around adjacency degenerates)");

    Network& g = torus_;
    g.surface = Surface::Torus;
    for (int f = 0; f < n; ++f) {
        g.add_vertex(VColor::White); // BL
        g.add_vertex(VColor::Black); // TL
        g.add_vertex(VColor::White); // TR
        g.add_vertex(VColor::Black); // BR
    }
    auto row = [n](int f) { return ((1 - f) % 3 + 3) % 3; }; // drawing row of face f
    for (int f = 0; f < n; ++f) {
        std::string s = std::to_string(f + 1);
        g.add_edge(BL(f), TL(f), "a" + s, f);
        g.add_edge(BL(f), BR(f), "b" + s, n + f);
        g.add_edge(TR(f), BR(f), "c" + s);
        g.add_edge(TL(f), TR(f), "d" + s);
        int ebar_cut = (cut == CutConvention::Rim && row(f) == 0) ? -1 : 0;
        g.add_edge(BR(f), TL((f + 1) % n), "eb" + s, -1, ebar_cut);
        int e_cut = cut == CutConvention::Diagonal ? 1 : (row(f) == 2 ? 1 : 0);
        g.add_edge(TR(f), BL((f + 2) % n), "e" + s, -1, e_cut);
    }
    for (int f = 0; f < n; ++f) {
        int fp = (f + n - 1) % n, fpp = (f + n - 2) % n;
        g.verts[BL(f)].ccw = {{bE(f), false}, {aE(f), false}, {eE(fpp), true}};
        g.verts[TL(f)].ccw = {{dE(f), false}, {ebarE(fp), true}, {aE(f), true}};
        g.verts[TR(f)].ccw = {{eE(f), false}, {dE(f), true}, {cE(f), false}};
        g.verts[BR(f)].ccw = {{ebarE(f), false}, {cE(f), true}, {bE(f), true}};
    }

    // Cut the torus open along the seam between face n-1 and face 0.  The
    // three crossing edges become wires 1..3; each keeps its weight and cut
    // exponent on one leg so that gluing sink j to source j restores the
    // torus exactly.
    annulus_ = torus_;
    Network& a = annulus_;
    a.surface = Surface::Annulus;
    auto split = [&a](int e, bool cut_on_right) {
        int sv = a.add_vertex(VColor::Boundary);
        int qv = a.add_vertex(VColor::Boundary);
        int v = a.edges[e].dst;
        int right = a.add_edge(qv, v, a.edges[e].label + "+");
        detail::replace_half(a, v, {e, true}, {right, true});
        a.edges[e].dst = sv;
        if (cut_on_right) {
            a.edges[right].cut = a.edges[e].cut;
            a.edges[e].cut = 0;
        }
        a.verts[sv].ccw = {{e, true}};
        a.verts[qv].ccw = {{right, false}};
        return std::pair<int, int>{qv, sv};
    };
    auto [q1, s1] = split(eE(n - 2), false);
    auto [q2, s2] = split(eE(n - 1), true);
    auto [q3, s3] = split(ebarE(n - 1), false);
    a.sources = {q1, q2, q3};
    a.sinks = {s1, s2, s3};
}

std::string PentagramNet::edge_sym_name(int e) const {
    int s = torus_.edges[e].sym;
    if (s < 0) return "1";
    return s < n_ ? "X" + std::to_string(s + 1) : "Y" + std::to_string(s - n_ + 1);
}

BasedLoop PentagramNet::x_loop(int i) const {
    int f = idx(i - 1), fp = idx(i - 2), fpp = idx(i - 3);
    BasedLoop l;
    l.steps = {aE(f) + 1, -(ebarE(fp) + 1), -(cE(fp) + 1), -(dE(fp) + 1),
               -(ebarE(fpp) + 1), -(cE(fpp) + 1), eE(fpp) + 1};
    return l;
}

BasedLoop PentagramNet::y_loop(int i) const {
    int f = idx(i - 1), fp = idx(i - 2), fpp = idx(i - 3);
    BasedLoop l;
    l.steps = {bE(f) + 1, -(cE(f) + 1), -(dE(f) + 1), -(ebarE(fp) + 1), -(cE(fp) + 1),
               -(dE(fp) + 1), -(ebarE(fpp) + 1), -(cE(fpp) + 1), eE(fpp) + 1};
    return l;
}

BasedLoop PentagramNet::z_loop() const {
    BasedLoop l;
    for (int f = 0; f < n_; ++f) {
        l.steps.push_back(dE(f) + 1);
        l.steps.push_back(cE(f) + 1);
        l.steps.push_back(ebarE(f) + 1);
    }
    return l;
}

BasedLoop PentagramNet::p_face_loop(int i) const {
    int f = idx(i - 1);
    BasedLoop l;
    l.steps = {bE(f) + 1, -(cE(f) + 1), -(dE(f) + 1), -(aE(f) + 1)};
    return l;
}

BasedLoop PentagramNet::q_face_loop(int i) const {
    int f = idx(i - 1), fp = idx(i - 2), fpp = idx(i - 3);
    BasedLoop l;
    l.steps = {cE(fpp) + 1, ebarE(fpp) + 1, dE(fp) + 1, eE(fp) + 1,
               aE(idx(i)) + 1, -(ebarE(f) + 1), -(bE(f) + 1), -(eE(fpp) + 1)};
    return l;
}

BasedLoop PentagramNet::z_path(int k) const {
    BasedLoop p;
    for (int f = 0; f < k - 1; ++f) {
        p.steps.push_back(dE(f) + 1);
        p.steps.push_back(cE(f) + 1);
        p.steps.push_back(ebarE(f) + 1);
    }
    p.steps.push_back(dE(k - 1) + 1);
    return p;
}

namespace {
/// Concatenate path * loop-rotated-to(path end) * path^-1, with free
/// reduction of the step sequence (a reduced step sequence is still a
/// closed walk).
BasedLoop conjugate_loop(const BasedLoop& path, const BasedLoop& loop, long rot) {
    std::vector<int> steps = path.steps;
    BasedLoop r = loop.rotated(rot);
    steps.insert(steps.end(), r.steps.begin(), r.steps.end());
    for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) steps.push_back(-*it);
    std::vector<int> red;
    for (int s : steps) {
        if (!red.empty() && red.back() == -s) red.pop_back();
        else red.push_back(s);
    }
    BasedLoop out;
    out.steps = std::move(red);
    return out;
}
} // namespace

BasedLoop PentagramNet::X_loop(int i) const {
    int itil = idx(i - 3) + 1; // face of the basing path, 1-based
    // x_loop(i) starts at BL(i-1); rotate so it starts at TR(itil-1).
    return conjugate_loop(z_path(itil), x_loop(i), -1);
}

BasedLoop PentagramNet::Y_loop(int i) const {
    int itil = idx(i - 3) + 1;
    return conjugate_loop(z_path(itil), y_loop(i), -1);
}

BasedLoop PentagramNet::Z_loop() const {
    // z_loop is already based at the basepoint TL(0)
    return z_loop();
}

BasedLoop PentagramNet::P_loop(int i) const {
    int itil = idx(i - 3) + 1;
    BasedLoop path = z_path(itil);
    path.steps.push_back(eE(idx(i - 3)) + 1); // continue TR(i-2) -> BL(i)
    return conjugate_loop(path, p_face_loop(i), 0);
}

BasedLoop PentagramNet::Q_loop(int i) const {
    int itil = idx(i - 3) + 1;
    return conjugate_loop(z_path(itil), q_face_loop(i), 0);
}

// ---------------------------------------------------------------------------
// Local-move patches (the figures' disk networks)
// ---------------------------------------------------------------------------

SquarePatch make_square_patch() {
    SquarePatch p;
    Network& g = p.g;
    g.surface = Surface::Disk;
    int sw = g.add_vertex(VColor::White);
    int nw = g.add_vertex(VColor::Black);
    int ne = g.add_vertex(VColor::White);
    int se = g.add_vertex(VColor::Black);
    int s1 = g.add_vertex(VColor::Boundary);
    int s2 = g.add_vertex(VColor::Boundary);
    int t3 = g.add_vertex(VColor::Boundary);
    int t4 = g.add_vertex(VColor::Boundary);
    int a = g.add_edge(sw, nw, "a");
    int b = g.add_edge(sw, se, "b");
    int c = g.add_edge(ne, se, "c");
    int d = g.add_edge(nw, ne, "d");
    p.e1 = g.add_edge(s1, nw, "e1");
    p.e2 = g.add_edge(s2, sw, "e2");
    p.e3 = g.add_edge(se, t3, "e3");
    p.e4 = g.add_edge(ne, t4, "e4");
    g.verts[sw].ccw = {{b, false}, {a, false}, {p.e2, true}};
    g.verts[nw].ccw = {{d, false}, {p.e1, true}, {a, true}};
    g.verts[ne].ccw = {{p.e4, false}, {d, true}, {c, false}};
    g.verts[se].ccw = {{c, true}, {b, true}, {p.e3, false}};
    g.verts[s1].ccw = {{p.e1, false}};
    g.verts[s2].ccw = {{p.e2, false}};
    g.verts[t3].ccw = {{p.e3, true}};
    g.verts[t4].ccw = {{p.e4, true}};
    g.sources = {s1, s2};
    g.sinks = {t3, t4};
    p.face = {sw, nw, ne, se, a, b, c, d};
    return p;
}

SwapPatch make_white_swap_patch() {
    SwapPatch p;
    Network& g = p.g;
    g.surface = Surface::Disk;
    int w1 = g.add_vertex(VColor::White);
    int w2 = g.add_vertex(VColor::White);
    int sa = g.add_vertex(VColor::Boundary);
    int tx = g.add_vertex(VColor::Boundary);
    int ty = g.add_vertex(VColor::Boundary);
    int tc = g.add_vertex(VColor::Boundary);
    p.a = g.add_edge(sa, w1, "a");
    p.b = g.add_edge(w1, w2, "b");
    p.c = g.add_edge(w2, tc, "c");
    p.x = g.add_edge(w1, tx, "x");
    p.y = g.add_edge(w2, ty, "y");
    g.verts[w1].ccw = {{p.b, false}, {p.x, false}, {p.a, true}};
    g.verts[w2].ccw = {{p.c, false}, {p.b, true}, {p.y, false}};
    g.verts[sa].ccw = {{p.a, false}};
    g.verts[tx].ccw = {{p.x, true}};
    g.verts[ty].ccw = {{p.y, true}};
    g.verts[tc].ccw = {{p.c, true}};
    g.sources = {sa};
    g.sinks = {tx, ty, tc};
    return p;
}

SwapPatch make_black_swap_patch() {
    SwapPatch p;
    Network& g = p.g;
    g.surface = Surface::Disk;
    int b1 = g.add_vertex(VColor::Black);
    int b2 = g.add_vertex(VColor::Black);
    int sa = g.add_vertex(VColor::Boundary);
    int sx = g.add_vertex(VColor::Boundary);
    int sy = g.add_vertex(VColor::Boundary);
    int tc = g.add_vertex(VColor::Boundary);
    p.a = g.add_edge(sa, b1, "a");
    p.b = g.add_edge(b1, b2, "b");
    p.c = g.add_edge(b2, tc, "c");
    p.x = g.add_edge(sx, b1, "x");
    p.y = g.add_edge(sy, b2, "y");
    g.verts[b1].ccw = {{p.b, false}, {p.x, true}, {p.a, true}};
    g.verts[b2].ccw = {{p.c, false}, {p.b, true}, {p.y, true}};
    g.verts[sa].ccw = {{p.a, false}};
    g.verts[sx].ccw = {{p.x, false}};
    g.verts[sy].ccw = {{p.y, false}};
    g.verts[tc].ccw = {{p.c, true}};
    g.sources = {sa, sx, sy};
    g.sinks = {tc};
    return p;
}

} // namespace penta

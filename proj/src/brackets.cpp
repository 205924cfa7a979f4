#include "penta/brackets.hpp"

#include <set>

namespace penta {

std::vector<Meeting> parallel_meetings(const BasedLoop& f, const BasedLoop& g) {
    long nf = static_cast<long>(f.size()), ng = static_cast<long>(g.size());
    long cap = std::min(nf, ng);
    std::set<std::pair<long, long>> visited;
    std::vector<Meeting> out;
    for (long p = 0; p < nf; ++p)
        for (long q = 0; q < ng; ++q) {
            if (f.step(p) != g.step(q) || visited.count({p, q})) continue;
            // walk back to the start of the run
            long bp = p, bq = q, back = 0;
            while (back < cap && f.step(bp - 1) == g.step(bq - 1)) {
                bp = (bp - 1 + nf) % nf;
                bq = (bq - 1 + ng) % ng;
                ++back;
            }
            Meeting m;
            m.fpos = bp;
            m.gpos = bq;
            m.len = 1;
            while (m.len < cap && f.step(bp + m.len) == g.step(bq + m.len)) ++m.len;
            m.degenerate = (m.len >= cap) || (back >= cap);
            for (long k = 0; k < m.len; ++k) visited.insert({(bp + k) % nf, (bq + k) % ng});
            out.push_back(m);
        }
    return out;
}

namespace {

/// Position (1 or 2) of half-edge h in the counterclockwise order at v,
/// counted from h_w.
int ccw_position(const Network& net, int v, Half h_w, Half h) {
    const auto& list = net.verts[v].ccw;
    int n = static_cast<int>(list.size());
    int base = net.ccw_index(v, h_w);
    for (int k = 1; k < n; ++k)
        if (list[(base + k) % n] == h) return k;
    throw PatternMismatch("ccw_position: half-edge not at vertex");
}

Rat color_term(const Network& net, int v, const BracketCoeffs& c) {
    VColor col = net.verts[v].color;
    if (col == VColor::Black) return -c.a_black();
    if (col == VColor::White) return c.a_white();
    throw PatternMismatch("meeting endpoint at a boundary vertex");
}

} // namespace

Rat meeting_epsilon(const Network& net, const BasedLoop& f, const BasedLoop& g, const Meeting& m,
                    const BracketCoeffs& c) {
    if (m.degenerate) throw PatternMismatch("meeting_epsilon: degenerate meeting");
    int v0 = step_src(net, f.step(m.fpos));
    int v1 = step_dst(net, f.step(m.fpos + m.len - 1));

    Half hw0 = step_src_half(f.step(m.fpos));
    Half hf0 = step_dst_half(f.step(m.fpos - 1));
    Half hg0 = step_dst_half(g.step(m.gpos - 1));
    Half hw1 = step_dst_half(f.step(m.fpos + m.len - 1));
    Half hf1 = step_src_half(f.step(m.fpos + m.len));
    Half hg1 = step_src_half(g.step(m.gpos + m.len));
    if (hf0 == hw0 || hg0 == hw0 || hf1 == hw1 || hg1 == hw1)
        throw PatternMismatch("meeting_epsilon: loop not cyclically reduced at a meeting endpoint");

    int pos_start = ccw_position(net, v0, hw0, hf0);
    int pos_end = ccw_position(net, v1, hw1, hf1);
    bool f_left_start = (pos_start == 1);
    bool f_left_end = (pos_end == 2);
    bool touch = (f_left_start == f_left_end);

    Rat base = color_term(net, v0, c) + (touch ? -color_term(net, v1, c) : color_term(net, v1, c));
    return pos_start == 2 ? base : -base;
}

NCPoly loop_bracket(const Network& net, const BasedLoop& f, const BasedLoop& g, const BracketCoeffs& c) {
    // The endpoint formula covers parallel meetings between loops that do
    // not share a full cyclic period.  Pairs with anti-parallel common
    // subpaths (based loops whose conjugating corridors run both ways) or
    // degenerate overlaps go through the Leibniz expansion, which is the
    // bracket's definition and agrees modulo cyclic words.
    bool fallback = false;
    for (const Meeting& m : parallel_meetings(f, g.reversed())) fallback = fallback || m.len > 0;
    std::vector<Meeting> meets = parallel_meetings(f, g);
    for (const Meeting& m : meets) fallback = fallback || m.degenerate;
    if (fallback) return double_bracket_leibniz(net, f.word(), g.word(), c).mu();
    NCPoly out;
    for (const Meeting& m : meets) {
        Rat eps = meeting_epsilon(net, f, g, m, c);
        if (is_zero(eps)) continue;
        Word w = f.rotated(m.fpos).word() * g.rotated(m.gpos).word();
        out.add(w, eps);
    }
    return out;
}

CLaurent loop_monomial(const std::vector<CLaurent>& edge_weight, const BasedLoop& loop) {
    CLaurent m = CLaurent::constant(rat(1));
    for (int s : loop.steps) {
        const CLaurent& w = edge_weight[step_edge(s)];
        m *= step_forward(s) ? w : w.inv_monomial();
    }
    return m;
}

CLaurent path_bracket_commutative(const Network& net, const std::vector<CLaurent>& edge_weight,
                                  const BasedLoop& f, const BasedLoop& g, const BracketCoeffs& c) {
    Rat total(0);
    for (const Meeting& m : parallel_meetings(f, g)) {
        if (m.degenerate) throw PatternMismatch("path_bracket_commutative: degenerate pair");
        total += meeting_epsilon(net, f, g, m, c);
    }
    BasedLoop grev = g.reversed();
    for (const Meeting& m : parallel_meetings(f, grev)) {
        if (m.degenerate) throw PatternMismatch("path_bracket_commutative: degenerate pair");
        total -= meeting_epsilon(net, f, grev, m, c);
    }
    return (loop_monomial(edge_weight, f) * loop_monomial(edge_weight, g)).scaled(total);
}

// ---------------------------------------------------------------------------
// Local double-bracket rules
// ---------------------------------------------------------------------------

namespace {

struct SimpleTensor {
    Rat c;
    Word u, v;
};

using TensorTerms = std::vector<SimpleTensor>;

void flip_negate(TensorTerms& ts) {
    for (auto& t : ts) {
        std::swap(t.u, t.v);
        t.c = -t.c;
    }
}

/// Base double bracket of two distinct unsigned edges at a common vertex.
/// White vertex: in-edge x, out-edges (y, z) in ccw order after x:
///   [[x,y]] = w1 (1 (x) xy), [[x,z]] = w2 (1 (x) xz), [[y,z]] = w3 (y (x) z).
/// Black vertex: out-edge a, in-edges (c, b) in ccw order after a:
///   [[a,b]] = k1 (ba (x) 1), [[a,c]] = k2 (ca (x) 1), [[b,c]] = k3 (c (x) b).
TensorTerms base_bracket(const Network& net, int v, int e1, int e2, const BracketCoeffs& co) {
    const auto& vx = net.verts[v];
    auto gen = [](int e) { return Word::gen(e + 1); };
    int n = static_cast<int>(vx.ccw.size());

    if (vx.color == VColor::White) {
        int x = -1;
        int xi = -1;
        for (int k = 0; k < n; ++k)
            if (vx.ccw[k].at_dst) { x = vx.ccw[k].edge; xi = k; }
        int y = vx.ccw[(xi + 1) % n].edge, z = vx.ccw[(xi + 2) % n].edge;
        auto val = [&](int p, int q) -> TensorTerms {
            if (p == x && q == y) return {{co.w1, Word::one(), gen(x) * gen(y)}};
            if (p == x && q == z) return {{co.w2, Word::one(), gen(x) * gen(z)}};
            if (p == y && q == z) return {{co.w3, gen(y), gen(z)}};
            return {};
        };
        TensorTerms t = val(e1, e2);
        if (!t.empty()) return t;
        t = val(e2, e1);
        flip_negate(t);
        return t;
    }
    if (vx.color == VColor::Black) {
        int a = -1;
        int ai = -1;
        for (int k = 0; k < n; ++k)
            if (!vx.ccw[k].at_dst) { a = vx.ccw[k].edge; ai = k; }
        int cc = vx.ccw[(ai + 1) % n].edge, b = vx.ccw[(ai + 2) % n].edge;
        auto val = [&](int p, int q) -> TensorTerms {
            if (p == a && q == b) return {{co.k1, gen(b) * gen(a), Word::one()}};
            if (p == a && q == cc) return {{co.k2, gen(cc) * gen(a), Word::one()}};
            if (p == b && q == cc) return {{co.k3, gen(cc), gen(b)}};
            return {};
        };
        TensorTerms t = val(e1, e2);
        if (!t.empty()) return t;
        t = val(e2, e1);
        flip_negate(t);
        return t;
    }
    return {};
}

} // namespace

Tensor2 local_double_bracket(const Network& net, int pstep, int qstep, const BracketCoeffs& co) {
    Tensor2 out;
    int pe = step_edge(pstep), qe = step_edge(qstep);
    if (pe == qe) return out; // a generator brackets to zero with itself
    std::vector<int> shared;
    for (int v : {net.edges[pe].src, net.edges[pe].dst})
        if ((net.edges[qe].src == v || net.edges[qe].dst == v) &&
            std::find(shared.begin(), shared.end(), v) == shared.end())
            shared.push_back(v);
    for (int v : shared) {
        if (net.verts[v].color == VColor::Boundary) continue;
        TensorTerms ts = base_bracket(net, v, pe, qe, co);
        // localization: [[p^-1, q]] = -(1 (x) p^-1) [[p, q]] (p^-1 (x) 1)
        if (!step_forward(pstep)) {
            Word pinv = Word::gen(pe + 1, -1);
            for (auto& t : ts) {
                t.c = -t.c;
                t.u = t.u * pinv;
                t.v = pinv * t.v;
            }
        }
        // localization: [[p', q^-1]] = -(q^-1 (x) 1) [[p', q]] (1 (x) q^-1)
        if (!step_forward(qstep)) {
            Word qinv = Word::gen(qe + 1, -1);
            for (auto& t : ts) {
                t.c = -t.c;
                t.u = qinv * t.u;
                t.v = t.v * qinv;
            }
        }
        for (auto& t : ts) out.add(t.u, t.v, t.c);
    }
    return out;
}

Tensor2 double_bracket_leibniz(const Network& net, const Word& f, const Word& g, const BracketCoeffs& co) {
    const auto& fs = f.factors();
    const auto& gs = g.factors();
    Tensor2 out;
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = 0; j < gs.size(); ++j) {
            Tensor2 loc = local_double_bracket(net, fs[i], gs[j], co);
            if (loc.is_zero()) continue;
            Word fpre(std::vector<int>(fs.begin(), fs.begin() + static_cast<long>(i)));
            Word fpost(std::vector<int>(fs.begin() + static_cast<long>(i) + 1, fs.end()));
            Word gpre(std::vector<int>(gs.begin(), gs.begin() + static_cast<long>(j)));
            Word gpost(std::vector<int>(gs.begin() + static_cast<long>(j) + 1, gs.end()));
            out += loc.sandwich(gpre, fpre, fpost, gpost);
        }
    return out;
}

BasedLoop loop_from_word(const Word& w) {
    BasedLoop l;
    l.steps = w.cyclic_canonical().factors();
    return l;
}

} // namespace penta

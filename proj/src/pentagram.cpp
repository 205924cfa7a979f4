#include "penta/pentagram.hpp"

namespace penta {

int chain_corridor_out(const Network& g, const SquareFace& f) {
    for (int e : g.out_edges(f.se))
        if (e != f.c) return e; // se is black: single out-edge, the corridor
    throw PatternMismatch("chain_corridor_out: missing corridor");
}

int chain_long_corridor(const Network& g, const SquareFace& f) {
    for (int e : g.out_edges(f.ne))
        if (e != f.c) return e;
    throw PatternMismatch("chain_long_corridor: missing corridor");
}

std::vector<SquareFace> face_chain(const Network& g, const std::vector<SquareFace>& faces) {
    std::vector<SquareFace> chain{faces.at(0)};
    while (chain.size() < faces.size()) {
        int next_nw = g.edges[chain_corridor_out(g, chain.back())].dst;
        bool found = false;
        for (const SquareFace& f : faces)
            if (f.nw == next_nw) {
                chain.push_back(f);
                found = true;
                break;
            }
        if (!found) throw PatternMismatch("face_chain: chain broken");
    }
    // closure check
    if (g.edges[chain_corridor_out(g, chain.back())].dst != chain.front().nw)
        throw PatternMismatch("face_chain: not cyclic");
    return chain;
}

namespace {
const SquareFace& chain_at(const std::vector<SquareFace>& chain, long j) {
    long n = static_cast<long>(chain.size());
    return chain[static_cast<size_t>(((j % n) + n) % n)];
}
} // namespace

BasedLoop chain_x_loop(const Network& g, const std::vector<SquareFace>& chain, int j) {
    const SquareFace& F = chain_at(chain, j);
    const SquareFace& P = chain_at(chain, j - 1);
    const SquareFace& PP = chain_at(chain, j - 2);
    int corrP = chain_corridor_out(g, P);
    int corrPP = chain_corridor_out(g, PP);
    int longPP = chain_long_corridor(g, PP);
    if (g.edges[longPP].dst != F.sw) throw PatternMismatch("chain_x_loop: long corridor mismatch");
    BasedLoop l;
    l.steps = {F.a + 1, -(corrP + 1), -(P.c + 1), -(P.d + 1), -(corrPP + 1), -(PP.c + 1), longPP + 1};
    validate_loop(g, l);
    return l;
}

BasedLoop chain_y_loop(const Network& g, const std::vector<SquareFace>& chain, int j) {
    const SquareFace& F = chain_at(chain, j);
    const SquareFace& P = chain_at(chain, j - 1);
    const SquareFace& PP = chain_at(chain, j - 2);
    int corrP = chain_corridor_out(g, P);
    int corrPP = chain_corridor_out(g, PP);
    int longPP = chain_long_corridor(g, PP);
    if (g.edges[longPP].dst != F.sw) throw PatternMismatch("chain_y_loop: long corridor mismatch");
    BasedLoop l;
    l.steps = {F.b + 1,       -(F.c + 1),  -(F.d + 1),   -(corrP + 1),
               -(P.c + 1),    -(P.d + 1),  -(corrPP + 1), -(PP.c + 1),
               longPP + 1};
    validate_loop(g, l);
    return l;
}

} // namespace penta

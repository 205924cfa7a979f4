#pragma once

#include "penta/laurent.hpp"
#include "penta/network.hpp"
#include "penta/word.hpp"

namespace penta {

/// Local bracket parameters.  Only the two combinations
///   A_white = w1 - w2 - w3,  A_black = k1 - k2 - k3
/// enter the path formula; the double-bracket rules use the individual
/// values.  The working choice sets everything to zero except w3 = k3.
struct BracketCoeffs {
    Rat w1, w2, w3, k1, k2, k3;

    Rat a_white() const { return w1 - w2 - w3; }
    Rat a_black() const { return k1 - k2 - k3; }

    static BracketCoeffs standard() { // A_white = A_black = -1/2
        BracketCoeffs c;
        c.w3 = c.k3 = rat(1, 2);
        return c;
    }
    static BracketCoeffs from_a(const Rat& a_w, const Rat& a_b) {
        BracketCoeffs c;
        c.w3 = -a_w;
        c.k3 = -a_b;
        return c;
    }
};

/// A maximal common parallel run: f and g traverse the same signed edges at
/// positions fpos.. and gpos.. for len steps (cyclically).  `degenerate`
/// marks runs that wrap a whole loop (one loop is a cyclic power of a
/// rotation of the other along the run); those are handled through the
/// Leibniz expansion instead of the endpoint formula.
struct Meeting {
    long fpos = 0, gpos = 0, len = 0;
    bool degenerate = false;
};

std::vector<Meeting> parallel_meetings(const BasedLoop& f, const BasedLoop& g);

/// The endpoint coefficient of a parallel meeting.  Touch or cross is
/// decided from the fat-graph cyclic order: at each endpoint the non-shared
/// strand of f lies on one side of the common subpath; same side at both
/// ends means touch.  The value is the sum of one contribution per
/// endpoint color, with the f/g role fixing the overall sign.
Rat meeting_epsilon(const Network& net, const BasedLoop& f, const BasedLoop& g, const Meeting& m,
                    const BracketCoeffs& c);

/// Loop bracket: sum over maximal common parallel subpaths of
/// epsilon * (f followed by g, both started at the subpath).  Inputs must
/// meet parallel-wise only; loops with anti-parallel common subpaths are
/// outside this formula's scope.  Degenerate pairs fall back to the
/// Leibniz expansion composed with multiplication (equal modulo cyclic
/// equivalence, which is where the bracket lives).
NCPoly loop_bracket(const Network& net, const BasedLoop& f, const BasedLoop& g, const BracketCoeffs& c);

/// Commutative path bracket on a network whose edges carry commuting
/// monomial weights: {f,g} = (sum of epsilon over meetings) * fg.
/// Anti-parallel meetings are folded in through the localization rule
/// {f, g^-1} = -g^-2 {f, g}.
CLaurent path_bracket_commutative(const Network& net, const std::vector<CLaurent>& edge_weight,
                                  const BasedLoop& f, const BasedLoop& g, const BracketCoeffs& c);

/// Weight monomial of a closed walk (product of edge weights along it,
/// inverses for reversed steps).
CLaurent loop_monomial(const std::vector<CLaurent>& edge_weight, const BasedLoop& loop);

/// Full Leibniz expansion of the double bracket of two loop words over the
/// network's local generator rules.  Words are over the edge alphabet
/// (generator id = edge id + 1) and may traverse edges in either direction.
Tensor2 double_bracket_leibniz(const Network& net, const Word& f, const Word& g, const BracketCoeffs& c);

/// Local double bracket of two signed edge factors, summed over shared
/// vertices; the building block of the expansion above.  Exposed for the
/// generator-rule tests.
Tensor2 local_double_bracket(const Network& net, int pstep, int qstep, const BracketCoeffs& c);

/// Interpret a (cyclically reduced) word over the edge alphabet as a loop.
BasedLoop loop_from_word(const Word& w);

} // namespace penta

#pragma once

#include "penta/brackets.hpp"
#include "penta/grass.hpp"
#include "penta/pentagram.hpp"

#include <map>

namespace penta {

// ---------------------------------------------------------------------------
// Transfer and boundary-measurement matrices (N-block structure)
// ---------------------------------------------------------------------------

/// Boundary measurement matrix of one elementary slice:
///   rows (0, X, X+Y), (lambda Id, 0, 0), (0, Id, Id).
MatLaurent<Rat> elementary_B(const RatMat& X, const RatMat& Y);

/// Transfer matrices with the two admissible scalings:
///   L:        (0,0,A), (Id,0,l^-1 B), (0,Id,l C)
///   L-tilde:  (0,0,l A), (Id,0,l B), (0,Id,C)
MatLaurent<Rat> lax_L(const RatMat& A, const RatMat& B, const RatMat& C);
MatLaurent<Rat> lax_Ltilde(const RatMat& A, const RatMat& B, const RatMat& C);
/// The conjugating factor (l^-1,0,X), (0,Id,0), (0,0,Id), and its inverse.
MatLaurent<Rat> lax_A(const RatMat& X);
MatLaurent<Rat> lax_A_inv(const RatMat& X);

/// Ordered product of the n elementary matrices, weights taken in the Lax
/// convention.
MatLaurent<Rat> assemble_B(const GrassWeights& w);

/// tr(B^i) coefficients: map (i, k) -> tr of the l^k coefficient of B^i.
std::map<std::pair<int, int>, Rat> numeric_invariants(const GrassWeights& w, int imax);

// ---------------------------------------------------------------------------
// Classical (scalar) invariants
// ---------------------------------------------------------------------------

/// det(Id + t B) expanded exactly; B entries commutative.
CLaurent cl_char_poly(const Mat<CLaurent>& B);

/// The n-face boundary measurement matrix with symbolic x_i, y_i entries
/// (network-convention variables), as a matrix over the commutative
/// Laurent ring.
Mat<CLaurent> symbolic_B(int n);

/// Coefficients I_{ij} of l^i t^j in det(Id + t B) at given x,y values.
/// Coordinates are classical-convention; the network's y-shift is applied
/// internally so that the family is invariant under classical_map.
std::map<std::pair<int, int>, Rat> classical_invariants(const ClassicalCoords& c);

/// The log-canonical table on x_1..x_n, y_1..y_n.
BracketTable xy_bracket_table(int n);

/// All pairwise brackets of the symbolic I_{ij}; returns the nonzero ones
/// (must be empty).
std::vector<std::pair<std::string, CLaurent>> involutivity_commutative(int n);

// ---------------------------------------------------------------------------
// Symbolic invariants as sums of closed walks
// ---------------------------------------------------------------------------

/// t_{ik} realized combinatorially: the closed directed walks on the torus
/// network winding i times, graded by the cut exponent k.  Each walk is
/// listed once per trace term of B^i (rotations that start at different
/// seam crossings are distinct terms, as in the trace expansion).
struct WalkTable {
    int n = 0, imax = 0;
    std::map<std::pair<int, int>, std::vector<BasedLoop>> entries;
};

WalkTable symbolic_invariants(const PentagramNet& pn, int imax);

/// Edge-generator evaluator for walk words: x-edges map to X_i, y-edges to
/// the Lax-convention Y_i, everything else to the identity.
WordEvaluator walk_evaluator(const PentagramNet& pn, const GrassWeights& w);

/// Edge assignment under which every based generator loop evaluates to the
/// given tuple entry: X-loop(i) to X_i, Y-loop(i) to Y_i, the rim loop to
/// Z.  The rim value sits on the last right edge; the few face weights
/// whose monomials traverse that edge carry the compensating factor.
WordEvaluator based_evaluator(const PentagramNet& pn, const GrassWeights& w);

/// Sum of loop brackets between two walk families, grouped by the grading
/// of the operands: result[(k,l)] = < t_{i k}, t_{j l} >.
std::map<std::pair<int, int>, NCPoly> walk_bracket_table(const PentagramNet& pn,
                                                         const std::vector<BasedLoop>& wi,
                                                         const std::vector<BasedLoop>& wj,
                                                         const BracketCoeffs& c);

int walk_cut_degree(const Network& g, const BasedLoop& loop);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct DriftReport {
    // per step, per (i,k): value after that many applications of the map
    std::vector<std::map<std::pair<int, int>, Rat>> values;
    bool exact_constant = true;
    int truncated_at = -1; // step where the orbit degenerated, -1 if none
};

/// Iterate the map (plain, and optionally the shifted variant) and
/// recompute the numeric invariants at each step.
DriftReport invariance_report(const GrassWeights& w, int steps, int imax, bool shifted_variant);

struct ClassicalDriftReport {
    std::vector<std::map<std::pair<int, int>, Rat>> values;
    bool exact_constant = true;
    int truncated_at = -1;
};

ClassicalDriftReport classical_invariance_report(const ClassicalCoords& c, int steps);

} // namespace penta

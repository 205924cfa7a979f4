#pragma once

#include "penta/linalg.hpp"
#include "penta/word.hpp"

#include <optional>
#include <vector>

namespace penta {

/// Index conventions for the matrix weights.  They differ by where the Y
/// index sits in the recurrence:
///   Prop4:   V_{i+3} = V_i Y_i     + V_{i+1} X_i + V_{i+2}
///   Lax:     V_{i+3} = V_i Y_{i-1} + V_{i+1} X_i + V_{i+2}
/// Network coincides with Lax (the network's bottom-edge weights), and is
/// kept as its own tag for reporting.
enum class Convention { Prop4, Network, Lax };

std::string convention_name(Convention c);
Convention convention_from_name(const std::string& s);

/// The (X_i, Y_i, Z) tuple of invertible N x N matrices.  Indices beyond
/// [1, n] are realized by conjugation: X_{i+n} = Z^-1 X_i Z, same for Y.
struct GrassWeights {
    int n = 0, N = 0;
    std::vector<RatMat> X, Y; // 1-based logically: X[i-1]
    RatMat Z;
    Convention conv = Convention::Prop4;

    RatMat Xat(int i) const { return wrapped(X, i); }
    RatMat Yat(int i) const { return wrapped(Y, i); }

private:
    RatMat wrapped(const std::vector<RatMat>& v, int i) const;
};

GrassWeights random_grass_weights(Rng& rng, int n, int N, Convention conv = Convention::Prop4, long box = 3);

/// Pure index shifts between the conventions (Z-conjugation past the seam).
GrassWeights convert(const GrassWeights& w, Convention to);

/// Relabel X_i -> X_{i+s} (cyclically through the Z-conjugation), the
/// rotation that composes with the map in its shifted variant.
GrassWeights shift_labels(const GrassWeights& w, int s);

/// The map on the matrix weights; Z is untouched.  In Prop4 convention:
///   X_i -> (X_i+Y_{i+1})^-1 X_i (X_{i+2}+Y_{i+3})
///   Y_i -> (X_i+Y_{i+1})^-1 Y_{i+1} (X_{i+2}+Y_{i+3}).
/// Throws SingularMatrix on a degenerate configuration.
GrassWeights grass_map_algebraic(const GrassWeights& w);

/// The (A_i, B_i, C_i) coefficients of a general lift.
struct ABCWeights {
    int n = 0, N = 0;
    std::vector<RatMat> A, B, C;
};

/// A lifted polygon: a window of 3N x N blocks V_1, V_2, ... plus the
/// monodromy that extends it (V_{i+n} = M V_i).
struct GrassLift {
    int n = 0, N = 0;
    std::vector<RatMat> V; // V[i-1] is V_i
    std::optional<RatMat> monodromy;

    const RatMat& at(int i) const { return V[static_cast<size_t>(i - 1)]; }
    RatMat vblock(int i) const { return block_row<Rat>({at(i), at(i + 1), at(i + 2)}); }
    /// Grow the window to hold V_1..V_m using the monodromy.
    void extend(int m);
};

/// Coefficients at index i: solve VBlock_i * (A;B;C) = V_{i+3}.
void weights_at(const GrassLift& l, int i, RatMat& A, RatMat& B, RatMat& C);
ABCWeights weights_from_lift(const GrassLift& l);

/// Gauge the lift so that every C_i = Id, and read off the weights
/// X_i = new B_i, Y_i = new A_i, plus the conjugator Z with
/// X_{i+n} = Z^-1 X_i Z.  Returns the normalized window (length
/// `window`, defaults to n+6) and the Prop4-convention weights.
std::pair<GrassLift, GrassWeights> normalize_lift(const GrassLift& l, int window = 0);

/// Lift with VBlock_1 = Id built from weights via the recurrence; returned
/// twisted (periodic coefficients) with its monodromy.
GrassLift lift_from_weights(const GrassWeights& w);

/// Geometric step: on the normalized window, W_i = V_i Y_i + V_{i+2} spans
/// the intersection of consecutive diagonal subspaces.  Checks every
/// intersection dimension and throws DegenerateIntersection otherwise.
/// Returns a twisted lift of the image polygon.
GrassLift grass_map_geometric(const GrassLift& l);

/// Generator ids for trace words: X_i -> i, Y_i -> n+i, Z -> 2n+1.
WordEvaluator evaluator(const GrassWeights& w);
std::vector<Word> standard_trace_words(int n);
std::vector<Rat> trace_coordinates(const GrassWeights& w, const std::vector<Word>& words);

/// d tr(word) / d entries of one generator, at the point given by the
/// evaluator.  Used by the moduli dimension audit.
RatMat trace_word_gradient(const WordEvaluator& ev, const Word& w, int gen, int dim);

/// Forward-mode value+derivative pair for differentiating the map.
struct DualMat {
    RatMat v, d;
    DualMat operator+(const DualMat& o) const { return {v + o.v, d + o.d}; }
    DualMat operator*(const DualMat& o) const { return {v * o.v, d * o.v + v * o.d}; }
    DualMat inv() const {
        RatMat vi = inverse(v);
        return {vi, -(vi * d * vi)};
    }
    static DualMat constant(const RatMat& m) { return {m, RatMat::zero(m.rows(), m.cols())}; }
};

/// Image of the map together with its directional derivative along a unit
/// perturbation of one generator entry.
struct GrassDual {
    std::vector<DualMat> X, Y;
    DualMat Z;
};
GrassDual grass_map_algebraic_dual(const GrassWeights& w, int gen, int row, int col);

} // namespace penta

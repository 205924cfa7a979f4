#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace penta {

/// Exact rational scalar.  GMP keeps values canonical (lowest terms,
/// positive denominator) as long as they are built through mpq_class
/// operations or the helpers below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// splitmix64: small deterministic PRNG used for all seeded experiments.
/// Cross-platform stable, so identical seeds give identical reports.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Nonzero integer in [-m, m].
    long nonzero(long m) {
        long v = uniform(-m, m - 1);
        return v >= 0 ? v + 1 : v;
    }

    /// Random rational with numerator in [-m,m]\{0} and denominator in [1,d].
    Rat rational(long m = 9, long d = 4) { return rat(nonzero(m), uniform(1, d)); }

private:
    std::uint64_t state_;
};

} // namespace penta

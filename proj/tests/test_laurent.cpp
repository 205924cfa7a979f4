#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "penta/matlaurent.hpp"
#include "penta/spectral.hpp"

using namespace penta;

namespace {
MatLaurent<Rat> random_ml(Rng& rng, int dim, int lo, int hi) {
    MatLaurent<Rat> p(dim);
    for (int e = lo; e <= hi; ++e) p.add(e, random_int_matrix(rng, dim, dim, 3));
    return p;
}
} // namespace

TEST_CASE("matrix Laurent arithmetic") {
    Rng rng(2);
    RatMat B = random_int_matrix(rng, 3, 3);
    MatLaurent<Rat> mb = MatLaurent<Rat>::term(3, 0, B);
    CHECK(MatLaurent<Rat>::identity(3) * mb == mb);

    RatMat A = random_int_matrix(rng, 3, 3);
    MatLaurent<Rat> prod = MatLaurent<Rat>::term(3, 1, A) * MatLaurent<Rat>::term(3, -1, B);
    CHECK(prod.coeff(0) == A * B);
    CHECK(prod.coeffs().size() == 1);

    // one-term elements convolve degree-wise
    MatLaurent<Rat> p = MatLaurent<Rat>::term(3, 2, A), q = MatLaurent<Rat>::term(3, 3, B);
    CHECK((p * q).coeff(5) == A * B);

    // associativity on random triples
    for (int s = 0; s < 5; ++s) {
        MatLaurent<Rat> u = random_ml(rng, 2, -1, 1), v = random_ml(rng, 2, 0, 2), w = random_ml(rng, 2, -2, 0);
        CHECK((u * v) * w == u * (v * w));
    }
}

TEST_CASE("traces") {
    MatLaurent<Rat> p = MatLaurent<Rat>::term(3, 2, RatMat::identity(3));
    CHECK(ml_trace_poly(p) == CLaurent::monomial(Mono{{vars::lambda, 2}}, rat(3)));

    Rng rng(9);
    RatMat A = random_int_matrix(rng, 3, 3), B = random_int_matrix(rng, 3, 3);
    MatLaurent<Rat> q(3);
    q.add(0, A);
    q.add(1, B);
    CHECK(q.trace().coeff(0) == A.trace());
    CHECK(q.trace().coeff(1) == B.trace());

    // tr(ab) = tr(ba) coefficientwise even though ab != ba
    for (int s = 0; s < 5; ++s) {
        MatLaurent<Rat> u = random_ml(rng, 3, -1, 1), v = random_ml(rng, 3, -1, 1);
        CHECK(!((u * v) == (v * u)));
        CHECK((u * v).trace() == (v * u).trace());
    }
}

TEST_CASE("commutative Laurent ring") {
    CLaurent x1 = CLaurent::variable(vars::x(1));
    CLaurent y3i = CLaurent::variable(vars::y(3), -1);
    CLaurent p = x1 * y3i.scaled(rat(-1, 2)) + CLaurent::monomial(Mono{{vars::lambda, 2}, {vars::t, 1}}, rat(3));
    CHECK(p.str() == "3*l^2*t - 1/2*x1*y3^-1");
    CHECK((x1 * y3i) * CLaurent::variable(vars::y(3)) == x1);
    CHECK(p.derivative(vars::x(1)) == y3i.scaled(rat(-1, 2)));
    CHECK(p.coefficient_of(vars::t, 1) == CLaurent::monomial(Mono{{vars::lambda, 2}}, rat(3)));
    CHECK(x1.inv_monomial() * x1 == CLaurent(1));
}

TEST_CASE("characteristic polynomial basics") {
    Mat<CLaurent> zero(3, 3);
    CHECK(cl_char_poly(zero) == CLaurent(1));

    Mat<CLaurent> d(2, 2);
    d.at(0, 0) = CLaurent::variable(vars::x(1));
    d.at(1, 1) = CLaurent::variable(vars::x(2));
    CLaurent t = CLaurent::variable(vars::t);
    CLaurent expect = (CLaurent(1) + t * d.at(0, 0)) * (CLaurent(1) + t * d.at(1, 1));
    CHECK(cl_char_poly(d) == expect);
}

TEST_CASE("char poly matches Newton identities for the n=5 scalar network") {
    // e1 = s1, 2 e2 = e1 s1 - s2, 3 e3 = e2 s1 - e1 s2 + s3 where
    // s_k = tr(B^k): independent route to det(Id + tB).
    Rng rng(31);
    GrassWeights w = random_grass_weights(rng, 5, 1, Convention::Lax);
    MatLaurent<Rat> B = assemble_B(w);
    CLaurent s1 = ml_trace_poly(B), s2 = ml_trace_poly(B * B), s3 = ml_trace_poly(B * B * B);
    CLaurent e1 = s1;
    CLaurent e2 = (e1 * s1 - s2).scaled(rat(1, 2));
    CLaurent e3 = (e2 * s1 - e1 * s2 + s3).scaled(rat(1, 3));

    Mat<CLaurent> M(3, 3);
    for (auto& [k, coeff] : B.coeffs())
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M.at(i, j) += CLaurent::monomial(Mono{{vars::lambda, k}}, coeff.at(i, j));
    CLaurent chi = cl_char_poly(M);
    CLaurent t = CLaurent::variable(vars::t);
    CLaurent expect = CLaurent(1) + t * e1 + t * t * e2 + t * t * t * e3;
    CHECK(chi == expect);
}

TEST_CASE("log-canonical bracket") {
    int n = 5;
    BracketTable tb = xy_bracket_table(n);
    CLaurent x1 = CLaurent::variable(vars::x(1)), x2 = CLaurent::variable(vars::x(2));
    CHECK(cl_bracket(x2, x1, tb) == x2 * x1);
    CHECK(cl_bracket(x1, x2, tb) == (x1 * x2).scaled(rat(-1)));

    Rng rng(7);
    auto random_poly = [&](int terms) {
        CLaurent p;
        for (int t = 0; t < terms; ++t) {
            Mono m;
            int v = rng.uniform(1, 2 * n);
            int var = v <= n ? vars::x(v) : vars::y(v - n);
            m.push_back({var, static_cast<int>(rng.uniform(-2, 2))});
            p += CLaurent::monomial(m, rng.rational());
        }
        return p;
    };
    for (int s = 0; s < 10; ++s) {
        CLaurent f = random_poly(2), g = random_poly(2), h = random_poly(2);
        CHECK(cl_bracket(f, f, tb).is_zero());
        // Leibniz in the second argument
        CHECK(cl_bracket(f, g * h, tb) == cl_bracket(f, g, tb) * h + g * cl_bracket(f, h, tb));
        // Jacobi identity
        CLaurent jac = cl_bracket(f, cl_bracket(g, h, tb), tb) + cl_bracket(g, cl_bracket(h, f, tb), tb) +
                       cl_bracket(h, cl_bracket(f, g, tb), tb);
        CHECK(jac.is_zero());
    }
}

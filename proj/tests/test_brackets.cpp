#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "penta/brackets.hpp"
#include "penta/pentagram.hpp"

using namespace penta;

namespace {

// symbolic edge weights of the x,y-gauged network: x_i on left edges, y_i
// on bottom edges, 1 elsewhere
std::vector<CLaurent> xy_edge_weights(const PentagramNet& pn) {
    const Network& g = pn.torus();
    std::vector<CLaurent> w(g.edges.size(), CLaurent(1));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        int s = g.edges[e].sym;
        if (s < 0) continue;
        w[static_cast<size_t>(e)] = s < pn.n() ? CLaurent::variable(vars::x(s + 1)) : CLaurent::variable(vars::y(s - pn.n() + 1));
    }
    return w;
}

int wrap1(int i, int n) { return ((i - 1) % n + n) % n + 1; }

} // namespace

TEST_CASE("x,y loop monomials match the gauge-reduced weights") {
    PentagramNet pn(5, CutConvention::Diagonal);
    auto w = xy_edge_weights(pn);
    for (int i = 1; i <= 5; ++i) {
        CHECK(loop_monomial(w, pn.x_loop(i)) == CLaurent::variable(vars::x(i)));
        CHECK(loop_monomial(w, pn.y_loop(i)) == CLaurent::variable(vars::y(i)));
        // face weights
        CHECK(loop_monomial(w, pn.p_face_loop(i)) ==
              CLaurent::variable(vars::y(i)) * CLaurent::variable(vars::x(i), -1));
        CHECK(loop_monomial(w, pn.q_face_loop(i)) ==
              CLaurent::variable(vars::x(wrap1(i + 1, 5))) * CLaurent::variable(vars::y(i), -1));
    }
    CHECK(loop_monomial(w, pn.z_loop()) == CLaurent(1)); // z = 1 surface
}

TEST_CASE("path bracket reproduces the x,y table") {
    int n = 5;
    PentagramNet pn(n, CutConvention::Diagonal);
    const Network& g = pn.torus();
    auto w = xy_edge_weights(pn);
    BracketCoeffs co = BracketCoeffs::standard();

    auto br = [&](const BasedLoop& f, const BasedLoop& gl) { return path_bracket_commutative(g, w, f, gl, co); };
    auto X = [&](int i) { return CLaurent::variable(vars::x(wrap1(i, n))); };
    auto Y = [&](int i) { return CLaurent::variable(vars::y(wrap1(i, n))); };
    auto xl = [&](int i) { return pn.x_loop(wrap1(i, n)); };
    auto yl = [&](int i) { return pn.y_loop(wrap1(i, n)); };

    for (int i = 1; i <= n; ++i) {
        CHECK(br(xl(i + 1), xl(i)) == X(i + 1) * X(i));
        CHECK(br(yl(i + 1), yl(i)) == Y(i + 1) * Y(i));
        CHECK(br(yl(i + 2), yl(i)) == Y(i + 2) * Y(i));
        CHECK(br(yl(i), xl(i)) == Y(i) * X(i));
        CHECK(br(yl(i + 1), xl(i)) == Y(i + 1) * X(i));
        CHECK(br(xl(i + 1), yl(i)) == X(i + 1) * Y(i));
        CHECK(br(xl(i + 2), yl(i)) == X(i + 2) * Y(i));
        // everything else at distance > 2 vanishes
        CHECK(br(xl(i + 3), xl(i)).is_zero());
        CHECK(br(xl(i), yl(i)).is_zero() == false); // antisymmetric partner
        CHECK(br(xl(i), yl(i)) == (Y(i) * X(i)).scaled(rat(-1)));
        if (n > 5) CHECK(br(yl(i + 3), yl(i)).is_zero());
    }
}

TEST_CASE("path bracket reproduces the face-weight table") {
    int n = 5;
    PentagramNet pn(n, CutConvention::Diagonal);
    const Network& g = pn.torus();
    auto w = xy_edge_weights(pn);
    BracketCoeffs co = BracketCoeffs::standard();

    auto br = [&](const BasedLoop& f, const BasedLoop& gl) { return path_bracket_commutative(g, w, f, gl, co); };
    auto P = [&](int i) {
        int j = wrap1(i, n);
        return CLaurent::variable(vars::y(j)) * CLaurent::variable(vars::x(j), -1);
    };
    auto Q = [&](int i) {
        int j = wrap1(i, n);
        return CLaurent::variable(vars::x(wrap1(i + 1, n))) * CLaurent::variable(vars::y(j), -1);
    };
    auto pl = [&](int i) { return pn.p_face_loop(wrap1(i, n)); };
    auto ql = [&](int i) { return pn.q_face_loop(wrap1(i, n)); };

    for (int i = 1; i <= n; ++i) {
        CHECK(br(ql(i), pl(i)) == Q(i) * P(i));
        CHECK(br(ql(i + 1), pl(i)) == Q(i + 1) * P(i));
        CHECK(br(pl(i), ql(i - 1)) == P(i) * Q(i - 1));
        CHECK(br(pl(i), ql(i + 2)) == P(i) * Q(i + 2));
        // non-adjacent faces commute
        CHECK(br(pl(i), pl(i + 1)).is_zero());
        CHECK(br(pl(i), pl(i + 2)).is_zero());
        CHECK(br(ql(i), ql(i + 1)).is_zero());
        CHECK(br(ql(i), ql(i + 2)).is_zero());
    }
}

TEST_CASE("z is a Casimir of the commutative path bracket") {
    int n = 5;
    PentagramNet pn(n, CutConvention::Diagonal);
    const Network& g = pn.torus();
    auto w = xy_edge_weights(pn);
    BracketCoeffs co = BracketCoeffs::standard();
    for (int i = 1; i <= n; ++i) {
        CHECK(path_bracket_commutative(g, w, pn.z_loop(), pn.x_loop(i), co).is_zero());
        CHECK(path_bracket_commutative(g, w, pn.z_loop(), pn.y_loop(i), co).is_zero());
    }
}

TEST_CASE("local double-bracket rules at a white vertex") {
    // check the generator-rule engine against the closed forms:
    // with in-edge x and ccw out-edges (y, z):
    //   [[y,z]] = w3 (y (x) z),  [[z^-1, y]] = w3 (1 (x) z^-1 y),
    //   [[x, y^-1]] = -w1 (y^-1 (x) x)
    PentagramNet pn(5, CutConvention::Diagonal);
    const Network& g = pn.torus();
    BracketCoeffs co; // keep all six parameters distinct to pin each rule
    co.w1 = rat(2);
    co.w2 = rat(3);
    co.w3 = rat(5);
    co.k1 = rat(7);
    co.k2 = rat(11);
    co.k3 = rat(13);

    // BL(0) is white with in e(n-2), outs (b, a) in ccw order after the in
    int v = pn.BL(0);
    int ein = g.in_edges(v)[0];
    int y_loc = -1, z_loc = -1;
    {
        int base = g.ccw_index(v, {ein, true});
        Half h1 = g.verts[v].ccw[static_cast<size_t>((base + 1) % 3)];
        Half h2 = g.verts[v].ccw[static_cast<size_t>((base + 2) % 3)];
        y_loc = h1.edge;
        z_loc = h2.edge;
    }
    auto gw = [](int e) { return Word::gen(e + 1); };

    Tensor2 yz = local_double_bracket(g, y_loc + 1, z_loc + 1, co);
    REQUIRE(yz.terms().size() == 1);
    CHECK(yz.terms().begin()->second == co.w3);
    CHECK(yz.terms().begin()->first.first == gw(y_loc));
    CHECK(yz.terms().begin()->first.second == gw(z_loc));

    Tensor2 xy = local_double_bracket(g, ein + 1, y_loc + 1, co);
    REQUIRE(xy.terms().size() == 1);
    CHECK(xy.terms().begin()->second == co.w1);
    CHECK(xy.terms().begin()->first.first == Word::one());
    CHECK(xy.terms().begin()->first.second == gw(ein) * gw(y_loc));

    // [[z^-1, y]] = w3 (1 (x) z^-1 y)
    Tensor2 ziy = local_double_bracket(g, -(z_loc + 1), y_loc + 1, co);
    REQUIRE(ziy.terms().size() == 1);
    CHECK(ziy.terms().begin()->second == co.w3);
    CHECK(ziy.terms().begin()->first.first == Word::one());
    CHECK(ziy.terms().begin()->first.second == Word::gen(z_loc + 1, -1) * gw(y_loc));

    // [[x, y^-1]] = -w1 (y^-1 (x) x)
    Tensor2 xyi = local_double_bracket(g, ein + 1, -(y_loc + 1), co);
    REQUIRE(xyi.terms().size() == 1);
    CHECK(xyi.terms().begin()->second == -co.w1);
    CHECK(xyi.terms().begin()->first.first == Word::gen(y_loc + 1, -1));
    CHECK(xyi.terms().begin()->first.second == gw(ein));

    // [[y^-1, x^-1]] = -w1 (1 (x) y^-1 x^-1)
    Tensor2 yixi = local_double_bracket(g, -(y_loc + 1), -(ein + 1), co);
    REQUIRE(yixi.terms().size() == 1);
    CHECK(yixi.terms().begin()->second == -co.w1);
    CHECK(yixi.terms().begin()->first.first == Word::one());
    CHECK(yixi.terms().begin()->first.second == Word::gen(y_loc + 1, -1) * Word::gen(ein + 1, -1));

    // skew symmetry of the whole engine
    Tensor2 zy = local_double_bracket(g, z_loc + 1, y_loc + 1, co);
    REQUIRE(zy.terms().size() == 1);
    CHECK(zy.terms().begin()->second == -co.w3);
}

TEST_CASE("X,Y loop brackets reproduce the based tables") {
    int n = 5;
    PentagramNet pn(n, CutConvention::Diagonal);
    const Network& g = pn.torus();
    BracketCoeffs co = BracketCoeffs::standard();

    auto XL = [&](int i) { return pn.X_loop(wrap1(i, n)); };
    auto YL = [&](int i) { return pn.Y_loop(wrap1(i, n)); };
    BasedLoop ZL = pn.Z_loop();
    Word Zw = ZL.word();

    auto expect_plain = [&](const BasedLoop& a, const BasedLoop& b) { return NCPoly(a.word() * b.word()); };
    auto expect_conj = [&](const BasedLoop& a, const BasedLoop& b) {
        return NCPoly(a.word() * Zw.inverse() * b.word() * Zw);
    };
    auto br = [&](const BasedLoop& f, const BasedLoop& gl) { return loop_bracket(g, f, gl, co); };

    // generic entries (indices where no conjugation appears)
    CHECK(cyclic_equal(br(XL(5), XL(4)), expect_plain(XL(5), XL(4))));
    CHECK(cyclic_equal(br(YL(5), YL(4)), expect_plain(YL(5), YL(4))));
    CHECK(cyclic_equal(br(YL(5), YL(3)), expect_plain(YL(5), YL(3))));
    CHECK(cyclic_equal(br(YL(4), XL(4)), expect_plain(YL(4), XL(4))));
    CHECK(cyclic_equal(br(YL(5), XL(4)), expect_plain(YL(5), XL(4))));
    CHECK(cyclic_equal(br(XL(5), YL(4)), expect_plain(XL(5), YL(4))));
    CHECK(cyclic_equal(br(XL(5), YL(3)), expect_plain(XL(5), YL(3))));

    // distance >= 3 vanishes
    CHECK(br(XL(4), XL(1)).is_zero());
    CHECK(cyclic_project(br(YL(4), YL(1))).empty());

    // the exceptional entries conjugate by Z
    CHECK(cyclic_equal(br(XL(3), XL(2)), expect_conj(XL(3), XL(2))));
    CHECK(cyclic_equal(br(YL(3), YL(2)), expect_conj(YL(3), YL(2))));
    CHECK(cyclic_equal(br(YL(3), XL(2)), expect_conj(YL(3), XL(2))));
    CHECK(cyclic_equal(br(XL(3), YL(2)), expect_conj(XL(3), YL(2))));
    CHECK(cyclic_equal(br(YL(3), YL(1)), expect_conj(YL(3), YL(1))));
    CHECK(cyclic_equal(br(YL(4), YL(2)), expect_conj(YL(4), YL(2))));
    CHECK(cyclic_equal(br(XL(3), YL(1)), expect_conj(XL(3), YL(1))));
    CHECK(cyclic_equal(br(XL(4), YL(2)), expect_conj(XL(4), YL(2))));

    // Z is a Casimir (through the Leibniz route; Z meets the based loops
    // anti-parallel)
    BracketCoeffs std_co = BracketCoeffs::standard();
    for (int i = 1; i <= n; ++i) {
        NCPoly zx = double_bracket_leibniz(g, Zw, XL(i).word(), std_co).mu();
        CHECK(cyclic_project(zx).empty());
        NCPoly zy = double_bracket_leibniz(g, Zw, YL(i).word(), std_co).mu();
        CHECK(cyclic_project(zy).empty());
    }
}

TEST_CASE("Leibniz expansion agrees with the loop bracket modulo cyclic words") {
    int n = 5;
    PentagramNet pn(n, CutConvention::Diagonal);
    const Network& g = pn.torus();
    BracketCoeffs co = BracketCoeffs::standard();
    std::vector<BasedLoop> loops;
    for (int i = 1; i <= n; ++i) {
        loops.push_back(pn.x_loop(i));
        loops.push_back(pn.y_loop(i));
        loops.push_back(pn.X_loop(i));
        loops.push_back(pn.Y_loop(i));
    }
    int checked = 0;
    for (size_t a = 0; a < loops.size(); ++a)
        for (size_t b = 0; b < loops.size(); ++b) {
            if (a == b) continue;
            NCPoly vialoops;
            try {
                vialoops = loop_bracket(g, loops[a], loops[b], co);
            } catch (const PatternMismatch&) {
                continue; // anti-parallel pair
            }
            NCPoly vialeibniz = double_bracket_leibniz(g, loops[a].word(), loops[b].word(), co).mu();
            CHECK(cyclic_equal(vialoops, vialeibniz));
            ++checked;
        }
    CHECK(checked > 100);
}

TEST_CASE("antisymmetry and Jacobi after cyclic projection") {
    int n = 5;
    PentagramNet pn(n, CutConvention::Diagonal);
    const Network& g = pn.torus();
    BracketCoeffs co = BracketCoeffs::standard();

    std::vector<BasedLoop> pool;
    for (int i = 1; i <= n; ++i) {
        pool.push_back(pn.x_loop(i));
        pool.push_back(pn.y_loop(i));
    }
    pool.push_back(pn.z_loop());

    Rng rng(404);
    auto bracket_poly = [&](const NCPoly& F, const NCPoly& G) {
        NCPoly out;
        for (auto& [wf, cf] : F.terms())
            for (auto& [wg, cg] : G.terms()) {
                if (wf.empty() || wg.empty()) continue;
                NCPoly b = loop_bracket(g, loop_from_word(wf), loop_from_word(wg), co);
                out += b.scaled(cf * cg);
            }
        return out;
    };

    for (int trial = 0; trial < 60; ++trial) {
        const BasedLoop& f = pool[rng.next() % pool.size()];
        const BasedLoop& h = pool[rng.next() % pool.size()];
        const BasedLoop& k = pool[rng.next() % pool.size()];
        NCPoly F(f.word()), H(h.word()), K(k.word());

        NCPoly anti = bracket_poly(F, H) + bracket_poly(H, F);
        CHECK(cyclic_project(anti).empty());

        NCPoly jac = bracket_poly(F, bracket_poly(H, K)) + bracket_poly(H, bracket_poly(K, F)) +
                     bracket_poly(K, bracket_poly(F, H));
        CHECK(cyclic_project(jac).empty());
    }
}

#include <doctest.h>

#include "bhl/context.hpp"
#include "bhl/examples.hpp"
#include "bhl/hopf.hpp"
#include "bhl/yd.hpp"

using namespace bhl;

namespace {

SVec prod(const HopfData& H, Index a, Index b) { return H.M.column(a * H.dim + b); }

SVec scaled(SVec v, const Cyc& c) { return scale(v, c); }

}  // namespace

TEST_CASE("group algebras") {
    CHECK(group_algebra(1)->dim == 1);
    CHECK(check_hopf(*group_algebra(1)).all_pass());
    HopfPtr K2 = group_algebra(2);
    CHECK(!map_equal(K2->antipode, LinMap::identity({2})));
    CHECK(check_hopf(*group_algebra(4)).all_pass());
    CHECK(K2->S.column(1) == SVec{Term{1, Cyc(1)}});
    HopfPtr K5 = group_algebra(5);
    CHECK(K5->S.column(1)[0].i == 4);
    try {
        group_algebra(0);
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "bad-family-params");
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate_family({1, 1, {2}, 1}), AlgebraError);
    CHECK_THROWS_AS(validate_family({2, 1, {5}, 0}), AlgebraError);
    CHECK_THROWS_AS(validate_family({2, 2, {1}, 0}), AlgebraError);
    CHECK_THROWS_AS(validate_family({0, 0, {}, 0}), AlgebraError);
    CHECK(valid_s({2, 1, {1}, 0}) == std::vector<int>{2});
    CHECK(valid_s({2, 2, {1, 3}, 0}) == std::vector<int>{2});
    CHECK(s_valid({3, 1, {1}, 0}, 3));
    CHECK(!s_valid({3, 1, {1}, 0}, 1));
}

TEST_CASE("H(1,1,(1)) is the Sweedler algebra") {
    HopfPtr H = hmnd({1, 1, {1}, 0}), S = sweedler();
    CHECK(H->dim == 4);
    CHECK(!map_equal(H->mult, S->mult));
    CHECK(!map_equal(H->comult, S->comult));
    CHECK(!map_equal(H->antipode, S->antipode));
    CHECK(!map_equal(H->counit, S->counit));
}

TEST_CASE("H(2,1,(1)): g x = i x g") {
    HopfPtr H = hmnd({2, 1, {1}, 0});
    CHECK(H->dim == 8);
    CHECK(check_hopf(*H).all_pass());
    Index g = 2, x = 1;
    CHECK(prod(*H, g, x) == scaled(prod(*H, x, g), Cyc::root(4, 1)));
}

TEST_CASE("H(3,2,(1,1)): x1 x2 = -x2 x1") {
    HopfPtr H = hmnd({3, 2, {1, 1}, 0});
    CHECK(H->dim == 24);
    Index x1 = 2, x2 = 1;
    CHECK(prod(*H, x1, x2) == scaled(prod(*H, x2, x1), Cyc(-1)));
    CHECK(prod(*H, x1, x1).empty());
    CHECK(check_hopf(*H).all_pass());
}

TEST_CASE("family dimensions and g^m acting by -1") {
    for (const FamilyParams& p : {FamilyParams{1, 0, {}, 0}, FamilyParams{2, 1, {3}, 0}, FamilyParams{3, 1, {5}, 0},
                                  FamilyParams{2, 2, {1, 3}, 0}, FamilyParams{1, 3, {1, 1, 1}, 0}}) {
        HopfPtr H = hmnd(p);
        CHECK(H->dim == 2 * p.m << p.n);
        Index gm = (Index)p.m << p.n;
        for (int i = 1; i <= p.n; ++i) {
            Index xi = (Index)1 << (p.n - i);
            CHECK(prod(*H, gm, xi) == scaled(prod(*H, xi, gm), Cyc(-1)));
        }
    }
}

TEST_CASE("R-matrices of the family") {
    LinMap R = hmnd_r({1, 1, {1}, 1});
    Cyc h(1, 2);
    for (Index a = 0; a < 4; ++a)
        for (Index b = 0; b < 4; ++b) {
            Cyc want(0);
            if (a % 2 == 0 && b % 2 == 0) want = (a == 2 && b == 2) ? -h : h;
            CHECK(R.at(a * 4 + b, 0) == want);
        }
    FamilyParams p{2, 1, {1}, 2};
    CHECK(check_quasitriangular(*hmnd(p), hmnd_r(p)).all_pass());
    CHECK(is_triangular(*hmnd(p), hmnd_r(p)));
    try {
        hmnd_r({2, 1, {1}, 1});
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "bad-s");
    }
}

TEST_CASE("triangular iff s = m") {
    for (int m = 1; m <= 3; ++m)
        for (int d = 1; d < 2 * m; d += 2)
            for (int s : valid_s({m, 1, {d}, 0})) {
                FamilyParams p{m, 1, {d}, s};
                HopfPtr H = hmnd(p);
                LinMap R = hmnd_r(p);
                CHECK(check_quasitriangular(*H, R).all_pass());
                CHECK(is_triangular(*H, R) == (s == m));
            }
    // without the x_i every s is allowed, and s = 0 gives the trivial R
    FamilyParams z{2, 0, {}, 0};
    CHECK(is_triangular(*hmnd(z), hmnd_r(z)));
    z.s = 1;
    CHECK(!is_triangular(*hmnd(z), hmnd_r(z)));
}

TEST_CASE("R extends along the inclusion") {
    for (const FamilyParams& p : {FamilyParams{1, 1, {1}, 1}, FamilyParams{2, 2, {1, 3}, 2}, FamilyParams{3, 2, {1, 1}, 3}}) {
        FamilyParams base{p.m, p.n - 1, std::vector<int>(p.d.begin(), p.d.end() - 1), p.s};
        LinMap iota = hmnd_inclusion(p);
        CHECK(!map_equal(compose(tensor_product(iota, iota), hmnd_r(base)), hmnd_r(p)));
        HopfPtr A = hmnd(base), H = hmnd(p);
        CHECK(!map_equal(compose(iota, A->mult), compose(H->mult, tensor_product(iota, iota))));
    }
}

TEST_CASE("the braided line") {
    BraidedHopf b = braided_line({1, 1, {1}, 1});
    CHECK(b.A->dim == 2);
    CHECK(b.B->dim == 2);
    SVec dx = b.B->D.column(1);
    CHECK(dx == SVec{Term{0 * 2 + 1, Cyc(1)}, Term{1 * 2 + 0, Cyc(1)}});
    CHECK(check_hopf(*b.B).all_pass());
    CHECK(is_commutative(*b.B));
    CHECK(is_cocommutative(*b.B));
    CHECK(b.B->S.column(1) == SVec{Term{1, Cyc(-1)}});
    BraidedHopf c = braided_line({2, 2, {1, 1}, 2});
    CHECK(c.A->dim == 8);
    CHECK(check_hopf(*c.B).all_pass());
    CHECK_THROWS_AS(braided_line({2, 0, {}, 2}), AlgebraError);
}

TEST_CASE("every module of a quasitriangular algebra is a YD module") {
    FamilyParams p{2, 1, {1}, 2};
    HopfPtr A = hmnd(p);
    LinMap R = hmnd_r(p);
    CHECK(check_yd(qt_induced_yd(A, R, A->obj, A->M)).all_pass());
    for (int a = 0; a < 4; ++a) {
        Obj chi = character(*A, 2, 1, a);
        CHECK(check_yd(qt_induced_yd(A, R, chi, *chi.act)).all_pass());
    }
}

TEST_CASE("transparency demonstration") {
    for (const FamilyParams& p : {FamilyParams{1, 1, {1}, 1}, FamilyParams{2, 1, {1}, 2}, FamilyParams{3, 2, {1, 1}, 3}}) {
        Report r = transparency_demo(p);
        CAPTURE(family_str(p));
        CHECK(r.all_pass());
        CHECK(r.passed("transparent"));
    }
}

TEST_CASE("the anyonic line is not transparent") {
    BraidedHopf an = anyonic_line();
    CHECK(an.B->dim == 4);
    CHECK(check_hopf(*an.B).all_pass());
    CHECK(!is_transparent(*an.ctx, an.B->obj, standard_probes(*an.ctx)).ok);
}

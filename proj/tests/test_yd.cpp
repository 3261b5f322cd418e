#include <doctest.h>

#include "bhl/examples.hpp"
#include "bhl/hopf.hpp"
#include "bhl/yd.hpp"

using namespace bhl;

namespace {

const std::vector<Variant> kVariants = {Variant::LL,      Variant::RR,     Variant::LR_Hop,     Variant::LR_Hcop,
                                        Variant::RL_Hcop, Variant::RL_Hop, Variant::RR_mixed_G1};

const std::vector<Family> kFamilies = {Family::L,  Family::R,  Family::P1, Family::M1, Family::P2,
                                       Family::M2, Family::P3, Family::M3, Family::P4, Family::M4};

std::vector<HopfPtr> algebras() { return {group_algebra(2), group_algebra(3), sweedler()}; }

// H acting on M (x) N through Delta^cop: h.(m (x) n) = h2 m (x) h1 n
Morphism cop_diagonal(const YDModule& M, const YDModule& N) {
    const HopfData& H = *M.H;
    return Diagram(H.ctx, {H.obj, M.obj, N.obj})
        .comul(H, 0)
        .braid(0)
        .braid(1)
        .op(2, 2, N.act, {N.obj})
        .op(0, 2, M.act, {M.obj})
        .build();
}

}  // namespace

TEST_CASE("adjoint module of k[Z2] has the trivial coaction on group-likes") {
    HopfPtr K = group_algebra(2);
    YDModule A = adjoint_yd_module(K);
    SVec c = A.coact.column(1);
    REQUIRE(c.size() == 1);
    CHECK(c[0].i == 1 * 2 + 0);
    CHECK(c[0].c.is_one());
}

TEST_CASE("adjoint modules satisfy every variant") {
    for (const auto& H : algebras())
        for (Variant v : kVariants) {
            YDModule A = adjoint_yd_module(H, v);
            CAPTURE(H->name);
            CAPTURE(variant_str(v));
            CHECK(check_yd_structure(A).all_pass());
            CHECK(check_yd(A).all_pass());
        }
    HopfPtr H = sweedler();
    YDModule A = adjoint_yd_module(H);
    Morphism counit_law = Diagram(H->ctx, {H->obj}).op(0, 1, A.coact, {H->obj, H->obj}).counit(*H, 1).build();
    CHECK(!map_equal(counit_law, Morphism::identity({4})));
}

TEST_CASE("trivial structures pass every variant") {
    for (const auto& H : algebras())
        for (Variant v : kVariants) CHECK(check_yd(trivial_yd(H, v, 2)).all_pass());
}

TEST_CASE("regular action with the trivial coaction is not a YD module") {
    HopfPtr H = sweedler();
    YDModule M = trivial_yd(H, Variant::LR_Hop, 1);
    M.obj = H->obj;
    M.act = H->M;
    M.coact = Diagram(H->ctx, {H->obj}).unit(*H, 1).build();
    CHECK(check_yd_structure(M).all_pass());
    Report r = check_yd(M);
    CHECK(r.find("yd-primary")->status == Status::Fail);
    CHECK(!r.find("yd-primary")->witness.empty());
    CHECK(r.passed("yd-forms-agree"));
}

TEST_CASE("coactions induced by R-matrices") {
    FamilyParams z2{1, 0, {}, 1};
    HopfPtr K = hmnd(z2);
    LinMap R = hmnd_r(z2);
    Obj sign = character(*K, 1, 0, 1);
    YDModule S = qt_induced_yd(K, R, sign, *sign.act);
    CHECK(check_yd(S).all_pass());
    // R_1 on the sign line: lambda(v) = g (x) v
    SVec c = S.coact.column(0);
    REQUIRE(c.size() == 1);
    CHECK(c[0].i == 1);

    Obj triv = character(*K, 1, 0, 0);
    YDModule T = qt_induced_yd(K, R, triv, *triv.act);
    CHECK(!map_equal(T.coact, Diagram(K->ctx, {Obj{{1}, std::nullopt}}).unit(*K, 0).build()));

    YDModule reg = qt_induced_yd(K, R, K->obj, K->M);
    CHECK(reg.variant == Variant::LL);
    CHECK(check_yd(reg).all_pass());
    Morphism right = Diagram(K->ctx, {K->obj, K->obj}).mul(*K, 0).build();
    CHECK(check_yd(qt_induced_yd(K, R, K->obj, right, false)).all_pass());
}

TEST_CASE("graded lines over k[Z3]") {
    HopfPtr K = group_algebra(3);
    for (Variant v : kVariants)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) CHECK(check_yd(graded_line(K, 3, v, a, b)).all_pass());
}

TEST_CASE("tensor products") {
    HopfPtr H = sweedler();
    YDModule A = adjoint_yd_module(H);
    YDModule T = trivial_yd(H, Variant::LR_Hop);
    CHECK(same_structure(yd_tensor(A, T), A));
    CHECK(same_structure(yd_tensor(T, A), A));
    YDModule AA = yd_tensor(A, A);
    CHECK(check_yd(AA).all_pass());
    CHECK(same_structure(yd_tensor(AA, A), yd_tensor(A, AA)));
    try {
        yd_tensor(A, adjoint_yd_module(H, Variant::LL));
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "variant-mismatch");
    }
}

TEST_CASE("braidings") {
    HopfPtr K = group_algebra(2);
    YDModule L = adjoint_yd_module(K, Variant::LL);
    CHECK(!map_equal(yd_braiding(L, L, Family::L), Morphism::swap({2}, {2})));

    HopfPtr H = sweedler();
    YDModule A = adjoint_yd_module(H);
    Morphism f = yd_braiding(A, A, Family::P1), g = yd_braiding(A, A, Family::P1, true);
    CHECK(!map_equal(compose(g, f), Morphism::identity({4, 4})));
    CHECK(!map_equal(compose(f, g), Morphism::identity({4, 4})));
    try {
        yd_braiding(A, A, Family::L);
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "variant-mismatch");
    }
}

TEST_CASE("Phi^{1+} sends m (x) n to n_0 (x) n_1 m") {
    HopfPtr H = sweedler();
    YDModule A = adjoint_yd_module(H);
    std::vector<SVec> cols;
    for (Index m = 0; m < 4; ++m)
        for (Index n = 0; n < 4; ++n) {
            SVec out;
            for (const auto& t : A.coact.column(n)) {
                Index n0 = t.i / 4, n1 = t.i % 4;
                for (const auto& u : H->M.column(n1 * 4 + m)) out.push_back(Term{n0 * 4 + u.i, t.c * u.c});
            }
            canonicalize(out);
            cols.push_back(out);
        }
    Morphism expect = Morphism::from_columns({4, 4}, {4, 4}, cols);
    CHECK(!map_equal(yd_braiding(A, A, Family::P1), expect));
}

TEST_CASE("braiding laws for every family") {
    for (const auto& H : algebras())
        for (Family f : kFamilies) {
            Variant v = family_variant(f);
            YDModule A = adjoint_yd_module(H, v), T = trivial_yd(H, v, 2);
            CAPTURE(H->name);
            CAPTURE(family_str(f));
            CHECK(check_braiding_laws(f, A, T, A).all_pass());
            if (H->dim <= 3) CHECK(check_braiding_laws(f, A, A, A).all_pass());
        }
}

TEST_CASE("Phi^{1+} preserves both structures but is not H^cop-linear") {
    HopfPtr H = sweedler();
    YDModule A = adjoint_yd_module(H);
    YDModule AA = yd_tensor(A, A);
    Morphism phi = yd_braiding(A, A, Family::P1);
    CHECK(!check_yd_morphism(AA, AA, phi));
    Morphism lhs = compose(phi, cop_diagonal(A, A));
    Morphism rhs = compose(cop_diagonal(A, A), tensor_product(Morphism::identity({4}), phi));
    CHECK(map_equal(lhs, rhs));
}

TEST_CASE("equivalent forms agree on mutants") {
    size_t count = 0;
    for (const auto& H : algebras())
        for (Variant v : kVariants) {
            for (const auto& M : yd_mutants(adjoint_yd_module(H, v), 4)) {
                CHECK(check_yd(M).passed("yd-forms-agree"));
                ++count;
            }
        }
    CHECK(count >= 50);
}

TEST_CASE("mutants differ from the original in one entry") {
    YDModule A = adjoint_yd_module(sweedler());
    auto ms = yd_mutants(A, 3);
    REQUIRE(ms.size() == 3);
    for (const auto& M : ms) CHECK(!same_structure(M, A));
}

TEST_CASE("direct sums and injections") {
    HopfPtr H = sweedler();
    YDModule A = adjoint_yd_module(H), T = trivial_yd(H, Variant::LR_Hop);
    YDModule S = yd_direct_sum(A, T);
    CHECK(S.obj.dim() == 5);
    CHECK(check_yd(S).all_pass());
    CHECK(!check_yd_morphism(A, S, yd_injection(A, T, 0)));
    CHECK(!check_yd_morphism(T, S, yd_injection(A, T, 1)));
}

TEST_CASE("variant and family names roundtrip") {
    for (Variant v : kVariants) CHECK(parse_variant(variant_str(v)) == v);
    for (Family f : kFamilies) CHECK(parse_family(family_str(f)) == f);
    CHECK_THROWS(parse_variant("nope"));
}

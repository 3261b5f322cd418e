#include <doctest.h>

#include "bhl/bosonization.hpp"
#include "bhl/context.hpp"
#include "bhl/hopf.hpp"

using namespace bhl;

namespace {

// the unit object k as a Hopf algebra in the module category of bh
BraidedHopf trivial_b(const BraidedHopf& bh) {
    const HopfData& A = *bh.A;
    LinMap one({}, {1}), eps({1}, {}), id = LinMap::identity({1});
    one.at(0, 0) = Cyc(1);
    eps.at(0, 0) = Cyc(1);
    LinMap act({A.dim, 1}, {1});
    for (int a = 0; a < A.dim; ++a) act.at(0, a) = A.counit.at(0, a);
    LinMap mult({1, 1}, {1}), comult({1}, {1, 1});
    mult.at(0, 0) = Cyc(1);
    comult.at(0, 0) = Cyc(1);
    BraidedHopf out = bh;
    out.B = make_hopf("k", mult, comult, one, eps, id, id, bh.ctx, Morphism(act));
    return out;
}

}  // namespace

TEST_CASE("coaction induced by R on the braided line") {
    BraidedHopf bh = braided_line({1, 1, {1}, 1});
    YDModule L = r_coaction(bh, Side::Left);
    CHECK(L.variant == Variant::LL);
    CHECK(L.coact.column(0) == SVec{Term{0, Cyc(1)}});
    CHECK(L.coact.column(1) == SVec{Term{1 * 2 + 1, Cyc(1)}});
    YDModule R = r_coaction(bh, Side::Right);
    CHECK(R.variant == Variant::RR);
    CHECK(R.coact.column(0) == SVec{Term{0, Cyc(1)}});
    CHECK(R.coact.column(1) == SVec{Term{1 * 2 + 1, Cyc(1)}});
    CHECK(check_yd(L).all_pass());
    CHECK(check_yd(R).all_pass());
}

TEST_CASE("trivial B gives the trivial coaction and A itself") {
    BraidedHopf bh = trivial_b(braided_line({2, 1, {1}, 2}));
    YDModule L = r_coaction(bh);
    CHECK(!map_equal(L.coact, Diagram(bh.A->ctx, {Obj{{1}, std::nullopt}}).unit(*bh.A, 0).build()));
    HopfPtr K = cross_product(bh);
    CHECK(K->dim == bh.A->dim);
    CHECK(!map_equal(K->mult, bh.A->mult));
    CHECK(!map_equal(K->comult, bh.A->comult));
    CHECK(!map_equal(K->antipode, bh.A->antipode));
}

TEST_CASE("the induced structure over H(2,1,(1))") {
    BraidedHopf bh = braided_line({2, 2, {1, 1}, 2});
    YDModule L = r_coaction(bh);
    CHECK(check_yd(L).all_pass());
    try {
        r_coaction(bh, Side::Right);
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "not-supported");
    }
    // the multiplication of B is colinear for the codiagonal coaction
    CHECK(!check_yd_morphism(yd_tensor(L, L), L, bh.B->M));
    // the braiding induced by R is Phi^L on B
    CHECK(!map_equal(yd_braiding(L, L, Family::L), bh.ctx->braiding(bh.B->obj, bh.B->obj)));
}

TEST_CASE("R that is not quasitriangular is refused") {
    BraidedHopf bh = braided_line({1, 1, {1}, 1});
    LinMap bad({}, {2, 2});
    bad.at(0, 0) = Cyc(2);
    bh.R = bad;
    try {
        r_coaction(bh);
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "not-quasitriangular");
    }
}

TEST_CASE("cross products are Hopf algebras") {
    BraidedHopf bh = braided_line({1, 1, {1}, 1});
    HopfPtr K = cross_product(bh);
    CHECK(K->dim == 4);
    CHECK(check_hopf(*K).all_pass());
    HopfPtr Kr = cross_product(bh, Side::Right);
    CHECK(check_hopf(*Kr).all_pass());
    CHECK(check_hopf(*cross_product(braided_line({2, 2, {1, 1}, 2}))).all_pass());
    CHECK(check_hopf(*cross_product(braided_line({2, 1, {1}, 2}), Side::Right)).all_pass());
}

TEST_CASE("Radford biproduct decompositions") {
    CHECK(biproduct_decompose_check({1, 1, {1}, 1}).all_pass());
    CHECK(biproduct_decompose_check({2, 2, {1, 1}, 2}).all_pass());
    CHECK(biproduct_decompose_check({2, 1, {3}, 2}).all_pass());
    try {
        biproduct_decompose_check({1, 1, {2}, 1});
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "bad-family-params");
    }
}

TEST_CASE("modules over the cross product") {
    BraidedHopf bh = braided_line({1, 1, {1}, 1});
    HopfPtr K = cross_product(bh);
    Obj reg{{K->dim}, std::nullopt};
    auto [onA, onB] = smash_restrict(bh, reg, K->M);
    CHECK(!check_smash_compat(bh, reg, onA, onB));
    CHECK(!map_equal(smash_action(bh, reg, onA, onB), K->M));

    // diagonal action on K (x) K
    Obj reg2{{K->dim * K->dim}, std::nullopt};
    Morphism diag = Diagram(K->ctx, {K->obj, K->obj, K->obj})
                        .comul(*K, 0)
                        .braid(1)
                        .op(0, 2, K->M, {K->obj})
                        .op(1, 2, K->M, {K->obj})
                        .merge(0, 2, reg2)
                        .build();
    Morphism diag_flat = compose(diag, Morphism::reshape({K->dim, K->dim * K->dim}, {K->dim, K->dim, K->dim}));
    auto [a2, b2] = smash_restrict(bh, reg2, diag_flat);
    CHECK(!check_smash_compat(bh, reg2, a2, b2));

    // the regular A-action with b.m = (coefficient of 1 + coefficient of x) m
    const HopfData& A = *bh.A;
    Obj m{{A.dim}, std::nullopt};
    LinMap actB({2, A.dim}, {A.dim});
    for (int b = 0; b < 2; ++b)
        for (int v = 0; v < A.dim; ++v) actB.at(v, b * A.dim + v) = Cyc(1);
    auto w = check_smash_compat(bh, m, A.M, actB);
    CHECK(w);
}

#include <doctest.h>

#include <set>

#include "bhl/context.hpp"
#include "bhl/double.hpp"
#include "bhl/examples.hpp"
#include "bhl/functors.hpp"
#include "bhl/hopf.hpp"

using namespace bhl;

TEST_CASE("matched pairs") {
    DoubleData D2 = drinfeld_double(group_algebra(2));
    CHECK(check_matched_pair(D2.mp).all_pass());
    CHECK(check_matched_pair(trivial_matched_pair(group_algebra(2), group_algebra(3))).all_pass());
    CHECK(check_matched_pair(trivial_matched_pair(group_algebra(3), group_algebra(3))).all_pass());

    DoubleData D = drinfeld_double(sweedler());
    MatchedPairData bad = D.mp;
    LinMap a = bad.act_BH.dense();
    a.at(1, 1 * 4 + 0) += Cyc(1);
    bad.act_BH = a;
    Report r = check_matched_pair(bad);
    CHECK(!r.all_pass());
    CHECK(r.overall() == Status::Fail);
    try {
        bicrossproduct(bad);
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "not-matched");
    }
}

TEST_CASE("bicrossproduct with trivial actions is the tensor product") {
    HopfPtr P = bicrossproduct(trivial_matched_pair(group_algebra(2), group_algebra(3)));
    CHECK(P->dim == 6);
    CHECK(check_hopf(*P).all_pass());
    CHECK(is_commutative(*P));
}

TEST_CASE("Drinfeld doubles") {
    DoubleData D2 = drinfeld_double(group_algebra(2));
    CHECK(D2.D->dim == 4);
    CHECK(is_commutative(*D2.D));
    CHECK(is_cocommutative(*D2.D));
    DoubleData D3 = drinfeld_double(group_algebra(3));
    CHECK(D3.D->dim == 9);
    CHECK(check_hopf(*D3.D).all_pass());
    DoubleData DS = drinfeld_double(sweedler());
    CHECK(DS.D->dim == 16);
    CHECK(check_hopf(*DS.D).all_pass());
    CHECK(!check_1S(DS));
    CHECK(check_double_structure(DS).all_pass());
    CHECK(!check_cross_relation(DS));
    CHECK(!is_commutative(*DS.D));
}

TEST_CASE("the double needs a transparent H") {
    BraidedHopf an = anyonic_line();
    try {
        drinfeld_double(an.B);
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "not-transparent-enough");
    }
}

TEST_CASE("R-matrix of the double") {
    DoubleData D2 = drinfeld_double(group_algebra(2));
    // two elementary tensors (1 (x) e_i) (x) (e^i (x) 1): the second legs span a 2-dimensional space
    std::set<Index> second;
    for (Index k = 0; k < 16; ++k)
        if (!D2.r_matrix.at(k, 0).is_zero()) second.insert(k % 4);
    CHECK(second.size() == 2);
    CHECK(check_quasitriangular(*D2.D, D2.r_matrix).all_pass());
    DoubleData DS = drinfeld_double(sweedler());
    CHECK(check_quasitriangular(*DS.D, DS.r_matrix).all_pass());
    CHECK(!is_triangular(*DS.D, DS.r_matrix));
    LinMap eps_id = compose(tensor_product(DS.D->counit, LinMap::identity({16})), DS.r_matrix);
    CHECK(!map_equal(eps_id, DS.D->unit));
    CHECK(!map_equal(double_r_matrix(DS), DS.r_matrix));
}

TEST_CASE("the first factor is the co-opposite dual") {
    HopfPtr H = sweedler();
    DoubleData D = drinfeld_double(H);
    HopfPtr Hs = dual_hopf(*H);
    CHECK(!map_equal(D.B->mult, Hs->mult));
    CHECK(!map_equal(D.B->comult, op_cop(*Hs, OpCop::Cop)->comult));
}

TEST_CASE("factor embeddings") {
    DoubleData D = drinfeld_double(sweedler());
    CHECK(!map_equal(compose(D.pi_B, D.iota_B), Morphism::identity({4})));
    CHECK(!map_equal(compose(D.pi_H, D.iota_H), Morphism::identity({4})));
    CHECK(!map_equal(compose(D.D->M, tensor_product(D.iota_H, D.iota_H)), compose(D.iota_H, D.H->M)));
    CHECK(!map_equal(compose(D.D->D, D.iota_B), compose(tensor_product(D.iota_B, D.iota_B), D.B->D)));
}

TEST_CASE("dual basis identities") {
    for (int n = 2; n <= 4; ++n) CHECK(!check_loop_identity(Context::vec(), Context::vec()->trivial({n})));
    CtxPtr ctx = cyclic_context(2, 1);
    CHECK(!check_loop_identity(ctx, regular_obj(*ctx->algebra())));
    CHECK(!check_yddh_monoidal(drinfeld_double(sweedler())));
}

TEST_CASE("Zhang conditions") {
    ZhangResult z = zhang_conditions(*group_algebra(3));
    CHECK(z.conditions.size() == 7);
    for (bool c : z.conditions) CHECK(c);
    CHECK(z.report.all_pass());

    BraidedHopf an = anyonic_line();
    Obj chi1 = character(*an.A, 2, 0, 1);
    ZhangResult t = zhang_conditions(*an.B, &chi1);
    for (bool c : t.conditions) CHECK(!c);
    REQUIRE(t.transparency);
    CHECK(!t.transparency->first);
    CHECK(!t.transparency->second);
    CHECK(t.report.all_pass());
}

TEST_CASE("commutativity lemma") {
    auto k = commutativity_lemma(drinfeld_double(group_algebra(2)));
    CHECK(k.d_commutative);
    CHECK(k.factors_commutative);
    CHECK(k.factors_cocommutative);
    CHECK(k.d_cocommutative);
    CHECK(k.report.all_pass());
    auto s = commutativity_lemma(drinfeld_double(sweedler()));
    CHECK(!s.d_commutative);
    CHECK(!s.factors_commutative);
    CHECK(!s.factors_cocommutative);
    CHECK(!s.d_cocommutative);
    CHECK(s.report.all_pass());
}

#include <doctest.h>

#include "bhl/context.hpp"
#include "bhl/examples.hpp"
#include "bhl/hopf.hpp"

using namespace bhl;

namespace {

Cyc scalar_of(const Morphism& f) { return f.dense().at(0, 0); }

}  // namespace

TEST_CASE("Vec braiding is the swap") {
    CtxPtr ctx = Context::vec();
    Obj X = ctx->trivial({2}), Y = ctx->trivial({3});
    CHECK(!map_equal(ctx->braiding(X, Y).dense(), vec_swap(2, 3)));
    CHECK(!map_equal(compose(ctx->braiding(X, Y, -1), ctx->braiding(X, Y)), Morphism::identity({2, 3})));
}

TEST_CASE("braiding of characters of k[Z4] under R_1") {
    CtxPtr ctx = cyclic_context(2, 1);
    const HopfData& A = *ctx->algebra();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Obj X = character(A, 2, 0, a), Y = character(A, 2, 0, b);
            CHECK(scalar_of(ctx->braiding(X, Y)) == Cyc::root(4, a * b));
            CHECK(scalar_of(ctx->braiding(X, Y, -1)) == Cyc::root(4, -a * b));
        }
}

TEST_CASE("super vector spaces from k[Z2]") {
    CtxPtr ctx = cyclic_context(1, 1);
    Obj sign = character(*ctx->algebra(), 1, 0, 1);
    CHECK(scalar_of(ctx->braiding(sign, sign)) == Cyc(-1).embed(2));
    Obj triv = character(*ctx->algebra(), 1, 0, 0);
    CHECK(scalar_of(ctx->braiding(sign, triv)) == Cyc(1).embed(2));
}

TEST_CASE("quasitriangular structures") {
    FamilyParams z2{1, 0, {}, 1};
    HopfPtr K2 = hmnd(z2);
    LinMap R1 = hmnd_r(z2);
    CHECK(check_quasitriangular(*K2, R1).all_pass());
    CHECK(is_triangular(*K2, R1));

    FamilyParams z4{2, 0, {}, 1};
    HopfPtr K4 = hmnd(z4);
    LinMap R = hmnd_r(z4);
    CHECK(check_quasitriangular(*K4, R).all_pass());
    CHECK(!is_triangular(*K4, R));

    HopfPtr H = sweedler();
    LinMap one({}, {4, 4});
    one.at(0, 0) = Cyc(1);
    Report r = check_quasitriangular(*H, one);
    CHECK(r.find("quasi-cocommutative")->status == Status::Fail);
}

TEST_CASE("transparency") {
    CtxPtr vec = Context::vec();
    CHECK(is_transparent(*vec, vec->trivial({3}), standard_probes(*vec)).ok);

    CtxPtr ctx = cyclic_context(2, 1);
    const HopfData& A = *ctx->algebra();
    Obj chi1 = character(A, 2, 0, 1), chi2 = character(A, 2, 0, 2);
    Transparency t = is_transparent(*ctx, chi1, {{"chi1", chi1}});
    CHECK(!t.ok);
    CHECK(t.probe == "chi1");
    REQUIRE(t.witness);
    CHECK(t.witness->lhs == Cyc(-1).embed(4));
    std::vector<Probe> chars;
    for (int b = 0; b < 4; ++b) chars.push_back({"chi" + std::to_string(b), character(A, 2, 0, b)});
    CHECK(is_transparent(*ctx, chi2, chars).ok);
    CHECK(is_transparent(*ctx, chi2, standard_probes(*ctx)).ok);
}

TEST_CASE("hexagons on probe triples") {
    for (CtxPtr ctx : {Context::vec(), cyclic_context(2, 1), cyclic_context(1, 1), cyclic_context(3, 1)}) {
        auto probes = standard_probes(*ctx, 1);
        for (const auto& x : probes)
            for (const auto& y : probes)
                for (const auto& z : probes) {
                    if (x.obj.dim() * y.obj.dim() * z.obj.dim() > 64) continue;
                    CHECK(!check_hexagons(ctx, x.obj, y.obj, z.obj));
                }
    }
}

TEST_CASE("the braiding is natural along module maps") {
    CtxPtr ctx = cyclic_context(2, 1);
    const HopfData& A = *ctx->algebra();
    Obj reg = regular_obj(A), chi1 = character(A, 2, 0, 1);
    // right multiplication by g is an A-module endomorphism of the regular module
    Morphism g = Morphism::element({4}, basis_vec(1));
    Morphism rg = Diagram(ctx, {reg}).insert(1, g, {reg}).mul(A, 0).build();
    CHECK(!check_context_linear(*ctx, rg, reg, reg));
    CHECK(!check_braiding_natural(*ctx, rg, reg, reg, chi1));
    CHECK(!check_braiding_natural(*ctx, rg, reg, reg, reg));
}

TEST_CASE("braiding linearity") {
    for (int n = 1; n <= 4; ++n) {
        auto b = check_braiding_linearity(*group_algebra(n));
        CHECK(b.report.all_pass());
        CHECK(b.linear);
        CHECK(b.colinear);
    }
    auto s = check_braiding_linearity(*sweedler());
    CHECK(s.report.all_pass());
    CHECK(!s.linear);
    CHECK(!s.cocommutative);
    auto d = check_braiding_linearity(*dual_hopf(*sweedler()));
    CHECK(d.report.all_pass());
    CHECK(!d.colinear);
    CHECK(!d.commutative);
}

TEST_CASE("probe depth") {
    CHECK_THROWS(standard_probes(*Context::vec(), 0));
    CtxPtr ctx = cyclic_context(2, 1);
    CHECK(standard_probes(*ctx, 2).size() > standard_probes(*ctx, 1).size());
}

#include <doctest.h>

#include "bhl/context.hpp"
#include "bhl/examples.hpp"
#include "bhl/functors.hpp"
#include "bhl/hopf.hpp"
#include "bhl/suite.hpp"

using namespace bhl;

namespace {

const std::vector<FunctorId> kAll = {
    FunctorId::F,  FunctorId::G,      FunctorId::F_l, FunctorId::G_l, FunctorId::L,     FunctorId::A,  FunctorId::A_inv,
    FunctorId::Ch, FunctorId::Ch1,    FunctorId::Ch2, FunctorId::Bfun, FunctorId::E,    FunctorId::E_inv, FunctorId::F1,
    FunctorId::F1_inv, FunctorId::F2, FunctorId::F3,  FunctorId::F4,  FunctorId::S,     FunctorId::S_inv, FunctorId::T,
    FunctorId::T_inv, FunctorId::G1,  FunctorId::G2,  FunctorId::K,   FunctorId::K_inv};

FunctorEnv& sweedler_env() {
    static FunctorEnv env(sweedler());
    return env;
}

Report run(FunctorId f, Property p, FunctorEnv& env) {
    auto [M, N] = builtin_functor_pair(f, env);
    return check_functor(f, M, N, env, p);
}

}  // namespace

TEST_CASE("functor and property names roundtrip") {
    for (FunctorId f : kAll) CHECK(parse_functor(functor_str(f)) == f);
    for (Property p : {Property::Roundtrip, Property::Monoidal, Property::Braided})
        CHECK(parse_property(property_str(p)) == p);
    CHECK_THROWS(parse_functor("Q"));
}

TEST_CASE("F on the regular D(sweedler)-module") {
    FunctorEnv& env = sweedler_env();
    DModule R = regular_dmodule(env.dbl());
    CHECK(!check_dmodule(R));
    Structure FR = apply_functor(FunctorId::F, R, env);
    const YDModule& Y = std::get<YDModule>(FR);
    CHECK(Y.variant == Variant::LR_Hop);
    CHECK(check_yd(Y).all_pass());
    Structure back = apply_functor(FunctorId::G, FR, env);
    CHECK(!map_equal(std::get<DModule>(back).act, R.act));
}

TEST_CASE("F is a braided monoidal isomorphism") {
    FunctorEnv& env = sweedler_env();
    DModule R = regular_dmodule(env.dbl());
    DModule RR = dmodule_tensor(R, R);
    for (Property p : {Property::Roundtrip, Property::Monoidal, Property::Braided})
        CHECK(check_functor(FunctorId::F, R, RR, env, p).all_pass());
}

TEST_CASE("the R-matrix braiding equals Psi") {
    FunctorEnv& env = sweedler_env();
    DModule R = regular_dmodule(env.dbl());
    CHECK(!map_equal(psi(R, R), psi_r_matrix(R, R)));
    FunctorEnv k2(group_algebra(2));
    DModule R2 = regular_dmodule(k2.dbl());
    CHECK(!map_equal(psi(R2, R2), psi_r_matrix(R2, R2)));
}

TEST_CASE("functors that respect everything") {
    FunctorEnv& env = sweedler_env();
    for (FunctorId f : {FunctorId::F, FunctorId::F_l, FunctorId::F1, FunctorId::A, FunctorId::E, FunctorId::S,
                        FunctorId::T, FunctorId::F2, FunctorId::F3, FunctorId::F4})
        for (Property p : {Property::Roundtrip, Property::Monoidal, Property::Braided}) {
            CAPTURE(functor_str(f));
            CAPTURE(property_str(p));
            CHECK(run(f, p, env).all_pass());
        }
}

TEST_CASE("E over k[Z3]") {
    FunctorEnv env(group_algebra(3));
    for (Property p : {Property::Roundtrip, Property::Monoidal, Property::Braided})
        CHECK(run(FunctorId::E, p, env).all_pass());
}

TEST_CASE("every functor inverts") {
    FunctorEnv& env = sweedler_env();
    for (FunctorId f : kAll) {
        CAPTURE(functor_str(f));
        CHECK(run(f, Property::Roundtrip, env).all_pass());
    }
}

TEST_CASE("L and ch are monoidal but not braided") {
    FunctorEnv& env = sweedler_env();
    for (FunctorId f : {FunctorId::L, FunctorId::Ch, FunctorId::Ch1, FunctorId::Ch2}) {
        CAPTURE(functor_str(f));
        CHECK(run(f, Property::Monoidal, env).all_pass());
        Report b = run(f, Property::Braided, env);
        CHECK(b.overall() == Status::Fail);
        CHECK(!b.checks.at(0).witness.empty());
    }
    CHECK(run(FunctorId::Bfun, Property::Monoidal, env).all_pass());
}

TEST_CASE("over k[Z2] every braiding is the swap and L is braided") {
    FunctorEnv env(group_algebra(2));
    CHECK(run(FunctorId::L, Property::Braided, env).all_pass());
    CHECK(run(FunctorId::Ch, Property::Braided, env).all_pass());
}

TEST_CASE("the displayed L does not produce a right-right YD module over sweedler") {
    FunctorEnv& env = sweedler_env();
    Structure out = apply_functor(FunctorId::L, adjoint_yd_module(env.H, Variant::LL), env);
    const YDModule& Y = std::get<YDModule>(out);
    CHECK(Y.variant == Variant::RR);
    Report r = check_yd_structure(Y);
    r.append(check_yd(Y));
    CHECK(!r.all_pass());
}

TEST_CASE("G1 acts through the coaction") {
    HopfPtr K = group_algebra(2);
    FunctorEnv env(K);
    YDModule M = adjoint_yd_module(K, Variant::RR);
    Structure out = apply_functor(FunctorId::G1, M, env);
    const YDModule& Y = std::get<YDModule>(out);
    CHECK(Y.variant == Variant::RR_mixed_G1);
    CHECK(check_yd(Y).all_pass());
    Morphism mu1 = Diagram(K->ctx, {K->obj, M.obj}).Si(*K, 0).ibraid(0).op(0, 2, M.act, {M.obj}).build();
    CHECK(!map_equal(Y.act, mu1));
    HopfPtr H = sweedler();
    FunctorEnv es(H);
    YDModule N = adjoint_yd_module(H, Variant::RR);
    YDModule Z = std::get<YDModule>(apply_functor(FunctorId::G1, N, es));
    CHECK(check_yd(Z).all_pass());
    CHECK(run(FunctorId::G1, Property::Monoidal, es).all_pass());
    CHECK(run(FunctorId::G2, Property::Monoidal, es).all_pass());
}

TEST_CASE("signature mismatches") {
    FunctorEnv& env = sweedler_env();
    try {
        apply_functor(FunctorId::L, adjoint_yd_module(env.H, Variant::LR_Hop), env);
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "signature-mismatch");
    }
    CHECK_THROWS_AS(apply_functor(FunctorId::F, adjoint_yd_module(env.H), env), AlgebraError);
}

TEST_CASE("triangles and dual basis identities") {
    FunctorEnv& env = sweedler_env();
    CHECK(check_triangles(regular_dmodule(env.dbl()), env).all_pass());
    CHECK(check_triangles(regular_dmodule(env.dbl(), true), env).all_pass());
    CHECK(!check_yddh_monoidal(*env.dbl()));
    for (int n = 2; n <= 4; ++n) CHECK(!check_loop_identity(Context::vec(), Context::vec()->trivial({n})));
}

TEST_CASE("right D(H)-modules: Psi^R against Phi^R") {
    FunctorEnv& env = sweedler_env();
    DModule R = regular_dmodule(env.dbl(), true);
    CHECK(!check_dmodule(R));
    CHECK(run(FunctorId::S, Property::Braided, env).all_pass());
    CHECK(run(FunctorId::T, Property::Braided, env).all_pass());
}

TEST_CASE("center objects") {
    HopfPtr H = sweedler();
    auto probes = module_probes(H);
    CenterObject T = to_center(trivial_yd(H, Variant::LR_Hop, 2), probes);
    for (const auto& hb : T.half) CHECK(!map_equal(hb.c, Morphism::swap(hb.X.obj.dims, {2})));
    YDModule A = adjoint_yd_module(H);
    CenterObject C = to_center(A, probes);
    Report r = check_center(C);
    CHECK(r.all_pass());
    CHECK(r.passed("moj-uslov"));
    CHECK(!map_equal(center_to_yd(C).coact, A.coact));
    CHECK(check_center(center_tensor(C, T)).all_pass());
    YDModule S = yd_direct_sum(A, trivial_yd(H, Variant::LR_Hop));
    CHECK(!check_center_morphism(C, to_center(S, probes), yd_injection(A, trivial_yd(H, Variant::LR_Hop), 0)));
    CHECK(check_center_morphism(C, C, Morphism::scalar_multiple(Morphism::identity({4}), Cyc(0))) == std::nullopt);
    CHECK(check_functor(FunctorId::K, C, C, sweedler_env(), Property::Roundtrip).all_pass());
}

TEST_CASE("a broken half-braiding is caught") {
    HopfPtr H = sweedler();
    CenterObject C = to_center(adjoint_yd_module(H), module_probes(H));
    C.half.back().c = Morphism::scalar_multiple(C.half.back().c, Cyc(2));
    auto rule = C.rule;
    C.rule = [rule](const HModule& X) { return Morphism::scalar_multiple(rule(X), Cyc(2)); };
    CHECK(!check_center(C).all_pass());
}

TEST_CASE("embedding into the center") {
    for (const auto& H : {group_algebra(2), sweedler()}) {
        Report r = embedding_check(H, standard_probes(*H->ctx));
        CHECK(r.all_pass());
        CHECK(r.passed("braiding-corresponds"));
    }
    BraidedHopf an = anyonic_line();
    Report r = embedding_check(an.B, standard_probes(*an.ctx));
    CHECK(r.overall() == Status::Precondition);
}

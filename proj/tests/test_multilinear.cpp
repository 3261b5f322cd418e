#include <doctest.h>

#include "bhl/context.hpp"
#include "bhl/examples.hpp"
#include "bhl/multilinear.hpp"

using namespace bhl;

namespace {

LinMap small(const Dims& dom, const Dims& cod, int seed) {
    LinMap f(dom, cod);
    for (Index c = 0; c < f.cod_size(); ++c)
        for (Index d = 0; d < f.dom_size(); ++d) f.at(c, d) = Cyc((long long)((c * 7 + d * 3 + seed) % 5) - 2);
    return f;
}

}  // namespace

TEST_CASE("composition") {
    CHECK(!map_equal(compose(LinMap::identity({2}), LinMap::identity({2})), LinMap::identity({2})));
    CHECK(!map_equal(compose(vec_swap(2, 3), vec_swap(3, 2)), LinMap::identity({3, 2})));
    LinMap snake = compose(tensor_product(ev_map(2), LinMap::identity({2})),
                           tensor_product(LinMap::identity({2}), coev_map(2)));
    CHECK(!map_equal(snake, LinMap::identity({2})));
    try {
        compose(LinMap::identity({2}), LinMap::identity({3}));
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "compose-mismatch");
    }
}

TEST_CASE("snake identities in Vec") {
    for (int d = 1; d <= 6; ++d) {
        LinMap id = LinMap::identity({d});
        CHECK(!map_equal(compose(tensor_product(ev_map(d), id), tensor_product(id, coev_map(d))), id));
        CHECK(!map_equal(compose(tensor_product(id, ev_map(d)), tensor_product(coev_map(d), id)), id));
    }
}

TEST_CASE("tensor product") {
    CHECK(!map_equal(tensor_product(LinMap::identity({2}), LinMap::identity({3})), LinMap::identity({2, 3})));
    LinMap f = small({2}, {3}, 1);
    CHECK(!map_equal(tensor_product(f, LinMap::identity({})), f));
    LinMap t = tensor_product(ev_map(2), coev_map(2));
    CHECK(t.dom() == Dims{2, 2});
    CHECK(t.cod() == Dims{2, 2});
}

TEST_CASE("interchange law") {
    LinMap f = small({2}, {3}, 0), fp = small({3}, {2}, 1), g = small({2, 1}, {2}, 2), gp = small({2}, {3}, 3);
    CHECK(!map_equal(tensor_product(compose(fp, f), compose(gp, g)),
                     compose(tensor_product(fp, gp), tensor_product(f, g))));
}

TEST_CASE("swap") {
    LinMap s = vec_swap(2, 2);
    CHECK(s.at(1 * 2 + 0, 0 * 2 + 1) == Cyc(1));
    CHECK(vec_swap(1, 5).entries() == LinMap::identity({5}).entries());
    CHECK(!map_equal(compose(vec_swap(2, 2), vec_swap(2, 2)), LinMap::identity({2, 2})));
}

TEST_CASE("swap hexagons with identity associators") {
    int a = 2, b = 3, c = 2;
    LinMap lhs = vec_swap(a, b * c);
    LinMap rhs = compose(tensor_product(LinMap::identity({b}), vec_swap(a, c)),
                         tensor_product(vec_swap(a, b), LinMap::identity({c})));
    CHECK(rhs.entries() == lhs.entries());
    LinMap lhs2 = vec_swap(a * b, c);
    LinMap rhs2 = compose(tensor_product(vec_swap(a, c), LinMap::identity({b})),
                          tensor_product(LinMap::identity({a}), vec_swap(b, c)));
    CHECK(rhs2.entries() == lhs2.entries());
}

TEST_CASE("map_equal reports the first discrepancy") {
    CHECK(!map_equal(LinMap::identity({2}), LinMap::identity({2})));
    auto m = map_equal(LinMap::identity({2, 2}), vec_swap(2, 2));
    REQUIRE(m);
    CHECK(m->cod_index == std::vector<int>{0, 1});
    CHECK(m->dom_index == std::vector<int>{0, 1});
    CHECK(map_equal(LinMap::identity({4}), LinMap::identity({2, 2})));
}

TEST_CASE("apply") {
    auto v = LinMap::identity({2}).apply({Cyc(1), Cyc(0)});
    CHECK(v[0] == Cyc(1));
    CHECK(v[1].is_zero());
    auto w = vec_swap(2, 2).apply({Cyc(0), Cyc(1), Cyc(0), Cyc(0)});
    CHECK(w[2] == Cyc(1));
    CHECK(ev_map(2).apply({Cyc(1), Cyc(0), Cyc(0), Cyc(0)})[0] == Cyc(1));
    CHECK_THROWS(ev_map(2).apply({Cyc(1)}));
}

TEST_CASE("duality maps in Vec") {
    CtxPtr ctx = Context::vec();
    Obj P = ctx->trivial({2});
    CHECK(!map_equal(ctx->ev(P).dense(), ev_map(2)));
    CHECK(!map_equal(ctx->ev_prime(P).dense(), compose(ev_map(2), vec_swap(2, 2))));
    CHECK(!map_equal(ctx->coev(P).dense(), coev_map(2)));
}

TEST_CASE("primed evaluation differs on the sign character of k[Z4]") {
    CtxPtr ctx = cyclic_context(2, 1);
    Obj chi2 = character(*ctx->algebra(), 2, 0, 2);
    Obj chi1 = character(*ctx->algebra(), 2, 0, 1);
    CHECK(!map_equal(ctx->ev_prime(chi2).dense(), ctx->ev(chi2).dense()));
    CHECK(map_equal(ctx->ev_prime(chi1).dense(), ctx->ev(chi1).dense()));
}

TEST_CASE("snake identities in a module category") {
    CtxPtr ctx = cyclic_context(2, 1);
    for (const auto& p : standard_probes(*ctx, 1)) {
        Obj P = p.obj, Ps = ctx->dual(P);
        Dims d = P.dims;
        Morphism s1 = Diagram(ctx, {P}).insert(0, ctx->coev(P), {P, Ps}).op(1, 2, ctx->ev(P), {}).build();
        CHECK(!map_equal(s1, Morphism::identity(d)));
        Morphism s2 = Diagram(ctx, {P}).insert(1, ctx->coev_prime(P), {Ps, P}).op(0, 2, ctx->ev_prime(P), {}).build();
        CHECK(!map_equal(s2, Morphism::identity(d)));
    }
}

TEST_CASE("serialization roundtrip and parse offsets") {
    LinMap f({2}, {2, 1});
    f.at(0, 0) = Cyc::root(4, 1);
    f.at(1, 1) = Cyc(3, 2).embed(4);
    std::string s = f.serialize();
    CHECK(!map_equal(LinMap::parse(s), f));
    std::string bad = "dom=[2];cod=[2];N=1\n1/1 0/1\n0/1 x\n";
    try {
        LinMap::parse(bad, 10);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 10 + bad.find('x'));
    }
}

TEST_CASE("inverse") {
    LinMap f({2}, {2});
    f.at(0, 0) = Cyc(1);
    f.at(0, 1) = Cyc(2);
    f.at(1, 1) = Cyc(1);
    CHECK(!map_equal(compose(invert(f), f), LinMap::identity({2})));
    CHECK_THROWS_AS(invert(LinMap({2}, {2})), AlgebraError);
}

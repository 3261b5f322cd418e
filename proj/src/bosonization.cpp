#include "bhl/bosonization.hpp"

#include "bhl/context.hpp"
#include "bhl/hopf.hpp"

namespace bhl {

namespace {

Obj plain(const Obj& o) { return Obj{o.dims, std::nullopt}; }

Morphism b_action(const BraidedHopf& bh) {
    if (!bh.B->obj.act) throw AlgebraError("not-a-module", "B carries no A-action");
    return *bh.B->obj.act;
}

// b.a := a.b, which is a right action only because A is commutative
Morphism right_b_action(const BraidedHopf& bh) {
    const Obj a = plain(bh.A->obj), b = plain(bh.B->obj);
    return Diagram(bh.A->ctx, {b, a}).braid(0).op(0, 2, b_action(bh), {b}).build();
}

}  // namespace

YDModule r_coaction(const BraidedHopf& bh, Side side) {
    const HopfData& A = *bh.A;
    if (!check_quasitriangular(A, bh.R).all_pass())
        throw AlgebraError("not-quasitriangular", "R is not a quasitriangular structure on " + A.name);
    const Obj a = plain(A.obj), b = plain(bh.B->obj);
    Morphism R = bh.R;
    if (side == Side::Left) {
        Morphism lambda = Diagram(A.ctx, {b}).insert(0, R, {a, a}).braid(0).op(1, 2, b_action(bh), {b}).build();
        return YDModule{bh.A, Variant::LL, b, b_action(bh), lambda, bh.B->name};
    }
    if (!is_commutative(A))
        throw AlgebraError("not-supported", "the right-handed coaction needs a commutative " + A.name);
    Morphism rho = Diagram(A.ctx, {b}).insert(0, R, {a, a}).braid(1).op(0, 2, b_action(bh), {b}).build();
    return YDModule{bh.A, Variant::RR, b, right_b_action(bh), rho, bh.B->name};
}

HopfPtr cross_product(const BraidedHopf& bh, Side side) {
    const HopfData &A = *bh.A, &B = *bh.B;
    CtxPtr ctx = A.ctx;
    const Obj a = plain(A.obj), b = plain(B.obj);
    YDModule Y = r_coaction(bh, side);
    Morphism mult, comult, unit, counit, anti;
    std::string name;
    if (side == Side::Left) {
        Morphism act = Y.act, lambda = Y.coact;
        mult = Diagram(ctx, {b, a, b, a})
                   .op(1, 1, A.D, {a, a})
                   .braid(2)
                   .op(1, 2, act, {b})
                   .op(0, 2, B.M, {b})
                   .op(1, 2, A.M, {a})
                   .build();
        comult = Diagram(ctx, {b, a})
                     .op(0, 1, B.D, {b, b})
                     .op(1, 1, lambda, {a, b})
                     .op(3, 1, A.D, {a, a})
                     .braid(2)
                     .op(1, 2, A.M, {a})
                     .build();
        unit = Diagram(ctx, {}).insert(0, B.U, {b}).insert(1, A.U, {a}).build();
        counit = Diagram(ctx, {b, a}).op(0, 1, B.E, {}).op(0, 1, A.E, {}).build();
        // (1 (x) S(b_{-1} a)) (S_B(b_0) (x) 1)
        anti = Diagram(ctx, {b, a})
                   .op(0, 1, lambda, {a, b})
                   .braid(1)
                   .op(0, 2, A.M, {a})
                   .op(0, 1, A.S, {a})
                   .op(1, 1, B.S, {b})
                   .op(0, 1, A.D, {a, a})
                   .braid(1)
                   .op(0, 2, act, {b})
                   .build();
        name = B.name + " x " + A.name;
    } else {
        Morphism act = Y.act, rho = Y.coact;
        mult = Diagram(ctx, {a, b, a, b})
                   .op(2, 1, A.D, {a, a})
                   .braid(1)
                   .op(0, 2, A.M, {a})
                   .op(1, 2, act, {b})
                   .op(1, 2, B.M, {b})
                   .build();
        comult = Diagram(ctx, {a, b})
                     .op(0, 1, A.D, {a, a})
                     .op(2, 1, B.D, {b, b})
                     .op(2, 1, rho, {b, a})
                     .braid(1)
                     .op(2, 2, A.M, {a})
                     .build();
        unit = Diagram(ctx, {}).insert(0, A.U, {a}).insert(1, B.U, {b}).build();
        counit = Diagram(ctx, {a, b}).op(0, 1, A.E, {}).op(0, 1, B.E, {}).build();
        // (S_A(a b_1) (x) 1) (1 (x) S_B(b_0)) written as a product in A x B
        anti = Diagram(ctx, {a, b})
                   .op(1, 1, rho, {b, a})
                   .braid(0)
                   .op(1, 2, A.M, {a})
                   .op(1, 1, A.S, {a})
                   .op(0, 1, B.S, {b})
                   .op(1, 1, A.D, {a, a})
                   .braid(0)
                   .op(1, 2, act, {b})
                   .build();
        name = A.name + " x " + B.name;
    }
    // flatten the factor pairs into one index
    int d = A.dim * B.dim;
    Dims two = side == Side::Left ? Dims{B.dim, A.dim} : Dims{A.dim, B.dim};
    Morphism in1 = Morphism::reshape({d}, two), out1 = Morphism::reshape(two, {d});
    Morphism in2 = Morphism::reshape({d, d}, concat(two, two)), out2 = Morphism::reshape(concat(two, two), {d, d});
    return make_hopf(name, compose(out1, compose(mult, in2)).dense(), compose(out2, compose(comult, in1)).dense(),
                     compose(out1, unit).dense(), compose(counit, in1).dense(), compose(out1, compose(anti, in1)).dense(),
                     std::nullopt, ctx);
}

std::optional<Mismatch> check_smash_compat(const BraidedHopf& bh, const Obj& M, const Morphism& actA,
                                           const Morphism& actB) {
    const HopfData& A = *bh.A;
    const Obj a = plain(A.obj), b = plain(bh.B->obj), m = plain(M);
    Morphism lhs = Diagram(A.ctx, {a, b, m}).op(1, 2, actB, {m}).op(0, 2, actA, {m}).build();
    Morphism rhs = Diagram(A.ctx, {a, b, m})
                       .op(0, 1, A.D, {a, a})
                       .braid(1)
                       .op(0, 2, b_action(bh), {b})
                       .op(1, 2, actA, {m})
                       .op(0, 2, actB, {m})
                       .build();
    return map_equal(lhs, rhs);
}

Morphism smash_action(const BraidedHopf& bh, const Obj& M, const Morphism& actA, const Morphism& actB) {
    const Obj a = plain(bh.A->obj), b = plain(bh.B->obj), m = plain(M);
    Obj ba{{bh.B->dim * bh.A->dim}, std::nullopt};
    return Diagram(bh.A->ctx, {ba, m}).split(0, {b, a}).op(1, 2, actA, {m}).op(0, 2, actB, {m}).build();
}

std::pair<Morphism, Morphism> smash_restrict(const BraidedHopf& bh, const Obj& M, const Morphism& act) {
    const Obj a = plain(bh.A->obj), b = plain(bh.B->obj), m = plain(M);
    Obj ba{{bh.B->dim * bh.A->dim}, std::nullopt};
    Morphism onA = Diagram(bh.A->ctx, {a, m}).insert(0, bh.B->U, {b}).merge(0, 2, ba).op(0, 2, act, {m}).build();
    Morphism onB = Diagram(bh.A->ctx, {b, m}).insert(1, bh.A->U, {a}).merge(0, 2, ba).op(0, 2, act, {m}).build();
    return {onA, onB};
}

Report biproduct_decompose_check(const FamilyParams& p) {
    validate_family(p);
    if (p.n < 1) throw AlgebraError("bad-family-params", "the decomposition needs n >= 1");
    HopfPtr H = hmnd(p);
    BraidedHopf bh = braided_line(p, p.s);
    HopfPtr K = cross_product(bh);
    const HopfData& A = *bh.A;
    Index dK = K->dim, dA = A.dim;
    int nb = p.n - 1;

    auto elem = [&](Index bi, Index ai) { return SVec{Term{bi * dA + ai, Cyc(1)}}; };
    auto mulK = [&](const SVec& u, const SVec& v) {
        SVec t;
        for (const auto& x : u)
            for (const auto& y : v) t.push_back(Term{x.i * dK + y.i, x.c * y.c});
        canonicalize(t);
        return K->M.apply(t);
    };
    SVec one = elem(0, 0);
    SVec g = elem(0, (Index)1 << nb);
    std::vector<SVec> x(p.n + 1);
    for (int i = 1; i < p.n; ++i) x[i] = elem(0, (Index)1 << (nb - i));
    x[p.n] = elem(1, (Index)p.m << nb);

    // g^a x_1^{e_1} ... x_n^{e_n} in H's PBW order
    std::vector<SVec> cols(H->dim);
    for (Index u = 0; u < (Index)H->dim; ++u) {
        Index a = u >> p.n, e = u & (((Index)1 << p.n) - 1);
        SVec v = one;
        for (Index k = 0; k < a; ++k) v = mulK(v, g);
        for (int i = 1; i <= p.n; ++i)
            if (e >> (p.n - i) & 1) v = mulK(v, x[i]);
        cols[u] = v;
    }
    Morphism phi = Morphism::from_columns({H->dim}, {K->dim}, std::move(cols));

    Report r;
    r.add("cross-product-hopf", check_hopf(*K).all_pass(), "the bosonization fails the Hopf axioms");
    try {
        invert(phi.dense());
        r.add("bijective", true);
    } catch (const std::exception& e) {
        r.add("bijective", false, e.what());
    }
    r.add("multiplicative", map_equal(compose(phi, H->M), compose(K->M, tensor_product(phi, phi))));
    r.add("unital", map_equal(compose(phi, H->U), K->U));
    r.add("comultiplicative", map_equal(compose(tensor_product(phi, phi), H->D), compose(K->D, phi)));
    r.add("counital", map_equal(H->E, compose(K->E, phi)));
    r.add("antipode", map_equal(compose(phi, H->S), compose(K->S, phi)));
    return r;
}

}  // namespace bhl

#include "bhl/double.hpp"

#include "bhl/hopf.hpp"

namespace bhl {

MatchedPairData trivial_matched_pair(HopfPtr B, HopfPtr H) {
    bool both_vec = B->ctx->kind() == Context::Kind::Vec && H->ctx->kind() == Context::Kind::Vec;
    if (B->ctx != H->ctx && !both_vec) throw AlgebraError("context-mismatch", "matched pair factors live in different contexts");
    MatchedPairData mp{B, H, {}, {}};
    mp.act_BH = Diagram(H->ctx, {H->obj, B->obj}).counit(*H, 0).build();
    mp.act_HB = Diagram(H->ctx, {H->obj, B->obj}).counit(*B, 1).build();
    return mp;
}

namespace {

struct MP {
    const MatchedPairData& mp;
    const HopfData &B, &H;
    CtxPtr ctx;
    explicit MP(const MatchedPairData& m) : mp(m), B(*m.B), H(*m.H), ctx(m.H->ctx) {}
    Diagram dia(std::vector<Obj> w) const { return Diagram(ctx, std::move(w)); }
    Diagram& lm(Diagram& d, size_t pos) const { return d.op(pos, 2, mp.act_BH, {B.obj}); }
    Diagram& rm(Diagram& d, size_t pos) const { return d.op(pos, 2, mp.act_HB, {H.obj}); }
};

// (b, h, b', h') -> (b (h1 |> b'1), (h2 <| b'2) h')
Morphism cross_mult(const MP& m) {
    const Obj &b = m.B.obj, &h = m.H.obj;
    Diagram d = m.dia({b, h, b, h});
    d.comul(m.H, 1).comul(m.B, 3).braid(2);
    m.lm(d, 1);
    m.rm(d, 2);
    d.mul(m.B, 0).mul(m.H, 1);
    return d.build();
}

Obj pair_obj(const Context& c, const Obj& b, const Obj& h) {
    Obj bh = c.tensor(b, h);
    int n = (int)bh.dim();
    Obj o{{n}, std::nullopt};
    if (bh.act) {
        int a = c.algebra()->dim;
        o.act = compose(Morphism::reshape(bh.dims, {n}), compose(*bh.act, Morphism::reshape({a, n}, concat({a}, bh.dims))));
    }
    return o;
}

LinMap flat_map(const Morphism& f, const Dims& dom, const Dims& cod) {
    LinMap L = f.dense();
    return LinMap(dom, cod, L.entries());
}

}  // namespace

Report check_matched_pair(const MatchedPairData& mp) {
    MP m(mp);
    const Obj &b = m.B.obj, &h = m.H.obj;
    Report r;
    r.add("B-is-H-module", check_left_module(m.H, b, mp.act_BH));
    r.add("H-is-B-module", check_right_module(m.B, h, mp.act_HB));
    {
        Diagram l = m.dia({h, b});
        l.comul(m.H, 0).comul(m.B, 2).braid(1);
        m.lm(l, 0);
        m.lm(l, 1);
        Diagram rr = m.dia({h, b});
        m.lm(rr, 0);
        rr.comul(m.B, 0);
        auto c1 = map_equal(l.build(), rr.build());
        Diagram e1 = m.dia({h, b});
        m.lm(e1, 0);
        e1.counit(m.B, 0);
        auto c2 = map_equal(e1.build(), m.dia({h, b}).counit(m.H, 0).counit(m.B, 0).build());
        r.add("B-module-coalgebra", c1 ? c1 : c2);
    }
    {
        Diagram l = m.dia({h, b});
        l.comul(m.H, 0).comul(m.B, 2).braid(1);
        m.rm(l, 0);
        m.rm(l, 1);
        Diagram rr = m.dia({h, b});
        m.rm(rr, 0);
        rr.comul(m.H, 0);
        auto c1 = map_equal(l.build(), rr.build());
        Diagram e1 = m.dia({h, b});
        m.rm(e1, 0);
        e1.counit(m.H, 0);
        auto c2 = map_equal(e1.build(), m.dia({h, b}).counit(m.H, 0).counit(m.B, 0).build());
        r.add("H-module-coalgebra", c1 ? c1 : c2);
    }
    {
        // h |> (b b') = (h1 |> b1)((h2 <| b2) |> b')
        Diagram l = m.dia({h, b, b});
        l.comul(m.H, 0).comul(m.B, 2).braid(1);
        m.lm(l, 0);
        m.rm(l, 1);
        m.lm(l, 1);
        l.mul(m.B, 0);
        Diagram rr = m.dia({h, b, b});
        rr.mul(m.B, 1);
        m.lm(rr, 0);
        r.add("mp-product-B", map_equal(l.build(), rr.build()));
    }
    {
        // (h h') <| b = (h <| (h'1 |> b1))(h'2 <| b2)
        Diagram l = m.dia({h, h, b});
        l.comul(m.H, 1).comul(m.B, 3).braid(2);
        m.lm(l, 1);
        m.rm(l, 2);
        m.rm(l, 0);
        l.mul(m.H, 0);
        Diagram rr = m.dia({h, h, b});
        rr.mul(m.H, 0);
        m.rm(rr, 0);
        r.add("mp-product-H", map_equal(l.build(), rr.build()));
    }
    {
        Diagram l = m.dia({h, b});
        l.comul(m.H, 0).comul(m.B, 2).braid(1);
        m.lm(l, 0);
        m.rm(l, 1);
        l.braid(0);
        Diagram rr = m.dia({h, b});
        rr.comul(m.H, 0).comul(m.B, 2).braid(1);
        m.rm(rr, 0);
        m.lm(rr, 1);
        r.add("mp-cross", map_equal(l.build(), rr.build()));
    }
    {
        Diagram l = m.dia({h});
        l.unit(m.B, 1);
        m.lm(l, 0);
        r.add("mp-unit-B", map_equal(l.build(), m.dia({h}).counit(m.H, 0).unit(m.B, 0).build()));
        Diagram l2 = m.dia({b});
        l2.unit(m.H, 0);
        m.rm(l2, 0);
        r.add("mp-unit-H", map_equal(l2.build(), m.dia({b}).counit(m.B, 0).unit(m.H, 0).build()));
    }
    return r;
}

HopfPtr bicrossproduct(const MatchedPairData& mp, bool verify, std::string name) {
    if (verify) {
        Report r = check_matched_pair(mp);
        if (!r.all_pass()) throw AlgebraError("not-matched", r.text());
    }
    MP m(mp);
    const Context& c = *m.ctx;
    const Obj &b = m.B.obj, &h = m.H.obj;
    int db = m.B.dim, dh = m.H.dim, n = db * dh;
    Morphism mult = cross_mult(m);
    Morphism comult = m.dia({b, h}).comul(m.B, 0).comul(m.H, 2).braid(1).build();
    Morphism unit = m.dia({}).unit(m.B, 0).unit(m.H, 1).build();
    Morphism counit = m.dia({b, h}).counit(m.B, 0).counit(m.H, 0).build();
    Diagram s = m.dia({b, h});
    s.braid(0).S(m.H, 0).S(m.B, 1).unit(m.B, 0).unit(m.H, 3).op(0, 4, mult, {b, h});
    Morphism S = s.build();
    Obj o = pair_obj(c, b, h);
    if (name.empty()) name = m.B.name + "><" + m.H.name;
    return make_hopf(name, flat_map(mult, {n, n}, {n}), flat_map(comult, {n}, {n, n}),
                     flat_map(unit, {}, {n}), flat_map(counit, {n}, {}), flat_map(S, {n}, {n}), std::nullopt, m.ctx,
                     o.act);
}

namespace {

// the pairing H (x) H* -> I used by the double: ev composed with Phi_{H,H*}
Morphism ev_bar(const Context& c, const Obj& h, const Obj& hs) {
    return compose(c.ev(h), c.braiding(h, hs, 1));
}

}  // namespace

DoubleData drinfeld_double(HopfPtr Hp) {
    const HopfData& H = *Hp;
    const Context& c = *H.ctx;
    Obj hs = c.dual(H.obj);
    if (!is_symmetric_pair(c, H.obj, H.obj) || !is_symmetric_pair(c, H.obj, hs))
        throw AlgebraError("not-transparent-enough", "Phi_{H,H} and Phi_{H,H*} must be symmetric in " + c.name());
    HopfPtr Bp = dual_hopf(*op_cop(H, OpCop::Op));
    const HopfData& B = *Bp;
    int d = H.dim;
    const Obj &h = H.obj, &b = B.obj;
    Morphism evb = ev_bar(c, h, b);

    // (h |> f)(k) = f(S^{-1}(h2) k h1), solved against the pairing
    Morphism P = Diagram(H.ctx, {h, h, b})
                     .comul(H, 1)
                     .mul(H, 0)
                     .Si(H, 1)
                     .braid(0)
                     .mul(H, 0)
                     .op(0, 2, evb, {})
                     .build();
    LinMap L({d, d}, {d});  // (h, f) -> functional on k
    for (int k = 0; k < d; ++k)
        for (int hf = 0; hf < d * d; ++hf) {
            SVec v = P.column((Index)k * d * d + hf);
            if (!v.empty()) L.at(k, hf) = v[0].c;
        }
    LinMap G({d}, {d});  // g -> functional k -> evb(k (x) g)
    for (int k = 0; k < d; ++k)
        for (int g = 0; g < d; ++g) {
            SVec v = evb.column((Index)k * d + g);
            if (!v.empty()) G.at(k, g) = v[0].c;
        }
    Morphism left(compose(invert(G), L));

    // h <| f = h2 f(S^{-1}(h3) h1)
    Morphism right = Diagram(H.ctx, {h, b})
                         .comul(H, 0)
                         .comul(H, 0)
                         .Si(H, 2)
                         .ibraid(0)
                         .braid(1)
                         .mul(H, 1)
                         .op(1, 2, evb, {})
                         .build();

    DoubleData D;
    D.H = Hp;
    D.B = Bp;
    D.mp = MatchedPairData{Bp, Hp, left.dense(), right.dense()};
    D.D = bicrossproduct(D.mp, true, "D(" + H.name + ")");
    int n = d * d;
    D.iota_B = compose(Morphism::reshape({d, d}, {n}), Diagram(H.ctx, {b}).unit(H, 1).build());
    D.iota_H = compose(Morphism::reshape({d, d}, {n}), Diagram(H.ctx, {h}).unit(B, 0).build());
    D.pi_B = compose(Diagram(H.ctx, {b, h}).counit(H, 1).build(), Morphism::reshape({n}, {d, d}));
    D.pi_H = compose(Diagram(H.ctx, {b, h}).counit(B, 0).build(), Morphism::reshape({n}, {d, d}));
    D.r_matrix = double_r_matrix(D);
    return D;
}

LinMap double_r_matrix(const DoubleData& D) {
    // sum_i (1 (x) e_i) (x) (e^i (x) 1)
    int d = D.H->dim, n = d * d;
    LinMap R({}, {n, n});
    SVec ub = D.B->unit.column(0), uh = D.H->unit.column(0);
    for (int i = 0; i < d; ++i)
        for (const auto& a : ub)
            for (const auto& e : uh) {
                Index left = a.i * d + i, right = (Index)i * d + e.i;
                R.at(left * n + right, 0) += a.c * e.c;
            }
    return R;
}

std::optional<Mismatch> check_1S(const DoubleData& D) {
    const HopfData &H = *D.H, &DD = *D.D;
    Morphism lhs = compose(DD.S, D.iota_H);
    Morphism rhs = compose(D.iota_H, H.S);
    return map_equal(lhs, rhs);
}

Report check_double_structure(const DoubleData& D) {
    const HopfData &H = *D.H, &B = *D.B, &DD = *D.D;
    Report r;
    auto algebra_map = [&](const HopfData& X, const Morphism& iota) {
        Morphism l = compose(iota, X.M);
        Morphism rr = compose(DD.M, tensor_product(iota, iota));
        if (auto m = map_equal(l, rr)) return std::optional<Mismatch>(m);
        return map_equal(compose(iota, X.U), DD.U);
    };
    auto coalgebra_map = [&](const HopfData& X, const Morphism& iota) {
        Morphism l = compose(DD.D, iota);
        Morphism rr = compose(tensor_product(iota, iota), X.D);
        if (auto m = map_equal(l, rr)) return std::optional<Mismatch>(m);
        return map_equal(compose(DD.E, iota), X.E);
    };
    r.add("iota-B-algebra", algebra_map(B, D.iota_B));
    r.add("iota-H-algebra", algebra_map(H, D.iota_H));
    r.add("codiagonal-B", coalgebra_map(B, D.iota_B));
    r.add("codiagonal-H", coalgebra_map(H, D.iota_H));
    r.add("pi-iota-B", map_equal(compose(D.pi_B, D.iota_B), Morphism::identity({B.dim})));
    r.add("pi-iota-H", map_equal(compose(D.pi_H, D.iota_H), Morphism::identity({H.dim})));
    return r;
}

std::optional<Mismatch> check_cross_relation(const DoubleData& D) {
    const HopfData &H = *D.H, &B = *D.B, &DD = *D.D;
    const Context& c = *H.ctx;
    int d = H.dim, n = d * d;
    const Obj &h = H.obj, &b = B.obj;
    // (1 (x) h)(f (x) 1) through the product of D
    Morphism lhs = compose(DD.M, tensor_product(D.iota_H, D.iota_B));
    // sum_i e^i (x) h2 f(S^{-1}(h3) e_i h1)
    Morphism evb = ev_bar(c, h, b);
    Diagram r(H.ctx, {h, b});
    r.insert(0, c.coev(h), {h, b})
        .comul(H, 2)
        .comul(H, 3)
        .Si(H, 4)
        .braid(0)
        .mul(H, 1)
        .braid(1)
        .braid(2)
        .mul(H, 2)
        .op(2, 2, evb, {});
    Morphism rhs = compose(Morphism::reshape({d, d}, {n}), r.build());
    return map_equal(lhs, rhs);
}

ZhangResult zhang_conditions(const HopfData& H, const Obj* X) {
    const Context& c = *H.ctx;
    const Obj& h = H.obj;
    Obj hs = c.dual(h);
    bool hh = is_symmetric_pair(c, h, h), hhs = is_symmetric_pair(c, h, hs), hshs = is_symmetric_pair(c, hs, hs);
    Morphism ev = c.ev(h);
    bool c4 = !map_equal(Diagram(H.ctx, {hs, h, h}).braid(0).op(1, 2, ev, {}).build(),
                         Diagram(H.ctx, {hs, h, h}).braid(1).op(0, 2, ev, {}).build());
    bool c5 = !map_equal(Diagram(H.ctx, {hs, hs, h}).braid(0).op(1, 2, ev, {}).build(),
                         Diagram(H.ctx, {hs, hs, h}).braid(1).op(0, 2, ev, {}).build());
    ZhangResult z;
    z.conditions = {hh && hhs && hshs, hh, hshs, c4, c5, c4 && c5, hhs};
    std::string vals;
    for (bool v : z.conditions) vals += v ? 'T' : 'F';
    bool agree = true;
    for (bool v : z.conditions) agree = agree && v == z.conditions[0];
    z.report.add("zhang-agree", agree, "conditions 1-7: " + vals);
    if (X) {
        bool a = is_symmetric_pair(c, h, *X), bb = is_symmetric_pair(c, hs, *X);
        z.transparency = std::make_pair(a, bb);
        z.report.add("transparency-agree", a == bb,
                     std::string("Phi_{H,X} ") + (a ? "symmetric" : "not symmetric") + ", Phi_{H*,X} " +
                         (bb ? "symmetric" : "not symmetric"));
    }
    return z;
}

CommutativityResult commutativity_lemma(const DoubleData& D) {
    CommutativityResult r;
    r.d_commutative = is_commutative(*D.D);
    r.d_cocommutative = is_cocommutative(*D.D);
    r.factors_commutative = is_commutative(*D.H) && is_commutative(*D.B);
    r.factors_cocommutative = is_cocommutative(*D.H) && is_cocommutative(*D.B);
    bool v[4] = {r.d_commutative, r.factors_commutative, r.factors_cocommutative, r.d_cocommutative};
    std::string vals;
    for (bool x : v) vals += x ? 'T' : 'F';
    r.report.add("commutativity-agree", v[0] == v[1] && v[1] == v[2] && v[2] == v[3], "(i)-(iv): " + vals);
    return r;
}

}  // namespace bhl

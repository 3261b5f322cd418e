#include "bhl/hopf.hpp"

namespace bhl {

namespace {

Diagram dia(const HopfData& H, size_t n) { return Diagram(H.ctx, std::vector<Obj>(n, H.obj)); }

}  // namespace

Report check_bialgebra(const HopfData& H) {
    Report r;
    r.add("assoc", map_equal(dia(H, 3).mul(H, 0).mul(H, 0).build(), dia(H, 3).mul(H, 1).mul(H, 0).build()));
    Morphism id = Morphism::identity({H.dim});
    auto u1 = map_equal(dia(H, 1).unit(H, 0).mul(H, 0).build(), id);
    auto u2 = map_equal(dia(H, 1).unit(H, 1).mul(H, 0).build(), id);
    r.add("unit", u1 ? u1 : u2);
    r.add("coassoc",
          map_equal(dia(H, 1).comul(H, 0).comul(H, 0).build(), dia(H, 1).comul(H, 0).comul(H, 1).build()));
    auto c1 = map_equal(dia(H, 1).comul(H, 0).counit(H, 0).build(), id);
    auto c2 = map_equal(dia(H, 1).comul(H, 0).counit(H, 1).build(), id);
    r.add("counit", c1 ? c1 : c2);
    r.add("compat", map_equal(dia(H, 2).mul(H, 0).comul(H, 0).build(),
                              dia(H, 2).comul(H, 0).comul(H, 2).braid(1).mul(H, 0).mul(H, 1).build()));
    r.add("counit-mult",
          map_equal(dia(H, 2).mul(H, 0).counit(H, 0).build(), dia(H, 2).counit(H, 0).counit(H, 0).build()));
    r.add("unit-comult",
          map_equal(dia(H, 0).unit(H, 0).comul(H, 0).build(), dia(H, 0).unit(H, 0).unit(H, 1).build()));
    r.add("counit-unit", map_equal(dia(H, 0).unit(H, 0).counit(H, 0).build(), Morphism::identity({})));
    if (H.ctx->kind() == Context::Kind::ModOver) {
        const Context& c = *H.ctx;
        Obj HH = c.tensor(H.obj, H.obj);
        std::optional<Mismatch> m;
        if (!m) m = check_context_linear(c, H.M, HH, H.obj);
        if (!m) m = check_context_linear(c, H.D, H.obj, HH);
        if (!m) m = check_context_linear(c, H.U, c.unit_obj(), H.obj);
        if (!m) m = check_context_linear(c, H.E, H.obj, c.unit_obj());
        r.add("structure-maps-linear", m);
    }
    return r;
}

Report check_hopf(const HopfData& H) {
    Report r = check_bialgebra(H);
    Morphism ee = dia(H, 1).counit(H, 0).unit(H, 0).build();
    auto a1 = map_equal(dia(H, 1).comul(H, 0).S(H, 0).mul(H, 0).build(), ee);
    auto a2 = map_equal(dia(H, 1).comul(H, 0).S(H, 1).mul(H, 0).build(), ee);
    r.add("antipode", a1 ? a1 : a2);
    r.add("antipode-antimult", map_equal(dia(H, 2).mul(H, 0).S(H, 0).build(),
                                         dia(H, 2).S(H, 0).S(H, 1).braid(0).mul(H, 0).build()));
    r.add("antipode-anticomult", map_equal(dia(H, 1).S(H, 0).comul(H, 0).build(),
                                           dia(H, 1).comul(H, 0).braid(0).S(H, 0).S(H, 1).build()));
    Morphism id = Morphism::identity({H.dim});
    auto i1 = map_equal(compose(H.S, H.Si), id);
    auto i2 = map_equal(compose(H.Si, H.S), id);
    r.add("antipode-inverse", i1 ? i1 : i2);
    if (H.ctx->kind() == Context::Kind::ModOver)
        r.add("antipode-linear", check_context_linear(*H.ctx, H.S, H.obj, H.obj));
    // S is also the antipode of H^{op,cop}
    auto K = op_cop(H, OpCop::OpCop);
    auto o1 = map_equal(dia(*K, 1).comul(*K, 0).S(*K, 0).mul(*K, 0).build(), ee);
    auto o2 = map_equal(dia(*K, 1).comul(*K, 0).S(*K, 1).mul(*K, 0).build(), ee);
    r.add("antipode-opcop", o1 ? o1 : o2);
    return r;
}

LinMap compute_antipode_inverse(const HopfData& H) {
    try {
        return invert(H.antipode);
    } catch (const AlgebraError&) {
        throw AlgebraError("antipode-not-bijective", "antipode of " + H.name + " is singular");
    }
}

HopfPtr op_cop(const HopfData& H, OpCop which) {
    const Context& c = *H.ctx;
    LinMap mult = H.mult, comult = H.comult, S = H.antipode, Si = H.antipode_inv;
    std::string tag;
    if (which == OpCop::Op || which == OpCop::OpCop) mult = compose(H.M, c.braiding(H.obj, H.obj, 1)).dense();
    if (which == OpCop::Cop || which == OpCop::OpCop) comult = compose(c.braiding(H.obj, H.obj, -1), H.D).dense();
    if (which != OpCop::OpCop) std::swap(S, Si);
    tag = which == OpCop::Op ? "op" : which == OpCop::Cop ? "cop" : "opcop";
    return make_hopf(tag + "(" + H.name + ")", mult, comult, H.unit, H.counit, S, Si, H.ctx, H.obj.act);
}

bool op_cop_verified(const HopfData& H, OpCop which) {
    return which == OpCop::OpCop || is_symmetric_pair(*H.ctx, H.obj, H.obj);
}

Morphism curry(const Morphism& L, const Dims& X, const Dims& P) {
    if (L.dom() != concat(X, P) || !L.cod().empty())
        throw AlgebraError("compose-mismatch", "curry expects a pairing X (x) P -> I");
    Index np = volume(P);
    std::vector<SVec> cols(volume(X));
    for (Index x = 0; x < cols.size(); ++x) {
        SVec col;
        for (Index k = 0; k < np; ++k) {
            SVec v = L.column(x * np + k);
            if (!v.empty()) col.push_back(Term{k, v[0].c});
        }
        cols[x] = std::move(col);
    }
    return Morphism::from_columns(X, P, std::move(cols));
}

HopfPtr dual_hopf(const HopfData& H) {
    const Context& c = *H.ctx;
    int d = H.dim;
    Obj h = H.obj, hs = c.dual(H.obj);
    Morphism ev = c.ev(h);

    // (fg)(x) = (ev (x) ev)(f (x) Phi_{g, x1} (x) x2)
    Morphism pair_m = Diagram(H.ctx, {hs, hs, h})
                          .comul(H, 2)
                          .braid(1)
                          .op(0, 2, ev, {})
                          .op(0, 2, ev, {})
                          .build();
    LinMap mult = curry(pair_m, {d, d}, {d}).dense();

    // crossing pairing (H* (x) H*) (x) (H (x) H) -> I and its Gram matrix
    Morphism cross = Diagram(H.ctx, {hs, hs, h, h}).braid(1).op(0, 2, ev, {}).op(0, 2, ev, {}).build();
    LinMap G = curry(cross, {d, d}, {d, d}).dense();  // (f1 f2) -> functional on (x y)
    LinMap Ginv = invert(G);
    // f -> (x (x) y -> f(xy)), then pull back through the Gram matrix
    LinMap fm = H.mult.transpose();  // [d] -> [d,d]
    LinMap comult = compose(Ginv, fm);
    comult = LinMap({d}, {d, d}, comult.entries());

    LinMap S = H.antipode.transpose(), Si = H.antipode_inv.transpose();
    LinMap unit({}, {d});
    for (int k = 0; k < d; ++k) unit.at(k, 0) = H.counit.at(0, k);
    LinMap counit({d}, {});
    for (int k = 0; k < d; ++k) counit.at(0, k) = H.unit.at(k, 0);
    return make_hopf(H.name + "*", mult, comult, unit, counit, S, Si, H.ctx, hs.act);
}

Report check_antipode_identities(const HopfData& H) {
    Report r;
    Morphism ee = dia(H, 1).counit(H, 0).unit(H, 0).build();
    r.add("antipode2", map_equal(dia(H, 1).comul(H, 0).Si(H, 0).ibraid(0).mul(H, 0).build(), ee));
    if (is_symmetric_pair(*H.ctx, H.obj, H.obj))
        r.add("antipode2-symmetric", map_equal(dia(H, 1).comul(H, 0).Si(H, 0).braid(0).mul(H, 0).build(), ee));
    return r;
}

std::optional<Mismatch> double_braiding_defect(const Context& ctx, const Obj& X, const Obj& Y) {
    return map_equal(compose(ctx.braiding(Y, X, 1), ctx.braiding(X, Y, 1)), Morphism::identity(concat(X.dims, Y.dims)));
}

bool is_symmetric_pair(const Context& ctx, const Obj& X, const Obj& Y) {
    if (ctx.kind() == Context::Kind::Vec) return true;
    return !double_braiding_defect(ctx, X, Y);
}

bool is_commutative(const HopfData& H) {
    return !map_equal(H.M, compose(H.M, H.ctx->braiding(H.obj, H.obj, 1)));
}

bool is_cocommutative(const HopfData& H) {
    return !map_equal(H.D, compose(H.ctx->braiding(H.obj, H.obj, 1), H.D));
}

std::optional<Mismatch> check_left_module(const HopfData& H, const Obj& M, const Morphism& act) {
    Diagram a(H.ctx, {H.obj, H.obj, M});
    a.op(1, 2, act, {M}).op(0, 2, act, {M});
    Diagram b(H.ctx, {H.obj, H.obj, M});
    b.mul(H, 0).op(0, 2, act, {M});
    if (auto m = map_equal(a.build(), b.build())) return m;
    Diagram u(H.ctx, {M});
    u.unit(H, 0).op(0, 2, act, {M});
    return map_equal(u.build(), Morphism::identity(M.dims));
}

std::optional<Mismatch> check_right_module(const HopfData& H, const Obj& M, const Morphism& act) {
    Diagram a(H.ctx, {M, H.obj, H.obj});
    a.op(0, 2, act, {M}).op(0, 2, act, {M});
    Diagram b(H.ctx, {M, H.obj, H.obj});
    b.mul(H, 1).op(0, 2, act, {M});
    if (auto m = map_equal(a.build(), b.build())) return m;
    Diagram u(H.ctx, {M});
    u.unit(H, 1).op(0, 2, act, {M});
    return map_equal(u.build(), Morphism::identity(M.dims));
}

std::optional<Mismatch> check_left_comodule(const HopfData& H, const Obj& M, const Morphism& coact) {
    Diagram a(H.ctx, {M});
    a.op(0, 1, coact, {H.obj, M}).op(1, 1, coact, {H.obj, M});
    Diagram b(H.ctx, {M});
    b.op(0, 1, coact, {H.obj, M}).comul(H, 0);
    if (auto m = map_equal(a.build(), b.build())) return m;
    Diagram u(H.ctx, {M});
    u.op(0, 1, coact, {H.obj, M}).counit(H, 0);
    return map_equal(u.build(), Morphism::identity(M.dims));
}

std::optional<Mismatch> check_right_comodule(const HopfData& H, const Obj& M, const Morphism& coact) {
    Diagram a(H.ctx, {M});
    a.op(0, 1, coact, {M, H.obj}).op(0, 1, coact, {M, H.obj});
    Diagram b(H.ctx, {M});
    b.op(0, 1, coact, {M, H.obj}).comul(H, 1);
    if (auto m = map_equal(a.build(), b.build())) return m;
    Diagram u(H.ctx, {M});
    u.op(0, 1, coact, {M, H.obj}).counit(H, 1);
    return map_equal(u.build(), Morphism::identity(M.dims));
}

std::optional<Mismatch> check_context_linear(const Context& ctx, const Morphism& f, const Obj& X, const Obj& Y) {
    if (ctx.kind() == Context::Kind::Vec) return std::nullopt;
    if (!X.act || !Y.act) throw AlgebraError("not-a-module", "object without an action in a module context");
    int a = ctx.algebra()->dim;
    Morphism lhs = compose(f, *X.act);
    Morphism rhs = compose(*Y.act, tensor_product(Morphism::identity({a}), f));
    return map_equal(lhs, rhs);
}

Morphism comodule_to_module(const HopfData& H, const Obj& M, const Morphism& rho) {
    const Context& c = *H.ctx;
    Obj hs = c.dual(H.obj);
    return Diagram(H.ctx, {hs, M}).op(1, 1, rho, {M, H.obj}).braid(0).op(1, 2, c.ev(H.obj), {}).build();
}

Morphism module_to_comodule(const HopfData& H, const Obj& M, const Morphism& act) {
    const Context& c = *H.ctx;
    Obj hs = c.dual(H.obj);
    return Diagram(H.ctx, {M}).insert(0, c.coev(H.obj), {H.obj, hs}).op(1, 2, act, {M}).braid(0).build();
}

}  // namespace bhl

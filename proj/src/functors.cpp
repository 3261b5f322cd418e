#include "bhl/functors.hpp"

#include "bhl/hopf.hpp"

namespace bhl {

namespace {

const std::vector<std::pair<FunctorId, const char*>> kFunctorNames = {
    {FunctorId::F, "F"},       {FunctorId::G, "G"},         {FunctorId::F_l, "F_l"},   {FunctorId::G_l, "G_l"},
    {FunctorId::L, "L"},       {FunctorId::A, "A"},         {FunctorId::A_inv, "A_inv"}, {FunctorId::Ch, "Ch"},
    {FunctorId::Ch1, "Ch1"},   {FunctorId::Ch2, "Ch2"},     {FunctorId::Bfun, "Bfun"}, {FunctorId::E, "E"},
    {FunctorId::E_inv, "E_inv"}, {FunctorId::F1, "F1"},     {FunctorId::F1_inv, "F1_inv"}, {FunctorId::F2, "F2"},
    {FunctorId::F3, "F3"},     {FunctorId::F4, "F4"},       {FunctorId::S, "S"},       {FunctorId::S_inv, "S_inv"},
    {FunctorId::T, "T"},       {FunctorId::T_inv, "T_inv"}, {FunctorId::G1, "G1"},     {FunctorId::G2, "G2"},
    {FunctorId::K, "K"},       {FunctorId::K_inv, "K_inv"},
};

}  // namespace

std::string functor_str(FunctorId f) {
    for (auto& [id, s] : kFunctorNames)
        if (id == f) return s;
    return "?";
}

FunctorId parse_functor(const std::string& s) {
    for (auto& [id, n] : kFunctorNames)
        if (s == n) return id;
    throw std::invalid_argument("unknown functor '" + s + "'");
}

std::string property_str(Property p) {
    switch (p) {
        case Property::Roundtrip: return "roundtrip";
        case Property::Monoidal: return "monoidal";
        case Property::Braided: return "braided";
    }
    return "?";
}

Property parse_property(const std::string& s) {
    if (s == "roundtrip") return Property::Roundtrip;
    if (s == "monoidal") return Property::Monoidal;
    if (s == "braided") return Property::Braided;
    throw std::invalid_argument("unknown property '" + s + "'");
}

// ---------------------------------------------------------------------------
// D(H)-modules

namespace {

Morphism split_double(const DoubleData& D) {
    int d = D.H->dim;
    return Morphism::reshape({d * d}, {d, d});
}

// left D-action from the two factor actions: (b (x) h).m = b.(h.m)
Morphism assemble_left(const DoubleData& D, const Obj& m, const Morphism& actB, const Morphism& actH) {
    return Diagram(D.H->ctx, {D.D->obj, m})
        .op(0, 1, split_double(D), {D.B->obj, D.H->obj})
        .op(1, 2, actH, {m})
        .op(0, 2, actB, {m})
        .build();
}

// right D-action: m.(b (x) h) = (m.b).h
Morphism assemble_right(const DoubleData& D, const Obj& m, const Morphism& actB, const Morphism& actH) {
    return Diagram(D.H->ctx, {m, D.D->obj})
        .op(1, 1, split_double(D), {D.B->obj, D.H->obj})
        .op(0, 2, actB, {m})
        .op(0, 2, actH, {m})
        .build();
}

}  // namespace

DModule regular_dmodule(std::shared_ptr<const DoubleData> D, bool right) {
    DModule M{D, right, D->D->obj, D->D->M, std::string(right ? "regular_r(" : "regular(") + D->D->name + ")"};
    return M;
}

DModule dmodule_tensor(const DModule& M, const DModule& N) {
    if (M.D != N.D || M.right != N.right) throw AlgebraError("signature-mismatch", "modules over different doubles or sides");
    const HopfData& D = *M.D->D;
    const Context& c = *D.ctx;
    DModule T{M.D, M.right, c.tensor(M.obj, N.obj), {}, M.name + "(x)" + N.name};
    if (!M.right)
        T.act = Diagram(D.ctx, {D.obj, M.obj, N.obj}).comul(D, 0).braid(1).op(0, 2, M.act, {M.obj}).op(1, 2, N.act, {N.obj}).build();
    else
        T.act = Diagram(D.ctx, {M.obj, N.obj, D.obj}).comul(D, 2).braid(1).op(0, 2, M.act, {M.obj}).op(1, 2, N.act, {N.obj}).build();
    return T;
}

std::optional<Mismatch> check_dmodule(const DModule& M) {
    return M.right ? check_right_module(*M.D->D, M.obj, M.act) : check_left_module(*M.D->D, M.obj, M.act);
}

Morphism dmodule_action_B(const DModule& M) {
    Morphism id = Morphism::identity(M.obj.dims);
    return M.right ? compose(M.act, tensor_product(id, M.D->iota_B)) : compose(M.act, tensor_product(M.D->iota_B, id));
}

Morphism dmodule_action_H(const DModule& M) {
    Morphism id = Morphism::identity(M.obj.dims);
    return M.right ? compose(M.act, tensor_product(id, M.D->iota_H)) : compose(M.act, tensor_product(M.D->iota_H, id));
}

Morphism psi(const DModule& M, const DModule& N) {
    const HopfData& H = *M.D->H;
    const Context& c = *H.ctx;
    Obj hs = c.dual(H.obj);
    return Diagram(H.ctx, {M.obj, N.obj})
        .insert(0, c.coev(H.obj), {H.obj, hs})
        .braid(1)
        .op(0, 2, dmodule_action_H(M), {M.obj})
        .op(1, 2, dmodule_action_B(N), {N.obj})
        .braid(0)
        .build();
}

Morphism psi_r_matrix(const DModule& M, const DModule& N) {
    CtxPtr rc = Context::mod_over(M.D->D, M.D->r_matrix);
    return rc->braiding(Obj{M.obj.dims, M.act}, Obj{N.obj.dims, N.act}, 1);
}

Morphism psi_right(const DModule& M, const DModule& N) {
    const HopfData& H = *M.D->H;
    const Context& c = *H.ctx;
    Obj hs = c.dual(H.obj);
    return Diagram(H.ctx, {M.obj, N.obj})
        .insert(2, c.coev_prime(H.obj), {hs, H.obj})
        .braid(1)
        .op(0, 2, dmodule_action_B(M), {M.obj})
        .op(1, 2, dmodule_action_H(N), {N.obj})
        .ibraid(0)
        .build();
}

// ---------------------------------------------------------------------------
// center

HModule hmodule_tensor(const HopfData& H, const HModule& X, const HModule& Y) {
    const Context& c = *H.ctx;
    HModule T{X.name + "(x)" + Y.name, c.tensor(X.obj, Y.obj), {}};
    T.act = Diagram(H.ctx, {H.obj, X.obj, Y.obj}).comul(H, 0).braid(1).op(0, 2, X.act, {X.obj}).op(1, 2, Y.act, {Y.obj}).build();
    return T;
}

std::vector<HModule> module_probes(HopfPtr Hp, int depth) {
    const HopfData& H = *Hp;
    const Context& c = *H.ctx;
    std::vector<HModule> out;
    for (int k : {1, 2}) {
        Obj t = c.trivial({k});
        out.push_back({k == 1 ? "k" : "k^2", t, Diagram(H.ctx, {H.obj, t}).counit(H, 0).build()});
    }
    HModule reg{"regular", H.obj, H.M};
    HModule pw = reg;
    out.push_back(reg);
    for (int k = 2; k <= depth; ++k) {
        pw = hmodule_tensor(H, pw, reg);
        if (pw.obj.dim() > 64) break;
        pw.name = "regular^" + std::to_string(k);
        out.push_back(pw);
    }
    return out;
}

CenterObject to_center(const YDModule& M, const std::vector<HModule>& probes) {
    if (M.variant != Variant::LR_Hop)
        throw AlgebraError("signature-mismatch", "to_center expects a " + variant_str(Variant::LR_Hop) + " module");
    HopfPtr Hp = M.H;
    Obj m = M.obj;
    Morphism coact = M.coact;
    CenterObject C{Hp, m, M.act, {}, {}, "Z(" + M.name + ")"};
    // c_{X,M} = Phi^{1+}_{X,M}: x (x) m -> m_0 (x) m_1.x
    C.rule = [Hp, m, coact](const HModule& X) {
        return Diagram(Hp->ctx, {X.obj, m}).braid(0).op(0, 1, coact, {m, Hp->obj}).op(1, 2, X.act, {X.obj}).build();
    };
    for (const auto& X : probes) C.half.push_back({X, C.rule(X)});
    return C;
}

YDModule center_to_yd(const CenterObject& C) {
    const HopfData& H = *C.H;
    HModule reg{"regular", H.obj, H.M};
    YDModule Y{C.H, Variant::LR_Hop, C.obj, C.act, {}, "K(" + C.name + ")"};
    Y.coact = Diagram(H.ctx, {C.obj}).unit(H, 0).op(0, 2, C.rule(reg), {C.obj, H.obj}).build();
    return Y;
}

CenterObject center_tensor(const CenterObject& V, const CenterObject& W) {
    if (V.H != W.H) throw AlgebraError("signature-mismatch", "center objects over different Hopf algebras");
    const HopfData& H = *V.H;
    HModule vw = hmodule_tensor(H, HModule{V.name, V.obj, V.act}, HModule{W.name, W.obj, W.act});
    CenterObject T{V.H, vw.obj, vw.act, {}, {}, V.name + "(x)" + W.name};
    auto rv = V.rule, rw = W.rule;
    HopfPtr Hp = V.H;
    Obj v = V.obj, w = W.obj;
    T.rule = [Hp, v, w, rv, rw](const HModule& X) {
        return Diagram(Hp->ctx, {X.obj, v, w}).op(0, 2, rv(X), {v, X.obj}).op(1, 2, rw(X), {w, X.obj}).build();
    };
    for (const auto& hb : V.half) T.half.push_back({hb.X, T.rule(hb.X)});
    return T;
}

namespace {

const HModule* find_probe(const CenterObject& C, const std::string& name) {
    for (const auto& hb : C.half)
        if (hb.X.name == name) return &hb.X;
    return nullptr;
}

}  // namespace

Report check_center(const CenterObject& C) {
    const HopfData& H = *C.H;
    const Context& c = *H.ctx;
    const Obj& v = C.obj;
    Report r;
    HModule vmod{C.name, v, C.act};

    {
        Obj one = c.trivial({1});
        HModule k{"k", one, Diagram(H.ctx, {H.obj, one}).counit(H, 0).build()};
        Dims a = concat({1}, v.dims), b = concat(v.dims, {1});
        r.add("unit", map_equal(C.rule(k), Morphism::reshape(a, b)));
    }

    std::optional<Mismatch> rel;
    std::string relw;
    for (size_t i = 0; i < C.half.size() && !rel; ++i)
        for (size_t j = 0; j < C.half.size() && !rel; ++j) {
            const HModule &X = C.half[i].X, &Y = C.half[j].X;
            if (X.obj.dim() * Y.obj.dim() * v.dim() > 4096) continue;
            Morphism lhs = C.rule(hmodule_tensor(H, X, Y));
            Morphism rhs = Diagram(H.ctx, {X.obj, Y.obj, v})
                               .op(1, 2, C.half[j].c, {v, Y.obj})
                               .op(0, 2, C.half[i].c, {v, X.obj})
                               .build();
            rel = map_equal(lhs, compose(Morphism::reshape(rhs.cod(), lhs.cod()), rhs));
            if (rel) relw = X.name + ", " + Y.name + ": ";
        }
    if (rel) r.add("braid-rel", false, relw + rel->str());
    else r.add("braid-rel", true);

    std::optional<Mismatch> lin, inv;
    std::string linw, invw;
    for (const auto& hb : C.half) {
        HModule xv = hmodule_tensor(H, hb.X, vmod), vx = hmodule_tensor(H, vmod, hb.X);
        Morphism lhs = compose(hb.c, xv.act);
        Morphism rhs = compose(vx.act, tensor_product(Morphism::identity({H.dim}), hb.c));
        if (!lin && (lin = map_equal(lhs, rhs))) linw = hb.X.name + ": ";
        if (!inv) {
            try {
                invert(hb.c.dense());
            } catch (const std::exception& e) {
                inv = Mismatch{};
                invw = hb.X.name + " " + e.what();
            }
        }
    }
    if (lin) r.add("c-linear", false, linw + lin->str());
    else r.add("c-linear", true);
    r.add("c-invertible", !inv, invw);

    // naturality in the probe: counit H -> k, coproduct H -> H (x) H, right multiplications
    {
        const HModule* reg = find_probe(C, "regular");
        const HModule* k = find_probe(C, "k");
        const HModule* sq = find_probe(C, "regular^2");
        std::optional<Mismatch> nat;
        std::string natw;
        auto test = [&](const HModule& X, const HModule& Xp, const Morphism& f, const std::string& what) {
            if (nat) return;
            Morphism lhs = compose(tensor_product(Morphism::identity(v.dims), f), C.rule(X));
            Morphism rhs = compose(C.rule(Xp), tensor_product(f, Morphism::identity(v.dims)));
            if ((nat = map_equal(lhs, rhs))) natw = what + ": ";
        };
        if (reg && k) test(*reg, *k, compose(Morphism::reshape({}, {1}), H.E), "counit");
        if (reg && sq) test(*reg, *sq, compose(Morphism::reshape({H.dim, H.dim}, sq->obj.dims), H.D), "coproduct");
        if (reg)
            for (int b = 0; b < H.dim; ++b) {
                Morphism rb = Diagram(H.ctx, {H.obj}).insert(1, Morphism::element({H.dim}, basis_vec(b)), {H.obj}).mul(H, 0).build();
                test(*reg, *reg, rb, "right multiplication by e" + std::to_string(b));
            }
        if (nat) r.add("c-natural", false, natw + nat->str());
        else r.add("c-natural", true);
    }

    // c_{H,V} through c_{H (x) H, V} (H acting on the first factor only) and through Phi_{H,V}
    {
        HModule reg{"regular", H.obj, H.M};
        HModule sq{"regular(x)H", c.tensor(H.obj, H.obj), Diagram(H.ctx, {H.obj, H.obj, H.obj}).mul(H, 0).build()};
        Morphism cH = C.rule(reg);
        Morphism via_unit = Diagram(H.ctx, {H.obj, v}).braid(0).unit(H, 0).op(0, 2, cH, {v, H.obj}).mul(H, 1).build();
        auto m1 = map_equal(cH, via_unit);
        Morphism via_sq = Diagram(H.ctx, {H.obj, v})
                              .unit(H, 0)
                              .merge(0, 2, sq.obj)
                              .op(0, 2, C.rule(sq), {v, sq.obj})
                              .split(1, {H.obj, H.obj})
                              .mul(H, 1)
                              .build();
        auto m2 = map_equal(cH, via_sq);
        if (m1) r.add("moj-uslov", false, "via the braiding: " + m1->str());
        else if (m2) r.add("moj-uslov", false, "via c_{H(x)H,V}: " + m2->str());
        else r.add("moj-uslov", true);
    }
    return r;
}

std::optional<Mismatch> check_center_morphism(const CenterObject& V, const CenterObject& W, const Morphism& f) {
    for (const auto& hb : V.half) {
        const Dims& x = hb.X.obj.dims;
        Morphism lhs = compose(tensor_product(f, Morphism::identity(x)), hb.c);
        Morphism rhs = compose(W.rule(hb.X), tensor_product(Morphism::identity(x), f));
        if (auto m = map_equal(lhs, rhs)) return m;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// functor environment

std::string structure_kind(const Structure& s) {
    if (auto* y = std::get_if<YDModule>(&s)) return "YD " + variant_str(y->variant);
    if (auto* d = std::get_if<DModule>(&s)) return d->right ? "right D(H)-module" : "left D(H)-module";
    return "center object";
}

FunctorEnv::FunctorEnv(HopfPtr h, std::shared_ptr<const DoubleData> d) : H(std::move(h)), D_(std::move(d)) {
    probes = module_probes(H);
}

const std::shared_ptr<const DoubleData>& FunctorEnv::dbl() const {
    if (!D_) D_ = std::make_shared<const DoubleData>(drinfeld_double(H));
    return D_;
}

const HopfPtr& FunctorEnv::opcop() const {
    if (!opcop_) opcop_ = op_cop(*H, OpCop::OpCop);
    return opcop_;
}

namespace {

// elementary steps; public functor ids are chains of these
enum class Op { F, G, Fl, Gl, L, Linv, A, Ainv, Ch, Chinv, B, Binv, E, Einv, F1, F1inv, S, Sinv, T, Tinv, G1, G1inv, G2, G2inv, K, Kinv };

Op inverse(Op o) {
    switch (o) {
        case Op::F: return Op::G;
        case Op::G: return Op::F;
        case Op::Fl: return Op::Gl;
        case Op::Gl: return Op::Fl;
        case Op::L: return Op::Linv;
        case Op::Linv: return Op::L;
        case Op::A: return Op::Ainv;
        case Op::Ainv: return Op::A;
        case Op::Ch: return Op::Chinv;
        case Op::Chinv: return Op::Ch;
        case Op::B: return Op::Binv;
        case Op::Binv: return Op::B;
        case Op::E: return Op::Einv;
        case Op::Einv: return Op::E;
        case Op::F1: return Op::F1inv;
        case Op::F1inv: return Op::F1;
        case Op::S: return Op::Sinv;
        case Op::Sinv: return Op::S;
        case Op::T: return Op::Tinv;
        case Op::Tinv: return Op::T;
        case Op::G1: return Op::G1inv;
        case Op::G1inv: return Op::G1;
        case Op::G2: return Op::G2inv;
        case Op::G2inv: return Op::G2;
        case Op::K: return Op::Kinv;
        case Op::Kinv: return Op::K;
    }
    return o;
}

std::vector<Op> chain(FunctorId f) {
    switch (f) {
        case FunctorId::F: return {Op::F};
        case FunctorId::G: return {Op::G};
        case FunctorId::F_l: return {Op::Fl};
        case FunctorId::G_l: return {Op::Gl};
        case FunctorId::L: return {Op::L};
        case FunctorId::A: return {Op::A};
        case FunctorId::A_inv: return {Op::Ainv};
        case FunctorId::Ch:
        case FunctorId::Ch1:
        case FunctorId::Ch2: return {Op::Ch};
        case FunctorId::Bfun: return {Op::B};
        case FunctorId::E: return {Op::E};
        case FunctorId::E_inv: return {Op::Einv};
        case FunctorId::F1: return {Op::F1};
        case FunctorId::F1_inv: return {Op::F1inv};
        case FunctorId::F2: return {Op::F1, Op::Ainv};
        case FunctorId::F3: return {Op::T, Op::E};
        case FunctorId::F4: return {Op::Sinv, Op::T, Op::E};
        case FunctorId::S: return {Op::S};
        case FunctorId::S_inv: return {Op::Sinv};
        case FunctorId::T: return {Op::T};
        case FunctorId::T_inv: return {Op::Tinv};
        case FunctorId::G1: return {Op::G1};
        case FunctorId::G2: return {Op::G2};
        case FunctorId::K: return {Op::K};
        case FunctorId::K_inv: return {Op::Kinv};
    }
    return {};
}

const YDModule& need_yd(const Structure& s, Variant v, const char* who) {
    auto* y = std::get_if<YDModule>(&s);
    if (!y || y->variant != v)
        throw AlgebraError("signature-mismatch", std::string(who) + " expects YD " + variant_str(v) + ", got " + structure_kind(s));
    return *y;
}

const DModule& need_dmod(const Structure& s, bool right, const char* who) {
    auto* d = std::get_if<DModule>(&s);
    if (!d || d->right != right)
        throw AlgebraError("signature-mismatch", std::string(who) + " expects a " + (right ? "right" : "left") +
                                                     " D(H)-module, got " + structure_kind(s));
    return *d;
}

void require_transparent(const HopfData& H, const Obj& m) {
    const Context& c = *H.ctx;
    if (c.kind() == Context::Kind::Vec) return;
    if (!is_symmetric_pair(c, H.obj, H.obj) || !is_symmetric_pair(c, H.obj, m))
        throw AlgebraError("transparency-violated", "Phi_{H,M} is not symmetric in " + c.name());
}

YDModule yd(HopfPtr H, Variant v, const YDModule& src, Morphism act, Morphism coact, const std::string& tag) {
    return YDModule{std::move(H), v, src.obj, std::move(act), std::move(coact), tag + "(" + src.name + ")"};
}

Structure step(Op o, const Structure& in, const FunctorEnv& env) {
    switch (o) {
        case Op::F: {
            const DModule& M = need_dmod(in, false, "F");
            const HopfData& H = *M.D->H;
            require_transparent(H, M.obj);
            const Context& c = *H.ctx;
            Morphism coact = Diagram(H.ctx, {M.obj})
                                 .insert(0, c.coev(H.obj), {H.obj, c.dual(H.obj)})
                                 .op(1, 2, dmodule_action_B(M), {M.obj})
                                 .braid(0)
                                 .build();
            return YDModule{M.D->H, Variant::LR_Hop, M.obj, dmodule_action_H(M), coact, "F(" + M.name + ")"};
        }
        case Op::Fl: {
            const DModule& M = need_dmod(in, false, "F_l");
            const HopfData& H = *M.D->H;
            require_transparent(H, M.obj);
            const Context& c = *H.ctx;
            Morphism coact = Diagram(H.ctx, {M.obj})
                                 .insert(0, c.coev(H.obj), {H.obj, c.dual(H.obj)})
                                 .Si(*M.D->B, 1)
                                 .op(1, 2, dmodule_action_B(M), {M.obj})
                                 .build();
            return YDModule{M.D->H, Variant::LL, M.obj, dmodule_action_H(M), coact, "F_l(" + M.name + ")"};
        }
        case Op::G:
        case Op::Gl: {
            bool left = o == Op::Gl;
            const YDModule& K = need_yd(in, left ? Variant::LL : Variant::LR_Hop, left ? "G_l" : "G");
            const HopfData& H = *K.H;
            require_transparent(H, K.obj);
            const auto& D = env.dbl();
            if (D->H != K.H) throw AlgebraError("signature-mismatch", "the double was built over a different Hopf algebra");
            const Context& c = *H.ctx;
            Obj hs = c.dual(H.obj);
            Morphism actB;
            if (left)
                actB = Diagram(H.ctx, {hs, K.obj}).op(1, 1, K.coact, {H.obj, K.obj}).Si(H, 1).op(0, 2, c.ev(H.obj), {}).build();
            else
                actB = Diagram(H.ctx, {hs, K.obj}).op(1, 1, K.coact, {K.obj, H.obj}).braid(0).op(1, 2, c.ev(H.obj), {}).build();
            return DModule{D, false, K.obj, assemble_left(*D, K.obj, actB, K.act), std::string(left ? "G_l(" : "G(") + K.name + ")"};
        }
        case Op::L: {
            const YDModule& M = need_yd(in, Variant::LL, "L");
            const HopfData& H = *M.H;
            require_transparent(H, M.obj);
            Morphism act = Diagram(H.ctx, {M.obj, H.obj}).ibraid(0).S(H, 0).S(H, 0).op(0, 2, M.act, {M.obj}).build();
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {H.obj, M.obj}).Si(H, 0).Si(H, 0).braid(0).build();
            return yd(M.H, Variant::RR, M, act, coact, "L");
        }
        case Op::Linv: {
            const YDModule& M = need_yd(in, Variant::RR, "L^-1");
            const HopfData& H = *M.H;
            Morphism act = Diagram(H.ctx, {H.obj, M.obj}).Si(H, 0).Si(H, 0).braid(0).op(0, 2, M.act, {M.obj}).build();
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {M.obj, H.obj}).ibraid(0).S(H, 0).S(H, 0).build();
            return yd(M.H, Variant::LL, M, act, coact, "L^-1");
        }
        case Op::A: {
            const YDModule& M = need_yd(in, Variant::RL_Hcop, "A");
            const HopfData& H = *M.H;
            require_transparent(H, M.obj);
            Morphism act = Diagram(H.ctx, {H.obj, M.obj}).ibraid(0).S(H, 1).op(0, 2, M.act, {M.obj}).build();
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {H.obj, M.obj}).Si(H, 0).braid(0).build();
            return yd(M.H, Variant::LR_Hop, M, act, coact, "A");
        }
        case Op::Ainv: {
            const YDModule& M = need_yd(in, Variant::LR_Hop, "A^-1");
            const HopfData& H = *M.H;
            require_transparent(H, M.obj);
            Morphism act = Diagram(H.ctx, {M.obj, H.obj}).Si(H, 1).braid(0).op(0, 2, M.act, {M.obj}).build();
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {M.obj, H.obj}).ibraid(0).S(H, 0).build();
            return yd(M.H, Variant::RL_Hcop, M, act, coact, "A^-1");
        }
        case Op::Ch:
        case Op::Chinv: {
            bool fwd = o == Op::Ch;
            const YDModule& M = need_yd(in, Variant::LR_Hop, fwd ? "Ch" : "Ch^-1");
            HopfPtr target = fwd ? env.opcop() : env.H;
            if (M.H != (fwd ? env.H : env.opcop())) throw AlgebraError("signature-mismatch", "Ch applies over the environment's Hopf algebra");
            const HopfData& H = *env.H;
            require_transparent(H, M.obj);
            Diagram a(H.ctx, {H.obj, M.obj});
            Diagram b(H.ctx, {M.obj});
            b.op(0, 1, M.coact, {M.obj, H.obj});
            if (fwd) a.S(H, 0), b.Si(H, 1);
            else a.Si(H, 0), b.S(H, 1);
            a.op(0, 2, M.act, {M.obj});
            return yd(target, Variant::LR_Hop, M, a.build(), b.build(), fwd ? "ch" : "ch^-1");
        }
        case Op::B:
        case Op::Binv: {
            bool fwd = o == Op::B;
            const YDModule& M = need_yd(in, Variant::RL_Hcop, fwd ? "Bfun" : "Bfun^-1");
            HopfPtr target = fwd ? env.opcop() : env.H;
            if (M.H != (fwd ? env.H : env.opcop())) throw AlgebraError("signature-mismatch", "Bfun applies over the environment's Hopf algebra");
            const HopfData& H = *env.H;
            require_transparent(H, M.obj);
            Diagram a(H.ctx, {M.obj, H.obj});
            Diagram b(H.ctx, {M.obj});
            b.op(0, 1, M.coact, {H.obj, M.obj});
            if (fwd) a.S(H, 1), b.Si(H, 0);
            else a.Si(H, 1), b.S(H, 0);
            a.op(0, 2, M.act, {M.obj});
            return yd(target, Variant::RL_Hcop, M, a.build(), b.build(), fwd ? "B" : "B^-1");
        }
        case Op::E: {
            const YDModule& K = need_yd(in, Variant::LR_Hcop, "E");
            const HopfData& H = *K.H;
            require_transparent(H, K.obj);
            Morphism coact = Diagram(H.ctx, {K.obj}).op(0, 1, K.coact, {K.obj, H.obj}).ibraid(0).S(H, 0).build();
            Morphism act = Diagram(H.ctx, {K.obj, H.obj}).Si(H, 1).braid(0).op(0, 2, K.act, {K.obj}).build();
            return yd(K.H, Variant::RL_Hop, K, act, coact, "E");
        }
        case Op::Einv: {
            const YDModule& L = need_yd(in, Variant::RL_Hop, "E^-1");
            const HopfData& H = *L.H;
            require_transparent(H, L.obj);
            Morphism coact = Diagram(H.ctx, {L.obj}).op(0, 1, L.coact, {H.obj, L.obj}).braid(0).Si(H, 1).build();
            Morphism act = Diagram(H.ctx, {H.obj, L.obj}).S(H, 0).ibraid(0).op(0, 2, L.act, {L.obj}).build();
            return yd(L.H, Variant::LR_Hcop, L, act, coact, "E^-1");
        }
        case Op::F1: {
            const YDModule& M = need_yd(in, Variant::LL, "F1");
            const HopfData& H = *M.H;
            require_transparent(H, M.obj);
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {H.obj, M.obj}).Si(H, 0).braid(0).build();
            return yd(M.H, Variant::LR_Hop, M, M.act, coact, "F1");
        }
        case Op::F1inv: {
            const YDModule& N = need_yd(in, Variant::LR_Hop, "F1^-1");
            const HopfData& H = *N.H;
            require_transparent(H, N.obj);
            Morphism coact = Diagram(H.ctx, {N.obj}).op(0, 1, N.coact, {N.obj, H.obj}).S(H, 1).ibraid(0).build();
            return yd(N.H, Variant::LL, N, N.act, coact, "F1^-1");
        }
        case Op::S:
        case Op::T: {
            const DModule& M = need_dmod(in, true, o == Op::S ? "S" : "T");
            const HopfData& H = *M.D->H;
            require_transparent(H, M.obj);
            const Context& c = *H.ctx;
            Morphism coact = Diagram(H.ctx, {M.obj})
                                 .insert(1, c.coev_prime(H.obj), {c.dual(H.obj), H.obj})
                                 .op(0, 2, dmodule_action_B(M), {M.obj})
                                 .S(H, 1)
                                 .build();
            Morphism actH = dmodule_action_H(M);
            if (o == Op::S) return YDModule{M.D->H, Variant::RR, M.obj, actH, coact, "S(" + M.name + ")"};
            Morphism act = Diagram(H.ctx, {H.obj, M.obj}).braid(0).Si(H, 1).op(0, 2, actH, {M.obj}).build();
            return YDModule{M.D->H, Variant::LR_Hcop, M.obj, act, coact, "T(" + M.name + ")"};
        }
        case Op::Sinv:
        case Op::Tinv: {
            bool s = o == Op::Sinv;
            const YDModule& N = need_yd(in, s ? Variant::RR : Variant::LR_Hcop, s ? "S^-1" : "T^-1");
            const HopfData& H = *N.H;
            require_transparent(H, N.obj);
            const auto& D = env.dbl();
            if (D->H != N.H) throw AlgebraError("signature-mismatch", "the double was built over a different Hopf algebra");
            const Context& c = *H.ctx;
            Obj hs = c.dual(H.obj);
            Morphism actB = Diagram(H.ctx, {N.obj, hs})
                                .op(0, 1, N.coact, {N.obj, H.obj})
                                .Si(H, 1)
                                .op(1, 2, c.ev_prime(H.obj), {})
                                .build();
            Morphism actH = s ? N.act : Diagram(H.ctx, {N.obj, H.obj}).S(H, 1).ibraid(0).op(0, 2, N.act, {N.obj}).build();
            return DModule{D, true, N.obj, assemble_right(*D, N.obj, actB, actH), std::string(s ? "S^-1(" : "T^-1(") + N.name + ")"};
        }
        case Op::G1: {
            const YDModule& M = need_yd(in, Variant::RR, "G1");
            const HopfData& H = *M.H;
            require_transparent(H, M.obj);
            Morphism act = Diagram(H.ctx, {H.obj, M.obj}).Si(H, 0).ibraid(0).op(0, 2, M.act, {M.obj}).build();
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {M.obj, H.obj}).braid(0).S(H, 0).build();
            return yd(M.H, Variant::RR_mixed_G1, M, act, coact, "G1");
        }
        case Op::G1inv: {
            const YDModule& M = need_yd(in, Variant::RR_mixed_G1, "G1^-1");
            const HopfData& H = *M.H;
            Morphism act = Diagram(H.ctx, {M.obj, H.obj}).braid(0).S(H, 0).op(0, 2, M.act, {M.obj}).build();
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {H.obj, M.obj}).Si(H, 0).ibraid(0).build();
            return yd(M.H, Variant::RR, M, act, coact, "G1^-1");
        }
        case Op::G2: {
            const YDModule& M = need_yd(in, Variant::RR, "G2");
            const HopfData& H = *M.H;
            require_transparent(H, M.obj);
            Morphism act = Diagram(H.ctx, {H.obj, M.obj}).S(H, 0).braid(0).op(0, 2, M.act, {M.obj}).build();
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {M.obj, H.obj}).ibraid(0).Si(H, 0).build();
            return yd(M.H, Variant::RR_mixed_G1, M, act, coact, "G2");
        }
        case Op::G2inv: {
            const YDModule& M = need_yd(in, Variant::RR_mixed_G1, "G2^-1");
            const HopfData& H = *M.H;
            Morphism act = Diagram(H.ctx, {M.obj, H.obj}).ibraid(0).Si(H, 0).op(0, 2, M.act, {M.obj}).build();
            Morphism coact = Diagram(H.ctx, {M.obj}).op(0, 1, M.coact, {H.obj, M.obj}).S(H, 0).braid(0).build();
            return yd(M.H, Variant::RR, M, act, coact, "G2^-1");
        }
        case Op::K: {
            auto* C = std::get_if<CenterObject>(&in);
            if (!C) throw AlgebraError("signature-mismatch", "K expects a center object, got " + structure_kind(in));
            return center_to_yd(*C);
        }
        case Op::Kinv: {
            const YDModule& M = need_yd(in, Variant::LR_Hop, "K^-1");
            return to_center(M, env.probes);
        }
    }
    throw std::logic_error("unhandled functor step");
}

Structure run(const std::vector<Op>& ops, const Structure& in, const FunctorEnv& env) {
    Structure cur = in;
    for (Op o : ops) cur = step(o, cur, env);
    return cur;
}

std::vector<Op> inverse_chain(FunctorId f) {
    auto c = chain(f);
    std::vector<Op> out;
    for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

Structure tensor(const Structure& a, const Structure& b) {
    if (auto* y = std::get_if<YDModule>(&a)) return yd_tensor(*y, std::get<YDModule>(b));
    if (auto* d = std::get_if<DModule>(&a)) return dmodule_tensor(*d, std::get<DModule>(b));
    return center_tensor(std::get<CenterObject>(a), std::get<CenterObject>(b));
}

Morphism align(const Morphism& ref, Morphism f) {
    if (f.dom() != ref.dom() && volume(f.dom()) == volume(ref.dom())) f = compose(f, Morphism::reshape(ref.dom(), f.dom()));
    if (f.cod() != ref.cod() && volume(f.cod()) == volume(ref.cod())) f = compose(Morphism::reshape(f.cod(), ref.cod()), f);
    return f;
}

// which parts to compare: 1 action, 2 coaction, 3 both
bool same(const Structure& a, const Structure& b, int parts, std::string* w) {
    if (a.index() != b.index()) {
        *w = structure_kind(a) + " vs " + structure_kind(b);
        return false;
    }
    if (auto* y = std::get_if<YDModule>(&a)) {
        const YDModule& z = std::get<YDModule>(b);
        if (parts == 3) return same_structure(*y, z, w);
        const Morphism& f = parts == 1 ? y->act : y->coact;
        const Morphism& g = parts == 1 ? z.act : z.coact;
        if (auto m = map_equal(f, align(f, g))) {
            *w = std::string(parts == 1 ? "action " : "coaction ") + m->str();
            return false;
        }
        return true;
    }
    if (auto* d = std::get_if<DModule>(&a)) {
        const DModule& e = std::get<DModule>(b);
        if (auto m = map_equal(d->act, align(d->act, e.act))) {
            *w = "action " + m->str();
            return false;
        }
        return true;
    }
    const CenterObject &c = std::get<CenterObject>(a), &e = std::get<CenterObject>(b);
    if (auto m = map_equal(c.act, align(c.act, e.act))) {
        *w = "action " + m->str();
        return false;
    }
    for (const auto& hb : c.half) {
        if (auto m = map_equal(hb.c, align(hb.c, e.rule(hb.X)))) {
            *w = "half-braiding at " + hb.X.name + " " + m->str();
            return false;
        }
    }
    return true;
}

using BraidFn = std::function<Morphism(const Structure&, const Structure&)>;

BraidFn fam(Family f, bool flipped = false, std::optional<Variant> retag = std::nullopt) {
    return [f, flipped, retag](const Structure& a, const Structure& b) {
        YDModule m = std::get<YDModule>(a), n = std::get<YDModule>(b);
        if (retag) m.variant = n.variant = *retag;
        // flipped: (Phi_{N,M})^{-1}, again a map M (x) N -> N (x) M
        return flipped ? yd_braiding(n, m, f, true) : yd_braiding(m, n, f, false);
    };
}

Morphism center_braiding(const Structure& a, const Structure& b) {
    const CenterObject &v = std::get<CenterObject>(a), &w = std::get<CenterObject>(b);
    return w.rule(HModule{v.name, v.obj, v.act});
}

struct BraidSpec {
    std::string name;
    BraidFn fn;
};
using Assignment = std::vector<std::pair<BraidSpec, BraidSpec>>;

Assignment assignment(FunctorId f) {
    BraidSpec psiL{"Psi", [](const Structure& a, const Structure& b) { return psi(std::get<DModule>(a), std::get<DModule>(b)); }};
    BraidSpec psiR{"Psi^R",
                   [](const Structure& a, const Structure& b) { return psi_right(std::get<DModule>(a), std::get<DModule>(b)); }};
    BraidSpec cen{"c", center_braiding};
    auto B = [](Family fm, bool flipped = false, std::optional<Variant> retag = std::nullopt) {
        std::string n = "Phi^" + family_str(fm);
        if (flipped) n = "(" + n + "_{N,M})^-1";
        return BraidSpec{n, fam(fm, flipped, retag)};
    };
    auto rev = [](Assignment a) {
        for (auto& p : a) std::swap(p.first, p.second);
        return a;
    };
    switch (f) {
        case FunctorId::F: return {{psiL, B(Family::P1)}};
        case FunctorId::G: return rev({{psiL, B(Family::P1)}});
        case FunctorId::F_l: return {{psiL, B(Family::L)}, {psiL, B(Family::L, true)}};
        case FunctorId::G_l: return rev({{psiL, B(Family::L)}, {psiL, B(Family::L, true)}});
        case FunctorId::L: return {{B(Family::L), B(Family::R)}, {B(Family::L), B(Family::R, true)}};
        case FunctorId::A: return {{B(Family::P3), B(Family::P1)}, {B(Family::M3), B(Family::M1)}};
        case FunctorId::A_inv: return rev({{B(Family::P3), B(Family::P1)}, {B(Family::M3), B(Family::M1)}});
        case FunctorId::Ch:
        case FunctorId::Ch1:
        case FunctorId::Ch2: return {{B(Family::P1), B(Family::P2, false, Variant::LR_Hcop)}};
        case FunctorId::Bfun: return {{B(Family::P3), B(Family::P4, false, Variant::RL_Hop)}};
        case FunctorId::E: return {{B(Family::P2), B(Family::P4)}, {B(Family::M2), B(Family::M4)}};
        case FunctorId::E_inv: return rev({{B(Family::P2), B(Family::P4)}, {B(Family::M2), B(Family::M4)}});
        case FunctorId::F1: return {{B(Family::L), B(Family::P1)}, {B(Family::L), B(Family::M1, true)}};
        case FunctorId::F1_inv: return rev({{B(Family::L), B(Family::P1)}, {B(Family::L), B(Family::M1, true)}});
        case FunctorId::F2: return {{B(Family::L), B(Family::P3)}, {B(Family::L), B(Family::M3, true)}};
        case FunctorId::S: return {{psiR, B(Family::R)}, {psiR, B(Family::R, true)}};
        case FunctorId::S_inv: return rev({{psiR, B(Family::R)}, {psiR, B(Family::R, true)}});
        case FunctorId::T: return {{psiR, B(Family::M2)}, {psiR, B(Family::P2)}};
        case FunctorId::T_inv: return rev({{psiR, B(Family::M2)}, {psiR, B(Family::P2)}});
        case FunctorId::F3: return {{psiR, B(Family::M4)}, {psiR, B(Family::P4)}};
        case FunctorId::F4:
            return {{B(Family::R), B(Family::P4)},
                    {B(Family::R), B(Family::M4)},
                    {B(Family::R, true), B(Family::P4)},
                    {B(Family::R, true), B(Family::M4)}};
        case FunctorId::G1:
        case FunctorId::G2: return {{B(Family::R), B(Family::G1)}, {B(Family::R, true), B(Family::G1)}};
        case FunctorId::K: return {{cen, B(Family::P1)}};
        case FunctorId::K_inv: return {{B(Family::P1), cen}};
    }
    return {};
}

}  // namespace

Structure apply_functor(FunctorId f, const Structure& in, const FunctorEnv& env) { return run(chain(f), in, env); }

Report check_functor(FunctorId f, const Structure& M, const Structure& N, const FunctorEnv& env, Property p) {
    Report r;
    std::string id = functor_str(f) + "-" + property_str(p);
    try {
        switch (p) {
            case Property::Roundtrip: {
                auto inv = inverse_chain(f);
                std::string w;
                bool ok = true;
                for (const Structure* s : {&M, &N}) {
                    Structure back = run(inv, run(chain(f), *s, env), env);
                    if (!same(*s, back, 3, &w)) {
                        ok = false;
                        break;
                    }
                }
                r.add(id, ok, w);
                break;
            }
            case Property::Monoidal: {
                int parts = f == FunctorId::Ch1 ? 1 : f == FunctorId::Ch2 ? 2 : 3;
                Structure lhs = apply_functor(f, tensor(M, N), env);
                Structure rhs = tensor(apply_functor(f, M, env), apply_functor(f, N, env));
                std::string w;
                bool ok = same(lhs, rhs, parts, &w);
                r.add(id, ok, w);
                break;
            }
            case Property::Braided: {
                Structure FM = apply_functor(f, M, env), FN = apply_functor(f, N, env);
                std::string w;
                bool ok = false;
                for (const auto& [src, tgt] : assignment(f)) {
                    Morphism a = src.fn(M, N), b = tgt.fn(FM, FN);
                    auto m = map_equal(a, align(a, b));
                    if (!m) {
                        ok = true;
                        break;
                    }
                    if (w.empty()) w = src.name + " vs " + tgt.name + ": " + m->str();
                }
                r.add(id, ok, w);
                break;
            }
        }
    } catch (const AlgebraError& e) {
        if (e.code == "transparency-violated") r.precondition(id, e.what());
        else throw;
    }
    return r;
}

Report check_triangles(const DModule& M, const FunctorEnv& env) {
    Report r;
    std::string w;
    if (!M.right) {
        Structure lhs = apply_functor(FunctorId::F1, apply_functor(FunctorId::F_l, M, env), env);
        Structure rhs = apply_functor(FunctorId::F, M, env);
        r.add("triangle-1", same(lhs, rhs, 3, &w), w);
        Structure l2 = apply_functor(FunctorId::F2, apply_functor(FunctorId::F_l, M, env), env);
        Structure r2 = apply_functor(FunctorId::A_inv, rhs, env);
        r.add("triangle-2", same(l2, r2, 3, &w), w);
    } else {
        Structure l3 = apply_functor(FunctorId::F3, M, env);
        Structure r3 = apply_functor(FunctorId::E, apply_functor(FunctorId::T, M, env), env);
        r.add("triangle-3", same(l3, r3, 3, &w), w);
        Structure l4 = apply_functor(FunctorId::F4, apply_functor(FunctorId::S, M, env), env);
        r.add("triangle-4", same(l4, l3, 3, &w), w);
    }
    return r;
}

std::optional<Mismatch> check_yddh_monoidal(const DoubleData& D) {
    const HopfData &H = *D.H, &B = *D.B;
    const Context& c = *H.ctx;
    Obj hs = c.dual(H.obj);
    Morphism coev = c.coev(H.obj);
    Morphism lhs = Diagram(H.ctx, {}).insert(0, coev, {H.obj, hs}).comul(B, 1).build();
    Morphism rhs = Diagram(H.ctx, {})
                       .insert(0, coev, {H.obj, hs})
                       .insert(2, coev, {H.obj, hs})
                       .ibraid(1)
                       .braid(0)
                       .mul(H, 0)
                       .build();
    return map_equal(lhs, rhs);
}

std::optional<Mismatch> check_loop_identity(const CtxPtr& ctx, const Obj& X) {
    Obj xs = ctx->dual(X);
    Morphism lhs = Diagram(ctx, {X}).insert(0, ctx->coev(X), {X, xs}).ibraid(0).ibraid(1).op(0, 2, ctx->ev(X), {}).build();
    return map_equal(lhs, Morphism::identity(X.dims));
}

Report embedding_check(HopfPtr Hp, const std::vector<Probe>& probes) {
    Report r;
    const HopfData& H = *Hp;
    auto t = is_transparent(*H.ctx, H.obj, probes);
    if (!t.ok) {
        r.precondition("not-transparent", H.name + " is not transparent: " + t.str());
        return r;
    }
    FunctorEnv env(Hp);
    const auto& D = env.dbl();
    DModule M = regular_dmodule(D);
    YDModule Y = std::get<YDModule>(apply_functor(FunctorId::F, M, env));
    r.append(check_yd(Y), "F(regular) ");
    CenterObject C = to_center(Y, env.probes);
    r.append(check_center(C), "center ");
    r.add("braiding-corresponds", map_equal(psi(M, M), center_braiding(C, C)));
    r.add("roundtrip", map_equal(center_to_yd(C).coact, Y.coact));
    return r;
}

}  // namespace bhl

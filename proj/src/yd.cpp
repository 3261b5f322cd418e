#include "bhl/yd.hpp"

#include "bhl/hopf.hpp"

namespace bhl {

std::string variant_str(Variant v) {
    switch (v) {
        case Variant::LL: return "LL";
        case Variant::RR: return "RR";
        case Variant::LR_Hop: return "LR_Hop";
        case Variant::LR_Hcop: return "LR_Hcop";
        case Variant::RL_Hcop: return "RL_Hcop";
        case Variant::RL_Hop: return "RL_Hop";
        case Variant::RR_mixed_G1: return "RR_mixed_G1";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    for (Variant v : {Variant::LL, Variant::RR, Variant::LR_Hop, Variant::LR_Hcop, Variant::RL_Hcop, Variant::RL_Hop,
                      Variant::RR_mixed_G1})
        if (variant_str(v) == s) return v;
    throw std::invalid_argument("unknown YD variant '" + s + "'");
}

bool action_left(Variant v) {
    return v == Variant::LL || v == Variant::LR_Hop || v == Variant::LR_Hcop || v == Variant::RR_mixed_G1;
}

bool coaction_left(Variant v) {
    return v == Variant::LL || v == Variant::RL_Hcop || v == Variant::RL_Hop || v == Variant::RR_mixed_G1;
}

std::string family_str(Family f) {
    switch (f) {
        case Family::L: return "L";
        case Family::R: return "R";
        case Family::P1: return "1+";
        case Family::M1: return "1-";
        case Family::P2: return "2+";
        case Family::M2: return "2-";
        case Family::P3: return "3+";
        case Family::M3: return "3-";
        case Family::P4: return "4+";
        case Family::M4: return "4-";
        case Family::G1: return "G1";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    for (Family f : {Family::L, Family::R, Family::P1, Family::M1, Family::P2, Family::M2, Family::P3, Family::M3,
                     Family::P4, Family::M4, Family::G1})
        if (family_str(f) == s) return f;
    throw std::invalid_argument("unknown braiding family '" + s + "'");
}

Variant family_variant(Family f) {
    switch (f) {
        case Family::L: return Variant::LL;
        case Family::R: return Variant::RR;
        case Family::P1:
        case Family::M1: return Variant::LR_Hop;
        case Family::P2:
        case Family::M2: return Variant::LR_Hcop;
        case Family::P3:
        case Family::M3: return Variant::RL_Hcop;
        case Family::P4:
        case Family::M4: return Variant::RL_Hop;
        case Family::G1: return Variant::RR_mixed_G1;
    }
    return Variant::LL;
}

namespace {

// wire-level helpers; the action/coaction sides come from the variant
struct W {
    const YDModule& M;
    const HopfData& H;
    explicit W(const YDModule& m) : M(m), H(*m.H) {}

    Diagram dia(std::vector<Obj> w) const { return Diagram(H.ctx, std::move(w)); }
    void act(Diagram& d, size_t pos) const { d.op(pos, 2, M.act, {M.obj}); }
    void coact(Diagram& d, size_t pos) const {
        if (coaction_left(M.variant)) d.op(pos, 1, M.coact, {H.obj, M.obj});
        else d.op(pos, 1, M.coact, {M.obj, H.obj});
    }
};

Morphism adjoint_coaction(const HopfData& H, Variant v) {
    Diagram d(H.ctx, {H.obj});
    switch (v) {
        case Variant::LR_Hop:
        case Variant::LR_Hcop:
            // h2 (x) h3 S^{-1}(h1)
            d.comul(H, 0).Si(H, 0).comul(H, 1).ibraid(0).ibraid(1).mul(H, 1);
            break;
        case Variant::LL:
            // h1 S(h3) (x) h2
            d.comul(H, 0).comul(H, 1).S(H, 2).braid(1).mul(H, 0);
            break;
        case Variant::RR:
            // h2 (x) S(h1) h3
            d.comul(H, 0).comul(H, 0).S(H, 0).braid(0).mul(H, 1);
            break;
        case Variant::RL_Hcop:
        case Variant::RL_Hop:
            // S^{-1}(h3) h1 (x) h2
            d.comul(H, 0).comul(H, 1).Si(H, 2).braid(1).braid(0).mul(H, 0);
            break;
        default: throw std::logic_error("no adjoint coaction for this variant");
    }
    return d.build();
}

void require_same(const YDModule& M, const YDModule& N) {
    if (M.variant != N.variant) throw AlgebraError("variant-mismatch", variant_str(M.variant) + " vs " + variant_str(N.variant));
    if (M.H != N.H) throw AlgebraError("variant-mismatch", "modules over different Hopf algebras");
}

}  // namespace

YDModule trivial_yd(HopfPtr H, Variant v, int dim) {
    const Context& c = *H->ctx;
    Obj o = c.trivial({dim});
    YDModule M{H, v, o, {}, {}, "trivial" + std::to_string(dim)};
    Diagram a(H->ctx, action_left(v) ? std::vector<Obj>{H->obj, o} : std::vector<Obj>{o, H->obj});
    a.counit(*H, action_left(v) ? 0 : 1);
    M.act = a.build();
    Diagram b(H->ctx, {o});
    b.unit(*H, coaction_left(v) ? 0 : 1);
    M.coact = b.build();
    return M;
}

YDModule adjoint_yd_module(HopfPtr H, Variant v) {
    YDModule M{H, v, H->obj, H->M, {}, "adjoint(" + H->name + ")"};
    if (v == Variant::RR_mixed_G1) {
        // the G1 image of the right-right adjoint module
        Diagram a(H->ctx, {H->obj, H->obj});
        a.Si(*H, 0).ibraid(0).mul(*H, 0);
        M.act = a.build();
        Diagram b(H->ctx, {H->obj});
        b.op(0, 1, adjoint_coaction(*H, Variant::RR), {H->obj, H->obj}).braid(0).S(*H, 0);
        M.coact = b.build();
        return M;
    }
    M.coact = adjoint_coaction(*H, v);
    return M;
}

YDModule qt_induced_yd(HopfPtr A, const LinMap& R, const Obj& M, const Morphism& action, bool left) {
    int a = A->dim;
    if (R.dom() != Dims{} || R.cod() != Dims{a, a}) throw AlgebraError("compose-mismatch", "R must lie in A (x) A");
    Morphism r = Morphism(R);
    YDModule Y{A, left ? Variant::LL : Variant::RR, M, action, {}, "induced"};
    Diagram d(A->ctx, {M});
    if (left) {
        // R2 (x) R1 m
        d.insert(0, r, {A->obj, A->obj}).braid(0).op(1, 2, action, {M});
    } else {
        // m R1 (x) R2
        d.insert(1, r, {A->obj, A->obj}).op(0, 2, action, {M});
    }
    Y.coact = d.build();
    return Y;
}

YDModule graded_line(HopfPtr kZN, int N, Variant v, int a, int b) {
    if (kZN->dim != N) throw AlgebraError("bad-family-params", "graded_line expects k[Z_N]");
    Obj o{{1}, std::nullopt};
    if (kZN->ctx->kind() != Context::Kind::Vec) throw AlgebraError("not-supported", "graded_line lives in Vec");
    std::vector<SVec> cols(N);
    for (int j = 0; j < N; ++j) cols[j] = {Term{0, Cyc::root(N, (long long)a * j)}};
    YDModule M{kZN, v, o, {}, {}, "V(" + std::to_string(a) + "," + std::to_string(b) + ")"};
    M.act = Morphism::from_columns(action_left(v) ? Dims{N, 1} : Dims{1, N}, {1}, cols);
    int g = ((b % N) + N) % N;
    M.coact = Morphism::from_columns({1}, coaction_left(v) ? Dims{N, 1} : Dims{1, N}, {{Term{(Index)g, Cyc(1)}}});
    return M;
}

YDModule yd_direct_sum(const YDModule& M, const YDModule& N) {
    require_same(M, N);
    if (M.H->ctx->kind() != Context::Kind::Vec) throw AlgebraError("not-supported", "direct sums are built in Vec");
    int h = M.H->dim;
    Index m = M.obj.dim(), n = N.obj.dim();
    int s = (int)(m + n);
    bool la = action_left(M.variant), lc = coaction_left(M.variant);
    std::vector<SVec> acols((Index)h * s);
    for (int x = 0; x < h; ++x)
        for (Index j = 0; j < (Index)s; ++j) {
            bool first = j < m;
            Index local = first ? j : j - m;
            const YDModule& P = first ? M : N;
            Index pd = first ? m : n;
            Index col = la ? x * pd + local : local * h + x;
            SVec v = P.act.column(col);
            if (!first)
                for (auto& t : v) t.i += m;
            acols[la ? x * s + j : j * h + x] = v;
        }
    std::vector<SVec> ccols(s);
    for (Index j = 0; j < (Index)s; ++j) {
        bool first = j < m;
        Index local = first ? j : j - m;
        const YDModule& P = first ? M : N;
        Index pd = first ? m : n;
        SVec v = P.coact.column(local);
        for (auto& t : v) {
            Index hh = lc ? t.i / pd : t.i % h;
            Index e = lc ? t.i % pd : t.i / h;
            if (!first) e += m;
            t.i = lc ? hh * s + e : e * h + hh;
        }
        canonicalize(v);
        ccols[j] = v;
    }
    Obj o{{s}, std::nullopt};
    YDModule S{M.H, M.variant, o, {}, {}, M.name + "+" + N.name};
    S.act = Morphism::from_columns(la ? Dims{h, s} : Dims{s, h}, {s}, std::move(acols));
    S.coact = Morphism::from_columns({s}, lc ? Dims{h, s} : Dims{s, h}, std::move(ccols));
    return S;
}

Morphism yd_injection(const YDModule& M, const YDModule& N, int which) {
    Index m = M.obj.dim(), n = N.obj.dim();
    int s = (int)(m + n);
    const YDModule& P = which == 0 ? M : N;
    std::vector<SVec> cols(P.obj.dim());
    for (Index j = 0; j < cols.size(); ++j) cols[j] = basis_vec(which == 0 ? j : j + m);
    return Morphism::from_columns(P.obj.dims, {s}, std::move(cols));
}

Report check_yd_structure(const YDModule& M) {
    const HopfData& H = *M.H;
    Report r;
    r.add("module-law", action_left(M.variant) ? check_left_module(H, M.obj, M.act) : check_right_module(H, M.obj, M.act));
    r.add("comodule-law",
          coaction_left(M.variant) ? check_left_comodule(H, M.obj, M.coact) : check_right_comodule(H, M.obj, M.coact));
    return r;
}

namespace {

std::optional<Mismatch> primary_form(const YDModule& Y) {
    W w(Y);
    const HopfData& H = w.H;
    const Obj& h = H.obj;
    const Obj& m = Y.obj;
    switch (Y.variant) {
        case Variant::LL:
        case Variant::RR_mixed_G1: {
            // (h1.n)_{-1} h2 (x) (h1.n)_0 = h1 n_{-1} (x) h2.n_0
            Diagram a = w.dia({h, m});
            a.comul(H, 0).braid(1);
            w.act(a, 0);
            w.coact(a, 0);
            a.braid(1).mul(H, 0);
            Diagram b = w.dia({h, m});
            w.coact(b, 1);
            b.comul(H, 0).braid(1).mul(H, 0);
            w.act(b, 1);
            return map_equal(a.build(), b.build());
        }
        case Variant::RR: {
            // (n.h2)_0 (x) h1 (n.h2)_1 = n_0.h1 (x) n_1 h2
            Diagram a = w.dia({m, h});
            a.comul(H, 1).braid(1);
            w.act(a, 0);
            w.coact(a, 0);
            a.braid(1).mul(H, 1);
            Diagram b = w.dia({m, h});
            w.coact(b, 0);
            b.comul(H, 2).braid(1);
            w.act(b, 0);
            b.mul(H, 1);
            return map_equal(a.build(), b.build());
        }
        case Variant::LR_Hop:
        case Variant::LR_Hcop: {
            // (h2.m)_0 (x) (h2.m)_1 h1 = h1.m_0 (x) h2 m_1; the starred form crosses the other way
            bool star = Y.variant == Variant::LR_Hcop;
            Diagram a = w.dia({h, m});
            a.comul(H, 0);
            w.act(a, 1);
            if (star) a.braid(0);
            else a.ibraid(0);
            w.coact(a, 0);
            a.mul(H, 1);
            Diagram b = w.dia({h, m});
            w.coact(b, 1);
            b.comul(H, 0).braid(1);
            w.act(b, 0);
            b.mul(H, 1);
            return map_equal(a.build(), b.build());
        }
        case Variant::RL_Hcop:
        case Variant::RL_Hop: {
            // h2 (m.h1)_{-1} (x) (m.h1)_0 = m_{-1} h1 (x) m_0.h2
            Diagram a = w.dia({m, h});
            a.comul(H, 1);
            w.act(a, 0);
            w.coact(a, 0);
            a.braid(1).braid(0).mul(H, 0);
            Diagram b = w.dia({m, h});
            w.coact(b, 0);
            b.comul(H, 2).braid(1).mul(H, 0);
            w.act(b, 1);
            return map_equal(a.build(), b.build());
        }
    }
    return std::nullopt;
}

std::optional<Mismatch> equivalent_form(const YDModule& Y) {
    W w(Y);
    const HopfData& H = w.H;
    const Obj& h = H.obj;
    const Obj& m = Y.obj;
    switch (Y.variant) {
        case Variant::LL:
        case Variant::RR_mixed_G1: {
            // lambda(h.n) = h1 n_{-1} S(h3) (x) h2.n_0
            Diagram a = w.dia({h, m});
            w.act(a, 0);
            w.coact(a, 0);
            Diagram b = w.dia({h, m});
            b.comul(H, 0).comul(H, 1).S(H, 2);
            w.coact(b, 3);
            b.braid(2).braid(1).braid(2).mul(H, 0).mul(H, 0);
            w.act(b, 1);
            return map_equal(a.build(), b.build());
        }
        case Variant::RR: {
            // rho(n.h) = n_0.h2 (x) S(h1) n_1 h3
            Diagram a = w.dia({m, h});
            w.act(a, 0);
            w.coact(a, 0);
            Diagram b = w.dia({m, h});
            b.comul(H, 1).comul(H, 2);
            w.coact(b, 0);
            b.S(H, 2).braid(2).braid(1);
            w.act(b, 0);
            b.braid(1).mul(H, 1).mul(H, 1);
            return map_equal(a.build(), b.build());
        }
        case Variant::LR_Hop:
        case Variant::LR_Hcop: {
            // rho(h.m) = h2.m_0 (x) h3 m_1 S^{-1}(h1)
            bool star = Y.variant == Variant::LR_Hcop;
            Diagram a = w.dia({h, m});
            w.act(a, 0);
            w.coact(a, 0);
            Diagram b = w.dia({h, m});
            b.comul(H, 0).comul(H, 1).Si(H, 0);
            w.coact(b, 3);
            b.braid(2);
            w.act(b, 1);
            b.mul(H, 2);
            if (star) b.braid(0).braid(1);
            else b.ibraid(0).ibraid(1);
            b.mul(H, 1);
            return map_equal(a.build(), b.build());
        }
        case Variant::RL_Hcop:
        case Variant::RL_Hop: {
            // lambda(m.h) = S^{-1}(h3) m_{-1} h1 (x) m_0.h2
            Diagram a = w.dia({m, h});
            w.act(a, 0);
            w.coact(a, 0);
            Diagram b = w.dia({m, h});
            b.comul(H, 1).comul(H, 2);
            w.coact(b, 0);
            b.Si(H, 4).braid(3).braid(2).braid(1).braid(0).braid(2).mul(H, 0).mul(H, 0);
            w.act(b, 1);
            return map_equal(a.build(), b.build());
        }
    }
    return std::nullopt;
}

bool needs_symmetry(Variant v) { return !(v == Variant::LL || v == Variant::RR || v == Variant::LR_Hop); }

}  // namespace

bool yd_transparent(const YDModule& M) {
    const Context& c = *M.H->ctx;
    return is_symmetric_pair(c, M.H->obj, M.obj);
}

Report check_yd(const YDModule& M, bool equivalent) {
    Report r;
    auto p = primary_form(M);
    r.add("yd-primary", p);
    if (!equivalent) return r;
    const Context& c = *M.H->ctx;
    if (needs_symmetry(M.variant) && !(is_symmetric_pair(c, M.H->obj, M.H->obj) && yd_transparent(M))) {
        r.precondition("yd-equivalent", "Phi_{H,M} is not symmetric in " + c.name());
        return r;
    }
    auto e = equivalent_form(M);
    r.add("yd-equivalent", e);
    r.add("yd-forms-agree", (bool)p == (bool)e,
          std::string("primary ") + (p ? "fails" : "holds") + ", equivalent " + (e ? "fails" : "holds"));
    return r;
}

bool yd_condition(const YDModule& M) { return !primary_form(M); }
bool yd_condition_equivalent(const YDModule& M) { return !equivalent_form(M); }

YDModule yd_tensor(const YDModule& M, const YDModule& N) {
    require_same(M, N);
    const HopfData& H = *M.H;
    const Context& c = *H.ctx;
    if (needs_symmetry(M.variant) && !(yd_transparent(M) && yd_transparent(N)))
        throw AlgebraError("transparency-violated", "Phi_{H,M} is not symmetric for a factor");
    Variant v = M.variant;
    const Obj& h = H.obj;
    Obj mn = c.tensor(M.obj, N.obj);
    YDModule T{M.H, v, mn, {}, {}, M.name + "(x)" + N.name};
    bool cop = v == Variant::LR_Hcop || v == Variant::RL_Hcop || v == Variant::RR_mixed_G1;
    bool op = v == Variant::LR_Hop || v == Variant::RL_Hop || v == Variant::RR_mixed_G1;

    if (action_left(v)) {
        Diagram a(H.ctx, {h, M.obj, N.obj});
        a.comul(H, 0);
        if (cop) a.ibraid(0);
        a.braid(1).op(0, 2, M.act, {M.obj}).op(1, 2, N.act, {N.obj});
        T.act = a.build();
    } else {
        Diagram a(H.ctx, {M.obj, N.obj, h});
        a.comul(H, 2);
        if (cop) a.ibraid(2);
        a.braid(1).op(0, 2, M.act, {M.obj}).op(1, 2, N.act, {N.obj});
        T.act = a.build();
    }
    if (coaction_left(v)) {
        Diagram b(H.ctx, {M.obj, N.obj});
        b.op(0, 1, M.coact, {h, M.obj}).op(2, 1, N.coact, {h, N.obj}).braid(1);
        if (op) b.braid(0);
        b.mul(H, 0);
        T.coact = b.build();
    } else {
        Diagram b(H.ctx, {M.obj, N.obj});
        b.op(0, 1, M.coact, {M.obj, h}).op(2, 1, N.coact, {N.obj, h}).braid(1);
        if (op) b.braid(2);
        b.mul(H, 2);
        T.coact = b.build();
    }
    T.obj = mn;
    return T;
}

Morphism yd_braiding(const YDModule& M, const YDModule& N, Family f, bool inverse) {
    require_same(M, N);
    if (family_variant(f) != M.variant)
        throw AlgebraError("variant-mismatch", "family " + family_str(f) + " does not apply to " + variant_str(M.variant));
    if (f != Family::L && f != Family::R && !(yd_transparent(M) && yd_transparent(N)))
        throw AlgebraError("transparency-violated", "Phi_{H,M} is not symmetric for a factor");
    const HopfData& H = *M.H;
    const Obj& h = H.obj;
    const Obj &m = M.obj, &n = N.obj;
    bool lc = coaction_left(M.variant);
    auto coM = [&](Diagram& d, size_t pos) {
        if (lc) d.op(pos, 1, M.coact, {h, m});
        else d.op(pos, 1, M.coact, {m, h});
    };
    auto coN = [&](Diagram& d, size_t pos) {
        if (lc) d.op(pos, 1, N.coact, {h, n});
        else d.op(pos, 1, N.coact, {n, h});
    };
    auto actM = [&](Diagram& d, size_t pos) { d.op(pos, 2, M.act, {m}); };
    auto actN = [&](Diagram& d, size_t pos) { d.op(pos, 2, N.act, {n}); };

    if (!inverse) {
        // M (x) N -> N (x) M
        Diagram d(H.ctx, {m, n});
        switch (f) {
            case Family::L: coM(d, 0); d.braid(1); actN(d, 0); break;          // m_{-1}.n (x) m_0
            case Family::R: coN(d, 1); d.braid(0); actM(d, 1); break;          // n_0 (x) m.n_1
            case Family::P1: d.braid(0); coN(d, 0); actM(d, 1); break;         // n_0 (x) n_1.m
            case Family::M1: d.ibraid(0); coN(d, 0); actM(d, 1); break;
            case Family::P2: coM(d, 0); actN(d, 1); d.braid(0); break;         // m_1.n (x) m_0
            case Family::M2: coM(d, 0); actN(d, 1); d.ibraid(0); break;
            case Family::P3: coN(d, 1); actM(d, 0); d.braid(0); break;         // n_0 (x) m.n_{-1}
            case Family::M3: coN(d, 1); actM(d, 0); d.ibraid(0); break;
            case Family::P4: d.braid(0); coM(d, 1); actN(d, 0); break;         // n.m_{-1} (x) m_0
            case Family::M4: d.ibraid(0); coM(d, 1); actN(d, 0); break;
            case Family::G1: d.braid(0); coN(d, 0); d.braid(0); actM(d, 1); break;  // n_0 (x) n_{-1}.m
        }
        return d.build();
    }
    // N (x) M -> M (x) N
    Diagram d(H.ctx, {n, m});
    switch (f) {
        case Family::L: d.ibraid(0); coM(d, 0); d.Si(H, 0).braid(0); actN(d, 1); break;
        case Family::R: d.ibraid(0); coN(d, 1); d.ibraid(1).Si(H, 1); actM(d, 0); break;
        case Family::P1: coN(d, 0); d.S(H, 1); actM(d, 1); d.ibraid(0); break;
        case Family::M1: coN(d, 0); d.S(H, 1); actM(d, 1); d.braid(0); break;
        case Family::P2: d.ibraid(0); coM(d, 0); d.S(H, 1); actN(d, 1); break;
        case Family::M2: d.braid(0); coM(d, 0); d.S(H, 1); actN(d, 1); break;
        case Family::P3: d.ibraid(0); coN(d, 1); d.S(H, 1); actM(d, 0); break;
        case Family::M3: d.braid(0); coN(d, 1); d.S(H, 1); actM(d, 0); break;
        case Family::P4: coM(d, 1); d.S(H, 1); actN(d, 0); d.ibraid(0); break;
        case Family::M4: coM(d, 1); d.S(H, 1); actN(d, 0); d.braid(0); break;
        case Family::G1: coN(d, 0); d.Si(H, 0).braid(1); actM(d, 0); break;
    }
    return d.build();
}

Report check_braiding_laws(Family f, const YDModule& M, const YDModule& N, const YDModule& P) {
    auto id = [](const YDModule& X) { return Morphism::identity(X.obj.dims); };
    auto phi = [f](const YDModule& X, const YDModule& Y) { return yd_braiding(X, Y, f); };
    Report r;

    Morphism fwd = phi(M, N), inv = yd_braiding(M, N, f, true);
    auto i1 = map_equal(compose(inv, fwd), Morphism::identity(concat(M.obj.dims, N.obj.dims)));
    r.add("invertible", i1 ? i1 : map_equal(compose(fwd, inv), Morphism::identity(concat(N.obj.dims, M.obj.dims))));

    // Phi_{M, N(x)P} = (N (x) Phi_{M,P})(Phi_{M,N} (x) P)
    YDModule NP = yd_tensor(N, P), MN = yd_tensor(M, N);
    r.add("hexagon-1", map_equal(phi(M, NP), compose(tensor_product(id(N), phi(M, P)), tensor_product(phi(M, N), id(P)))));
    // Phi_{M(x)N, P} = (Phi_{M,P} (x) N)(M (x) Phi_{N,P})
    r.add("hexagon-2", map_equal(phi(MN, P), compose(tensor_product(phi(M, P), id(N)), tensor_product(id(M), phi(N, P)))));

    YDModule S = yd_direct_sum(M, N);
    Morphism i = yd_injection(M, N, 0);
    auto n1 = map_equal(compose(phi(S, P), tensor_product(i, id(P))), compose(tensor_product(id(P), i), phi(M, P)));
    auto n2 = map_equal(compose(phi(P, S), tensor_product(id(P), i)), compose(tensor_product(i, id(P)), phi(P, M)));
    r.add("natural", n1 ? n1 : n2);
    return r;
}

std::optional<Mismatch> check_yd_morphism(const YDModule& M, const YDModule& N, const Morphism& f) {
    const HopfData& H = *M.H;
    const Obj& h = H.obj;
    Diagram a(H.ctx, action_left(M.variant) ? std::vector<Obj>{h, M.obj} : std::vector<Obj>{M.obj, h});
    a.op(0, 2, M.act, {M.obj}).op(0, 1, f, {N.obj});
    Diagram b(H.ctx, action_left(M.variant) ? std::vector<Obj>{h, M.obj} : std::vector<Obj>{M.obj, h});
    b.op(action_left(M.variant) ? 1 : 0, 1, f, {N.obj}).op(0, 2, N.act, {N.obj});
    if (auto m = map_equal(a.build(), b.build())) return m;
    bool lc = coaction_left(M.variant);
    Diagram c(H.ctx, {M.obj});
    c.op(0, 1, f, {N.obj}).op(0, 1, N.coact, lc ? std::vector<Obj>{h, N.obj} : std::vector<Obj>{N.obj, h});
    Diagram d(H.ctx, {M.obj});
    d.op(0, 1, M.coact, lc ? std::vector<Obj>{h, M.obj} : std::vector<Obj>{M.obj, h}).op(lc ? 1 : 0, 1, f, {N.obj});
    return map_equal(c.build(), d.build());
}

bool same_structure(const YDModule& M, const YDModule& N, std::string* witness) {
    auto fail = [&](const std::string& what, const Mismatch& m) {
        if (witness) *witness = what + " " + m.str();
        return false;
    };
    if (M.variant != N.variant) {
        if (witness) *witness = "variant " + variant_str(M.variant) + " vs " + variant_str(N.variant);
        return false;
    }
    Morphism a = M.act, b = N.act;
    if (volume(a.dom()) == volume(b.dom()) && a.dom() != b.dom()) b = compose(b, Morphism::reshape(a.dom(), b.dom()));
    if (volume(a.cod()) == volume(b.cod()) && a.cod() != b.cod()) b = compose(Morphism::reshape(b.cod(), a.cod()), b);
    if (auto m = map_equal(a, b)) return fail("action", *m);
    a = M.coact, b = N.coact;
    if (volume(a.dom()) == volume(b.dom()) && a.dom() != b.dom()) b = compose(b, Morphism::reshape(a.dom(), b.dom()));
    if (volume(a.cod()) == volume(b.cod()) && a.cod() != b.cod()) b = compose(Morphism::reshape(b.cod(), a.cod()), b);
    if (auto m = map_equal(a, b)) return fail("coaction", *m);
    return true;
}

std::vector<YDModule> yd_mutants(const YDModule& M, size_t limit) {
    std::vector<YDModule> out;
    LinMap act = M.act.dense(), coact = M.coact.dense();
    size_t na = act.entries().size(), nc = coact.entries().size();
    // interleave action and coaction perturbations, striding through the entries
    size_t stride = 7;
    for (size_t k = 0; out.size() < limit && k < na + nc; ++k) {
        bool on_act = k % 2 == 0;
        size_t total = on_act ? na : nc;
        if (total == 0) continue;
        size_t pos = ((k / 2) * stride) % total;
        LinMap a = act, c = coact;
        LinMap& t = on_act ? a : c;
        Index dn = t.dom_size();
        t.at(pos / dn, pos % dn) += Cyc(1);
        YDModule Y = M;
        Y.act = Morphism(a);
        Y.coact = Morphism(c);
        Y.name = M.name + (on_act ? "~act" : "~coact") + std::to_string(pos);
        out.push_back(std::move(Y));
    }
    return out;
}

}  // namespace bhl

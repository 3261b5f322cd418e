#include "bhl/context.hpp"

#include <cstdlib>

#include "bhl/examples.hpp"
#include "bhl/hopf.hpp"

namespace bhl {

int default_probe_depth() {
    if (const char* e = std::getenv("BHL_PROBE_DEPTH")) {
        int d = std::atoi(e);
        if (d >= 1) return d;
    }
    return 2;
}

namespace {

// k[Z_N] in the standard basis: e_j e_k = e_{j+k mod N}
bool is_cyclic_group_algebra(const HopfData& A) {
    int N = A.dim;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            SVec c = A.M.column(j * N + k);
            if (c.size() != 1 || c[0].i != (Index)((j + k) % N) || !c[0].c.is_one()) return false;
        }
    return true;
}

}  // namespace

std::vector<Probe> standard_probes(const Context& ctx, int depth) {
    if (depth < 1) throw std::invalid_argument("probe depth must be at least 1");
    std::vector<Probe> out;
    if (ctx.kind() == Context::Kind::Vec) {
        out.push_back({"k", ctx.trivial({1})});
        out.push_back({"k^2", ctx.trivial({2})});
        return out;
    }
    const HopfData& A = *ctx.algebra();
    out.push_back({"trivial", ctx.trivial({1})});
    Obj reg = regular_obj(A);
    Obj pw = reg;
    std::string name = "regular";
    for (int k = 1; k <= depth; ++k) {
        if (k > 1) {
            pw = ctx.tensor(pw, reg);
            name = "regular^" + std::to_string(k);
        }
        // tensor powers grow fast; stop before composite maps become unreasonable
        if (pw.dim() > 512) break;
        out.push_back({name, pw});
        out.push_back({name + "*", ctx.dual(pw)});
    }
    if (is_cyclic_group_algebra(A)) {
        int N = A.dim;
        for (int a = 0; a < N; ++a) {
            std::vector<SVec> cols(N);
            for (int j = 0; j < N; ++j) cols[j] = {Term{0, Cyc::root(N, (long long)a * j)}};
            out.push_back({"chi" + std::to_string(a), Obj{{1}, Morphism::from_columns({N, 1}, {1}, cols)}});
        }
    }
    return out;
}

namespace {

// product in A^{(x) k}, factorwise
SVec tensor_mul(const HopfData& A, int k, const SVec& u, const SVec& v) {
    Index d = A.dim;
    SVec out;
    for (const auto& p : u)
        for (const auto& q : v) {
            // multiply factor by factor
            std::vector<std::pair<Index, Cyc>> acc{{0, p.c * q.c}};
            Index pi = p.i, qi = q.i;
            std::vector<Index> pf(k), qf(k);
            for (int f = k - 1; f >= 0; --f) {
                pf[f] = pi % d, pi /= d;
                qf[f] = qi % d, qi /= d;
            }
            for (int f = 0; f < k; ++f) {
                std::vector<std::pair<Index, Cyc>> next;
                SVec col = A.M.column(pf[f] * d + qf[f]);
                for (auto& [idx, c] : acc)
                    for (const auto& t : col) next.emplace_back(idx * d + t.i, c * t.c);
                acc = std::move(next);
            }
            for (auto& [idx, c] : acc) out.push_back(Term{idx, c});
        }
    canonicalize(out);
    return out;
}

SVec element_of(const LinMap& e) { return e.column(0); }

// R placed on factors i < j of a triple, the unit on the remaining one
SVec leg(const HopfData& A, const SVec& R, int i, int j) {
    Index d = A.dim;
    SVec unit = A.unit.column(0);
    SVec out;
    for (const auto& t : R)
        for (const auto& u : unit) {
            std::vector<Index> f(3, u.i);
            f[i] = t.i / d;
            f[j] = t.i % d;
            out.push_back(Term{(f[0] * d + f[1]) * d + f[2], t.c * u.c});
        }
    canonicalize(out);
    return out;
}

SVec unit2(const HopfData& A) {
    Index d = A.dim;
    SVec unit = A.unit.column(0), out;
    for (const auto& a : unit)
        for (const auto& b : unit) out.push_back(Term{a.i * d + b.i, a.c * b.c});
    canonicalize(out);
    return out;
}

}  // namespace

Report check_quasitriangular(const HopfData& A, const LinMap& R) {
    Report r;
    int d = A.dim;
    if (R.dom() != Dims{} || R.cod() != Dims{d, d}) throw AlgebraError("compose-mismatch", "R must lie in A (x) A");
    SVec Rv = element_of(R);
    Morphism id = Morphism::identity({d});
    auto cmp = [&](SVec a, SVec b, int k) {
        canonicalize(a);
        canonicalize(b);
        Dims dims(k, d);
        return map_equal(Morphism::element(dims, a), Morphism::element(dims, b));
    };
    r.add("delta-left", cmp(tensor_product(A.D, id).apply(Rv), tensor_mul(A, 3, leg(A, Rv, 0, 2), leg(A, Rv, 1, 2)), 3));
    r.add("delta-right", cmp(tensor_product(id, A.D).apply(Rv), tensor_mul(A, 3, leg(A, Rv, 0, 2), leg(A, Rv, 0, 1)), 3));

    Morphism sw = Morphism::swap({d}, {d});
    std::optional<Mismatch> qc;
    for (int a = 0; a < d && !qc; ++a) {
        SVec da = A.D.column(a);
        SVec lhs = tensor_mul(A, 2, sw.apply(da), Rv), rhs = tensor_mul(A, 2, Rv, da);
        qc = map_equal(Morphism::element({d, d}, lhs), Morphism::element({d, d}, rhs));
    }
    r.add("quasi-cocommutative", qc);

    SVec Rinv = tensor_product(A.S, id).apply(Rv);
    SVec one2 = unit2(A);
    auto i1 = map_equal(Morphism::element({d, d}, tensor_mul(A, 2, Rv, Rinv)), Morphism::element({d, d}, one2));
    auto i2 = map_equal(Morphism::element({d, d}, tensor_mul(A, 2, Rinv, Rv)), Morphism::element({d, d}, one2));
    r.add("invertible", i1 ? i1 : i2);
    return r;
}

bool is_triangular(const HopfData& A, const LinMap& R) {
    int d = A.dim;
    SVec Rv = element_of(R);
    SVec R21 = Morphism::swap({d}, {d}).apply(Rv);
    SVec one2 = unit2(A);
    return !map_equal(Morphism::element({d, d}, tensor_mul(A, 2, R21, Rv)), Morphism::element({d, d}, one2));
}

std::string Transparency::str() const {
    if (ok) return "";
    return "probe " + probe + (witness ? ": " + witness->str() : "");
}

Transparency is_transparent(const Context& ctx, const Obj& X, const std::vector<Probe>& probes) {
    Transparency t;
    if (ctx.kind() == Context::Kind::Vec) return t;
    for (const auto& p : probes) {
        if (auto m = double_braiding_defect(ctx, X, p.obj)) {
            t.ok = false;
            t.probe = p.name;
            t.witness = m;
            return t;
        }
    }
    return t;
}

std::optional<Mismatch> check_hexagons(const CtxPtr& ctx, const Obj& X, const Obj& Y, const Obj& Z) {
    // Phi_{X, Y(x)Z} = (Y (x) Phi_{X,Z}) (Phi_{X,Y} (x) Z)
    Morphism a = ctx->braiding(X, ctx->tensor(Y, Z), 1);
    if (auto m = map_equal(a, Diagram(ctx, {X, Y, Z}).braid(0).braid(1).build())) return m;
    // Phi_{X(x)Y, Z} = (Phi_{X,Z} (x) Y) (X (x) Phi_{Y,Z})
    Morphism b = ctx->braiding(ctx->tensor(X, Y), Z, 1);
    return map_equal(b, Diagram(ctx, {X, Y, Z}).braid(1).braid(0).build());
}

std::optional<Mismatch> check_braiding_natural(const Context& ctx, const Morphism& f, const Obj& X, const Obj& Xp,
                                               const Obj& Y) {
    Morphism lhs = compose(ctx.braiding(Xp, Y, 1), tensor_product(f, Morphism::identity(Y.dims)));
    Morphism rhs = compose(tensor_product(Morphism::identity(Y.dims), f), ctx.braiding(X, Y, 1));
    if (auto m = map_equal(lhs, rhs)) return m;
    Morphism li = compose(ctx.braiding(Y, Xp, 1), tensor_product(Morphism::identity(Y.dims), f));
    Morphism ri = compose(tensor_product(f, Morphism::identity(Y.dims)), ctx.braiding(Y, X, 1));
    return map_equal(li, ri);
}

BraidingLinearity check_braiding_linearity(const HopfData& H) {
    BraidingLinearity out;
    const Context& c = *H.ctx;
    CtxPtr cp = H.ctx;
    const Obj& h = H.obj;

    // H-modules: regular, and regular (x) regular with the diagonal action
    struct Mod {
        Obj obj;
        Morphism act;
    };
    Morphism diag = Diagram(cp, {h, h, h}).comul(H, 0).braid(1).mul(H, 0).mul(H, 1).build();
    std::vector<Mod> mods{{h, H.M}, {c.tensor(h, h), diag}};
    auto tensor_act = [&](const Mod& X, const Mod& Y) {
        return Diagram(cp, {h, X.obj, Y.obj}).comul(H, 0).braid(1).op(0, 2, X.act, {X.obj}).op(1, 2, Y.act, {Y.obj}).build();
    };
    std::optional<Mismatch> lin;
    // small probe pairs only; the regular square against itself is not needed to see failures
    for (size_t i = 0; i < mods.size() && !lin; ++i)
        for (size_t j = 0; j < mods.size() && !lin; ++j) {
            const Mod &X = mods[i], &Y = mods[j];
            if (X.obj.dim() * Y.obj.dim() > 64) continue;
            Morphism phi = c.braiding(X.obj, Y.obj, 1);
            Morphism lhs = compose(phi, tensor_act(X, Y));
            Morphism rhs = compose(tensor_act(Y, X), tensor_product(Morphism::identity({H.dim}), phi));
            lin = map_equal(lhs, rhs);
        }
    out.linear = !lin;

    // H-comodules: regular, and its square with the codiagonal coaction
    Morphism codiag = Diagram(cp, {h, h}).comul(H, 0).comul(H, 2).braid(1).mul(H, 0).build();
    std::vector<Mod> comods{{h, H.D}, {c.tensor(h, h), codiag}};
    auto tensor_coact = [&](const Mod& X, const Mod& Y) {
        return Diagram(cp, {X.obj, Y.obj}).op(0, 1, X.act, {h, X.obj}).op(2, 1, Y.act, {h, Y.obj}).braid(1).mul(H, 0).build();
    };
    std::optional<Mismatch> colin;
    for (size_t i = 0; i < comods.size() && !colin; ++i)
        for (size_t j = 0; j < comods.size() && !colin; ++j) {
            const Mod &X = comods[i], &Y = comods[j];
            if (X.obj.dim() * Y.obj.dim() > 64) continue;
            Morphism phi = c.braiding(X.obj, Y.obj, 1);
            Morphism lhs = compose(tensor_coact(Y, X), phi);
            Morphism rhs = compose(tensor_product(Morphism::identity({H.dim}), phi), tensor_coact(X, Y));
            colin = map_equal(lhs, rhs);
        }
    out.colinear = !colin;

    auto t = is_transparent(c, h, standard_probes(c));
    out.transparent = t.ok;
    out.commutative = is_commutative(H);
    out.cocommutative = is_cocommutative(H);

    bool rhs1 = out.transparent && out.cocommutative, rhs2 = out.transparent && out.commutative;
    auto yn = [](bool b) { return b ? std::string("true") : std::string("false"); };
    out.report.add("braid-lin-i", out.linear == rhs1,
                   "linear=" + yn(out.linear) + " but transparent&cocommutative=" + yn(rhs1));
    out.report.add("braid-lin-ii", out.colinear == rhs2,
                   "colinear=" + yn(out.colinear) + " but transparent&commutative=" + yn(rhs2));
    return out;
}

}  // namespace bhl

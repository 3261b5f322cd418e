#include "bhl/examples.hpp"

#include <map>

#include "bhl/context.hpp"
#include "bhl/hopf.hpp"

namespace bhl {

void validate_family(const FamilyParams& p) {
    if (p.m < 1) throw AlgebraError("bad-family-params", "m must be positive");
    if (p.n < 0) throw AlgebraError("bad-family-params", "n must be nonnegative");
    if ((int)p.d.size() != p.n)
        throw AlgebraError("bad-family-params", "expected " + std::to_string(p.n) + " values of d");
    for (int x : p.d) {
        if (x % 2 == 0) throw AlgebraError("bad-family-params", "d must be odd, got " + std::to_string(x));
        if (x < 1 || x >= 2 * p.m) throw AlgebraError("bad-family-params", "d must lie in [1, 2m)");
    }
}

bool s_valid(const FamilyParams& p, int s) {
    int N = 2 * p.m;
    if (s < 0 || s >= N) return false;
    for (int x : p.d)
        if ((s * x) % N != p.m % N) return false;
    return true;
}

std::vector<int> valid_s(const FamilyParams& p) {
    std::vector<int> r;
    for (int s = 0; s < 2 * p.m; ++s)
        if (s_valid(p, s)) r.push_back(s);
    return r;
}

std::string family_str(const FamilyParams& p) {
    std::string d;
    for (size_t i = 0; i < p.d.size(); ++i) d += (i ? "," : "") + std::to_string(p.d[i]);
    return "H(" + std::to_string(p.m) + "," + std::to_string(p.n) + ",(" + d + "))";
}

namespace {

using Elem = std::map<Index, Cyc>;

void accumulate(Elem& e, Index i, const Cyc& c) {
    if (c.is_zero()) return;
    auto it = e.find(i);
    if (it == e.end()) {
        e.emplace(i, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
}

// PBW arithmetic for H(m,n,d)
struct Pbw {
    int m, n;
    std::vector<int> d;
    int N() const { return 2 * m; }
    Index dim() const { return (Index)N() << n; }
    Index idx(int a, unsigned e) const { return ((Index)(((a % N()) + N()) % N()) << n) | e; }
    int gpow(Index i) const { return (int)(i >> n); }
    unsigned xs(Index i) const { return (unsigned)(i & ((1u << n) - 1)); }
    unsigned bit(int k) const { return 1u << (n - 1 - k); }  // x_{k+1}

    Elem basis_mul(Index u, Index v) const {
        int a = gpow(u), b = gpow(v);
        unsigned e = xs(u), f = xs(v);
        if (e & f) return {};
        long long wexp = 0;
        int inv = 0;
        for (int k = 0; k < n; ++k)
            if (e & bit(k)) {
                wexp -= (long long)b * d[k];
                for (int l = 0; l < k; ++l)
                    if (f & bit(l)) ++inv;
            }
        Cyc c = Cyc::root(N(), wexp);
        if (inv % 2) c = -c;
        return {{idx(a + b, e | f), c}};
    }

    Elem mul(const Elem& u, const Elem& v) const {
        Elem r;
        for (auto& [i, a] : u)
            for (auto& [j, b] : v)
                for (auto& [k, c] : basis_mul(i, j)) accumulate(r, k, a * b * c);
        return r;
    }

    // H (x) H with the ordinary componentwise product
    Elem mul2(const Elem& u, const Elem& v) const {
        Elem r;
        Index D = dim();
        for (auto& [i, a] : u)
            for (auto& [j, b] : v) {
                Elem l = basis_mul(i / D, j / D), rr = basis_mul(i % D, j % D);
                for (auto& [p, c] : l)
                    for (auto& [q, e] : rr) accumulate(r, p * D + q, a * b * c * e);
            }
        return r;
    }

    Elem g(int a) const { return {{idx(a, 0), Cyc(1)}}; }
    Elem x(int k) const { return {{idx(0, bit(k)), Cyc(1)}}; }
};

LinMap elem_column_map(const Dims& dom, const Dims& cod, const std::vector<Elem>& cols) {
    LinMap L(dom, cod);
    for (Index j = 0; j < cols.size(); ++j)
        for (auto& [i, c] : cols[j]) L.at(i, j) = c;
    return L;
}

HopfPtr build_pbw(const Pbw& P, const std::string& name) {
    int D = (int)P.dim();
    Index Dn = P.dim();
    LinMap mult({D, D}, {D});
    for (Index u = 0; u < Dn; ++u)
        for (Index v = 0; v < Dn; ++v)
            for (auto& [k, c] : P.basis_mul(u, v)) mult.at(k, u * Dn + v) = c;

    Index D2 = Dn;
    std::vector<Elem> dg(Dn), sg(Dn);
    for (Index u = 0; u < Dn; ++u) {
        int a = P.gpow(u);
        unsigned e = P.xs(u);
        // Delta(g)^a then the x's in increasing order
        Elem dl = {{P.idx(a, 0) * D2 + P.idx(a, 0), Cyc(1)}};
        for (int k = 0; k < P.n; ++k)
            if (e & P.bit(k)) {
                Elem dx = {{P.idx(0, 0) * D2 + P.idx(0, P.bit(k)), Cyc(1)},
                           {P.idx(0, P.bit(k)) * D2 + P.idx(P.m, 0), Cyc(1)}};
                dl = P.mul2(dl, dx);
            }
        dg[u] = dl;
        // S reverses the order: S(x_kr) ... S(x_k1) g^{-a}, S(x) = -x g^m
        Elem sl = P.g(0);
        for (int k = P.n - 1; k >= 0; --k)
            if (e & P.bit(k)) {
                Elem sx = P.mul(P.x(k), P.g(P.m));
                for (auto& [i, c] : sx) c = -c;
                sl = P.mul(sl, sx);
            }
        sg[u] = P.mul(sl, P.g(-a));
    }
    LinMap comult = elem_column_map({D}, {D, D}, dg);
    LinMap S = elem_column_map({D}, {D}, sg);
    LinMap unit({}, {D});
    unit.at(0, 0) = Cyc(1);
    LinMap counit({D}, {});
    for (Index u = 0; u < Dn; ++u)
        if (P.xs(u) == 0) counit.at(0, u) = Cyc(1);
    return make_hopf(name, mult, comult, unit, counit, S, std::nullopt, Context::vec(P.N()));
}

}  // namespace

HopfPtr group_algebra(int N) {
    if (N < 1) throw AlgebraError("bad-family-params", "group order must be positive");
    LinMap mult({N, N}, {N}), comult({N}, {N, N}), unit({}, {N}), counit({N}, {}), S({N}, {N});
    for (int j = 0; j < N; ++j) {
        for (int k = 0; k < N; ++k) mult.at((j + k) % N, j * N + k) = Cyc(1);
        comult.at(j * N + j, j) = Cyc(1);
        counit.at(0, j) = Cyc(1);
        S.at((N - j) % N, j) = Cyc(1);
    }
    unit.at(0, 0) = Cyc(1);
    return make_hopf("kZ" + std::to_string(N), mult, comult, unit, counit, S, S, Context::vec(N));
}

HopfPtr hmnd(const FamilyParams& p) {
    validate_family(p);
    Pbw P{p.m, p.n, p.d};
    return build_pbw(P, family_str(p));
}

HopfPtr sweedler() {
    Pbw P{1, 1, {1}};
    return build_pbw(P, "sweedler");
}

LinMap hmnd_r(const FamilyParams& p) {
    validate_family(p);
    if (!s_valid(p, p.s))
        throw AlgebraError("bad-s", "s=" + std::to_string(p.s) + " violates s d_i = m (mod 2m) for " + family_str(p));
    Pbw P{p.m, p.n, p.d};
    int N = P.N();
    int D = (int)P.dim();
    LinMap R({}, {D, D});
    Cyc k = Cyc(1, N);
    for (int j = 0; j < N; ++j)
        for (int t = 0; t < N; ++t) {
            Index c = P.idx(j, 0) * D + P.idx(p.s * t, 0);
            R.at(c, 0) += k * Cyc::root(N, -(long long)j * t);
        }
    return R;
}

LinMap hmnd_inclusion(const FamilyParams& p) {
    validate_family(p);
    if (p.n < 1) throw AlgebraError("bad-family-params", "the inclusion needs n >= 1");
    Pbw big{p.m, p.n, p.d};
    Pbw small{p.m, p.n - 1, std::vector<int>(p.d.begin(), p.d.end() - 1)};
    int ds = (int)small.dim(), db = (int)big.dim();
    LinMap L({ds}, {db});
    for (Index u = 0; u < small.dim(); ++u) L.at(big.idx(small.gpow(u), small.xs(u) << 1), u) = Cyc(1);
    return L;
}

CtxPtr cyclic_context(int m, int s) {
    FamilyParams p{m, 0, {}, s};
    return Context::mod_over(group_algebra(2 * m), hmnd_r(p));
}

Obj character(const HopfData& A, int m, int n, int a) {
    int N = 2 * m;
    if (A.dim != (N << n)) throw AlgebraError("bad-family-params", "character: algebra dimension does not match");
    std::vector<SVec> cols(A.dim);
    for (int u = 0; u < A.dim; ++u)
        if ((u & ((1 << n) - 1)) == 0) cols[u] = {Term{0, Cyc::root(N, (long long)a * (u >> n))}};
    return Obj{{1}, Morphism::from_columns({A.dim, 1}, {1}, std::move(cols))};
}

Obj regular_obj(const HopfData& A) { return Obj{{A.dim}, A.M}; }

namespace {

// one-generator braided algebra k[x]/(x^L) over A: g^c x^e . x^k = [e = 0] zeta^{c w k} x^k
Morphism power_action(const HopfData& A, int N, int nbits, int L, int w) {
    std::vector<SVec> cols((Index)A.dim * L);
    for (int u = 0; u < A.dim; ++u) {
        if (u & ((1 << nbits) - 1)) continue;
        int c = u >> nbits;
        for (int k = 0; k < L; ++k) cols[(Index)u * L + k] = {Term{(Index)k, Cyc::root(N, (long long)c * w * k)}};
    }
    return Morphism::from_columns({A.dim, L}, {L}, std::move(cols));
}

// Gaussian binomial coefficient in q
Cyc qbinom(int k, int j, const Cyc& q) {
    auto qint = [&](int r) {
        Cyc s(0);
        for (int i = 0; i < r; ++i) s += q.pow(i);
        return s;
    };
    auto qfact = [&](int r) {
        Cyc f(1);
        for (int i = 1; i <= r; ++i) f *= qint(i);
        return f;
    };
    return qfact(k) / (qfact(j) * qfact(k - j));
}

HopfPtr power_algebra(const std::string& name, int L, const Cyc& q, CtxPtr ctx, Morphism act) {
    LinMap mult({L, L}, {L}), comult({L}, {L, L}), unit({}, {L}), counit({L}, {}), S({L}, {L});
    for (int a = 0; a < L; ++a) {
        for (int b = 0; a + b < L; ++b) mult.at(a + b, a * L + b) = Cyc(1);
        for (int j = 0; j <= a; ++j) comult.at(j * L + (a - j), a) = qbinom(a, j, q);
        Cyc s = q.pow((long long)a * (a - 1) / 2);
        S.at(a, a) = a % 2 ? -s : s;
    }
    unit.at(0, 0) = Cyc(1);
    counit.at(0, 0) = Cyc(1);
    return make_hopf(name, mult, comult, unit, counit, S, std::nullopt, ctx, act);
}

}  // namespace

BraidedHopf braided_line(const FamilyParams& p, int s) {
    validate_family(p);
    if (p.n < 1) throw AlgebraError("bad-family-params", "the braided line needs n >= 1");
    if (s < 0) {
        auto vs = valid_s(p);
        if (vs.empty()) throw AlgebraError("bad-s", "no s satisfies s d_i = m (mod 2m) for " + family_str(p));
        s = vs.front();
    } else if (!s_valid(p, s)) {
        throw AlgebraError("bad-s", "s=" + std::to_string(s) + " violates s d_i = m (mod 2m) for " + family_str(p));
    }
    FamilyParams base{p.m, p.n - 1, std::vector<int>(p.d.begin(), p.d.end() - 1), s};
    BraidedHopf r;
    r.A = hmnd(base);
    r.R = hmnd_r(base);
    r.ctx = Context::mod_over(r.A, r.R);
    int N = 2 * p.m;
    Morphism act = power_action(*r.A, N, base.n, 2, p.d.back());
    r.B = power_algebra("B" + family_str(p), 2, Cyc(-1), r.ctx, act);
    return r;
}

BraidedHopf anyonic_line() {
    BraidedHopf r;
    r.A = group_algebra(4);
    r.R = hmnd_r({2, 0, {}, 1});
    r.ctx = Context::mod_over(r.A, r.R);
    Morphism act = power_action(*r.A, 4, 0, 4, 1);
    r.B = power_algebra("anyonic-line", 4, Cyc::root(4, 1), r.ctx, act);
    return r;
}

Report transparency_demo(const FamilyParams& p, const Obj* M) {
    BraidedHopf bh = braided_line(p, p.s);
    const Context& c = *bh.ctx;
    const HopfData& A = *bh.A;
    Obj m = M ? *M : regular_obj(A);
    if (!m.act) throw AlgebraError("not-a-module", "transparency_demo needs an A-module");
    const Obj& B = bh.B->obj;
    int N = 2 * p.m;
    int nb = p.n - 1;
    int k = (p.s * p.d.back()) % N;
    Index nm = m.dim();

    // expected images of x (x) v
    auto g_on = [&](int e) {
        Index col = (Index)(((e % N) + N) % N) << nb;
        std::vector<SVec> cols(nm);
        for (Index v = 0; v < nm; ++v) cols[v] = m.act->column(col * nm + v);
        return Morphism::from_columns(m.dims, m.dims, std::move(cols));
    };
    Morphism gp = g_on(k), gm = g_on(-k);
    Morphism fwd = c.braiding(B, m, 1), inv = c.braiding(m, B, -1);
    auto restrict_x = [&](const Morphism& f) {
        // v -> f(x (x) v), read as an endomorphism of M (x is basis vector 1 of B)
        std::vector<SVec> cols(nm);
        for (Index v = 0; v < nm; ++v) {
            SVec out;
            for (const auto& t : f.column(nm + v)) {
                if (t.i % 2 != 1) return std::optional<std::vector<SVec>>();
                out.push_back(Term{t.i / 2, t.c});
            }
            cols[v] = out;
        }
        return std::optional<std::vector<SVec>>(cols);
    };
    Report r;
    auto fx = restrict_x(fwd), ix = restrict_x(inv);
    if (!fx) r.add("phi-forward", false, "Phi(x (x) v) leaves M (x) x");
    else r.add("phi-forward", map_equal(Morphism::from_columns(m.dims, m.dims, *fx), gp));
    if (!ix) r.add("phi-inverse", false, "Phi^{-1}(x (x) v) leaves M (x) x");
    else r.add("phi-inverse", map_equal(Morphism::from_columns(m.dims, m.dims, *ix), gm));
    r.add("forward-equals-inverse", map_equal(fwd, inv));
    auto t = is_transparent(c, B, standard_probes(c));
    r.add("transparent", t.ok, t.str());
    return r;
}

}  // namespace bhl

#include "bhl/suite.hpp"

#include <chrono>

#include "bhl/bosonization.hpp"
#include "bhl/context.hpp"
#include "bhl/double.hpp"
#include "bhl/examples.hpp"
#include "bhl/functors.hpp"
#include "bhl/hopf.hpp"

namespace bhl {

namespace {

const std::vector<Variant> kVariants = {Variant::LL,      Variant::RR,     Variant::LR_Hop,     Variant::LR_Hcop,
                                        Variant::RL_Hcop, Variant::RL_Hop, Variant::RR_mixed_G1};

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (c.status != Status::Pass) return c.id + ": " + c.witness;
    return "";
}

void add_report(Report& r, const std::string& id, const Report& sub) { r.add(id, sub.all_pass(), first_failure(sub)); }

std::vector<HopfPtr> axiom_algebras() {
    return {group_algebra(2), group_algebra(3), group_algebra(4), hmnd({1, 1, {1}, 0}), hmnd({2, 1, {1}, 0}),
            hmnd({2, 2, {1, 1}, 0})};
}

Report hopf_suite() {
    Report r;
    for (const auto& H : axiom_algebras()) add_report(r, H->name + "/hopf", check_hopf(*H));
    return r;
}

Report duality() {
    Report r;
    for (const auto& H : axiom_algebras()) {
        HopfPtr Hs = dual_hopf(*H);
        add_report(r, H->name + "/dual-hopf", check_hopf(*Hs));
        HopfPtr Hss = dual_hopf(*Hs);
        std::optional<Mismatch> m;
        for (auto [a, b] : {std::pair{&Hss->M, &H->M}, {&Hss->D, &H->D}, {&Hss->U, &H->U}, {&Hss->E, &H->E}, {&Hss->S, &H->S}})
            if (!m) m = map_equal(*a, *b);
        r.add(H->name + "/double-dual", m);
    }
    return r;
}

Report doubles() {
    Report r;
    std::vector<std::pair<HopfPtr, int>> cases = {{group_algebra(2), 4}, {group_algebra(3), 9}, {sweedler(), 16}};
    for (const auto& [H, dim] : cases) {
        DoubleData D = drinfeld_double(H);
        std::string p = "D(" + H->name + ")/";
        r.add(p + "dim", D.D->dim == dim, "dim " + std::to_string(D.D->dim));
        add_report(r, p + "hopf", check_hopf(*D.D));
        add_report(r, p + "matched-pair", check_matched_pair(D.mp));
        r.add(p + "1S", check_1S(D));
        if (dim == 4) {
            auto c = commutativity_lemma(D);
            add_report(r, p + "commutativity-lemma", c.report);
            r.add(p + "commutative-cocommutative", c.d_commutative && c.d_cocommutative);
        }
    }
    return r;
}

Report quasitriangular() {
    Report r;
    for (const auto& H : {group_algebra(2), sweedler()}) {
        DoubleData D = drinfeld_double(H);
        add_report(r, "D(" + H->name + ")/quasitriangular", check_quasitriangular(*D.D, D.r_matrix));
    }
    auto D = std::make_shared<const DoubleData>(drinfeld_double(sweedler()));
    DModule M = regular_dmodule(D);
    r.add("psi-equals-r-braiding", map_equal(psi(M, M), psi_r_matrix(M, M)));
    return r;
}

Report prop_yd_dh() {
    Report r;
    FunctorEnv env(sweedler());
    DModule M = regular_dmodule(env.dbl());
    DModule M2 = dmodule_tensor(M, M);
    add_report(r, "F-roundtrip", check_functor(FunctorId::F, M, M2, env, Property::Roundtrip));
    Structure FM = apply_functor(FunctorId::F, M, env), FM2 = apply_functor(FunctorId::F, M2, env);
    add_report(r, "G-roundtrip", check_functor(FunctorId::G, FM, FM2, env, Property::Roundtrip));
    add_report(r, "F-yd", check_yd(std::get<YDModule>(FM)));
    add_report(r, "F-monoidal-regular-regular", check_functor(FunctorId::F, M, M, env, Property::Monoidal));
    add_report(r, "F-monoidal-regular-square", check_functor(FunctorId::F, M, M2, env, Property::Monoidal));
    add_report(r, "F-braided", check_functor(FunctorId::F, M, M, env, Property::Braided));
    return r;
}

Report yd_equivalences() {
    Report r;
    size_t mutants = 0;
    for (const auto& M : builtin_yd_modules()) {
        std::string p = M.H->name + "/" + M.name + "/" + variant_str(M.variant);
        r.add(p + "/forms-agree", check_yd(M).passed("yd-forms-agree"));
        auto ms = yd_mutants(M, 6);
        bool agree = true;
        std::string w;
        for (size_t i = 0; i < ms.size(); ++i) {
            if (!check_yd(ms[i]).passed("yd-forms-agree")) {
                agree = false;
                w = "mutant " + std::to_string(i);
                break;
            }
        }
        mutants += ms.size();
        r.add(p + "/mutants-agree", agree, w);
    }
    r.add("mutant-count", mutants >= 50, std::to_string(mutants) + " mutants");
    return r;
}

Report braiding_laws() {
    Report r;
    HopfPtr H = sweedler();
    for (Family f : {Family::L, Family::R, Family::P1, Family::M1, Family::P2, Family::M2, Family::P3, Family::M3,
                     Family::P4, Family::M4}) {
        Variant v = family_variant(f);
        YDModule A = adjoint_yd_module(H, v), T = trivial_yd(H, v, 1);
        add_report(r, "Phi^" + family_str(f) + "/adjoint", check_braiding_laws(f, A, A, A));
        add_report(r, "Phi^" + family_str(f) + "/mixed", check_braiding_laws(f, A, T, A));
    }
    return r;
}

Report functor_matrix() {
    Report r;
    HopfPtr H = sweedler();
    FunctorEnv env(H);
    auto all3 = [&](FunctorId f, const Structure& M, const Structure& N, const std::string& tag) {
        for (Property p : {Property::Roundtrip, Property::Monoidal, Property::Braided})
            add_report(r, functor_str(f) + "-" + property_str(p) + tag, check_functor(f, M, N, env, p));
    };
    auto adj = [&](Variant v) { return adjoint_yd_module(H, v); };
    all3(FunctorId::F1, adj(Variant::LL), adj(Variant::LL), "");
    all3(FunctorId::A, adj(Variant::RL_Hcop), adj(Variant::RL_Hcop), "");
    all3(FunctorId::E, adj(Variant::LR_Hcop), adj(Variant::LR_Hcop), "");
    DModule RR = regular_dmodule(env.dbl(), true);
    Structure N = apply_functor(FunctorId::T_inv, adj(Variant::LR_Hcop), env);
    all3(FunctorId::S, RR, N, "");
    all3(FunctorId::T, RR, N, "");
    {
        HopfPtr K = group_algebra(3);
        FunctorEnv ek(K);
        YDModule a = adjoint_yd_module(K, Variant::LR_Hcop), b = yd_direct_sum(a, trivial_yd(K, Variant::LR_Hcop));
        for (Property p : {Property::Roundtrip, Property::Monoidal, Property::Braided})
            add_report(r, "E-" + property_str(p) + "-kZ3", check_functor(FunctorId::E, a, b, ek, p));
    }
    for (auto [f, v] : {std::pair{FunctorId::L, Variant::LL}, {FunctorId::Ch, Variant::LR_Hop}}) {
        YDModule M = adj(v);
        add_report(r, functor_str(f) + "-monoidal", check_functor(f, M, M, env, Property::Monoidal));
        Report b = check_functor(f, M, M, env, Property::Braided);
        bool found = b.overall() == Status::Fail && !b.checks.empty() && !b.checks[0].witness.empty();
        r.add(functor_str(f) + "-braided-counterexample", found,
              found ? "" : "no braided counterexample found");
    }
    return r;
}

Report zhang() {
    Report r;
    ZhangResult z = zhang_conditions(*group_algebra(3));
    bool all = true;
    for (bool c : z.conditions) all = all && c;
    r.add("kZ3/all-true", all && z.report.all_pass(), first_failure(z.report));
    BraidedHopf an = anyonic_line();
    for (auto [a, expect] : {std::pair{1, false}, {2, true}}) {
        Obj chi = character(*an.A, 2, 0, a);
        ZhangResult t = zhang_conditions(*an.B, &chi);
        bool ok = t.transparency && t.transparency->first == expect && t.transparency->second == expect;
        r.add("chi" + std::to_string(a) + (expect ? "/all-true" : "/all-false"), ok, first_failure(t.report));
    }
    return r;
}

Report family() {
    Report r;
    {
        LinMap want({}, {4, 4});
        Cyc h = Cyc(Rational(1, 2));
        want.at(0 * 4 + 0, 0) = h;
        want.at(0 * 4 + 2, 0) = h;
        want.at(2 * 4 + 0, 0) = h;
        want.at(2 * 4 + 2, 0) = -h;
        r.add("R_1(1,1,(1))", map_equal(hmnd_r({1, 1, {1}, 1}), want));
    }
    bool tri = true;
    std::string w;
    for (int m = 1; m <= 3; ++m)
        for (int d = 1; d < 2 * m; d += 2) {
            FamilyParams p{m, 1, {d}, 0};
            HopfPtr H = hmnd(p);
            for (int s : valid_s(p)) {
                p.s = s;
                LinMap R = hmnd_r(p);
                bool qt = check_quasitriangular(*H, R).all_pass();
                if (tri && (!qt || is_triangular(*H, R) != (s == m))) {
                    tri = false;
                    w = family_str(p) + " s=" + std::to_string(s);
                }
            }
        }
    r.add("triangular-iff-s-equals-m", tri, w);
    for (const FamilyParams& p : {FamilyParams{1, 1, {1}, 1}, FamilyParams{2, 1, {1}, 2}, FamilyParams{3, 2, {1, 1}, 3}})
        add_report(r, "transparency-demo " + family_str(p), transparency_demo(p));
    for (const FamilyParams& p : {FamilyParams{1, 1, {1}, 1}, FamilyParams{2, 2, {1, 1}, 2}})
        add_report(r, "biproduct " + family_str(p), biproduct_decompose_check(p));
    return r;
}

Report center() {
    Report r;
    HopfPtr H = sweedler();
    auto probes = module_probes(H);
    YDModule adj = adjoint_yd_module(H);
    CenterObject V = to_center(adj, probes);
    add_report(r, "adjoint/center-laws", check_center(V));
    YDModule sum = yd_direct_sum(adj, trivial_yd(H, Variant::LR_Hop));
    CenterObject W = to_center(sum, probes);
    r.add("adjoint/c-morf", check_center_morphism(V, W, yd_injection(adj, trivial_yd(H, Variant::LR_Hop), 0)));
    r.add("adjoint/K-inverse-recovers-coaction", map_equal(center_to_yd(V).coact, adj.coact));
    for (const auto& K : {group_algebra(2), sweedler()})
        add_report(r, K->name + "/embedding", embedding_check(K, standard_probes(*K->ctx)));
    BraidedHopf an = anyonic_line();
    Report e = embedding_check(an.B, standard_probes(*an.ctx));
    r.add("anyonic-line/embedding-refused", e.overall() == Status::Precondition, first_failure(e));
    return r;
}

Report braid_lin() {
    Report r;
    for (int n = 1; n <= 4; ++n) {
        auto b = check_braiding_linearity(*group_algebra(n));
        r.add("kZ" + std::to_string(n) + "/positive", b.report.all_pass() && b.linear && b.colinear, first_failure(b.report));
    }
    auto b = check_braiding_linearity(*sweedler());
    r.add("sweedler/negative", b.report.all_pass() && !b.linear && !b.colinear, first_failure(b.report));
    return r;
}

struct Entry {
    const char* title;
    double budget;
    Report (*run)();
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> s = {
        {"Hopf axiom suite", 60, hopf_suite},
        {"duality", 30, duality},
        {"Drinfeld double", 120, doubles},
        {"quasitriangularity and Psi", 120, quasitriangular},
        {"D(H)-modules and YD modules", 120, prop_yd_dh},
        {"YD equivalences on modules and mutants", 60, yd_equivalences},
        {"braiding laws", 120, braiding_laws},
        {"functor matrix", 180, functor_matrix},
        {"Zhang lemma", 30, zhang},
        {"H(m,n,d) family", 180, family},
        {"center", 60, center},
        {"braiding linearity", 30, braid_lin},
    };
    return s;
}

}  // namespace

std::vector<YDModule> builtin_yd_modules() {
    std::vector<YDModule> out;
    HopfPtr H = sweedler();
    for (Variant v : kVariants) {
        out.push_back(adjoint_yd_module(H, v));
        out.push_back(trivial_yd(H, v, 2));
    }
    HopfPtr K = group_algebra(3);
    for (Variant v : kVariants)
        for (auto [a, b] : {std::pair{1, 2}, {2, 1}}) out.push_back(graded_line(K, 3, v, a, b));
    FamilyParams p{1, 1, {1}, 1};
    HopfPtr A = hmnd(p);
    LinMap R = hmnd_r(p);
    out.push_back(qt_induced_yd(A, R, A->obj, A->M, true));
    out.push_back(qt_induced_yd(A, R, A->obj, A->M, false));
    return out;
}

std::optional<Variant> functor_input_variant(FunctorId f) {
    switch (f) {
        case FunctorId::F:
        case FunctorId::F_l:
        case FunctorId::S:
        case FunctorId::T:
        case FunctorId::F3:
        case FunctorId::K: return std::nullopt;
        case FunctorId::G:
        case FunctorId::A_inv:
        case FunctorId::Ch:
        case FunctorId::Ch1:
        case FunctorId::Ch2:
        case FunctorId::F1_inv:
        case FunctorId::K_inv: return Variant::LR_Hop;
        case FunctorId::G_l:
        case FunctorId::L:
        case FunctorId::F1:
        case FunctorId::F2: return Variant::LL;
        case FunctorId::A:
        case FunctorId::Bfun: return Variant::RL_Hcop;
        case FunctorId::E:
        case FunctorId::T_inv: return Variant::LR_Hcop;
        case FunctorId::E_inv: return Variant::RL_Hop;
        case FunctorId::S_inv:
        case FunctorId::F4:
        case FunctorId::G1:
        case FunctorId::G2: return Variant::RR;
    }
    return std::nullopt;
}

std::pair<Structure, Structure> builtin_functor_pair(FunctorId f, const FunctorEnv& env) {
    if (auto v = functor_input_variant(f)) {
        YDModule M = adjoint_yd_module(env.H, *v);
        return {M, M};
    }
    if (f == FunctorId::K) {
        CenterObject C = to_center(adjoint_yd_module(env.H, Variant::LR_Hop), env.probes);
        return {C, C};
    }
    bool right = f == FunctorId::S || f == FunctorId::T || f == FunctorId::F3;
    DModule M = regular_dmodule(env.dbl(), right);
    return {M, M};
}

int criterion_count() { return (int)entries().size(); }

Criterion run_criterion(int number) {
    const Entry& s = entries().at(number - 1);
    Criterion c{number, s.title, s.budget, 0, {}};
    auto t0 = std::chrono::steady_clock::now();
    try {
        c.report = s.run();
    } catch (const std::exception& e) {
        c.report.add("exception", false, e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

std::vector<Criterion> run_suite() {
    std::vector<Criterion> out;
    for (int i = 1; i <= criterion_count(); ++i) out.push_back(run_criterion(i));
    return out;
}

}  // namespace bhl

#include "bhl/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bhl/bosonization.hpp"
#include "bhl/double.hpp"
#include "bhl/examples.hpp"
#include "bhl/functors.hpp"
#include "bhl/hopf.hpp"
#include "bhl/io.hpp"
#include "bhl/suite.hpp"

namespace bhl {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int probe_depth = 2;
};

HopfPtr builtin_algebra(const std::string& name) {
    if (name == "sweedler") return sweedler();
    if (name.size() > 2 && name.rfind("kZ", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(name.substr(2));
        } catch (const std::exception&) {
            n = 0;
        }
        if (n >= 1) return group_algebra(n);
    }
    return nullptr;
}

// structural problems in input files are reported like parse errors
template <class F>
auto loading(const std::string& path, F f) {
    try {
        return f();
    } catch (const AlgebraError& e) {
        throw IoError(path + ": " + e.what());
    }
}

HopfPtr resolve_algebra(const std::string& arg) {
    if (fs::exists(arg)) return loading(arg, [&] { return load_algebra(arg); });
    if (HopfPtr H = builtin_algebra(arg)) return H;
    throw IoError("no such file or built-in algebra: " + arg);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("not an integer list: " + s);
        }
    }
    return out;
}

int exit_code(const Report& r) {
    switch (r.overall()) {
        case Status::Pass: return 0;
        case Status::Fail: return 2;
        case Status::Precondition: return 3;
    }
    return 2;
}

void emit(const Report& r, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : r.checks)
            arr.push_back({{"check", c.id}, {"status", status_str(c.status)}, {"witness", c.witness}});
        out << arr.dump(2) << "\n";
    } else {
        out << r.text();
    }
}

Report verify_hopf(const std::string& in) { return check_hopf(*resolve_algebra(in)); }

Report double_cmd(const std::string& in, const std::string& outp) {
    HopfPtr H = resolve_algebra(in);
    DoubleData D = drinfeld_double(H);
    Report r;
    r.append(check_hopf(*D.D), "double/");
    r.append(check_matched_pair(D.mp), "matched-pair/");
    r.add("1S", check_1S(D));
    r.append(check_double_structure(D), "structure/");
    r.add("cross-relation", check_cross_relation(D));
    r.append(check_quasitriangular(*D.D, D.r_matrix), "quasitriangular/");
    if (!outp.empty()) write_file(outp, write_algebra(*D.D));
    return r;
}

Report check_yd_cmd(const std::vector<std::string>& files) {
    Report r;
    if (files.empty()) {
        for (const auto& M : builtin_yd_modules())
            r.append(check_yd(M), M.H->name + "/" + M.name + "/" + variant_str(M.variant) + "/");
        return r;
    }
    for (const auto& f : files) {
        YDModule M = loading(f, [&] { return load_yd(f); });
        r.append(check_yd(M), files.size() > 1 ? f + "/" : "");
    }
    return r;
}

Report check_functor_cmd(const std::string& fname, const std::string& pname, const std::string& alg,
                         const std::string& m1, const std::string& m2) {
    FunctorId f;
    Property p;
    try {
        f = parse_functor(fname);
        p = parse_property(pname);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    HopfPtr H;
    std::optional<YDModule> M, N;
    if (!m1.empty()) {
        M = loading(m1, [&] { return load_yd(m1); });
        H = M->H;
        N = m2.empty() ? *M : loading(m2, [&] { return load_yd(m2); });
        if (write_algebra(*N->H) != write_algebra(*H)) throw UsageError("the two modules live over different algebras");
        N->H = H;
    } else {
        H = resolve_algebra(alg.empty() ? "sweedler" : alg);
    }
    FunctorEnv env(H);
    if (!M) {
        auto [a, b] = builtin_functor_pair(f, env);
        return check_functor(f, a, b, env, p);
    }
    if (!functor_input_variant(f))
        throw UsageError(functor_str(f) + " takes D(H)-modules or center objects; omit --module to use the built-in ones");
    return check_functor(f, *M, *N, env, p);
}

// s < 0 picks the smallest valid s
FamilyParams family_params(int m, int n, const std::string& d, int s) {
    FamilyParams p{m, n, parse_int_list(d), 0};
    validate_family(p);
    if (s < 0) {
        auto v = valid_s(p);
        if (v.empty()) throw AlgebraError("bad-family-params", "no valid s for " + family_str(p));
        s = v.front();
    }
    p.s = s;
    validate_family(p);
    return p;
}

Report bosonize_cmd(const FamilyParams& p, const std::string& side, const std::string& outp) {
    Side sd = side == "right" ? Side::Right : Side::Left;
    BraidedHopf bh = braided_line(p, p.s);
    Report r;
    r.append(check_yd(r_coaction(bh, sd)), "r-coaction/");
    HopfPtr K = cross_product(bh, sd);
    r.append(check_hopf(*K), "cross-product/");
    if (sd == Side::Left) r.append(biproduct_decompose_check(p), "biproduct/");
    if (!outp.empty()) write_file(outp, write_algebra(*K));
    return r;
}

Report demo_cmd(const FamilyParams& p, const std::string& dir) {
    Report r;
    r.append(transparency_demo(p), "transparency/");
    if (!dir.empty()) {
        fs::create_directories(dir);
        HopfPtr H = hmnd(p);
        write_file(fs::path(dir) / "H.alg", write_algebra(*H));
        write_file(fs::path(dir) / "R.map", hmnd_r(p).serialize());
        BraidedHopf bh = braided_line(p, p.s);
        write_file(fs::path(dir) / "base.alg", write_algebra(*bh.A));
        write_file(fs::path(dir) / "bosonization.alg", write_algebra(*cross_product(bh)));
    }
    return r;
}

Report suite_cmd() {
    Report r;
    for (const auto& c : run_suite()) r.append(c.report, "criterion-" + std::to_string(c.number) + "/");
    return r;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verify Hopf algebras, Drinfeld doubles, Yetter-Drinfeld modules and the functors between them"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--probe-depth", o.probe_depth, "largest tensor power in the probe sets")->check(CLI::PositiveNumber);

    std::string in, outp, fname, pname, alg, m1, m2, side = "left", d = "1";
    std::vector<std::string> ydfiles;
    int m = 1, n = 1, s = -1;

    auto* vh = app.add_subcommand("verify-hopf", "check the Hopf algebra axioms");
    vh->add_option("algebra", in, "algebra file or built-in name (sweedler, kZ<N>)")->required();

    auto* db = app.add_subcommand("double", "build the Drinfeld double and check it");
    db->add_option("algebra", in, "algebra file or built-in name")->required();
    db->add_option("-o,--output", outp, "where to write the double");

    auto* cy = app.add_subcommand("check-yd", "check Yetter-Drinfeld modules (built-in ones when no file is given)");
    cy->add_option("modules", ydfiles, "YD module files");

    auto* cf = app.add_subcommand("check-functor", "check a functor for roundtrip, monoidal or braided");
    cf->add_option("--functor", fname)->required();
    cf->add_option("--property", pname)->required()->check(CLI::IsMember({"roundtrip", "monoidal", "braided"}));
    cf->add_option("--algebra", alg, "algebra for the built-in inputs (default sweedler)");
    cf->add_option("--module", m1, "YD module file");
    cf->add_option("--module2", m2, "second YD module file");

    auto add_family = [&](CLI::App* c) {
        c->add_option("--m", m)->required();
        c->add_option("--n", n)->required();
        c->add_option("--d", d, "comma separated list")->required();
        c->add_option("--s", s, "defaults to the smallest valid value");
    };
    auto* bz = app.add_subcommand("bosonize", "bosonize the braided line and compare with H(m,n,d)");
    add_family(bz);
    bz->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    bz->add_option("-o,--output", outp, "where to write the cross product");

    auto* dm = app.add_subcommand("demo", "transparency demonstration for H(m,n,d)");
    add_family(dm);
    dm->add_option("-o,--output", outp, "directory for the algebra files");

    auto* su = app.add_subcommand("suite", "run every acceptance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    if (!std::getenv("BHL_PROBE_DEPTH")) setenv("BHL_PROBE_DEPTH", std::to_string(o.probe_depth).c_str(), 1);

    try {
        auto fam = [&] {
            try {
                return family_params(m, n, d, s);
            } catch (const AlgebraError& e) {
                throw UsageError(e.what());
            }
        };
        Report r;
        if (*vh) r = verify_hopf(in);
        else if (*db) r = double_cmd(in, outp);
        else if (*cy) r = check_yd_cmd(ydfiles);
        else if (*cf) r = check_functor_cmd(fname, pname, alg, m1, m2);
        else if (*bz) r = bosonize_cmd(fam(), side, outp);
        else if (*dm) r = demo_cmd(fam(), outp);
        else if (*su) r = suite_cmd();
        emit(r, o, out);
        return exit_code(r);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return 1;
    } catch (const AlgebraError& e) {
        Report r;
        r.precondition(e.code, e.what());
        emit(r, o, out);
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, char** argv) { return run_cli(argc, argv, std::cout, std::cerr); }

}  // namespace bhl

#include "bhl/io.hpp"

#include <fstream>
#include <sstream>

#include "bhl/hopf.hpp"

namespace bhl {

namespace {

struct Reader {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }
    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && !std::isspace((unsigned char)s[pos])) ++pos;
        if (start == pos) fail("unexpected end of input");
        return std::string(s.substr(start, pos - start));
    }
    std::string rest_of_line() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        size_t start = pos;
        while (pos < s.size() && s[pos] != '\n') ++pos;
        std::string r(s.substr(start, pos - start));
        while (!r.empty() && std::isspace((unsigned char)r.back())) r.pop_back();
        return r;
    }
    void keyword(const std::string& k) {
        skip_ws();
        size_t at = pos;
        if (word() != k) {
            pos = at;
            fail("expected '" + k + "'");
        }
    }
    bool peek(const std::string& k) {
        skip_ws();
        return s.substr(pos, k.size()) == k;
    }
    long long integer() {
        skip_ws();
        size_t at = pos;
        std::string w = word();
        try {
            size_t used = 0;
            long long v = std::stoll(w, &used);
            if (used == w.size()) return v;
        } catch (const std::exception&) {
        }
        pos = at;
        fail("expected an integer");
    }
    LinMap linmap() {
        skip_ws();
        size_t used = 0;
        LinMap m = LinMap::parse(s.substr(pos), pos, &used);
        pos += used;
        return m;
    }
    LinMap linmap(const Dims& dom, const Dims& cod, const std::string& what) {
        skip_ws();
        size_t at = pos;
        LinMap m = linmap();
        if (m.dom() != dom || m.cod() != cod) {
            pos = at;
            fail(what + " must be " + dims_str(dom) + " -> " + dims_str(cod));
        }
        return m;
    }
    void end() {
        skip_ws();
        if (pos != s.size()) fail("trailing input");
    }
};

}  // namespace

std::string write_algebra(const HopfData& H) {
    if (H.ctx->kind() != Context::Kind::Vec) throw AlgebraError("not-supported", "only algebras in Vec can be written");
    std::ostringstream os;
    os << "name " << H.name << "\n";
    os << "conductor " << H.ctx->conductor() << "\n";
    os << "dim " << H.dim << "\n";
    os << "mult " << H.mult.serialize();
    os << "comult " << H.comult.serialize();
    os << "unit " << H.unit.serialize();
    os << "counit " << H.counit.serialize();
    os << "antipode " << H.antipode.serialize();
    os << "antipode_inv " << H.antipode_inv.serialize();
    return os.str();
}

HopfPtr parse_algebra(std::string_view text) {
    Reader r{text};
    std::string name = "algebra";
    if (r.peek("name")) {
        r.keyword("name");
        name = r.rest_of_line();
    }
    r.keyword("conductor");
    r.skip_ws();
    size_t at = r.pos;
    long long N = r.integer();
    if (N < 1) {
        r.pos = at;
        r.fail("conductor must be positive");
    }
    r.keyword("dim");
    r.skip_ws();
    at = r.pos;
    long long d = r.integer();
    if (d < 1) {
        r.pos = at;
        r.fail("dim must be positive");
    }
    int n = (int)d;
    r.keyword("mult");
    LinMap mult = r.linmap({n, n}, {n}, "mult");
    r.keyword("comult");
    LinMap comult = r.linmap({n}, {n, n}, "comult");
    r.keyword("unit");
    LinMap unit = r.linmap({}, {n}, "unit");
    r.keyword("counit");
    LinMap counit = r.linmap({n}, {}, "counit");
    r.keyword("antipode");
    LinMap S = r.linmap({n}, {n}, "antipode");
    r.keyword("antipode_inv");
    std::optional<LinMap> Si;
    if (r.peek("auto")) r.keyword("auto");
    else Si = r.linmap({n}, {n}, "antipode_inv");
    r.end();
    for (const LinMap* m : {&mult, &comult, &unit, &counit, &S})
        if ((int)N % std::max(1, m->conductor()) != 0)
            throw ParseError(0, "entries need conductor " + std::to_string(m->conductor()) + ", header says " +
                                    std::to_string(N));
    return make_hopf(name, mult, comult, unit, counit, S, Si, Context::vec((int)N));
}

std::string write_yd(const YDModule& M, const std::string& algebra_ref) {
    std::ostringstream os;
    os << "algebra " << algebra_ref << "\n";
    os << "variant " << variant_str(M.variant) << "\n";
    os << "name " << M.name << "\n";
    os << "action " << M.act.dense().serialize();
    os << "coaction " << M.coact.dense().serialize();
    return os.str();
}

YDFile parse_yd(std::string_view text) {
    Reader r{text};
    YDFile f;
    r.keyword("algebra");
    f.algebra_ref = r.rest_of_line();
    if (f.algebra_ref.empty()) r.fail("missing algebra reference");
    r.keyword("variant");
    size_t at = r.pos;
    std::string v = r.word();
    try {
        f.variant = parse_variant(v);
    } catch (const std::exception&) {
        r.pos = at;
        r.skip_ws();
        r.fail("unknown variant '" + v + "'");
    }
    f.name = "module";
    if (r.peek("name")) {
        r.keyword("name");
        f.name = r.rest_of_line();
    }
    r.keyword("action");
    f.act = r.linmap();
    r.keyword("coaction");
    f.coact = r.linmap();
    r.end();
    return f;
}

YDModule make_yd(HopfPtr H, const YDFile& f) {
    const Dims h{H->dim};
    bool la = action_left(f.variant), lc = coaction_left(f.variant);
    if (f.act.cod().empty()) throw AlgebraError("signature-mismatch", "the action has an empty codomain");
    Dims m = f.act.cod();
    Dims adom = la ? concat(h, m) : concat(m, h);
    Dims ccod = lc ? concat(h, m) : concat(m, h);
    if (f.act.dom() != adom) throw AlgebraError("signature-mismatch", "action must have domain " + dims_str(adom));
    if (f.coact.dom() != m || f.coact.cod() != ccod)
        throw AlgebraError("signature-mismatch", "coaction must be " + dims_str(m) + " -> " + dims_str(ccod));
    return YDModule{H, f.variant, Obj{m, std::nullopt}, f.act, f.coact, f.name};
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write " + p.string());
    out << text;
    if (!out) throw IoError("write failed for " + p.string());
}

HopfPtr load_algebra(const std::filesystem::path& p) { return parse_algebra(read_file(p)); }

YDModule load_yd(const std::filesystem::path& p) {
    YDFile f = parse_yd(read_file(p));
    std::filesystem::path ref = f.algebra_ref;
    if (ref.is_relative()) ref = p.parent_path() / ref;
    return make_yd(load_algebra(ref), f);
}

}  // namespace bhl

#include <doctest.h>

#include <filesystem>

#include "bhl/double.hpp"
#include "bhl/examples.hpp"
#include "bhl/hopf.hpp"
#include "bhl/io.hpp"
#include "bhl/yd.hpp"

using namespace bhl;

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    fs::path p = fs::temp_directory_path() / "bhl_test_io";
    fs::create_directories(p);
    return p;
}

void same_algebra(const HopfData& a, const HopfData& b) {
    CHECK(a.dim == b.dim);
    CHECK(!map_equal(a.mult, b.mult));
    CHECK(!map_equal(a.comult, b.comult));
    CHECK(!map_equal(a.unit, b.unit));
    CHECK(!map_equal(a.counit, b.counit));
    CHECK(!map_equal(a.antipode, b.antipode));
    CHECK(!map_equal(a.antipode_inv, b.antipode_inv));
}

size_t offset_of(std::string_view text) {
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e.offset;
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("algebra files roundtrip") {
    for (const auto& H : {group_algebra(3), sweedler(), hmnd({2, 1, {1}, 0}), drinfeld_double(group_algebra(2)).D}) {
        std::string text = write_algebra(*H);
        HopfPtr back = parse_algebra(text);
        CAPTURE(H->name);
        CHECK(back->name == H->name);
        same_algebra(*back, *H);
        CHECK(write_algebra(*back) == text);
    }
}

TEST_CASE("antipode_inv may be computed") {
    HopfPtr H = sweedler();
    std::string text = write_algebra(*H);
    size_t at = text.find("antipode_inv");
    std::string autotext = text.substr(0, at) + "antipode_inv auto\n";
    same_algebra(*parse_algebra(autotext), *H);
}

TEST_CASE("parse errors name the byte offset") {
    std::string text = write_algebra(*group_algebra(2));
    CHECK(offset_of("name x\nconductor 0\n") == std::string("name x\nconductor ").size());
    std::string bad = text;
    size_t at = bad.find("1/1", bad.find("comult"));
    bad.replace(at, 3, "1/q");
    CHECK(offset_of(bad) == at);
    std::string missing = text.substr(0, text.find("unit"));
    CHECK(offset_of(missing) == missing.size());
    std::string trailing = text + "extra\n";
    CHECK(offset_of(trailing) == text.size());
    std::string shape = text;
    size_t c = shape.find("cod=[2]", shape.find("antipode "));
    shape.replace(c, 7, "cod=[1]");
    CHECK(offset_of(shape) == shape.find("dom=", shape.find("antipode ")));
}

TEST_CASE("only algebras in Vec are written") {
    BraidedHopf an = anyonic_line();
    CHECK_THROWS_AS(write_algebra(*an.B), AlgebraError);
}

TEST_CASE("YD module files") {
    fs::path dir = scratch_dir();
    HopfPtr H = sweedler();
    write_file(dir / "sweedler.alg", write_algebra(*H));
    for (Variant v : {Variant::LL, Variant::LR_Hop, Variant::RR_mixed_G1}) {
        YDModule M = adjoint_yd_module(H, v);
        fs::path p = dir / ("adjoint_" + variant_str(v) + ".yd");
        write_file(p, write_yd(M, "sweedler.alg"));
        YDModule back = load_yd(p);
        CHECK(back.variant == v);
        CHECK(back.name == M.name);
        CHECK(!map_equal(back.act, M.act));
        CHECK(!map_equal(back.coact, M.coact));
        CHECK(check_yd(back).all_pass());
    }
    std::string text = write_yd(adjoint_yd_module(H), "sweedler.alg");
    size_t v = text.find("LR_Hop");
    std::string bad = text;
    bad.replace(v, 6, "XY_Hop");
    try {
        parse_yd(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == v);
    }
    CHECK_THROWS_AS(load_yd(dir / "missing.yd"), IoError);
}

TEST_CASE("YD structure maps must fit the algebra") {
    HopfPtr H = sweedler();
    YDFile f = parse_yd(write_yd(trivial_yd(H, Variant::LR_Hop, 2), "x"));
    f.variant = Variant::LL;
    CHECK_THROWS_AS(make_yd(H, f), AlgebraError);
}

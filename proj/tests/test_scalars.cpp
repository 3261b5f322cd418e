#include <doctest.h>

#include "bhl/scalars.hpp"

using namespace bhl;

namespace {

std::vector<Rational> rs(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

Cyc i4() { return Cyc::root(4, 1); }

}  // namespace

TEST_CASE("normalize reduces modulo the cyclotomic polynomial") {
    CHECK(Cyc::normalize(4, rs({0, 0, 1})) == Cyc(-1).embed(4));
    CHECK(Cyc::normalize(2, rs({0, 1})) == Cyc(-1).embed(2));
    CHECK(Cyc::normalize(3, rs({1, 1, 1})).is_zero());
    CHECK(Cyc::normalize(4, rs({0, 0, 1})).coeffs().size() == 2);
}

TEST_CASE("normalize is idempotent") {
    for (int N : {1, 3, 4, 5, 6, 8, 12}) {
        Cyc a = Cyc::normalize(N, rs({3, -1, 2, 0, 5, 7, -4}));
        std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
        CHECK(Cyc::normalize(N, c) == a);
    }
}

TEST_CASE("invalid conductor") {
    try {
        Cyc::normalize(0, rs({1}));
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "invalid-conductor");
    }
    CHECK_THROWS_AS(Cyc::root(-3, 1), AlgebraError);
}

TEST_CASE("field arithmetic examples") {
    Cyc one = Cyc(1).embed(4);
    CHECK((one + i4()) * (one - i4()) == Cyc(2).embed(4));
    CHECK(i4().inv() == -i4());
    CHECK(Cyc(1, 2) + Cyc(1, 3) == Cyc(5, 6));
    Cyc b = i4();
    CHECK(cyc_arith(CycOp::Mul, i4(), &b) == Cyc(-1).embed(4));
    CHECK(cyc_arith(CycOp::Neg, i4()) == -i4());
}

TEST_CASE("division by zero") {
    try {
        Cyc(0).embed(5).inv();
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.code == "division-by-zero");
    }
}

TEST_CASE("roots of unity") {
    CHECK(Cyc::root(2, 1) == Cyc(-1).embed(2));
    CHECK(Cyc::root(4, 2) == Cyc(-1).embed(4));
    CHECK(Cyc::root(6, 3) == Cyc(-1).embed(6));
    for (int N = 1; N <= 12; ++N)
        for (int k = 0; k < N; ++k) CHECK(Cyc::root(N, k).pow(N) == Cyc(1).embed(N));
    CHECK(Cyc::root(4, 5) == i4());
    CHECK(Cyc::root(4, -1) == -i4());
}

TEST_CASE("field axioms on small coefficient triples") {
    for (int N : {3, 4, 5, 8}) {
        std::vector<Cyc> xs;
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 2; ++b) xs.push_back(Cyc::normalize(N, rs({a, b, 1 - a})));
        for (const auto& x : xs)
            for (const auto& y : xs)
                for (const auto& z : xs) {
                    CHECK((x * y) * z == x * (y * z));
                    CHECK((x + y) + z == x + (y + z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
        for (const auto& x : xs)
            if (!x.is_zero()) CHECK(x * x.inv() == Cyc(1).embed(N));
    }
}

TEST_CASE("mixed conductors embed into the common field") {
    Cyc a = Cyc::root(2, 1), b = Cyc::root(4, 1);
    CHECK(a * b == -b);
    CHECK((Cyc::root(3, 1) * Cyc::root(6, 1)).conductor() == 6);
}

TEST_CASE("text form roundtrips") {
    Cyc a = Cyc::normalize(8, rs({1, -2, 3, 7}));
    CHECK(Cyc::parse(8, a.str(8)) == a);
    CHECK(Cyc::parse(1, "5/6") == Cyc(5, 6));
    CHECK_THROWS(Cyc::parse(4, "1/2"));
}

#pragma once

#include "bhl/core.hpp"

namespace bhl {

struct FamilyParams {
    int m = 1;
    int n = 0;
    std::vector<int> d;
    int s = 0;
};

// throws bad-family-params
void validate_family(const FamilyParams& p);
bool s_valid(const FamilyParams& p, int s);
std::vector<int> valid_s(const FamilyParams& p);
std::string family_str(const FamilyParams& p);

HopfPtr group_algebra(int N);
// H(m,n,d): basis g^a x^e at index a * 2^n + e, with x_1 the most significant bit
HopfPtr hmnd(const FamilyParams& p);
HopfPtr sweedler();
// R_s as an element of H(m,n,d) (x) H(m,n,d); throws bad-s
LinMap hmnd_r(const FamilyParams& p);

// the cyclic group algebra k[Z_2m] = H(m,0) braided by R_s
CtxPtr cyclic_context(int m, int s);
// one-dimensional module g -> zeta_{2m}^a over H(m,n,d) or k[Z_2m]
Obj character(const HopfData& A, int m, int n, int a);
Obj regular_obj(const HopfData& A);

// a Hopf algebra B living in ModOver(A, R)
struct BraidedHopf {
    HopfPtr A;
    LinMap R;
    CtxPtr ctx;
    HopfPtr B;
};

// B = k[x_n]/(x_n^2) over A = H(m, n-1, d'), R = R_s; s < 0 picks the smallest s valid for all of d
BraidedHopf braided_line(const FamilyParams& p, int s = -1);
// k[x]/(x^4) over k[Z_4] with R_1, x spanning the character chi_1
BraidedHopf anyonic_line();

// H(m, n-1, d') -> H(m, n, d), g -> g, x_i -> x_i
LinMap hmnd_inclusion(const FamilyParams& p);

// uses p.s; M defaults to the regular module of the base algebra
Report transparency_demo(const FamilyParams& p, const Obj* M = nullptr);

}  // namespace bhl

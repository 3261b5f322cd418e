#pragma once

#include "bhl/core.hpp"

namespace bhl {

enum class Variant { LL, RR, LR_Hop, LR_Hcop, RL_Hcop, RL_Hop, RR_mixed_G1 };

std::string variant_str(Variant v);
Variant parse_variant(const std::string& s);
bool action_left(Variant v);
bool coaction_left(Variant v);

// One action and one coaction of H on obj.  Left action: H (x) M -> M,
// right action: M (x) H -> M; left coaction M -> H (x) M, right M -> M (x) H.
struct YDModule {
    HopfPtr H;
    Variant variant = Variant::LR_Hop;
    Obj obj;
    Morphism act, coact;
    std::string name;
};

enum class Family { L, R, P1, M1, P2, M2, P3, M3, P4, M4, G1 };
std::string family_str(Family f);
Family parse_family(const std::string& s);
Variant family_variant(Family f);

YDModule trivial_yd(HopfPtr H, Variant v, int dim = 1);
// H over itself: regular action with the adjoint coaction, on the sides of v
YDModule adjoint_yd_module(HopfPtr H, Variant v = Variant::LR_Hop);
// lambda(m) = R2 (x) R1 m for a left A-module (LL), rho(m) = m R1 (x) R2 for a right one (RR)
YDModule qt_induced_yd(HopfPtr A, const LinMap& R, const Obj& M, const Morphism& action, bool left = true);
// one-dimensional module over k[Z_N]: action g -> zeta^a, coaction v -> g^b (x) v
YDModule graded_line(HopfPtr kZN, int N, Variant v, int a, int b);
YDModule yd_direct_sum(const YDModule& M, const YDModule& N);
Morphism yd_injection(const YDModule& M, const YDModule& N, int which);

// module/comodule laws
Report check_yd_structure(const YDModule& M);
// the variant's compatibility law, its equivalent reformulation, and their agreement
Report check_yd(const YDModule& M, bool equivalent_form = true);
bool yd_condition(const YDModule& M);
bool yd_condition_equivalent(const YDModule& M);

// Phi_{H,M} symmetric in the ambient context
bool yd_transparent(const YDModule& M);
YDModule yd_tensor(const YDModule& M, const YDModule& N);
Morphism yd_braiding(const YDModule& M, const YDModule& N, Family f, bool inverse = false);

// invertibility, both hexagons on (M, N, P), and naturality along the injection M -> M (+) N
Report check_braiding_laws(Family f, const YDModule& M, const YDModule& N, const YDModule& P);

// f: M -> N preserves both structures
std::optional<Mismatch> check_yd_morphism(const YDModule& M, const YDModule& N, const Morphism& f);
bool same_structure(const YDModule& M, const YDModule& N, std::string* witness = nullptr);

// single-entry +1 perturbations of the action and the coaction, in a fixed order
std::vector<YDModule> yd_mutants(const YDModule& M, size_t limit);

}  // namespace bhl

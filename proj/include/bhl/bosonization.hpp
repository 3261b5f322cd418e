#pragma once

#include "bhl/examples.hpp"
#include "bhl/yd.hpp"

namespace bhl {

enum class Side { Left, Right };

// left: lambda(b) = R2 (x) R1.b, an LL YD module over A;
// right: rho(b) = b.R1 (x) R2 with b.a = a.b, an RR YD module (A must be commutative)
// throws not-quasitriangular, not-supported
YDModule r_coaction(const BraidedHopf& bh, Side side = Side::Left);

// left: B x A on B (x) A, (b (x) a)(b' (x) a') = b (a1.b') (x) a2 a';
// right: A x B on A (x) B, the mirror image
HopfPtr cross_product(const BraidedHopf& bh, Side side = Side::Left);

// a.(b.m) = (a1.b).(a2.m), the condition for the two actions to combine into a B x A action
std::optional<Mismatch> check_smash_compat(const BraidedHopf& bh, const Obj& M, const Morphism& actA,
                                           const Morphism& actB);
// (b (x) a).m = b.(a.m) and its restrictions along the two factor embeddings
Morphism smash_action(const BraidedHopf& bh, const Obj& M, const Morphism& actA, const Morphism& actB);
std::pair<Morphism, Morphism> smash_restrict(const BraidedHopf& bh, const Obj& M, const Morphism& act);

// H(m,n,d) against the bosonization of the braided line over H(m,n-1,d'), through
// G -> 1 x g, X_i -> 1 x x_i, X_n -> x_n x g^m; throws bad-family-params, bad-s
Report biproduct_decompose_check(const FamilyParams& p);

}  // namespace bhl

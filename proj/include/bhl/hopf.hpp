#pragma once

#include "bhl/core.hpp"

namespace bhl {

Report check_bialgebra(const HopfData& H);
// bialgebra axioms plus the antipode laws
Report check_hopf(const HopfData& H);
LinMap compute_antipode_inverse(const HopfData& H);

enum class OpCop { Op, Cop, OpCop };
HopfPtr op_cop(const HopfData& H, OpCop which);
// op and cop are only guaranteed to be bialgebras when Phi_{H,H} is symmetric
bool op_cop_verified(const HopfData& H, OpCop which);

// H* on the dual basis, in the same context
HopfPtr dual_hopf(const HopfData& H);
Report check_antipode_identities(const HopfData& H);

// first failure of Phi_{Y,X} Phi_{X,Y} = id
std::optional<Mismatch> double_braiding_defect(const Context& ctx, const Obj& X, const Obj& Y);
bool is_symmetric_pair(const Context& ctx, const Obj& X, const Obj& Y);
bool is_commutative(const HopfData& H);
bool is_cocommutative(const HopfData& H);

// structure laws for (co)actions of H on M
std::optional<Mismatch> check_left_module(const HopfData& H, const Obj& M, const Morphism& act);
std::optional<Mismatch> check_right_module(const HopfData& H, const Obj& M, const Morphism& act);
std::optional<Mismatch> check_left_comodule(const HopfData& H, const Obj& M, const Morphism& coact);
std::optional<Mismatch> check_right_comodule(const HopfData& H, const Obj& M, const Morphism& coact);
// f X -> Y commutes with the context algebra actions
std::optional<Mismatch> check_context_linear(const Context& ctx, const Morphism& f, const Obj& X, const Obj& Y);

// right H-comodule -> left H*-module and back
Morphism comodule_to_module(const HopfData& H, const Obj& M, const Morphism& rho);
Morphism module_to_comodule(const HopfData& H, const Obj& M, const Morphism& act);

// L: X (x) P -> I  curried to  X -> P*
Morphism curry(const Morphism& L, const Dims& X, const Dims& P);

}  // namespace bhl

#pragma once

#include "bhl/core.hpp"

namespace bhl {

struct Probe {
    std::string name;
    Obj obj;
};

// BHL_PROBE_DEPTH when set, otherwise 2
int default_probe_depth();

// trivial object, the regular module and its tensor powers up to `depth`,
// their duals, and every character when the context algebra is a cyclic group algebra
std::vector<Probe> standard_probes(const Context& ctx, int depth = default_probe_depth());

// (Delta (x) id)R = R13 R23, (id (x) Delta)R = R13 R12, Delta^op(a) R = R Delta(a),
// R invertible with inverse (S (x) id)R
Report check_quasitriangular(const HopfData& A, const LinMap& R);
// R21 R = 1 (x) 1
bool is_triangular(const HopfData& A, const LinMap& R);

struct Transparency {
    bool ok = true;
    std::string probe;
    std::optional<Mismatch> witness;
    std::string str() const;
};
// double braiding of X with every probe is the identity
Transparency is_transparent(const Context& ctx, const Obj& X, const std::vector<Probe>& probes);

std::optional<Mismatch> check_hexagons(const CtxPtr& ctx, const Obj& X, const Obj& Y, const Obj& Z);
// Phi_{X',Y} (f (x) Y) = (Y (x) f) Phi_{X,Y} for f: X -> X'
std::optional<Mismatch> check_braiding_natural(const Context& ctx, const Morphism& f, const Obj& X, const Obj& Xp,
                                               const Obj& Y);

struct BraidingLinearity {
    bool linear = false, colinear = false;
    bool transparent = false, commutative = false, cocommutative = false;
    Report report;
};
// (i) Phi left H-linear <=> H transparent and cocommutative, (ii) the same with colinear and commutative,
// both sides evaluated on H-(co)module probes
BraidingLinearity check_braiding_linearity(const HopfData& H);

}  // namespace bhl

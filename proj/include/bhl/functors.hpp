#pragma once

#include <functional>
#include <variant>

#include "bhl/context.hpp"
#include "bhl/double.hpp"
#include "bhl/yd.hpp"

namespace bhl {

enum class FunctorId {
    F, G, F_l, G_l, L, A, A_inv, Ch, Ch1, Ch2, Bfun, E, E_inv,
    F1, F1_inv, F2, F3, F4, S, S_inv, T, T_inv, G1, G2, K, K_inv
};
std::string functor_str(FunctorId f);
FunctorId parse_functor(const std::string& s);

// a left or right module over D(H); left: D (x) M -> M, right: M (x) D -> M
struct DModule {
    std::shared_ptr<const DoubleData> D;
    bool right = false;
    Obj obj;
    Morphism act;
    std::string name;
};
DModule regular_dmodule(std::shared_ptr<const DoubleData> D, bool right = false);
DModule dmodule_tensor(const DModule& M, const DModule& N);
std::optional<Mismatch> check_dmodule(const DModule& M);
// the factor actions: B (x) M -> M, H (x) M -> M (or M (x) B, M (x) H on the right)
Morphism dmodule_action_B(const DModule& M);
Morphism dmodule_action_H(const DModule& M);

// braiding of left D(H)-modules through the dual bases
Morphism psi(const DModule& M, const DModule& N);
// the braiding induced by the R-matrix of D(H)
Morphism psi_r_matrix(const DModule& M, const DModule& N);
// braiding of right D(H)-modules
Morphism psi_right(const DModule& M, const DModule& N);

// a left H-module used as a probe for half-braidings
struct HModule {
    std::string name;
    Obj obj;
    Morphism act;
};
HModule hmodule_tensor(const HopfData& H, const HModule& X, const HModule& Y);
// trivial k and k^2, the regular module and its tensor powers up to depth (dims <= 64)
std::vector<HModule> module_probes(HopfPtr H, int depth = default_probe_depth());

struct HalfBraiding {
    HModule X;
    Morphism c;  // X (x) V -> V (x) X
};
struct CenterObject {
    HopfPtr H;
    Obj obj;
    Morphism act;
    std::function<Morphism(const HModule&)> rule;  // c_{X,V} for any X
    std::vector<HalfBraiding> half;                // the rule evaluated on the probes
    std::string name;
};
CenterObject to_center(const YDModule& M, const std::vector<HModule>& probes);
YDModule center_to_yd(const CenterObject& C);
CenterObject center_tensor(const CenterObject& V, const CenterObject& W);
// braid-rel, H-linearity, invertibility, naturality in the probe, unit, and the c_{H,V} identity
Report check_center(const CenterObject& C);
// (f (x) X) c_{X,V} = c_{X,W} (X (x) f) on every probe
std::optional<Mismatch> check_center_morphism(const CenterObject& V, const CenterObject& W, const Morphism& f);

using Structure = std::variant<YDModule, DModule, CenterObject>;
std::string structure_kind(const Structure& s);

struct FunctorEnv {
    HopfPtr H;
    std::vector<HModule> probes;
    explicit FunctorEnv(HopfPtr h, std::shared_ptr<const DoubleData> d = nullptr);
    const std::shared_ptr<const DoubleData>& dbl() const;
    // H^{op,cop}, shared by every structure built over it
    const HopfPtr& opcop() const;

private:
    mutable std::shared_ptr<const DoubleData> D_;
    mutable HopfPtr opcop_;
};

// throws signature-mismatch, transparency-violated
Structure apply_functor(FunctorId f, const Structure& in, const FunctorEnv& env);

enum class Property { Roundtrip, Monoidal, Braided };
std::string property_str(Property p);
Property parse_property(const std::string& s);
Report check_functor(FunctorId f, const Structure& M, const Structure& N, const FunctorEnv& env, Property p);

// composites around the triangles of functors agree on M (a left or right D(H)-module)
Report check_triangles(const DModule& M, const FunctorEnv& env);
// the dual-basis identity (H (x) Delta_B) coev = rearranged coev (x) coev
std::optional<Mismatch> check_yddh_monoidal(const DoubleData& D);
// (ev (x) H)(H* (x) Phi^{-1})(Phi^{-1} (x) H)(coev (x) H) = id
std::optional<Mismatch> check_loop_identity(const CtxPtr& ctx, const Obj& X);

// D(H)-modules -> YD -> center on the regular module; refused when H is not transparent
Report embedding_check(HopfPtr H, const std::vector<Probe>& probes);

}  // namespace bhl

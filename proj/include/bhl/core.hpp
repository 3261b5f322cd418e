#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bhl/multilinear.hpp"

namespace bhl {

// An object of the ambient category: a (possibly multi-factor) based space,
// with a left action of the context algebra when the context is ModOver.
struct Obj {
    Dims dims;
    std::optional<Morphism> act;  // [dimA] ++ dims -> dims

    Index dim() const { return volume(dims); }
};

enum class Status { Pass, Fail, Precondition };
std::string status_str(Status s);

struct Check {
    std::string id;
    Status status = Status::Pass;
    std::string witness;
};

struct Report {
    std::vector<Check> checks;

    void add(const std::string& id, const std::optional<Mismatch>& m);
    void add(const std::string& id, bool ok, const std::string& witness = "");
    void precondition(const std::string& id, const std::string& why);
    void append(const Report& other, const std::string& prefix = "");
    bool all_pass() const;
    Status overall() const;
    const Check* find(const std::string& id) const;
    bool passed(const std::string& id) const;
    std::string text() const;
};

struct HopfData;
using HopfPtr = std::shared_ptr<const HopfData>;

class Context;
using CtxPtr = std::shared_ptr<const Context>;

class Context {
public:
    enum class Kind { Vec, ModOver };

    static CtxPtr vec(int conductor = 1);
    // modules over a quasitriangular Hopf algebra A (A must live in Vec)
    static CtxPtr mod_over(HopfPtr A, const LinMap& R);

    Kind kind() const { return kind_; }
    int conductor() const { return conductor_; }
    const HopfPtr& algebra() const { return A_; }
    const LinMap& r_matrix() const { return R_; }
    std::string name() const;

    // sign +1: Phi_{X,Y}: X(x)Y -> Y(x)X; sign -1: its inverse Y(x)X -> X(x)Y
    Morphism braiding(const Obj& X, const Obj& Y, int sign = 1) const;
    Obj tensor(const Obj& X, const Obj& Y) const;
    Obj tensor(const std::vector<Obj>& xs) const;
    Obj unit_obj() const;
    // plain space with the trivial action
    Obj trivial(const Dims& d) const;
    // left dual, (a.f)(v) = f(S(a) v)
    Obj dual(const Obj& P) const;

    Morphism ev(const Obj& P) const;          // P* (x) P -> I
    Morphism coev(const Obj& P) const;        // I -> P (x) P*
    Morphism ev_prime(const Obj& P) const;    // P (x) P* -> I
    Morphism coev_prime(const Obj& P) const;  // I -> P* (x) P

private:
    Kind kind_ = Kind::Vec;
    int conductor_ = 1;
    HopfPtr A_;
    LinMap R_;
    struct RTerm {
        Index i, j;
        Cyc c;
    };
    std::vector<RTerm> r_, rinv_;
};

struct HopfData {
    std::string name;
    int dim = 0;
    LinMap mult, comult, unit, counit, antipode, antipode_inv;
    CtxPtr ctx;
    Obj obj;
    Morphism M, D, U, E, S, Si;
};

// assembles a Hopf algebra; antipode_inv is computed when absent
HopfPtr make_hopf(std::string name, const LinMap& mult, const LinMap& comult, const LinMap& unit,
                  const LinMap& counit, const LinMap& antipode, std::optional<LinMap> antipode_inv,
                  CtxPtr ctx, std::optional<Morphism> action = std::nullopt);

// String-diagram builder: a list of wires, each an object; every step replaces
// a run of consecutive wires.  build() returns the composite, first step first.
class Diagram {
public:
    Diagram(CtxPtr ctx, std::vector<Obj> wires);

    const std::vector<Obj>& wires() const { return w_; }
    Dims flat() const;

    Diagram& op(size_t pos, size_t n, const Morphism& f, std::vector<Obj> outs);
    Diagram& braid(size_t pos);   // Phi_{w[pos], w[pos+1]}
    Diagram& ibraid(size_t pos);  // Phi^{-1}_{w[pos+1], w[pos]}
    Diagram& merge(size_t pos, size_t n, const Obj& as);  // regroup wires, no-op map
    Diagram& split(size_t pos, const std::vector<Obj>& parts);

    Diagram& mul(const HopfData& H, size_t pos);
    Diagram& comul(const HopfData& H, size_t pos);
    Diagram& unit(const HopfData& H, size_t pos);
    Diagram& counit(const HopfData& H, size_t pos);
    Diagram& S(const HopfData& H, size_t pos);
    Diagram& Si(const HopfData& H, size_t pos);
    Diagram& insert(size_t pos, const Morphism& elem, std::vector<Obj> outs);

    Morphism build() const;

private:
    CtxPtr ctx_;
    std::vector<Obj> w_;
    Dims dom_;
    std::vector<Morphism> steps_;
    size_t offset(size_t pos) const;
};

std::string hopf_summary(const HopfData& H);

}  // namespace bhl

#include "bhl/core.hpp"

#include <numeric>
#include <sstream>

namespace bhl {

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Precondition: return "precondition-violated";
    }
    return "?";
}

void Report::add(const std::string& id, const std::optional<Mismatch>& m) {
    checks.push_back({id, m ? Status::Fail : Status::Pass, m ? m->str() : ""});
}

void Report::add(const std::string& id, bool ok, const std::string& witness) {
    checks.push_back({id, ok ? Status::Pass : Status::Fail, ok ? "" : witness});
}

void Report::precondition(const std::string& id, const std::string& why) {
    checks.push_back({id, Status::Precondition, why});
}

void Report::append(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.id, c.status, c.witness});
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (c.status != Status::Pass) return false;
    return true;
}

Status Report::overall() const {
    bool pre = false;
    for (const auto& c : checks) {
        if (c.status == Status::Fail) return Status::Fail;
        if (c.status == Status::Precondition) pre = true;
    }
    return pre ? Status::Precondition : Status::Pass;
}

const Check* Report::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

bool Report::passed(const std::string& id) const {
    auto c = find(id);
    return c && c->status == Status::Pass;
}

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << c.id << ": " << status_str(c.status);
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

CtxPtr Context::vec(int conductor) {
    auto c = std::make_shared<Context>();
    c->conductor_ = conductor;
    return c;
}

namespace {

std::vector<std::pair<Index, Cyc>> element_terms(const LinMap& e) {
    std::vector<std::pair<Index, Cyc>> r;
    for (Index k = 0; k < e.cod_size(); ++k)
        if (!e.at(k, 0).is_zero()) r.emplace_back(k, e.at(k, 0));
    return r;
}

}  // namespace

CtxPtr Context::mod_over(HopfPtr A, const LinMap& R) {
    if (A->ctx->kind() != Kind::Vec) throw AlgebraError("not-supported", "the acting algebra must live in Vec");
    int a = A->dim;
    if (R.dom() != Dims{} || R.cod() != Dims{a, a})
        throw AlgebraError("compose-mismatch", "R-matrix must be an element of A (x) A");
    auto c = std::make_shared<Context>();
    c->kind_ = Kind::ModOver;
    c->A_ = A;
    c->R_ = R;
    c->conductor_ = std::lcm(A->ctx->conductor(), R.conductor());
    for (auto& [k, v] : element_terms(R)) c->r_.push_back({k / a, k % a, v});
    // R^{-1} = (S (x) id) R
    LinMap Rinv = compose(tensor_product(A->antipode, LinMap::identity({a})), R);
    for (auto& [k, v] : element_terms(Rinv)) c->rinv_.push_back({k / a, k % a, v});
    return c;
}

std::string Context::name() const {
    if (kind_ == Kind::Vec) return "Vec";
    return "Mod(" + A_->name + ")";
}

Obj Context::unit_obj() const { return trivial({}); }

Obj Context::trivial(const Dims& d) const {
    Obj o{d, std::nullopt};
    if (kind_ == Kind::ModOver) {
        Dims dom = concat({A_->dim}, d);
        Index n = volume(d);
        auto eps = A_->counit;
        o.act = Morphism::lazy(dom, d, [n, eps](Index j) {
                    const Cyc& c = eps.at(0, j / n);
                    return c.is_zero() ? SVec{} : SVec{Term{j % n, c}};
                }).cached();
    }
    return o;
}

Obj Context::tensor(const Obj& X, const Obj& Y) const {
    Obj o{concat(X.dims, Y.dims), std::nullopt};
    if (kind_ == Kind::Vec) return o;
    if (!X.act || !Y.act) throw AlgebraError("not-a-module", "object without an action in a module context");
    Morphism ax = X.act->cached(), ay = Y.act->cached(), D = A_->D;
    Index nx = X.dim(), ny = Y.dim(), da = A_->dim;
    o.act = Morphism::lazy(concat({A_->dim}, o.dims), o.dims,
                           [=](Index j) {
                               Index a = j / (nx * ny), x = (j / ny) % nx, y = j % ny;
                               SVec out;
                               for (const auto& t : D.column(a)) {
                                   Index a1 = t.i / da, a2 = t.i % da;
                                   SVec u = ax.column(a1 * nx + x), v = ay.column(a2 * ny + y);
                                   for (const auto& p : u)
                                       for (const auto& q : v) out.push_back(Term{p.i * ny + q.i, t.c * p.c * q.c});
                               }
                               canonicalize(out);
                               return out;
                           })
                .cached();
    return o;
}

Obj Context::tensor(const std::vector<Obj>& xs) const {
    Obj o = unit_obj();
    for (const auto& x : xs) o = tensor(o, x);
    return o;
}

Obj Context::dual(const Obj& P) const {
    Obj o{P.dims, std::nullopt};
    if (kind_ == Kind::Vec) return o;
    if (!P.act) throw AlgebraError("not-a-module", "object without an action in a module context");
    int a = A_->dim;
    Index n = P.dim();
    std::vector<SVec> cols(a * n);
    for (int x = 0; x < a; ++x)
        for (int b = 0; b < a; ++b) {
            const Cyc& s = A_->antipode.at(b, x);
            if (s.is_zero()) continue;
            for (Index j = 0; j < n; ++j)
                for (const auto& t : P.act->column(b * n + j)) cols[x * n + t.i].push_back(Term{j, s * t.c});
        }
    o.act = Morphism::from_columns(concat({a}, P.dims), P.dims, std::move(cols));
    return o;
}

Morphism Context::braiding(const Obj& X, const Obj& Y, int sign) const {
    if (kind_ == Kind::Vec) return sign > 0 ? Morphism::swap(X.dims, Y.dims) : Morphism::swap(Y.dims, X.dims);
    if (!X.act || !Y.act) throw AlgebraError("not-a-module", "object without an action in a module context");
    Morphism ax = X.act->cached(), ay = Y.act->cached();
    Index nx = X.dim(), ny = Y.dim();
    if (sign > 0) {
        // x (x) y  ->  R2 y (x) R1 x
        auto terms = r_;
        return Morphism::lazy(concat(X.dims, Y.dims), concat(Y.dims, X.dims),
                              [=](Index j) {
                                  Index x = j / ny, y = j % ny;
                                  SVec out;
                                  for (const auto& t : terms) {
                                      SVec u = ax.column(t.i * nx + x), v = ay.column(t.j * ny + y);
                                      for (const auto& q : v)
                                          for (const auto& p : u) out.push_back(Term{q.i * nx + p.i, t.c * p.c * q.c});
                                  }
                                  canonicalize(out);
                                  return out;
                              })
            .cached();
    }
    // y (x) x  ->  R^{-1}(x (x) y)
    auto terms = rinv_;
    return Morphism::lazy(concat(Y.dims, X.dims), concat(X.dims, Y.dims),
                          [=](Index j) {
                              Index y = j / nx, x = j % nx;
                              SVec out;
                              for (const auto& t : terms) {
                                  SVec u = ax.column(t.i * nx + x), v = ay.column(t.j * ny + y);
                                  for (const auto& p : u)
                                      for (const auto& q : v) out.push_back(Term{p.i * ny + q.i, t.c * p.c * q.c});
                              }
                              canonicalize(out);
                              return out;
                          })
        .cached();
}

Morphism Context::ev(const Obj& P) const {
    Index n = P.dim();
    return Morphism::lazy(concat(P.dims, P.dims), {}, [n](Index j) { return j / n == j % n ? basis_vec(0) : SVec{}; });
}

Morphism Context::coev(const Obj& P) const {
    Index n = P.dim();
    SVec v;
    for (Index i = 0; i < n; ++i) v.push_back(Term{i * n + i, Cyc(1)});
    return Morphism::element(concat(P.dims, P.dims), std::move(v));
}

Morphism Context::ev_prime(const Obj& P) const {
    return compose(ev(P), braiding(P, dual(P)));
}

Morphism Context::coev_prime(const Obj& P) const {
    return compose(braiding(dual(P), P, -1), coev(P));
}

// ---------------------------------------------------------------------------

HopfPtr make_hopf(std::string name, const LinMap& mult, const LinMap& comult, const LinMap& unit, const LinMap& counit,
                  const LinMap& antipode, std::optional<LinMap> antipode_inv, CtxPtr ctx,
                  std::optional<Morphism> action) {
    auto H = std::make_shared<HopfData>();
    int d = mult.cod().size() == 1 ? mult.cod()[0] : -1;
    if (d < 0 || mult.dom() != Dims{d, d} || comult.dom() != Dims{d} || comult.cod() != Dims{d, d} ||
        unit.dom() != Dims{} || unit.cod() != Dims{d} || counit.dom() != Dims{d} || counit.cod() != Dims{} ||
        antipode.dom() != Dims{d} || antipode.cod() != Dims{d})
        throw AlgebraError("compose-mismatch", "structure maps of " + name + " have inconsistent shapes");
    H->name = std::move(name);
    H->dim = d;
    H->mult = mult;
    H->comult = comult;
    H->unit = unit;
    H->counit = counit;
    H->antipode = antipode;
    if (antipode_inv) {
        if (antipode_inv->dom() != Dims{d} || antipode_inv->cod() != Dims{d})
            throw AlgebraError("compose-mismatch", "antipode inverse has the wrong shape");
        H->antipode_inv = *antipode_inv;
    } else {
        try {
            H->antipode_inv = invert(antipode);
        } catch (const AlgebraError&) {
            throw AlgebraError("antipode-not-bijective", "antipode of " + H->name + " is singular");
        }
    }
    H->ctx = ctx ? ctx : Context::vec();
    H->obj = Obj{{d}, action};
    if (H->ctx->kind() == Context::Kind::ModOver && !action)
        throw AlgebraError("not-a-module", "Hopf algebra in a module context needs an action");
    H->M = Morphism(H->mult);
    H->D = Morphism(H->comult);
    H->U = Morphism(H->unit);
    H->E = Morphism(H->counit);
    H->S = Morphism(H->antipode);
    H->Si = Morphism(H->antipode_inv);
    return H;
}

std::string hopf_summary(const HopfData& H) {
    return H.name + " (dim " + std::to_string(H.dim) + ", " + H.ctx->name() + ")";
}

// ---------------------------------------------------------------------------

Diagram::Diagram(CtxPtr ctx, std::vector<Obj> wires) : ctx_(std::move(ctx)), w_(std::move(wires)) { dom_ = flat(); }

Dims Diagram::flat() const {
    Dims d;
    for (const auto& w : w_) d.insert(d.end(), w.dims.begin(), w.dims.end());
    return d;
}

size_t Diagram::offset(size_t pos) const {
    if (pos > w_.size()) throw std::out_of_range("diagram wire position out of range");
    size_t k = 0;
    for (size_t i = 0; i < pos; ++i) k += w_[i].dims.size();
    return k;
}

Diagram& Diagram::op(size_t pos, size_t n, const Morphism& f, std::vector<Obj> outs) {
    if (pos + n > w_.size()) throw std::out_of_range("diagram step exceeds the wire list");
    Dims in;
    for (size_t i = pos; i < pos + n; ++i) in.insert(in.end(), w_[i].dims.begin(), w_[i].dims.end());
    Dims out;
    for (const auto& o : outs) out.insert(out.end(), o.dims.begin(), o.dims.end());
    if (f.dom() != in || f.cod() != out)
        throw AlgebraError("compose-mismatch", "diagram step " + dims_str(f.dom()) + "->" + dims_str(f.cod()) +
                                                   " applied to wires " + dims_str(in) + " producing " + dims_str(out));
    steps_.push_back(f.at(flat(), offset(pos)));
    w_.erase(w_.begin() + pos, w_.begin() + pos + n);
    w_.insert(w_.begin() + pos, outs.begin(), outs.end());
    return *this;
}

Diagram& Diagram::braid(size_t pos) {
    Obj a = w_.at(pos), b = w_.at(pos + 1);
    return op(pos, 2, ctx_->braiding(a, b, 1), {b, a});
}

Diagram& Diagram::ibraid(size_t pos) {
    Obj a = w_.at(pos), b = w_.at(pos + 1);
    return op(pos, 2, ctx_->braiding(b, a, -1), {b, a});
}

Diagram& Diagram::merge(size_t pos, size_t n, const Obj& as) {
    if (pos + n > w_.size()) throw std::out_of_range("merge exceeds the wire list");
    Dims before = flat();
    w_.erase(w_.begin() + pos, w_.begin() + pos + n);
    w_.insert(w_.begin() + pos, as);
    if (flat() != before) steps_.push_back(Morphism::reshape(before, flat()));
    return *this;
}

Diagram& Diagram::split(size_t pos, const std::vector<Obj>& parts) {
    Dims before = flat();
    w_.erase(w_.begin() + pos);
    w_.insert(w_.begin() + pos, parts.begin(), parts.end());
    if (flat() != before) steps_.push_back(Morphism::reshape(before, flat()));
    return *this;
}

Diagram& Diagram::mul(const HopfData& H, size_t pos) { return op(pos, 2, H.M, {H.obj}); }
Diagram& Diagram::comul(const HopfData& H, size_t pos) { return op(pos, 1, H.D, {H.obj, H.obj}); }
Diagram& Diagram::unit(const HopfData& H, size_t pos) { return op(pos, 0, H.U, {H.obj}); }
Diagram& Diagram::counit(const HopfData& H, size_t pos) { return op(pos, 1, H.E, {}); }
Diagram& Diagram::S(const HopfData& H, size_t pos) { return op(pos, 1, H.S, {H.obj}); }
Diagram& Diagram::Si(const HopfData& H, size_t pos) { return op(pos, 1, H.Si, {H.obj}); }

Diagram& Diagram::insert(size_t pos, const Morphism& elem, std::vector<Obj> outs) {
    return op(pos, 0, elem, std::move(outs));
}

Morphism Diagram::build() const {
    if (steps_.empty()) return Morphism::identity(dom_);
    return compose_all(steps_);
}

}  // namespace bhl

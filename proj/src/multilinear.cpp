#include "bhl/multilinear.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bhl {

Index volume(const Dims& d) {
    Index v = 1;
    for (int x : d) v *= (Index)x;
    return v;
}

Dims concat(const Dims& a, const Dims& b) {
    Dims r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::vector<int> unflatten(Index i, const Dims& d) {
    std::vector<int> idx(d.size());
    for (size_t k = d.size(); k-- > 0;) {
        idx[k] = (int)(i % (Index)d[k]);
        i /= (Index)d[k];
    }
    return idx;
}

Index flatten(const std::vector<int>& idx, const Dims& d) {
    Index i = 0;
    for (size_t k = 0; k < d.size(); ++k) i = i * (Index)d[k] + (Index)idx[k];
    return i;
}

std::string dims_str(const Dims& d) {
    std::string s = "[";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

std::string multi_index_str(Index i, const Dims& d) {
    auto idx = unflatten(i, d);
    std::string s = "(";
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k]);
    }
    return s + ")";
}

void canonicalize(SVec& v) {
    if (v.empty()) return;
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.i < b.i; });
    size_t out = 0;
    for (size_t k = 0; k < v.size();) {
        Index i = v[k].i;
        Cyc c = std::move(v[k].c);
        size_t l = k + 1;
        while (l < v.size() && v[l].i == i) c += v[l++].c;
        if (!c.is_zero()) v[out++] = Term{i, std::move(c)};
        k = l;
    }
    v.resize(out);
}

SVec basis_vec(Index i) { return SVec{Term{i, Cyc(1)}}; }

SVec scale(const SVec& v, const Cyc& c) {
    SVec r;
    if (c.is_zero()) return r;
    r.reserve(v.size());
    for (const auto& t : v) r.push_back(Term{t.i, t.c * c});
    return r;
}

SVec add(const SVec& a, const SVec& b) {
    SVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    canonicalize(r);
    return r;
}

std::string Mismatch::str() const {
    auto fmt = [](const std::vector<int>& v) {
        std::string s = "(";
        for (size_t k = 0; k < v.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(v[k]);
        }
        return s + ")";
    };
    return "cod" + fmt(cod_index) + " dom" + fmt(dom_index) + ": " + lhs.pretty() + " vs " + rhs.pretty();
}

// ---------------------------------------------------------------------------
// LinMap

LinMap::LinMap(Dims dom, Dims cod) : dom_(std::move(dom)), cod_(std::move(cod)) {
    for (int x : dom_)
        if (x < 0) throw std::invalid_argument("negative dimension");
    for (int x : cod_)
        if (x < 0) throw std::invalid_argument("negative dimension");
    e_.assign(volume(dom_) * volume(cod_), Cyc());
}

LinMap::LinMap(Dims dom, Dims cod, std::vector<Cyc> entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), e_(std::move(entries)) {
    if (e_.size() != volume(dom_) * volume(cod_))
        throw std::invalid_argument("entry count " + std::to_string(e_.size()) + " does not match " +
                                    dims_str(cod_) + "x" + dims_str(dom_));
}

LinMap LinMap::identity(const Dims& d) {
    LinMap m(d, d);
    for (Index i = 0; i < volume(d); ++i) m.at(i, i) = Cyc(1);
    return m;
}

std::vector<Cyc> LinMap::apply(const std::vector<Cyc>& v) const {
    if (v.size() != dom_size())
        throw std::invalid_argument("vector length " + std::to_string(v.size()) + " does not match domain " + dims_str(dom_));
    std::vector<Cyc> r(cod_size());
    Index n = dom_size();
    for (Index d = 0; d < n; ++d) {
        if (v[d].is_zero()) continue;
        for (Index c = 0; c < r.size(); ++c) {
            const Cyc& x = e_[c * n + d];
            if (!x.is_zero()) r[c] += x * v[d];
        }
    }
    return r;
}

SVec LinMap::column(Index d) const {
    SVec r;
    Index n = dom_size();
    for (Index c = 0; c < cod_size(); ++c)
        if (!e_[c * n + d].is_zero()) r.push_back(Term{c, e_[c * n + d]});
    return r;
}

LinMap LinMap::transpose() const {
    LinMap t(cod_, dom_);
    for (Index c = 0; c < cod_size(); ++c)
        for (Index d = 0; d < dom_size(); ++d) t.at(d, c) = at(c, d);
    return t;
}

int LinMap::conductor() const {
    int L = 1;
    for (const auto& x : e_)
        if (!x.is_zero()) L = std::lcm(L, x.conductor());
    return L;
}

std::string LinMap::serialize() const {
    int L = conductor();
    std::ostringstream os;
    os << "dom=" << dims_str(dom_) << ";cod=" << dims_str(cod_) << ";N=" << L << "\n";
    Index n = dom_size();
    for (Index c = 0; c < cod_size(); ++c) {
        for (Index d = 0; d < n; ++d) {
            if (d) os << ' ';
            os << e_[c * n + d].str(L);
        }
        os << "\n";
    }
    if (cod_size() == 0 || n == 0) os << "\n";
    return os.str();
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    size_t base = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(base + pos, msg); }
    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    void expect(std::string_view lit) {
        if (s.substr(pos, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
        pos += lit.size();
    }
    long long integer() {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos || (pos == start + 1 && !std::isdigit((unsigned char)s[start]))) {
            pos = start;
            fail("expected integer");
        }
        return std::stoll(std::string(s.substr(start, pos - start)));
    }
    Dims dims() {
        expect("[");
        Dims d;
        skip_ws();
        if (pos < s.size() && s[pos] == ']') {
            ++pos;
            return d;
        }
        for (;;) {
            skip_ws();
            long long v = integer();
            if (v < 0) fail("negative dimension");
            d.push_back((int)v);
            skip_ws();
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            expect("]");
            return d;
        }
    }
    std::string_view token() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && !std::isspace((unsigned char)s[pos])) ++pos;
        if (start == pos) fail("unexpected end of input");
        return s.substr(start, pos - start);
    }
};

}  // namespace

LinMap LinMap::parse(std::string_view text, size_t offset, size_t* consumed) {
    Cursor cur{text, 0, offset};
    cur.skip_ws();
    cur.expect("dom=");
    Dims dom = cur.dims();
    cur.expect(";cod=");
    Dims cod = cur.dims();
    cur.expect(";N=");
    long long N = cur.integer();
    if (N <= 0) cur.fail("conductor must be positive");
    Index n = volume(dom) * volume(cod);
    std::vector<Cyc> e;
    e.reserve(n);
    for (Index k = 0; k < n; ++k) {
        std::string_view tok = cur.token();
        size_t at = cur.pos - tok.size();
        try {
            e.push_back(Cyc::parse((int)N, tok));
        } catch (const std::exception& ex) {
            throw ParseError(offset + at, ex.what());
        }
    }
    if (consumed) *consumed = cur.pos;
    return LinMap(std::move(dom), std::move(cod), std::move(e));
}

LinMap compose(const LinMap& g, const LinMap& f) {
    if (volume(f.cod()) != volume(g.dom()) || f.cod() != g.dom())
        throw AlgebraError("compose-mismatch", "cannot compose " + dims_str(g.dom()) + "->" + dims_str(g.cod()) +
                                                   " after " + dims_str(f.dom()) + "->" + dims_str(f.cod()));
    LinMap r(f.dom(), g.cod());
    Index n = f.dom_size(), m = f.cod_size(), p = g.cod_size();
    for (Index k = 0; k < m; ++k)
        for (Index c = 0; c < p; ++c) {
            const Cyc& gk = g.at(c, k);
            if (gk.is_zero()) continue;
            for (Index d = 0; d < n; ++d) {
                const Cyc& fk = f.at(k, d);
                if (!fk.is_zero()) r.at(c, d) += gk * fk;
            }
        }
    return r;
}

LinMap tensor_product(const LinMap& f, const LinMap& g) {
    LinMap r(concat(f.dom(), g.dom()), concat(f.cod(), g.cod()));
    Index fd = f.dom_size(), gd = g.dom_size(), fc = f.cod_size(), gc = g.cod_size();
    for (Index a = 0; a < fc; ++a)
        for (Index b = 0; b < fd; ++b) {
            const Cyc& x = f.at(a, b);
            if (x.is_zero()) continue;
            for (Index c = 0; c < gc; ++c)
                for (Index d = 0; d < gd; ++d) {
                    const Cyc& y = g.at(c, d);
                    if (!y.is_zero()) r.at(a * gc + c, b * gd + d) = x * y;
                }
        }
    return r;
}

LinMap vec_swap(int dimX, int dimY) {
    if (dimX < 0 || dimY < 0) throw std::invalid_argument("negative dimension");
    LinMap r({dimX, dimY}, {dimY, dimX});
    for (int i = 0; i < dimX; ++i)
        for (int j = 0; j < dimY; ++j) r.at((Index)j * dimX + i, (Index)i * dimY + j) = Cyc(1);
    return r;
}

LinMap ev_map(int dim) {
    LinMap r({dim, dim}, {});
    for (int i = 0; i < dim; ++i) r.at(0, (Index)i * dim + i) = Cyc(1);
    return r;
}

LinMap coev_map(int dim) {
    LinMap r({}, {dim, dim});
    for (int i = 0; i < dim; ++i) r.at((Index)i * dim + i, 0) = Cyc(1);
    return r;
}

std::optional<Mismatch> map_equal(const LinMap& f, const LinMap& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) {
        Mismatch m;
        m.lhs = Cyc((long long)f.dom().size());
        m.rhs = Cyc((long long)g.dom().size());
        return m;
    }
    Index n = f.dom_size();
    for (Index k = 0; k < f.entries().size(); ++k)
        if (!(f.entries()[k] == g.entries()[k]))
            return Mismatch{unflatten(k / n, f.cod()), unflatten(k % n, f.dom()), f.entries()[k], g.entries()[k]};
    return std::nullopt;
}

LinMap invert(const LinMap& f) {
    Index n = f.dom_size();
    if (n != f.cod_size()) throw AlgebraError("singular", "map is not square");
    std::vector<std::vector<Cyc>> a(n, std::vector<Cyc>(2 * n));
    for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) a[r][c] = f.at(r, c);
        a[r][n + r] = Cyc(1);
    }
    for (Index col = 0; col < n; ++col) {
        Index piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw AlgebraError("singular", "matrix is singular");
        std::swap(a[piv], a[col]);
        Cyc inv = a[col][col].inv();
        for (auto& x : a[col])
            if (!x.is_zero()) x = x * inv;
        for (Index r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Cyc fac = a[r][col];
            for (Index c = 0; c < 2 * n; ++c)
                if (!a[col][c].is_zero()) a[r][c] -= fac * a[col][c];
        }
    }
    LinMap r(f.cod(), f.dom());
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) r.at(i, j) = a[i][n + j];
    return r;
}

// ---------------------------------------------------------------------------
// Morphism nodes

SVec Morphism::Node::apply(const SVec& v) const {
    SVec r;
    for (const auto& t : v) {
        SVec c = column(t.i);
        for (auto& x : c) r.push_back(Term{x.i, x.c * t.c});
    }
    canonicalize(r);
    return r;
}

namespace {

struct ColumnsNode : Morphism::Node {
    std::vector<SVec> cols;
    SVec column(Index j) const override { return cols.at(j); }
};

struct LazyNode : Morphism::Node {
    std::function<SVec(Index)> f;
    SVec column(Index j) const override { return f(j); }
};

struct CachedNode : Morphism::Node {
    Morphism inner;
    mutable std::mutex mu;
    mutable std::vector<std::unique_ptr<SVec>> slots;

    const SVec& ref(Index j) const {
        {
            std::lock_guard<std::mutex> lock(mu);
            if (slots[j]) return *slots[j];
        }
        auto v = std::make_unique<SVec>(inner.column(j));
        std::lock_guard<std::mutex> lock(mu);
        if (!slots[j]) slots[j] = std::move(v);
        return *slots[j];
    }
    SVec column(Index j) const override { return ref(j); }
};

struct SwapNode : Morphism::Node {
    Index x, y;
    SVec column(Index j) const override {
        Index i = j / y, k = j % y;
        return basis_vec(k * x + i);
    }
    SVec apply(const SVec& v) const override {
        SVec r;
        r.reserve(v.size());
        for (const auto& t : v) r.push_back(Term{(t.i % y) * x + t.i / y, t.c});
        std::sort(r.begin(), r.end(), [](const Term& a, const Term& b) { return a.i < b.i; });
        return r;
    }
};

struct IdentityNode : Morphism::Node {
    SVec column(Index j) const override { return basis_vec(j); }
    SVec apply(const SVec& v) const override { return v; }
};

struct ChainNode : Morphism::Node {
    std::vector<Morphism> steps;
    SVec column(Index j) const override { return apply(basis_vec(j)); }
    SVec apply(const SVec& v) const override {
        SVec cur = v;
        for (const auto& s : steps) {
            if (cur.empty()) break;
            cur = s.apply(cur);
        }
        return cur;
    }
};

struct AtNode : Morphism::Node {
    std::shared_ptr<const CachedNode> inner;
    Index mid_in, mid_out, right;
    SVec column(Index j) const override { return apply(basis_vec(j)); }
    SVec apply(const SVec& v) const override {
        SVec r;
        r.reserve(v.size() * 2);
        for (const auto& t : v) {
            Index rr = t.i % right;
            Index rest = t.i / right;
            Index mid = rest % mid_in;
            Index left = rest / mid_in;
            const SVec& col = inner->ref(mid);
            Index base = left * mid_out;
            for (const auto& x : col) r.push_back(Term{(base + x.i) * right + rr, x.c * t.c});
        }
        canonicalize(r);
        return r;
    }
};

struct SumNode : Morphism::Node {
    Morphism f, g;
    SVec column(Index j) const override { return add(f.column(j), g.column(j)); }
};

struct ScaleNode : Morphism::Node {
    Morphism f;
    Cyc c;
    SVec column(Index j) const override { return scale(f.column(j), c); }
};

template <class N>
std::shared_ptr<N> node(const Dims& dom, const Dims& cod) {
    auto n = std::make_shared<N>();
    n->dom = dom;
    n->cod = cod;
    return n;
}

}  // namespace

Morphism::Morphism(const LinMap& m) {
    auto n = node<ColumnsNode>(m.dom(), m.cod());
    n->cols.resize(m.dom_size());
    for (Index j = 0; j < m.dom_size(); ++j) n->cols[j] = m.column(j);
    n_ = n;
}

Morphism Morphism::identity(const Dims& d) { return Morphism(node<IdentityNode>(d, d)); }

Morphism Morphism::from_columns(Dims dom, Dims cod, std::vector<SVec> cols) {
    if (cols.size() != volume(dom)) throw std::invalid_argument("column count mismatch");
    auto n = node<ColumnsNode>(dom, cod);
    for (auto& c : cols) canonicalize(c);
    n->cols = std::move(cols);
    return Morphism(n);
}

Morphism Morphism::lazy(Dims dom, Dims cod, std::function<SVec(Index)> col) {
    auto n = node<LazyNode>(dom, cod);
    n->f = std::move(col);
    return Morphism(n);
}

Morphism Morphism::swap(const Dims& X, const Dims& Y) {
    auto n = node<SwapNode>(concat(X, Y), concat(Y, X));
    n->x = volume(X);
    n->y = volume(Y);
    return Morphism(n);
}

Morphism Morphism::reshape(const Dims& from, const Dims& to) {
    if (volume(from) != volume(to)) throw std::invalid_argument("reshape changes the dimension");
    return Morphism(node<IdentityNode>(from, to));
}

Morphism Morphism::element(const Dims& cod, SVec v) {
    canonicalize(v);
    return from_columns({}, cod, {std::move(v)});
}

Morphism Morphism::scalar_multiple(const Morphism& f, const Cyc& c) {
    auto n = node<ScaleNode>(f.dom(), f.cod());
    n->f = f;
    n->c = c;
    return Morphism(n);
}

LinMap Morphism::dense() const {
    LinMap m(dom(), cod());
    for (Index j = 0; j < volume(dom()); ++j)
        for (auto& t : column(j)) m.at(t.i, j) = t.c;
    return m;
}

Morphism Morphism::cached() const {
    if (dynamic_cast<const CachedNode*>(n_.get()) || dynamic_cast<const ColumnsNode*>(n_.get())) return *this;
    auto n = node<CachedNode>(dom(), cod());
    n->inner = *this;
    n->slots.resize(volume(dom()));
    return Morphism(n);
}

Morphism Morphism::at(const Dims& wires, size_t pos) const {
    size_t k = dom().size();
    if (pos + k > wires.size() || !std::equal(dom().begin(), dom().end(), wires.begin() + pos))
        throw AlgebraError("compose-mismatch", "map with domain " + dims_str(dom()) + " does not fit wires " +
                                                   dims_str(wires) + " at position " + std::to_string(pos));
    Dims out(wires.begin(), wires.begin() + pos);
    out.insert(out.end(), cod().begin(), cod().end());
    out.insert(out.end(), wires.begin() + pos + k, wires.end());
    if (pos == 0 && k == wires.size()) return *this;
    auto n = node<AtNode>(wires, out);
    auto c = cached();
    auto cn = std::dynamic_pointer_cast<const CachedNode>(c.n_);
    if (!cn) {
        auto w = std::make_shared<CachedNode>();
        w->dom = dom();
        w->cod = cod();
        w->inner = *this;
        w->slots.resize(volume(dom()));
        cn = w;
    }
    n->inner = cn;
    n->mid_in = volume(dom());
    n->mid_out = volume(cod());
    n->right = volume(Dims(wires.begin() + pos + k, wires.end()));
    return Morphism(n);
}

Morphism compose(const Morphism& g, const Morphism& f) { return compose_all({f, g}); }

Morphism compose_all(const std::vector<Morphism>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty composite");
    for (size_t k = 1; k < fs.size(); ++k)
        if (fs[k].dom() != fs[k - 1].cod())
            throw AlgebraError("compose-mismatch", "step " + std::to_string(k) + " expects " + dims_str(fs[k].dom()) +
                                                       " but receives " + dims_str(fs[k - 1].cod()));
    if (fs.size() == 1) return fs[0];
    auto n = std::make_shared<ChainNode>();
    n->dom = fs.front().dom();
    n->cod = fs.back().cod();
    n->steps = fs;
    return Morphism(n);
}

Morphism tensor_product(const Morphism& f, const Morphism& g) {
    Dims w = concat(f.dom(), g.dom());
    Morphism a = f.at(w, 0);
    Morphism b = g.at(a.cod(), f.cod().size());
    return compose(b, a);
}

Morphism add(const Morphism& f, const Morphism& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) throw AlgebraError("compose-mismatch", "sum of maps with different signatures");
    auto n = std::make_shared<SumNode>();
    n->dom = f.dom();
    n->cod = f.cod();
    n->f = f;
    n->g = g;
    return Morphism(n);
}

std::optional<Mismatch> map_equal(const Morphism& f, const Morphism& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) {
        Mismatch m;
        m.lhs = Cyc((long long)volume(f.cod()));
        m.rhs = Cyc((long long)volume(g.cod()));
        return m;
    }
    Index n = volume(f.dom());
    for (Index j = 0; j < n; ++j) {
        SVec a = f.column(j), b = g.column(j);
        size_t p = 0, q = 0;
        while (p < a.size() || q < b.size()) {
            if (q == b.size() || (p < a.size() && a[p].i < b[q].i))
                return Mismatch{unflatten(a[p].i, f.cod()), unflatten(j, f.dom()), a[p].c, Cyc()};
            if (p == a.size() || b[q].i < a[p].i)
                return Mismatch{unflatten(b[q].i, f.cod()), unflatten(j, f.dom()), Cyc(), b[q].c};
            if (!(a[p].c == b[q].c)) return Mismatch{unflatten(a[p].i, f.cod()), unflatten(j, f.dom()), a[p].c, b[q].c};
            ++p;
            ++q;
        }
    }
    return std::nullopt;
}

}  // namespace bhl

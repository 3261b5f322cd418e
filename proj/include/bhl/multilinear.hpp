#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bhl/scalars.hpp"

namespace bhl {

using Dims = std::vector<int>;
using Index = std::uint64_t;

Index volume(const Dims& d);
Dims concat(const Dims& a, const Dims& b);
std::vector<int> unflatten(Index i, const Dims& d);
Index flatten(const std::vector<int>& idx, const Dims& d);
std::string dims_str(const Dims& d);
std::string multi_index_str(Index i, const Dims& d);

struct Term {
    Index i;
    Cyc c;
    friend bool operator==(const Term& a, const Term& b) { return a.i == b.i && a.c == b.c; }
};
// sparse coordinate vector, sorted by index, no zero entries
using SVec = std::vector<Term>;

void canonicalize(SVec& v);
SVec basis_vec(Index i);
SVec scale(const SVec& v, const Cyc& c);
SVec add(const SVec& a, const SVec& b);

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(size_t off, const std::string& msg)
        : std::runtime_error("parse error at byte " + std::to_string(off) + ": " + msg), offset(off) {}
};

struct Mismatch {
    std::vector<int> cod_index, dom_index;
    Cyc lhs, rhs;
    std::string str() const;
};

class LinMap {
public:
    LinMap() = default;
    LinMap(Dims dom, Dims cod);
    LinMap(Dims dom, Dims cod, std::vector<Cyc> entries);

    static LinMap identity(const Dims& d);
    static LinMap zero(const Dims& dom, const Dims& cod) { return LinMap(dom, cod); }

    const Dims& dom() const { return dom_; }
    const Dims& cod() const { return cod_; }
    Index dom_size() const { return volume(dom_); }
    Index cod_size() const { return volume(cod_); }

    const Cyc& at(Index c, Index d) const { return e_[c * dom_size() + d]; }
    Cyc& at(Index c, Index d) { return e_[c * dom_size() + d]; }
    const std::vector<Cyc>& entries() const { return e_; }

    std::vector<Cyc> apply(const std::vector<Cyc>& v) const;
    SVec column(Index d) const;
    LinMap transpose() const;
    int conductor() const;

    std::string serialize() const;
    // parses the text form; offset is added to byte positions in diagnostics
    static LinMap parse(std::string_view text, size_t offset = 0, size_t* consumed = nullptr);

private:
    Dims dom_, cod_;
    std::vector<Cyc> e_;
};

LinMap compose(const LinMap& g, const LinMap& f);
LinMap tensor_product(const LinMap& f, const LinMap& g);
LinMap vec_swap(int dimX, int dimY);
LinMap ev_map(int dim);    // P* (x) P -> I
LinMap coev_map(int dim);  // I -> P (x) P*
std::optional<Mismatch> map_equal(const LinMap& f, const LinMap& g);
// inverse of a square map; throws when singular
LinMap invert(const LinMap& f);

// A linear map that is evaluated column by column on demand.  Structure maps,
// diagrams and braidings are all Morphisms; LinMap is the dense value form.
class Morphism {
public:
    struct Node {
        Dims dom, cod;
        virtual ~Node() = default;
        virtual SVec column(Index j) const = 0;
        virtual SVec apply(const SVec& v) const;
    };

    Morphism() = default;
    explicit Morphism(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    Morphism(const LinMap& m);

    static Morphism identity(const Dims& d);
    static Morphism from_columns(Dims dom, Dims cod, std::vector<SVec> cols);
    static Morphism lazy(Dims dom, Dims cod, std::function<SVec(Index)> col);
    // X (x) Y -> Y (x) X for factor groups X, Y
    static Morphism swap(const Dims& X, const Dims& Y);
    // same flat space, different factorization
    static Morphism reshape(const Dims& from, const Dims& to);
    // a vector viewed as a map I -> cod
    static Morphism element(const Dims& cod, SVec v);
    static Morphism scalar_multiple(const Morphism& f, const Cyc& c);

    bool valid() const { return (bool)n_; }
    const Dims& dom() const { return n_->dom; }
    const Dims& cod() const { return n_->cod; }
    SVec column(Index j) const { return n_->column(j); }
    SVec apply(const SVec& v) const { return n_->apply(v); }
    LinMap dense() const;
    // column results memoized (thread-safe)
    Morphism cached() const;

    // this applied to the wires [pos, pos + dom.size()) of the factor list `wires`
    Morphism at(const Dims& wires, size_t pos) const;

private:
    std::shared_ptr<const Node> n_;
};

Morphism compose(const Morphism& g, const Morphism& f);
Morphism compose_all(const std::vector<Morphism>& fs);  // fs[0] applied first
Morphism tensor_product(const Morphism& f, const Morphism& g);
Morphism add(const Morphism& f, const Morphism& g);
std::optional<Mismatch> map_equal(const Morphism& f, const Morphism& g);

}  // namespace bhl

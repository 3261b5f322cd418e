#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace bhl {

struct AlgebraError : std::runtime_error {
    std::string code;
    AlgebraError(std::string c, const std::string& what)
        : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

// Exact rational. Values that fit in 64-bit numerator/denominator stay inline,
// everything else lives in an mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : n_(n) {}
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    int sign() const;
    mpq_class to_mpq() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    friend bool operator==(const Rational& a, const Rational& b);

    // "num/den"
    std::string str() const;
    static Rational parse(std::string_view s);

private:
    long long n_ = 0;
    long long d_ = 1;
    std::unique_ptr<mpq_class> big_;

    void assign(__int128 n, __int128 d);
    void assign(mpq_class q);
};

// Data for Q(zeta_N): the cyclotomic polynomial and the reduction of every
// power zeta^k, 0 <= k < N, onto the basis 1, zeta, ..., zeta^(phi-1).
struct CycField {
    int N = 1;
    int phi = 1;
    std::vector<Rational> poly;                    // monic, low degree first
    std::vector<std::vector<Rational>> pow;        // pow[k] has length phi
};

const CycField& cyc_field(int N);
inline const CycField* rational_field() {
    static const CycField* F = &cyc_field(1);
    return F;
}
std::vector<Rational> cyclotomic_polynomial(int N);

class Cyc {
public:
    using Coeffs = boost::container::small_vector<Rational, 2>;

    Cyc() : F_(rational_field()), c_(1) {}
    Cyc(long long n) : F_(rational_field()), c_{Rational(n)} {}
    Cyc(const Rational& r) : F_(rational_field()), c_{r} {}
    Cyc(long long n, long long d) : F_(rational_field()), c_{Rational(n, d)} {}

    // canonical reduction of sum raw[k] zeta_N^k
    static Cyc normalize(int N, const std::vector<Rational>& raw);
    static Cyc root(int N, long long k);
    static Cyc from_coeffs(int N, Coeffs c);

    int conductor() const { return F_->N; }
    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    // the same value written in Q(zeta_L), N | L
    Cyc embed(int L) const;

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }
    Cyc operator-() const;
    Cyc& operator+=(const Cyc& b);
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }
    Cyc inv() const;
    Cyc pow(long long e) const;
    friend bool operator==(const Cyc& a, const Cyc& b);

    // coefficient text "n/d,n/d,..." in Q(zeta_L)
    std::string str(int L) const;
    std::string pretty() const;
    static Cyc parse(int N, std::string_view s);

private:
    const CycField* F_;
    Coeffs c_;
};

enum class CycOp { Add, Mul, Neg, Inv };
Cyc cyc_arith(CycOp op, const Cyc& a, const Cyc* b = nullptr);

int lcm_int(int a, int b);

}  // namespace bhl

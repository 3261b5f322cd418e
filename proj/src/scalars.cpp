#include "bhl/scalars.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bhl {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 x) {
    return x >= (i128)INT64_MIN + 1 && x <= (i128)INT64_MAX;
}

mpz_class to_mpz(i128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(x + 1)) + 1 : (unsigned __int128)x;
    mpz_class hi((unsigned long)(u >> 64));
    mpz_class lo((unsigned long)(u & 0xFFFFFFFFFFFFFFFFull));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw AlgebraError("division-by-zero", "rational with zero denominator");
    assign((i128)n, (i128)d);
}

Rational::Rational(const mpq_class& q) { assign(q); }

void Rational::assign(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (fits64(n) && fits64(d)) {
        n_ = (long long)n;
        d_ = (long long)d;
        big_.reset();
    } else {
        mpq_class q(to_mpz(n), to_mpz(d));
        big_ = std::make_unique<mpq_class>(std::move(q));
        n_ = 0;
        d_ = 1;
    }
}

void Rational::assign(mpq_class q) {
    q.canonicalize();
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != LONG_MIN) {
        n_ = num.get_si();
        d_ = den.get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
        n_ = 0;
        d_ = 1;
    }
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class((long)n_), mpz_class((long)d_));
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    Rational r;
    if (!a.big_ && !b.big_) {
        if (a.d_ == b.d_) {
            r.assign((i128)a.n_ + b.n_, (i128)a.d_);
        } else {
            r.assign((i128)a.n_ * b.d_ + (i128)b.n_ * a.d_, (i128)a.d_ * b.d_);
        }
    } else {
        r.assign(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) r.assign(mpq_class(-*big_));
    else r.assign(-(i128)n_, (i128)d_);
    return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    Rational r;
    if (!a.big_ && !b.big_) r.assign((i128)a.n_ * b.n_, (i128)a.d_ * b.d_);
    else r.assign(mpq_class(a.to_mpq() * b.to_mpq()));
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw AlgebraError("division-by-zero", "rational division by zero");
    Rational r;
    if (!a.big_ && !b.big_) r.assign((i128)a.n_ * b.d_, (i128)a.d_ * b.n_);
    else r.assign(mpq_class(a.to_mpq() / b.to_mpq()));
    return r;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never fits inline
}

std::string Rational::str() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    std::string num(s.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
    mpz_class n, d;
    if (num.empty() || n.set_str(num, 10) != 0 || den.empty() || d.set_str(den, 10) != 0)
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    if (d == 0) throw AlgebraError("division-by-zero", "rational with zero denominator");
    return Rational(mpq_class(n, d));
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// quotient of a by b; a is replaced by the remainder
Poly divmod(Poly& a, const Poly& b) {
    trim(a);
    Poly q;
    int da = (int)a.size() - 1, db = (int)b.size() - 1;
    if (da < db) return q;
    q.assign(da - db + 1, Rational());
    for (int k = da; k >= db; --k) {
        if (a[k].is_zero()) continue;
        Rational f = a[k] / b[db];
        int shift = k - db;
        q[shift] = f;
        for (int i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    }
    trim(a);
    trim(q);
    return q;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::mutex field_mutex;
std::map<int, std::unique_ptr<CycField>> fields;
std::map<int, Poly> cyclo_cache;

Poly cyclotomic_locked(int N) {
    auto it = cyclo_cache.find(N);
    if (it != cyclo_cache.end()) return it->second;
    Poly p(N + 1);
    p[0] = Rational(-1);
    p[N] = Rational(1);
    for (int d = 1; d < N; ++d) {
        if (N % d) continue;
        Poly q = divmod(p, cyclotomic_locked(d));
        p = q;
    }
    cyclo_cache[N] = p;
    return p;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int N) {
    if (N <= 0) throw AlgebraError("invalid-conductor", "conductor must be positive, got " + std::to_string(N));
    std::lock_guard<std::mutex> lock(field_mutex);
    return cyclotomic_locked(N);
}

const CycField& cyc_field(int N) {
    if (N <= 0) throw AlgebraError("invalid-conductor", "conductor must be positive, got " + std::to_string(N));
    std::lock_guard<std::mutex> lock(field_mutex);
    auto it = fields.find(N);
    if (it != fields.end()) return *it->second;
    auto F = std::make_unique<CycField>();
    F->N = N;
    F->poly = cyclotomic_locked(N);
    F->phi = (int)F->poly.size() - 1;
    F->pow.resize(N);
    Poly cur(F->phi);
    cur[0] = Rational(1);
    for (int k = 0; k < N; ++k) {
        F->pow[k] = cur;
        // multiply by x, then use x^phi = -(poly[0] + ... + poly[phi-1] x^(phi-1))
        Poly next(F->phi);
        Rational top = cur[F->phi - 1];
        for (int i = F->phi - 1; i > 0; --i) next[i] = cur[i - 1];
        if (!top.is_zero())
            for (int i = 0; i < F->phi; ++i) next[i] -= top * F->poly[i];
        cur = next;
    }
    const CycField& ref = *F;
    fields[N] = std::move(F);
    return ref;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

Cyc Cyc::from_coeffs(int N, Coeffs c) {
    Cyc r;
    r.F_ = &cyc_field(N);
    if ((int)c.size() != r.F_->phi) throw std::invalid_argument("coefficient count does not match the conductor");
    r.c_ = std::move(c);
    return r;
}

Cyc Cyc::normalize(int N, const std::vector<Rational>& raw) {
    const CycField& F = cyc_field(N);
    Cyc r;
    r.F_ = &F;
    r.c_.assign(F.phi, Rational());
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw[k].is_zero()) continue;
        const auto& p = F.pow[k % N];
        for (int i = 0; i < F.phi; ++i)
            if (!p[i].is_zero()) r.c_[i] += raw[k] * p[i];
    }
    return r;
}

Cyc Cyc::root(int N, long long k) {
    const CycField& F = cyc_field(N);
    long long e = ((k % N) + N) % N;
    Cyc r;
    r.F_ = &F;
    r.c_.assign(F.pow[e].begin(), F.pow[e].end());
    return r;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyc::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Cyc Cyc::embed(int L) const {
    int N = F_->N;
    if (L == N) return *this;
    if (L % N) throw AlgebraError("conductor-mismatch", "cannot embed Q(zeta_" + std::to_string(N) + ") into Q(zeta_" + std::to_string(L) + ")");
    const CycField& G = cyc_field(L);
    Cyc r;
    r.F_ = &G;
    r.c_.assign(G.phi, Rational());
    int step = L / N;
    for (int i = 0; i < F_->phi; ++i) {
        if (c_[i].is_zero()) continue;
        const auto& p = G.pow[(i * step) % L];
        for (int j = 0; j < G.phi; ++j)
            if (!p[j].is_zero()) r.c_[j] += c_[i] * p[j];
    }
    return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc r = a;
    r += b;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& b) {
    if (b.F_ == F_) {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!b.c_[i].is_zero()) c_[i] += b.c_[i];
        return *this;
    }
    if (b.is_zero()) return *this;
    int L = std::lcm(F_->N, b.F_->N);
    Cyc x = embed(L);
    Cyc y = b.embed(L);
    x += y;
    return *this = std::move(x);
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.F_ != b.F_) {
        if (a.F_->N == 1 && a.c_[0].is_one()) return b;
        if (b.F_->N == 1 && b.c_[0].is_one()) return a;
        if (a.F_->N == 1) {
            Cyc r = b;
            for (auto& x : r.c_) x *= a.c_[0];
            return r;
        }
        if (b.F_->N == 1) {
            Cyc r = a;
            for (auto& x : r.c_) x *= b.c_[0];
            return r;
        }
        int L = std::lcm(a.F_->N, b.F_->N);
        return a.embed(L) * b.embed(L);
    }
    const CycField& F = *a.F_;
    Cyc r;
    r.F_ = &F;
    if (F.phi == 1) {
        r.c_[0] = a.c_[0] * b.c_[0];
        return r;
    }
    r.c_.assign(F.phi, Rational());
    for (int i = 0; i < F.phi; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < F.phi; ++j) {
            if (b.c_[j].is_zero()) continue;
            Rational t = a.c_[i] * b.c_[j];
            int k = i + j;
            if (k < F.phi) {
                r.c_[k] += t;
            } else {
                const auto& p = F.pow[k % F.N];
                for (int l = 0; l < F.phi; ++l)
                    if (!p[l].is_zero()) r.c_[l] += t * p[l];
            }
        }
    }
    return r;
}

Cyc Cyc::inv() const {
    if (is_zero()) throw AlgebraError("division-by-zero", "inverse of zero");
    const CycField& F = *F_;
    // extended Euclid: find s with s*a = g (mod Phi), g a nonzero constant
    Poly r0 = F.poly, r1(c_.begin(), c_.end());
    trim(r1);
    Poly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        Poly rem = r0;
        Poly q = divmod(rem, r1);
        Poly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational g = r1.at(0);
    std::vector<Rational> raw(s1.begin(), s1.end());
    for (auto& x : raw) x = x / g;
    return normalize(F.N, raw);
}

Cyc Cyc::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Cyc result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.F_ == b.F_) {
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    int L = std::lcm(a.F_->N, b.F_->N);
    return a.embed(L) == b.embed(L);
}

std::string Cyc::str(int L) const {
    Cyc e = embed(L);
    std::string s;
    for (size_t i = 0; i < e.c_.size(); ++i) {
        if (i) s += ',';
        s += e.c_[i].str();
    }
    return s;
}

std::string Cyc::pretty() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (any) os << " + ";
        any = true;
        os << c_[i].str();
        if (i == 1) os << "*z" << F_->N;
        else if (i > 1) os << "*z" << F_->N << "^" << i;
    }
    if (!any) os << "0";
    return os.str();
}

Cyc Cyc::parse(int N, std::string_view s) {
    const CycField& F = cyc_field(N);
    Coeffs c;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string_view tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        c.push_back(Rational::parse(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if ((int)c.size() != F.phi)
        throw std::invalid_argument("expected " + std::to_string(F.phi) + " coefficients, got " + std::to_string(c.size()));
    return from_coeffs(N, std::move(c));
}

Cyc cyc_arith(CycOp op, const Cyc& a, const Cyc* b) {
    switch (op) {
        case CycOp::Neg: return -a;
        case CycOp::Inv: return a.inv();
        case CycOp::Add:
        case CycOp::Mul:
            if (!b) throw std::invalid_argument("binary operation needs two operands");
            return op == CycOp::Add ? a + *b : a * *b;
    }
    return a;
}

}  // namespace bhl

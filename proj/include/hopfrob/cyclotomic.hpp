#pragma once

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hopfrob/error.hpp"
#include "hopfrob/rational.hpp"

namespace hopfrob {

// Integer polynomial, coefficients low to high, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

namespace detail {

inline void zpoly_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact long division of integer polynomials; the divisor must be monic
// and divide exactly (guaranteed for the cyclotomic recursion).
inline ZPoly zpoly_div_exact(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        size_t shift = num.size() - den.size();
        mpz_class c = num.back(); // den is monic
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        zpoly_trim(num);
    }
    if (!num.empty()) throw InternalInconsistency("cyclotomic division left a remainder");
    return q;
}

} // namespace detail

// n-th cyclotomic polynomial, by the recursive quotient
// Phi_n(t) = (t^n - 1) / prod_{d | n, d < n} Phi_d(t).
inline const ZPoly& cyclotomic_poly(unsigned n) {
    if (n == 0) throw Error("cyclotomic order must be positive");
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // compute with the cache lock held; recursion depth is the divisor chain
    std::vector<unsigned> pending{n};
    while (!pending.empty()) {
        unsigned m = pending.back();
        if (cache.count(m)) { pending.pop_back(); continue; }
        bool ready = true;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) { pending.push_back(d); ready = false; }
        if (!ready) continue;
        pending.pop_back();
        if (m == 1) {
            cache[1] = ZPoly{mpz_class(-1), mpz_class(1)}; // t - 1
            continue;
        }
        ZPoly num(m + 1, mpz_class(0)); // t^m - 1
        num[0] = -1;
        num[m] = 1;
        ZPoly q = std::move(num);
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) q = detail::zpoly_div_exact(std::move(q), cache[d]);
        cache[m] = std::move(q);
    }
    return cache[n];
}

inline unsigned cyclotomic_degree(unsigned n) {
    return static_cast<unsigned>(cyclotomic_poly(n).size()) - 1;
}

// An exact scalar: element of Q(zeta_n) in the power basis of
// Q[t]/Phi_n(t). Order 1 is plain Q. Values of order 1 embed into any
// Q(zeta_n); two distinct orders > 1 never mix.
class Scalar {
public:
    Scalar() : order_(1), c_{Rational(0)} {}
    Scalar(long n) : order_(1), c_{Rational(n)} {}
    Scalar(long n, long d) : order_(1), c_{Rational(n, d)} {}
    Scalar(const Rational& r) : order_(1), c_{r} {}

    static Scalar zero(unsigned order = 1) {
        return Scalar(order, std::vector<Rational>(cyclotomic_degree(order), Rational(0)));
    }
    static Scalar one(unsigned order = 1) {
        auto s = zero(order);
        s.c_[0] = Rational(1);
        return s;
    }

    // The class of t in Q[t]/Phi_n: a primitive n-th root of unity.
    static Scalar zeta(unsigned order) {
        unsigned deg = cyclotomic_degree(order);
        std::vector<Rational> c(deg, Rational(0));
        if (deg == 1) {
            // t reduces to -Phi[0]: 1 for n = 1, -1 for n = 2
            const ZPoly& phi = cyclotomic_poly(order);
            c[0] = Rational(mpq_class(-phi[0]));
        } else {
            c[1] = Rational(1);
        }
        return Scalar(order, std::move(c));
    }

    static Scalar from_coeffs(unsigned order, std::vector<Rational> c) {
        if (c.size() != cyclotomic_degree(order))
            throw FieldMismatch("coefficient vector length does not match phi(n)");
        return Scalar(order, std::move(c));
    }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    // Constant term; only meaningful when is_rational().
    const Rational& rat() const { return c_[0]; }

    Scalar operator-() const {
        Scalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) {
            unsigned n = a.order_ > 1 ? a.order_ : b.order_;
            if (a.order_ > 1 && b.order_ > 1 && a.order_ != b.order_)
                throw FieldMismatch(mix_msg(a.order_, b.order_));
            return zero(n);
        }
        auto [x, y] = align(a, b);
        std::vector<Rational> prod(2 * x.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) {
                if (y.c_[j].is_zero()) continue;
                prod[i + j] += x.c_[i] * y.c_[j];
            }
        }
        return Scalar(x.order_, reduce(x.order_, std::move(prod)));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        auto [x, y] = align(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Multiplicative inverse via the extended Euclidean algorithm
    // against Phi_n (Phi_n is irreducible over Q, so any nonzero
    // element is a unit).
    Scalar inverse() const {
        if (is_zero()) throw ZeroDivision();
        if (order_ == 1) return Scalar(c_[0].inverse());
        using QP = std::vector<Rational>;
        const ZPoly& phiz = cyclotomic_poly(order_);
        QP r0(phiz.size());
        for (size_t i = 0; i < phiz.size(); ++i) r0[i] = Rational(mpq_class(phiz[i]));
        QP r1 = c_;
        qtrim(r1);
        QP s0{Rational(0)}, s1{Rational(1)}; // Bezout coefficients for *this
        while (true) {
            qtrim(r1);
            if (r1.empty()) throw InternalInconsistency("gcd with Phi_n fell to zero");
            if (r1.size() == 1) break;
            auto [q, rem] = qdivmod(r0, r1);
            QP s2 = qsub(s0, qmul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        Rational g = r1[0]; // nonzero constant
        QP inv = s1;
        for (auto& x : inv) x /= g;
        return Scalar(order_, reduce(order_, std::move(inv)));
    }

    Scalar pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        Scalar acc = one(order_), base = *this;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    // Canonical text: rationals as "p/q"; cyclotomic elements as a
    // polynomial in z with coefficients in power-basis order.
    std::string str() const {
        if (order_ == 1) return c_[0].str();
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            Rational coef = c_[i];
            bool neg = coef.sgn() < 0;
            if (out.empty()) {
                if (neg) { out += "-"; coef = -coef; }
            } else {
                out += neg ? " - " : " + ";
                if (neg) coef = -coef;
            }
            std::string mag = coef.str();
            if (i == 0) {
                out += mag;
            } else {
                if (mag != "1") { out += mag; out += "*"; }
                out += "z";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

    // Parses the textual scalar syntax: a sum of terms
    //   [+|-] [rational] [*] [z [^ power]]
    // interpreted modulo Phi_n for the declared order.
    static Scalar parse(const std::string& text, unsigned order) {
        size_t pos = 0;
        auto skip = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
        auto parse_uint = [&]() -> unsigned long {
            size_t start = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            if (pos == start) throw ParseError("expected digits in scalar '" + text + "'");
            return std::stoul(text.substr(start, pos - start));
        };
        Scalar total = zero(order);
        skip();
        if (pos == text.size()) throw ParseError("empty scalar literal");
        bool first = true;
        while (pos < text.size()) {
            skip();
            int sign = 1;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-' in scalar '" + text + "'");
            }
            first = false;
            // optional rational coefficient
            Rational coef(1);
            bool saw_coef = false;
            if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
                unsigned long num = parse_uint();
                unsigned long den = 1;
                skip();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    skip();
                    den = parse_uint();
                    if (den == 0) throw ZeroDivision();
                }
                coef = Rational((long)num, (long)den);
                saw_coef = true;
                skip();
                if (pos < text.size() && text[pos] == '*') { ++pos; skip(); }
            }
            // optional power of z
            Scalar term = Scalar(coef);
            bool saw_z = false;
            if (pos < text.size() && text[pos] == 'z') {
                if (order == 1)
                    throw FieldMismatch("'z' is not a rational scalar");
                ++pos;
                unsigned long e = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    e = parse_uint();
                }
                term = term * zeta(order).pow((long)e);
                saw_z = true;
            }
            if (!saw_coef && !saw_z)
                throw ParseError("malformed term in scalar '" + text + "'");
            if (sign < 0) term = -term;
            total += term;
            skip();
        }
        if (order > 1 && total.order_ == 1) total = promote(total, order);
        return total;
    }

private:
    Scalar(unsigned order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}

    static std::string mix_msg(unsigned a, unsigned b) {
        return "cannot mix cyclotomic orders " + std::to_string(a) + " and " + std::to_string(b);
    }

    static Scalar promote(const Scalar& a, unsigned order) {
        auto s = zero(order);
        s.c_[0] = a.c_[0];
        return s;
    }

    static std::pair<Scalar, Scalar> align(const Scalar& a, const Scalar& b) {
        if (a.order_ == b.order_) return {a, b};
        if (a.order_ == 1) return {promote(a, b.order_), b};
        if (b.order_ == 1) return {a, promote(b, a.order_)};
        throw FieldMismatch(mix_msg(a.order_, b.order_));
    }

    using QP = std::vector<Rational>;

    static void qtrim(QP& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    }
    static QP qmul(const QP& a, const QP& b) {
        if (a.empty() || b.empty()) return {};
        QP r(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        qtrim(r);
        return r;
    }
    static QP qsub(const QP& a, const QP& b) {
        QP r = a;
        if (r.size() < b.size()) r.resize(b.size(), Rational(0));
        for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        qtrim(r);
        return r;
    }
    static std::pair<QP, QP> qdivmod(QP num, const QP& den) {
        qtrim(num);
        QP q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
        Rational lead = den.back();
        while (num.size() >= den.size() && !num.empty()) {
            size_t shift = num.size() - den.size();
            Rational c = num.back() / lead;
            q[shift] += c;
            for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
            qtrim(num);
        }
        return {q, num};
    }

    // Reduce a raw coefficient vector modulo Phi_n to length phi(n).
    static std::vector<Rational> reduce(unsigned order, std::vector<Rational> raw) {
        unsigned deg = cyclotomic_degree(order);
        const ZPoly& phiz = cyclotomic_poly(order);
        QP phi(phiz.size());
        for (size_t i = 0; i < phiz.size(); ++i) phi[i] = Rational(mpq_class(phiz[i]));
        qtrim(raw);
        if (raw.size() > deg) raw = qdivmod(std::move(raw), phi).second;
        raw.resize(deg, Rational(0));
        return raw;
    }

    unsigned order_;
    std::vector<Rational> c_;
};

// a * invert(a) = 1 exactly.
inline Scalar invert(const Scalar& a) { return a.inverse(); }

// Primitive n-th root of unity; satisfies zeta^n = 1 and zeta^m != 1
// for 0 < m < n.
inline Scalar primitive_root(unsigned n) { return Scalar::zeta(n); }

} // namespace hopfrob

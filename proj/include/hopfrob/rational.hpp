#pragma once

#include <gmpxx.h>

#include <string>

#include "hopfrob/error.hpp"

namespace hopfrob {

// Exact rational number backed by GMP. Always stored canonically:
// denominator > 0 and gcd(num, den) = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw ZeroDivision();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
        if (v.get_den() == 0) throw ZeroDivision();
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_one() const { return v_ == 1; }
    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivision();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDivision();
        return Rational(mpq_class(1) / v_);
    }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    // Canonical form "p/q", or just "p" when q = 1.
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

} // namespace hopfrob

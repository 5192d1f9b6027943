#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfrob/cyclotomic.hpp"

using namespace hopfrob;

namespace {

// Test-side polynomial multiplication over Z, independent of the
// library's division-based route.
ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Scalar random_scalar(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    unsigned deg = cyclotomic_degree(order);
    std::vector<Rational> c;
    for (unsigned i = 0; i < deg; ++i) c.emplace_back(num(rng), den(rng));
    return Scalar::from_coeffs(order, std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomials match the defining product identity") {
    // prod_{d | n} Phi_d(t) = t^n - 1 pins every Phi_n exactly.
    for (unsigned n = 1; n <= 30; ++n) {
        ZPoly prod{mpz_class(1)};
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = zmul(prod, cyclotomic_poly(d));
        ZPoly expect(n + 1, mpz_class(0));
        expect[0] = -1;
        expect[n] = 1;
        REQUIRE(prod == expect);
    }
}

TEST_CASE("cyclotomic polynomial fixtures") {
    REQUIRE(cyclotomic_poly(1) == ZPoly{mpz_class(-1), mpz_class(1)});
    REQUIRE(cyclotomic_poly(2) == ZPoly{mpz_class(1), mpz_class(1)});
    REQUIRE(cyclotomic_poly(4) == ZPoly{mpz_class(1), mpz_class(0), mpz_class(1)});
    REQUIRE(cyclotomic_poly(6) == ZPoly{mpz_class(1), mpz_class(-1), mpz_class(1)});
}

TEST_CASE("primitive roots") {
    REQUIRE(primitive_root(1) == Scalar(1));
    REQUIRE(primitive_root(2) == Scalar(-1));

    Scalar z3 = primitive_root(3);
    REQUIRE(z3 * z3 + z3 + Scalar(1) == Scalar::zero(3));
    REQUIRE(z3 * z3 * z3 == Scalar(1));

    for (unsigned n = 1; n <= 12; ++n) {
        Scalar z = primitive_root(n);
        Scalar p = Scalar::one(n);
        for (unsigned m = 1; m < n; ++m) {
            p *= z;
            REQUIRE(p != Scalar(1));
        }
        REQUIRE(p * z == Scalar(1));
    }
}

TEST_CASE("invert") {
    REQUIRE(invert(Scalar(2, 3)) == Scalar(3, 2));
    REQUIRE(invert(Scalar(1)) == Scalar(1));
    Scalar z = primitive_root(4);
    REQUIRE(invert(z) == -z);
    REQUIRE(z * invert(z) == Scalar(1));
    REQUIRE_THROWS_AS(invert(Scalar(0)), ZeroDivision);
    REQUIRE_THROWS_AS(Scalar(1) / Scalar::zero(3), ZeroDivision);
}

TEST_CASE("orders never mix silently") {
    REQUIRE_THROWS_AS(primitive_root(3) + primitive_root(4), FieldMismatch);
    // Q embeds in every Q(zeta_n)
    REQUIRE(Scalar(2) * primitive_root(3) == primitive_root(3) + primitive_root(3));
}

TEST_CASE("field axioms hold exactly for random scalars") {
    std::mt19937 rng(20240811);
    const unsigned orders[] = {1, 3, 4, 5, 6, 12};
    for (int iter = 0; iter < 200; ++iter) {
        unsigned order = orders[iter % 6];
        Scalar a = random_scalar(rng, order);
        Scalar b = random_scalar(rng, order);
        Scalar c = random_scalar(rng, order);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            REQUIRE(a * invert(a) == Scalar(1));
            REQUIRE(invert(a) * a == Scalar::one(order));
        }
    }
}

TEST_CASE("scalar text round trip") {
    Scalar z = primitive_root(6);
    Scalar v = Scalar(1, 2) - Scalar(3) * z;
    REQUIRE(Scalar::parse(v.str(), 6) == v);
    REQUIRE(Scalar::parse("1 - z^2", 5) == Scalar::one(5) - primitive_root(5).pow(2));
    REQUIRE(Scalar::parse("-7/3", 1) == Scalar(-7, 3));
    REQUIRE(Scalar::parse("2*z", 3) == Scalar(2) * primitive_root(3));
    REQUIRE(Scalar::parse("0", 4).is_zero());
    REQUIRE_THROWS_AS(Scalar::parse("z", 1), FieldMismatch);
    REQUIRE_THROWS_AS(Scalar::parse("", 1), ParseError);
    REQUIRE_THROWS_AS(Scalar::parse("1 + + 2", 1), ParseError);
}

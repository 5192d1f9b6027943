#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfrob/builders.hpp"
#include "hopfrob/integrals.hpp"

using namespace hopfrob;

namespace {

std::vector<HopfData> example_algebras() {
    std::vector<HopfData> v;
    v.push_back(trivial_hopf());
    for (int n = 2; n <= 5; ++n) v.push_back(group_algebra(cyclic_table(n)));
    v.push_back(group_algebra(symmetric3_table()));
    v.push_back(group_algebra(dihedral_table(4)));
    v.push_back(function_algebra(symmetric3_table()));
    v.push_back(taft(2));
    v.push_back(taft(3));
    return v;
}

} // namespace

TEST_CASE("taft n=2 integral fixtures") {
    HopfData t = taft(2);

    auto cs = cointegral_space(t);
    REQUIRE(cs.size() == 1);
    REQUIRE(cs[0] == LinMap::col_vector({Scalar(0), Scalar(1), Scalar(0), Scalar(-1)}));

    auto is = integral_space(t);
    REQUIRE(is.size() == 1);
    REQUIRE(is[0] == LinMap::row_vector({Scalar(0), Scalar(1), Scalar(0), Scalar(0)}));

    auto pair = frobenius_condition(t);
    REQUIRE(pair.cointegral == cs[0]);
    REQUIRE(pair.integral == is[0]);
    REQUIRE(compose(pair.integral, pair.cointegral).at(0, 0) == Scalar(1));

    // I = Lambda . lambda exactly
    REQUIRE(integral_morphism(t) == compose(pair.cointegral, pair.integral));
}

TEST_CASE("taft general n cointegral formula") {
    // sum_{i=1..n} z^{-i} g^i x^{n-1}, already in leading-1 normalization
    for (int n = 2; n <= 4; ++n) {
        HopfData t = taft(n);
        Scalar z = Scalar::zeta(unsigned(n));
        std::vector<Scalar> expect(n * n, Scalar::zero(unsigned(n)));
        for (int i = 1; i <= n; ++i) expect[(i % n) * n + (n - 1)] = z.pow(-i);
        auto cs = cointegral_space(t);
        REQUIRE(cs.size() == 1);
        REQUIRE(cs[0] == LinMap::col_vector(expect));

        // the right integral is the delta functional on x^{n-1}
        auto is = integral_space(t);
        REQUIRE(is.size() == 1);
        std::vector<Scalar> delta(n * n, Scalar::zero(unsigned(n)));
        delta[n - 1] = Scalar(1);
        REQUIRE(is[0] == LinMap::row_vector(delta));

        auto pair = frobenius_condition(t);
        REQUIRE(compose(pair.integral, pair.cointegral).at(0, 0) == Scalar(1));
    }
}

TEST_CASE("group algebra integrals") {
    HopfData z2 = group_algebra(cyclic_table(2));
    auto is = integral_space(z2);
    REQUIRE(is.size() == 1);
    REQUIRE(is[0] == LinMap::row_vector({Scalar(1), Scalar(0)})); // delta_e
    auto cs = cointegral_space(z2);
    REQUIRE(cs.size() == 1);
    REQUIRE(cs[0] == LinMap::col_vector({Scalar(1), Scalar(1)})); // e + g
    REQUIRE(integral_morphism(z2) == compose(cs[0], is[0]));

    HopfData s3 = group_algebra(symmetric3_table());
    auto pair = frobenius_condition(s3);
    REQUIRE(pair.cointegral == LinMap::col_vector(std::vector<Scalar>(6, Scalar(1))));
    std::vector<Scalar> de(6);
    de[0] = Scalar(1);
    REQUIRE(pair.integral == LinMap::row_vector(de));
}

TEST_CASE("trivial algebra integrals") {
    HopfData h = trivial_hopf();
    REQUIRE(integral_morphism(h) == LinMap::identity(1));
    auto pair = frobenius_condition(h);
    REQUIRE(pair.cointegral == LinMap::scalar(Scalar(1)));
    REQUIRE(pair.integral == LinMap::scalar(Scalar(1)));
}

TEST_CASE("integral morphism is an idempotent projection onto integrals") {
    for (const auto& h : example_algebras()) {
        const int d = h.dim();
        LinMap I = integral_morphism(h);
        REQUIRE(compose(I, I) == I);
        auto pair = frobenius_condition(h);
        // I . p is a left cointegral for every basis point p
        for (int i = 0; i < d; ++i) {
            LinMap p(d, 1);
            p.at(i, 0) = Scalar(1);
            REQUIRE(is_cointegral(h, compose(I, p)));
            LinMap q(1, d);
            q.at(0, i) = Scalar(1);
            REQUIRE(is_integral(h, compose(q, I)));
        }
        // fixed points
        REQUIRE(compose(I, pair.cointegral) == pair.cointegral);
        REQUIRE(compose(pair.integral, I) == pair.integral);
        for (const auto& lam : cointegral_space(h)) REQUIRE(compose(I, lam) == lam);
        for (const auto& lm : integral_space(h)) REQUIRE(compose(lm, I) == lm);
    }
}

TEST_CASE("integral morphism does not depend on the half dual") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> num(-3, 3);
    for (const auto& h : example_algebras()) {
        const int d = h.dim();
        if (d > 9) continue;
        // random invertible A, conjugated duality pair
        LinMap A(d, d);
        while (true) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) A.at(i, j) = Scalar(num(rng));
            try {
                invert_matrix(A);
                break;
            } catch (const Singular&) {}
        }
        LinMap At_inv = invert_matrix(A.transpose());
        LinMap cap = compose(kron(A, At_inv), standard_cap(d));
        LinMap cup = compose(standard_cup(d), kron(A.transpose(), invert_matrix(A)));
        // sanity: the conjugated pair is a genuine duality
        LinMap id = LinMap::identity(d);
        REQUIRE(compose(kron(id, cup), kron(cap, id)) == id);
        REQUIRE(integral_morphism(h, cap, cup) == integral_morphism(h));
    }
}

TEST_CASE("nondegeneracy and the antipode inverse formula") {
    for (const auto& h : example_algebras()) {
        auto pair = frobenius_condition(h);
        REQUIRE(check_nondegenerate(h, pair));
        LinMap si = antipode_inverse_formula(h, pair);
        REQUIRE(si == invert_matrix(h.antipode));
        REQUIRE(compose(si, h.antipode) == LinMap::identity(h.dim()));
        REQUIRE(compose(h.antipode, si) == LinMap::identity(h.dim()));
    }
    // involutive case: s^{-1} = s for the cocommutative group algebra
    HopfData z2 = group_algebra(cyclic_table(2));
    REQUIRE(antipode_inverse_formula(z2, frobenius_condition(z2)) == z2.antipode);
}

TEST_CASE("equaliser dimension check") {
    for (const auto& h : example_algebras()) REQUIRE(equaliser_dimension_check(h));
}

TEST_CASE("alternate bialgebra rule holds on all examples") {
    for (const auto& h : example_algebras()) REQUIRE(alternate_bialgebra_rule_holds(h));
}

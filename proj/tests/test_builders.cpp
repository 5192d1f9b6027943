#include <catch2/catch_amalgamated.hpp>

#include "hopfrob/builders.hpp"
#include "hopfrob/integrals.hpp"

using namespace hopfrob;

namespace {

bool commutative(const HopfData& h) {
    return compose(h.b.mult, swap_map(h.dim(), h.dim())) == h.b.mult;
}
bool cocommutative(const HopfData& h) {
    return compose(swap_map(h.dim(), h.dim()), h.b.comult) == h.b.comult;
}

// Taft n=2 structure constants as stated in the appendix tables, frozen
// by hand on the basis (1, x, g, gx).
HopfData sweedler_fixture() {
    const int d = 4;
    LinMap mult(d, d * d);
    auto set = [&](int i, int j, int k, long c) { mult.at(k, i * d + j) = Scalar(c); };
    // rows of the appendix multiplication table
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1); set(0, 3, 3, 1); // 1 * -
    set(1, 0, 1, 1); set(1, 2, 3, -1);                                  // x * -
    set(2, 0, 2, 1); set(2, 1, 3, 1); set(2, 2, 0, 1); set(2, 3, 1, 1); // g * -
    set(3, 0, 3, 1); set(3, 2, 1, -1);                                  // gx * -
    LinMap unit(d, 1);
    unit.at(0, 0) = Scalar(1);
    LinMap comult(d * d, d);
    comult.at(0 * d + 0, 0) = Scalar(1);                                // 1 -> 1 (x) 1
    comult.at(0 * d + 1, 1) = Scalar(1);                                // x -> 1 (x) x
    comult.at(1 * d + 2, 1) = Scalar(1);                                //    + x (x) g
    comult.at(2 * d + 2, 2) = Scalar(1);                                // g -> g (x) g
    comult.at(2 * d + 3, 3) = Scalar(1);                                // gx -> g (x) gx
    comult.at(3 * d + 0, 3) = Scalar(1);                                //    + gx (x) 1
    LinMap counit(1, d);
    counit.at(0, 0) = Scalar(1);
    counit.at(0, 2) = Scalar(1);
    LinMap antipode(d, d);
    antipode.at(0, 0) = Scalar(1);  // 1 -> 1
    antipode.at(3, 1) = Scalar(1);  // x -> gx
    antipode.at(2, 2) = Scalar(1);  // g -> g
    antipode.at(1, 3) = Scalar(-1); // gx -> -x
    return HopfData::make(
        BialgebraData::make(d, mult, unit, comult, counit, {"1", "x", "g", "gx"}), antipode);
}

} // namespace

TEST_CASE("trivial algebra") {
    HopfData h = trivial_hopf();
    REQUIRE(check_hopf(h).empty());
    REQUIRE(h.dim() == 1);
}

TEST_CASE("group algebras") {
    REQUIRE(group_algebra(cyclic_table(1)).dim() == 1);

    HopfData z2 = group_algebra(cyclic_table(2));
    REQUIRE(check_hopf(z2).empty());
    REQUIRE(z2.antipode == LinMap::identity(2)); // g = g^{-1}

    HopfData s3 = group_algebra(symmetric3_table());
    REQUIRE(s3.dim() == 6);
    REQUIRE(check_hopf(s3).empty());
    REQUIRE(!commutative(s3));
    REQUIRE(cocommutative(s3));

    HopfData d4 = group_algebra(dihedral_table(4));
    REQUIRE(d4.dim() == 8);
    REQUIRE(check_hopf(d4).empty());

    for (int n = 2; n <= 5; ++n) {
        HopfData c = group_algebra(cyclic_table(n));
        REQUIRE(check_hopf(c).empty());
        REQUIRE(commutative(c));
        REQUIRE(cocommutative(c));
    }
}

TEST_CASE("function algebras") {
    HopfData f3 = function_algebra(symmetric3_table());
    REQUIRE(check_hopf(f3).empty());
    REQUIRE(commutative(f3));
    REQUIRE(!cocommutative(f3));

    // k^{Z_2} is isomorphic to k[Z_2] via the character matrix.
    HopfData z2 = group_algebra(cyclic_table(2));
    HopfData f2 = function_algebra(cyclic_table(2));
    LinMap phi(2, 2);
    phi.at(0, 0) = Scalar(1);
    phi.at(1, 0) = Scalar(1);
    phi.at(0, 1) = Scalar(1);
    phi.at(1, 1) = Scalar(-1);
    REQUIRE(compose(phi, z2.b.mult) == compose(f2.b.mult, kron(phi, phi)));
    REQUIRE(compose(phi, z2.b.unit) == f2.b.unit);
    REQUIRE(compose(f2.b.comult, phi) == compose(kron(phi, phi), z2.b.comult));
    REQUIRE(compose(f2.b.counit, phi) == z2.b.counit);
    REQUIRE(compose(phi, z2.antipode) == compose(f2.antipode, phi));
}

TEST_CASE("taft n=2 equals the appendix tables entry for entry") {
    HopfData t = taft(2);
    HopfData fix = sweedler_fixture();
    REQUIRE(t.b.basis_names == std::vector<std::string>{"1", "x", "g", "gx"});
    REQUIRE(t.b.mult == fix.b.mult);
    REQUIRE(t.b.unit == fix.b.unit);
    REQUIRE(t.b.comult == fix.b.comult);
    REQUIRE(t.b.counit == fix.b.counit);
    REQUIRE(t.antipode == fix.antipode);
    REQUIRE(check_hopf(t).empty());
}

TEST_CASE("taft algebras for n up to 4") {
    for (int n = 2; n <= 4; ++n) {
        HopfData t = taft(n);
        REQUIRE(t.dim() == n * n);
        REQUIRE(check_hopf(t).empty());
        REQUIRE(!commutative(t));
        REQUIRE(!cocommutative(t));
        // the antipode is the unique convolution inverse of the identity
        if (n <= 3) {
            HopfData solved = solve_antipode(t.b);
            REQUIRE(solved.antipode == t.antipode);
        }
    }
}

TEST_CASE("antipode orders") {
    REQUIRE(antipode_order(trivial_hopf(), 8) == 1);
    REQUIRE(antipode_order(group_algebra(symmetric3_table()), 8) == 2);
    for (int n = 2; n <= 4; ++n) REQUIRE(antipode_order(taft(n), 4 * n) == 2 * n);
}

TEST_CASE("invalid cayley tables are rejected") {
    REQUIRE_THROWS_AS(CayleyTable::make({{0, 1}, {1, 1}}, {}), NotAGroup);   // no inverse for g1
    REQUIRE_THROWS_AS(CayleyTable::make({{1, 1}, {1, 1}}, {}), NotAGroup);   // no identity
    REQUIRE_THROWS_AS(CayleyTable::make({{0, 1}, {2, 0}}, {}), NotAGroup);   // out of range
}

TEST_CASE("presets") {
    REQUIRE(build_preset("trivial").dim() == 1);
    REQUIRE(build_preset("cyclic:3").dim() == 3);
    REQUIRE(build_preset("sym:3").dim() == 6);
    REQUIRE(build_preset("dihedral:4").dim() == 8);
    REQUIRE(build_preset("taft:2").dim() == 4);
    REQUIRE(build_preset("dual:sym:3").dim() == 6);
    // dual of a group algebra through the standard duality is the
    // function algebra
    REQUIRE(build_preset("dual:sym:3").b.mult == function_algebra(symmetric3_table()).b.mult);
    REQUIRE_THROWS_AS(build_preset("nope"), ParseError);
}

TEST_CASE("mutating one structure constant breaks the laws") {
    HopfData t = taft(2);
    t.b.mult.at(3, 1 * 4 + 2) = Scalar(1); // flip x*g = -gx to +gx
    auto report = check_bialgebra(t.b);
    bool bialg_violated = false;
    for (const auto& v : report) bialg_violated |= v.law == "bialg";
    REQUIRE(bialg_violated);

    HopfData t2 = taft(2);
    t2.antipode = LinMap::identity(4);
    auto r2 = check_hopf(t2);
    REQUIRE(!r2.empty());
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfrob/linmap.hpp"
#include "hopfrob/linsolve.hpp"

using namespace hopfrob;

namespace {

LinMap from_rows(std::vector<std::vector<long>> rows) {
    LinMap m(int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = Scalar(rows[i][j]);
    return m;
}

LinMap random_map(std::mt19937& rng, int dst, int src, unsigned order = 1) {
    std::uniform_int_distribution<int> num(-3, 3);
    LinMap m(dst, src);
    for (int i = 0; i < dst; ++i)
        for (int j = 0; j < src; ++j) {
            if (order == 1) {
                m.at(i, j) = Scalar(num(rng));
            } else {
                std::vector<Rational> c(cyclotomic_degree(order));
                for (auto& x : c) x = Rational(num(rng));
                m.at(i, j) = Scalar::from_coeffs(order, std::move(c));
            }
        }
    return m;
}

// Plain rational Gaussian elimination, used as an independent rank oracle.
int rank_oracle(LinMap w) {
    int r = 0;
    for (int c = 0; c < w.src_dim() && r < w.dst_dim(); ++c) {
        int p = -1;
        for (int i = r; i < w.dst_dim(); ++i)
            if (!w.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < w.src_dim(); ++j) std::swap(w.at(p, j), w.at(r, j));
        for (int i = r + 1; i < w.dst_dim(); ++i) {
            if (w.at(i, c).is_zero()) continue;
            Scalar f = w.at(i, c) / w.at(r, c);
            for (int j = c; j < w.src_dim(); ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("compose fixtures") {
    REQUIRE(compose(LinMap::identity(3), LinMap::identity(3)) == LinMap::identity(3));
    REQUIRE(compose(from_rows({{1, 1}}), from_rows({{1}, {1}})) == from_rows({{2}}));
    REQUIRE(compose(swap_map(2, 2), swap_map(2, 2)) == LinMap::identity(4));
    REQUIRE_THROWS_AS(compose(LinMap::identity(2), LinMap::identity(3)), DimensionMismatch);
}

TEST_CASE("kron fixtures") {
    REQUIRE(kron(LinMap::identity(2), LinMap::identity(3)) == LinMap::identity(6));
    LinMap e0 = LinMap::col_vector({Scalar(1), Scalar(0)});
    LinMap e1 = LinMap::col_vector({Scalar(0), Scalar(1)});
    REQUIRE(kron(e0, e1) == LinMap::col_vector({Scalar(0), Scalar(1), Scalar(0), Scalar(0)}));
    REQUIRE(kron(from_rows({{0, 1}, {1, 0}}), from_rows({{2}})) == from_rows({{0, 2}, {2, 0}}));
}

TEST_CASE("swap fixtures") {
    for (int d = 1; d <= 4; ++d) REQUIRE(swap_map(1, d) == LinMap::identity(d));
    // e_0 (x) e_1 at index 1 goes to e_1 (x) e_0 at index 2
    REQUIRE(swap_map(2, 2).at(2, 1) == Scalar(1));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            REQUIRE(compose(swap_map(b, a), swap_map(a, b)) == LinMap::identity(a * b));
}

TEST_CASE("interchange and swap naturality for random maps") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int iter = 0; iter < 40; ++iter) {
        unsigned order = iter % 3 == 0 ? 3 : 1;
        int a = dim(rng), a2 = dim(rng), a3 = dim(rng);
        int b = dim(rng), b2 = dim(rng), b3 = dim(rng);
        LinMap f1 = random_map(rng, a2, a, order), g1 = random_map(rng, a3, a2, order);
        LinMap f2 = random_map(rng, b2, b, order), g2 = random_map(rng, b3, b2, order);
        REQUIRE(kron(compose(g1, f1), compose(g2, f2)) ==
                compose(kron(g1, g2), kron(f1, f2)));
        REQUIRE(compose(swap_map(a2, b2), kron(f1, f2)) ==
                compose(kron(f2, f1), swap_map(a, b)));
    }
}

TEST_CASE("kernel_basis fixtures") {
    REQUIRE(kernel_basis(LinMap::identity(3)).empty());

    auto k = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(k.size() == 1);
    REQUIRE(k[0] == std::vector<Scalar>{Scalar(1), Scalar(-1)});

    auto k2 = kernel_basis(LinMap(2, 2));
    REQUIRE(k2.size() == 2);
    REQUIRE(k2[0] == std::vector<Scalar>{Scalar(1), Scalar(0)});
    REQUIRE(k2[1] == std::vector<Scalar>{Scalar(0), Scalar(1)});
}

TEST_CASE("kernel vectors are exact and complete") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int iter = 0; iter < 60; ++iter) {
        unsigned order = iter % 4 == 0 ? 4 : 1;
        LinMap m = random_map(rng, dim(rng), dim(rng), order);
        auto basis = kernel_basis(m);
        REQUIRE(int(basis.size()) == m.src_dim() - rank_oracle(m));
        for (const auto& v : basis) {
            auto mv = m.apply(v);
            for (const auto& x : mv) REQUIRE(x.is_zero());
            // leading-one normalization
            for (const auto& x : v) {
                if (x.is_zero()) continue;
                REQUIRE(x == Scalar(1));
                break;
            }
        }
    }
}

TEST_CASE("rank_one_factor") {
    REQUIRE_THROWS_AS(rank_one_factor(LinMap(2, 2)), NotRankOne);
    REQUIRE_THROWS_AS(rank_one_factor(LinMap::identity(2)), NotRankOne);

    auto [u, v] = rank_one_factor(from_rows({{1, 2}, {2, 4}}));
    REQUIRE(u == LinMap::col_vector({Scalar(1), Scalar(2)}));
    REQUIRE(v == LinMap::row_vector({Scalar(1), Scalar(2)}));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int iter = 0; iter < 40; ++iter) {
        LinMap col = random_map(rng, dim(rng), 1);
        LinMap row = random_map(rng, 1, dim(rng));
        LinMap m = compose(col, row);
        if (m.is_zero()) continue;
        auto [uu, vv] = rank_one_factor(m);
        REQUIRE(compose(uu, vv) == m);
    }
}

TEST_CASE("invert_matrix") {
    REQUIRE(invert_matrix(LinMap::identity(4)) == LinMap::identity(4));
    LinMap flip = from_rows({{0, 1}, {1, 0}});
    REQUIRE(invert_matrix(flip) == flip);
    REQUIRE_THROWS_AS(invert_matrix(from_rows({{1, 1}, {1, 1}})), Singular);
    REQUIRE_THROWS_AS(invert_matrix(from_rows({{1, 1}})), DimensionMismatch);

    // Taft n=2 antipode on basis (1, x, g, gx): x -> gx, gx -> -x
    LinMap s(4, 4);
    s.at(0, 0) = Scalar(1);
    s.at(3, 1) = Scalar(1);
    s.at(2, 2) = Scalar(1);
    s.at(1, 3) = Scalar(-1);
    LinMap si = invert_matrix(s);
    REQUIRE(compose(si, s) == LinMap::identity(4));
    REQUIRE(compose(s, si) == LinMap::identity(4));

    std::mt19937 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        unsigned order = iter % 3 == 0 ? 3 : 1;
        LinMap m = random_map(rng, 3, 3, order);
        try {
            LinMap mi = invert_matrix(m);
            REQUIRE(compose(mi, m) == LinMap::identity(3));
            REQUIRE(compose(m, mi) == LinMap::identity(3));
        } catch (const Singular&) {
            REQUIRE(rank_oracle(m) < 3);
        }
    }
}

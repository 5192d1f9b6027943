#pragma once

#include <utility>
#include <vector>

#include "hopfrob/hopf.hpp"

namespace hopfrob {

// A normalized integral pair: the cointegral is a point Lambda with
// mult.(Lambda (x) id) = Lambda.counit, the integral is a copoint
// lambda with (id (x) lambda).comult = unit.lambda, and
// lambda . Lambda = 1. The sidedness of the two equations is pinned by
// the Taft n=2 values (x - gx, delta_x).
struct IntegralPair {
    LinMap cointegral; // d x 1
    LinMap integral;   // 1 x d
};

// Basis of all points satisfying the left-cointegral equation.
inline std::vector<LinMap> cointegral_space(const HopfData& h) {
    const int d = h.dim();
    LinMap sys(d * d, d); // rows (p, j), unknowns Lambda_i
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            for (const auto& [p, v] : h.b.mult.col_sparse(i * d + j)) sys.at(p * d + j, i) += v;
        for (int j = 0; j < d; ++j)
            if (!h.b.counit.at(0, j).is_zero()) sys.at(i * d + j, i) -= h.b.counit.at(0, j);
    }
    std::vector<LinMap> out;
    for (auto& v : kernel_basis(sys)) out.push_back(LinMap::col_vector(v));
    return out;
}

// Basis of all copoints satisfying the right-integral equation.
inline std::vector<LinMap> integral_space(const HopfData& h) {
    const int d = h.dim();
    LinMap sys(d * d, d); // rows (p, q), unknowns lambda_j
    for (int q = 0; q < d; ++q)
        for (const auto& [pj, v] : h.b.comult.col_sparse(q)) {
            int p = pj / d, j = pj % d;
            sys.at(p * d + q, j) += v;
        }
    for (int q = 0; q < d; ++q)
        for (const auto& [p, v] : h.b.unit.col_sparse(0)) sys.at(p * d + q, q) -= v;
    std::vector<LinMap> out;
    for (auto& v : kernel_basis(sys)) out.push_back(LinMap::row_vector(v));
    return out;
}

// The integral morphism: close the multiplication-comultiplication
// sandwich with s^2 through a half-dual loop,
//   I = (cup (x) id) . swap . (comult (x) id) . (mult (x) id) . (id (x) s^2 (x) id) . (id (x) cap).
// The result does not depend on the choice of half dual.
inline LinMap integral_morphism(const HopfData& h, const LinMap& cap, const LinMap& cup) {
    const int d = h.dim();
    if (cap.dst_dim() != d * d || cap.src_dim() != 1 || cup.dst_dim() != 1 ||
        cup.src_dim() != d * d)
        throw DimensionMismatch("integral_morphism: cap must be d^2 x 1, cup 1 x d^2");
    LinMap s2 = compose(h.antipode, h.antipode);
    // T[l][b] = sum_a s2[l][a] K[a][b], K the cap viewed as a d x d matrix
    LinMap T(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Scalar& k = cap.at(a * d + b, 0);
            if (k.is_zero()) continue;
            for (int l = 0; l < d; ++l)
                if (!s2.at(l, a).is_zero()) T.at(l, b) += s2.at(l, a) * k;
        }
    LinMap result(d, d);
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l)
            for (int b = 0; b < d; ++b) {
                const Scalar& t = T.at(l, b);
                if (t.is_zero()) continue;
                for (const auto& [m, vm] : h.b.mult.col_sparse(j * d + l))
                    for (const auto& [pk, vd] : h.b.comult.col_sparse(m)) {
                        int p = pk / d, k = pk % d;
                        const Scalar& c = cup.at(0, b * d + p);
                        if (c.is_zero()) continue;
                        result.at(k, j) += t * vm * vd * c;
                    }
            }
    return result;
}

inline LinMap integral_morphism(const HopfData& h) {
    return integral_morphism(h, standard_cap(h.dim()), standard_cup(h.dim()));
}

// Whether the point satisfies the left-cointegral equation.
inline bool is_cointegral(const HopfData& h, const LinMap& p) {
    const int d = h.dim();
    return compose(h.b.mult, kron(p, LinMap::identity(d))) == compose(p, h.b.counit);
}

// Whether the copoint satisfies the right-integral equation.
inline bool is_integral(const HopfData& h, const LinMap& q) {
    const int d = h.dim();
    return compose(kron(LinMap::identity(d), q), h.b.comult) == compose(h.b.unit, q);
}

// Operational Frobenius condition: the integral morphism factors as
// Lambda . lambda with lambda . Lambda = 1. The choice is deterministic:
// rank_one_factor's leading-1 normalization, then the rescale applied
// entirely to lambda.
inline IntegralPair frobenius_condition(const HopfData& h) {
    LinMap I = integral_morphism(h);
    LinMap u, v;
    try {
        auto f = rank_one_factor(I);
        u = std::move(f.first);
        v = std::move(f.second);
    } catch (const NotRankOne& e) {
        throw DegeneratePairing(std::string("integral morphism is not rank one: ") + e.what());
    }
    Scalar c = compose(v, u).at(0, 0);
    if (c.is_zero()) throw DegeneratePairing("integral pairing vanishes: lambda(Lambda) = 0");
    LinMap lambda = v.scaled(c.inverse());
    IntegralPair pair{std::move(u), std::move(lambda)};
    if (compose(pair.cointegral, pair.integral) != I)
        throw InternalInconsistency("integral morphism is not idempotent");
    if (!is_cointegral(h, pair.cointegral))
        throw InternalInconsistency("factor of I is not a left cointegral");
    if (!is_integral(h, pair.integral))
        throw InternalInconsistency("factor of I is not a right integral");
    return pair;
}

// Green cup: lambda after mult.
inline LinMap green_cup(const HopfData& h, const IntegralPair& p) {
    return compose(p.integral, h.b.mult);
}
// Green cap: (s (x) id) . comult . Lambda.
inline LinMap green_cap(const HopfData& h, const IntegralPair& p) {
    return compose(kron(h.antipode, LinMap::identity(h.dim())), h.b.comult, p.cointegral);
}
// Red cap: comult . Lambda.
inline LinMap red_cap(const HopfData& h, const IntegralPair& p) {
    return compose(h.b.comult, p.cointegral);
}
// Red cup: lambda . mult . (id (x) s).
inline LinMap red_cup(const HopfData& h, const IntegralPair& p) {
    return compose(p.integral, h.b.mult, kron(LinMap::identity(h.dim()), h.antipode));
}

inline bool snakes_hold(int d, const LinMap& cup, const LinMap& cap) {
    LinMap id = LinMap::identity(d);
    return compose(kron(id, cup), kron(cap, id)) == id &&
           compose(kron(cup, id), kron(id, cap)) == id;
}

// H is nondegenerate iff the integral-built cup and cap satisfy the
// snake identities, making H self-dual.
inline bool check_nondegenerate(const HopfData& h, const IntegralPair& p) {
    return snakes_hold(h.dim(), green_cup(h, p), green_cap(h, p));
}

// The inverse of the antipode from the integral pair alone:
//   s^{-1} = (id (x) lambda.mult) . (comult.Lambda (x) id),
// i.e. s^{-1}(h) = sum lambda(Lambda_2 h) Lambda_1.
inline LinMap antipode_inverse_formula(const HopfData& h, const IntegralPair& p) {
    LinMap id = LinMap::identity(h.dim());
    return compose(kron(id, compose(p.integral, h.b.mult)), kron(red_cap(h, p), id));
}

// Finite-dimensional form of the equaliser condition: both integral
// spaces are exactly one-dimensional.
inline bool equaliser_dimension_check(const HopfData& h) {
    return cointegral_space(h).size() == 1 && integral_space(h).size() == 1;
}

} // namespace hopfrob

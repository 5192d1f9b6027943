#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfrob/integrals.hpp"

namespace hopfrob {

// A monoid and comonoid on one object obeying the Frobenius law.
struct FrobeniusAlgebraData {
    int dim = 0;
    LinMap mult;   // d x d^2
    LinMap unit;   // d x 1
    LinMap comult; // d^2 x d
    LinMap counit; // 1 x d
};

// The full Hopf-Frobenius structure around a green Hopf algebra
// (mult, unit, comult, counit, antipode):
//   green Frobenius: (mult, unit, green_comult, lambda)
//   red Frobenius:   (red_mult, Lambda, comult, counit)
//   red Hopf:        (red_mult, Lambda, green_comult, lambda, red_antipode)
// plus the four Frobenius forms.
struct HopfFrobeniusData {
    HopfData green;
    IntegralPair pair;
    LinMap green_comult; // d^2 x d
    LinMap red_mult;     // d x d^2
    LinMap red_antipode; // d x d
    LinMap beta;         // 1 x d^2, green cup
    LinMap gamma;        // d^2 x 1, green cap
    LinMap beta_p;       // d^2 x 1, red cap
    LinMap gamma_p;      // 1 x d^2, red cup

    int dim() const { return green.dim(); }

    HopfData red_hopf() const {
        return HopfData::make(BialgebraData::make(dim(), red_mult, pair.cointegral, green_comult,
                                                  pair.integral, green.b.basis_names),
                              red_antipode);
    }
    FrobeniusAlgebraData green_frobenius() const {
        return {dim(), green.b.mult, green.b.unit, green_comult, pair.integral};
    }
    FrobeniusAlgebraData red_frobenius() const {
        return {dim(), red_mult, pair.cointegral, green.b.comult, green.b.counit};
    }
};

// Transpose with respect to the green self-duality (cup beta, cap gamma),
// for any f : H^m -> H^n. Multi-leg cups and caps are nested rainbow
// fashion, which makes (gmult)^T = gcomult come out on the nose.
inline LinMap green_transpose(const HopfFrobeniusData& hf, const LinMap& f) {
    const int d = hf.dim();
    if (d == 1) return f.transpose();
    auto legs = [&](int sz) {
        int m = 0, v = 1;
        while (v < sz) { v *= d; ++m; }
        if (v != sz) throw DimensionMismatch("green_transpose: dimension is not a power of d");
        return m;
    };
    const int m = legs(f.src_dim()), n = legs(f.dst_dim());
    auto ipow = [&](int k) { long r = 1; while (k--) r *= d; return int(r); };

    // rainbow cap on m legs as a sparse column over d^{2m}
    SVec cap{{0, Scalar(1)}};
    for (int k = 1; k <= m; ++k) {
        SVec next;
        int inner = ipow(k - 1);
        for (const auto& [i, v] : cap) {
            int i1 = i / inner, i2 = i % inner;
            for (const auto& [g, w] : hf.gamma.col_sparse(0)) {
                int a = g / d, b = g % d;
                next.emplace_back(((a * inner + i1) * inner * d) + (i2 * d + b), v * w);
            }
        }
        cap = std::move(next);
    }
    // rainbow cup on n legs as a dense row over d^{2n}
    std::vector<Scalar> cup{Scalar(1)};
    for (int k = 1; k <= n; ++k) {
        int inner = ipow(k - 1);
        std::vector<Scalar> next(size_t(ipow(k)) * ipow(k));
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                const Scalar& oxy = hf.beta.at(0, x * d + y);
                if (oxy.is_zero()) continue;
                for (int u = 0; u < inner; ++u)
                    for (int v = 0; v < inner; ++v) {
                        const Scalar& in = cup[size_t(u) * inner + v];
                        if (in.is_zero()) continue;
                        next[size_t(x * inner + u) * inner * d + (size_t(v) * d + y)] = oxy * in;
                    }
            }
        cup = std::move(next);
    }

    const int dm = ipow(m), dn = ipow(n);
    LinMap out(dm, dn);
    for (int w = 0; w < dn; ++w)
        for (const auto& [i, v] : cap) {
            int i1 = i / dm, i2 = i % dm;
            for (const auto& [y, fv] : f.col_sparse(i1)) {
                const Scalar& o = cup[size_t(w) * dn + y];
                if (o.is_zero()) continue;
                out.at(i2, w) += o * v * fv;
            }
        }
    return out;
}

namespace detail {

inline void append_prefixed(ViolationReport& into, ViolationReport from,
                            const std::string& prefix) {
    for (auto& v : from) {
        v.law = prefix + v.law;
        into.push_back(std::move(v));
    }
}

// Frobenius law as three column-streamed composites:
// (id (x) mult).(comult (x) id) = comult.mult = (mult (x) id).(id (x) comult)
inline void check_frobenius_law(ViolationReport& report, const std::string& prefix, int d,
                                const LinMap& M, const LinMap& C,
                                const std::vector<std::string>& names) {
    using A = DenseAccum;
    auto mid = [&](int c, A& acc) {
        for (const auto& [m, vm] : M.col_sparse(c))
            for (const auto& [p, vp] : C.col_sparse(m)) acc.add(p, vm * vp);
    };
    auto v1 = compare_law(
        prefix + "frob_law_l", d * d, d * d, 2, 2, names,
        [&](int c, A& acc) {
            int i = c / d, j = c % d;
            for (const auto& [p, vp] : C.col_sparse(i)) {
                int a = p / d, b = p % d;
                for (const auto& [r, vr] : M.col_sparse(b * d + j)) acc.add(a * d + r, vp * vr);
            }
        },
        mid);
    if (v1) report.push_back(std::move(*v1));
    auto v2 = compare_law(
        prefix + "frob_law_r", d * d, d * d, 2, 2, names,
        [&](int c, A& acc) {
            int i = c / d, j = c % d;
            for (const auto& [p, vp] : C.col_sparse(j)) {
                int a = p / d, b = p % d;
                for (const auto& [r, vr] : M.col_sparse(i * d + a)) acc.add(r * d + b, vp * vr);
            }
        },
        mid);
    if (v2) report.push_back(std::move(*v2));
}

} // namespace detail

// Rechecks every invariant of the Hopf-Frobenius definition: both
// Frobenius algebras, both Hopf algebras, the antipode-form equation,
// the snake identities of both form pairs, and consistency of the
// derived caps/cups with the Frobenius structures.
inline ViolationReport verify_hf(const HopfFrobeniusData& hf) {
    const int d = hf.dim();
    const auto& names = hf.green.b.basis_names;
    LinMap id = LinMap::identity(d);
    ViolationReport report;

    detail::append_prefixed(report, check_hopf(hf.green), "green_");
    detail::append_prefixed(report, check_hopf(hf.red_hopf()), "red_");
    detail::check_frobenius_law(report, "green_", d, hf.green.b.mult, hf.green_comult, names);
    detail::check_frobenius_law(report, "red_", d, hf.red_mult, hf.green.b.comult, names);

    auto flag = [&](bool ok, const std::string& law) {
        if (!ok) report.push_back({law, 0, 0, "", "", "", ""});
    };
    // Def HF, left equation: the antipode is the green-cap/red-cup composite
    flag(hf.green.antipode == compose(kron(id, hf.gamma_p), kron(hf.gamma, id)), "antipode_form");
    // lambda(Lambda) = 1
    flag(compose(hf.pair.integral, hf.pair.cointegral).at(0, 0) == Scalar(1),
         "pair_normalization");
    flag(snakes_hold(d, hf.beta, hf.gamma), "green_snakes");
    flag(snakes_hold(d, hf.gamma_p, hf.beta_p), "red_snakes");
    // the caps/cups induced by the derived Frobenius algebras coincide
    // with the integral-built forms
    flag(compose(hf.green_comult, hf.green.b.unit) == hf.gamma, "green_cap_consistency");
    flag(compose(hf.green.b.counit, hf.red_mult) == hf.gamma_p, "red_cup_consistency");
    return report;
}

// Builds the full structure from a chosen normalized pair. All derived
// maps come from fixed contraction formulas and are then validated;
// nothing partially verified escapes.
inline HopfFrobeniusData build_hf_from_pair(const HopfData& h, IntegralPair pair) {
    const int d = h.dim();
    LinMap id = LinMap::identity(d);
    HopfFrobeniusData hf;
    hf.green = h;
    hf.pair = std::move(pair);
    hf.beta = green_cup(h, hf.pair);
    hf.gamma = green_cap(h, hf.pair);
    hf.beta_p = red_cap(h, hf.pair);
    hf.gamma_p = red_cup(h, hf.pair);
    // green comultiplication: dualise mult with the green form
    hf.green_comult = compose(kron(h.b.mult, id), kron(id, hf.gamma));
    // red multiplication: dualise comult with the red form
    hf.red_mult = compose(kron(hf.gamma_p, id), kron(id, h.b.comult));
    // red antipode: the green-cup/red-cap composite of Def HF
    hf.red_antipode = compose(kron(hf.beta, id), kron(id, hf.beta_p));

    auto report = verify_hf(hf);
    if (!report.empty())
        throw InternalInconsistency("hopf-frobenius construction failed law '" + report[0].law +
                                    "'");
    return hf;
}

// Extends a Hopf algebra to its Hopf-Frobenius structure via the
// Frobenius condition.
inline HopfFrobeniusData build_hf(const HopfData& h) {
    return build_hf_from_pair(h, frobenius_condition(h));
}

// Recovers the invertible scalar k with Lambda_2 = k Lambda_1 and
// lambda_2 = k^{-1} lambda_1, when both structures share the same green
// Hopf algebra; nullopt otherwise.
inline std::optional<Scalar> scalar_equivalence(const HopfFrobeniusData& a,
                                                const HopfFrobeniusData& b) {
    if (a.dim() != b.dim() || a.green.b.mult != b.green.b.mult ||
        a.green.b.unit != b.green.b.unit || a.green.b.comult != b.green.b.comult ||
        a.green.b.counit != b.green.b.counit || a.green.antipode != b.green.antipode)
        return std::nullopt;
    const int d = a.dim();
    int i0 = -1;
    for (int i = 0; i < d; ++i)
        if (!a.pair.cointegral.at(i, 0).is_zero()) { i0 = i; break; }
    if (i0 < 0) return std::nullopt;
    Scalar k = b.pair.cointegral.at(i0, 0) / a.pair.cointegral.at(i0, 0);
    if (k.is_zero()) return std::nullopt;
    if (b.pair.cointegral != a.pair.cointegral.scaled(k)) return std::nullopt;
    if (b.pair.integral != a.pair.integral.scaled(k.inverse())) return std::nullopt;
    return k;
}

// Rescale the chosen pair by (k, k^{-1}) and rebuild; by uniqueness this
// is the only freedom in the structure.
inline HopfFrobeniusData rescale_hf(const HopfFrobeniusData& hf, const Scalar& k) {
    IntegralPair p{hf.pair.cointegral.scaled(k), hf.pair.integral.scaled(k.inverse())};
    return build_hf_from_pair(hf.green, std::move(p));
}

namespace detail {

// Coinverse of a copoint w for the comonoid: the unique wbar with
// (wbar (x) w).comult = counit = (w (x) wbar).comult, if any.
inline std::optional<LinMap> solve_coinverse(const FrobeniusAlgebraData& fa, const LinMap& w) {
    const int d = fa.dim;
    LinMap sys(2 * d, d);
    std::vector<Scalar> rhs(2 * d);
    for (int j = 0; j < d; ++j) {
        for (const auto& [p, v] : fa.comult.col_sparse(j)) {
            int a = p / d, b = p % d;
            if (!w.at(0, b).is_zero()) sys.at(j, a) += v * w.at(0, b);
            if (!w.at(0, a).is_zero()) sys.at(d + j, b) += v * w.at(0, a);
        }
        rhs[j] = fa.counit.at(0, j);
        rhs[d + j] = fa.counit.at(0, j);
    }
    auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    return LinMap::row_vector(*sol);
}

} // namespace detail

// Appendix-style correspondence: a coinvertible copoint u gives the
// Frobenius form beta(u) = u . mult, together with its inverse cap.
inline std::pair<LinMap, LinMap> form_from_element(const FrobeniusAlgebraData& fa,
                                                   const LinMap& u_copoint) {
    const int d = fa.dim;
    if (u_copoint.dst_dim() != 1 || u_copoint.src_dim() != d)
        throw DimensionMismatch("form_from_element: copoint must be 1 x d");
    if (!detail::solve_coinverse(fa, u_copoint)) throw NotCoinvertible();
    LinMap beta_u = compose(u_copoint, fa.mult);
    // unique inverse cap, from the two snake equations as a linear system
    LinMap sys(2 * d * d, d * d);
    std::vector<Scalar> rhs(2 * d * d);
    for (int h = 0; h < d; ++h)
        for (int b = 0; b < d; ++b) {
            for (int a = 0; a < d; ++a) {
                const Scalar& s1 = beta_u.at(0, h * d + a);
                if (!s1.is_zero()) sys.at(h * d + b, a * d + b) += s1;
                const Scalar& s2 = beta_u.at(0, a * d + h);
                if (!s2.is_zero()) sys.at(d * d + b * d + h, b * d + a) += s2;
            }
            rhs[h * d + b] = h == b ? Scalar(1) : Scalar(0);
            rhs[d * d + b * d + h] = h == b ? Scalar(1) : Scalar(0);
        }
    auto sol = solve_linear(sys, rhs);
    if (!sol)
        throw InternalInconsistency("coinvertible copoint gave a non-invertible form");
    LinMap cap = LinMap::col_vector(*sol);
    return {std::move(beta_u), std::move(cap)};
}

// Inverse direction: a Frobenius form yields the coinvertible copoint
// u = beta . (unit (x) id). Validates the form's defining equations.
inline LinMap element_from_form(const FrobeniusAlgebraData& fa, const LinMap& beta,
                                const LinMap& beta_inv) {
    const int d = fa.dim;
    if (beta.dst_dim() != 1 || beta.src_dim() != d * d)
        throw DimensionMismatch("element_from_form: form must be 1 x d^2");
    if (beta_inv.dst_dim() != d * d || beta_inv.src_dim() != 1)
        throw DimensionMismatch("element_from_form: inverse cap must be d^2 x 1");
    LinMap id = LinMap::identity(d);
    if (compose(beta, kron(fa.mult, id)) != compose(beta, kron(id, fa.mult)))
        throw InvalidForm("form is not associative over the multiplication");
    if (!snakes_hold(d, beta, beta_inv))
        throw InvalidForm("cap is not inverse to the form");
    return compose(beta, kron(fa.unit, id));
}

// Boolean predicates surfaced in reports only.
inline bool frobenius_is_special(const FrobeniusAlgebraData& fa) {
    return compose(fa.mult, fa.comult) == LinMap::identity(fa.dim);
}
inline bool frobenius_is_symmetric(const FrobeniusAlgebraData& fa) {
    LinMap cup = compose(fa.counit, fa.mult);
    return compose(cup, swap_map(fa.dim, fa.dim)) == cup;
}

} // namespace hopfrob

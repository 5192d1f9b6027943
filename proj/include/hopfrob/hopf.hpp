#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfrob/linmap.hpp"
#include "hopfrob/linsolve.hpp"

namespace hopfrob {

// Structure-constant presentation of a bialgebra on k^dim.
struct BialgebraData {
    int dim = 0;
    LinMap mult;    // d x d^2
    LinMap unit;    // d x 1
    LinMap comult;  // d^2 x d
    LinMap counit;  // 1 x d
    std::vector<std::string> basis_names;

    static BialgebraData make(int dim, LinMap mult, LinMap unit, LinMap comult, LinMap counit,
                              std::vector<std::string> names) {
        if (mult.dst_dim() != dim || mult.src_dim() != dim * dim)
            throw DimensionMismatch("mult must be d x d^2");
        if (unit.dst_dim() != dim || unit.src_dim() != 1)
            throw DimensionMismatch("unit must be d x 1");
        if (comult.dst_dim() != dim * dim || comult.src_dim() != dim)
            throw DimensionMismatch("comult must be d^2 x d");
        if (counit.dst_dim() != 1 || counit.src_dim() != dim)
            throw DimensionMismatch("counit must be 1 x d");
        if (names.empty()) {
            names.reserve(dim);
            for (int i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i));
        }
        if (int(names.size()) != dim) throw DimensionMismatch("basis name count != dim");
        return {dim, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                std::move(names)};
    }
};

struct HopfData {
    BialgebraData b;
    LinMap antipode; // d x d

    static HopfData make(BialgebraData b, LinMap antipode) {
        if (antipode.dst_dim() != b.dim || antipode.src_dim() != b.dim)
            throw DimensionMismatch("antipode must be d x d");
        return {std::move(b), std::move(antipode)};
    }
    int dim() const { return b.dim; }
};

// One violated law with a witness entry where LHS != RHS.
struct LawViolation {
    std::string law;
    int row = 0, col = 0;
    std::string row_label, col_label;
    std::string lhs, rhs;
};
using ViolationReport = std::vector<LawViolation>;

namespace detail {

// Dense accumulator with a touched-index list, so large columns can be
// compared and reset without scanning the whole buffer.
class DenseAccum {
public:
    explicit DenseAccum(int n) : buf_(n), mark_(n, 0) {}
    void add(int i, const Scalar& v) {
        if (v.is_zero()) return;
        if (!mark_[i]) {
            mark_[i] = 1;
            touched_.push_back(i);
            buf_[i] = v;
        } else {
            buf_[i] += v;
        }
    }
    const Scalar& get(int i) const {
        static const Scalar zero;
        return mark_[i] ? buf_[i] : zero;
    }
    const std::vector<int>& touched() const { return touched_; }
    void clear() {
        for (int i : touched_) {
            buf_[i] = Scalar();
            mark_[i] = 0;
        }
        touched_.clear();
    }

private:
    std::vector<Scalar> buf_;
    std::vector<char> mark_;
    std::vector<int> touched_;
};

inline std::string tensor_label(int idx, int power, const std::vector<std::string>& names) {
    if (power == 0) return "1";
    int d = int(names.size());
    std::vector<int> parts(power);
    for (int p = power - 1; p >= 0; --p) {
        parts[p] = idx % d;
        idx /= d;
    }
    std::string out = names[parts[0]];
    for (int p = 1; p < power; ++p) out += "(x)" + names[parts[p]];
    return out;
}

// Streams both sides of a law column by column and reports the first
// mismatching entry (smallest column, then smallest row).
inline std::optional<LawViolation> compare_law(
    const std::string& law, int nrows, int ncols, int row_power, int col_power,
    const std::vector<std::string>& names,
    const std::function<void(int, DenseAccum&)>& lhs_fn,
    const std::function<void(int, DenseAccum&)>& rhs_fn) {
    DenseAccum lhs(nrows), rhs(nrows);
    for (int c = 0; c < ncols; ++c) {
        lhs_fn(c, lhs);
        rhs_fn(c, rhs);
        std::vector<int> rows;
        rows.reserve(lhs.touched().size() + rhs.touched().size());
        rows.insert(rows.end(), lhs.touched().begin(), lhs.touched().end());
        rows.insert(rows.end(), rhs.touched().begin(), rhs.touched().end());
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        for (int r : rows) {
            if (lhs.get(r) != rhs.get(r)) {
                LawViolation v{law, r, c, tensor_label(r, row_power, names),
                               tensor_label(c, col_power, names), lhs.get(r).str(),
                               rhs.get(r).str()};
                return v;
            }
        }
        lhs.clear();
        rhs.clear();
    }
    return std::nullopt;
}

} // namespace detail

// Checks the monoid, comonoid, copy, cocopy, bialgebra and scalar laws,
// returning one witness per violated law.
inline ViolationReport check_bialgebra(const BialgebraData& bd) {
    const int d = bd.dim;
    const LinMap &M = bd.mult, &U = bd.unit, &D = bd.comult, &E = bd.counit;
    const auto& names = bd.basis_names;
    ViolationReport report;
    auto push = [&](std::optional<LawViolation> v) {
        if (v) report.push_back(std::move(*v));
    };
    using A = detail::DenseAccum;

    push(detail::compare_law(
        "assoc", d, d * d * d, 1, 3, names,
        [&](int c, A& acc) {
            int i = c / (d * d), j = (c / d) % d, k = c % d;
            for (const auto& [x, vx] : M.col_sparse(i * d + j))
                for (const auto& [r, vr] : M.col_sparse(x * d + k)) acc.add(r, vx * vr);
        },
        [&](int c, A& acc) {
            int i = c / (d * d), j = (c / d) % d, k = c % d;
            for (const auto& [y, vy] : M.col_sparse(j * d + k))
                for (const auto& [r, vr] : M.col_sparse(i * d + y)) acc.add(r, vy * vr);
        }));

    push(detail::compare_law(
        "unit_l", d, d, 1, 1, names,
        [&](int j, A& acc) {
            for (const auto& [x, vx] : U.col_sparse(0))
                for (const auto& [r, vr] : M.col_sparse(x * d + j)) acc.add(r, vx * vr);
        },
        [&](int j, A& acc) { acc.add(j, Scalar(1)); }));

    push(detail::compare_law(
        "unit_r", d, d, 1, 1, names,
        [&](int j, A& acc) {
            for (const auto& [x, vx] : U.col_sparse(0))
                for (const auto& [r, vr] : M.col_sparse(j * d + x)) acc.add(r, vx * vr);
        },
        [&](int j, A& acc) { acc.add(j, Scalar(1)); }));

    push(detail::compare_law(
        "coassoc", d * d * d, d, 3, 1, names,
        [&](int i, A& acc) {
            for (const auto& [p, vp] : D.col_sparse(i)) {
                int a = p / d, b = p % d;
                for (const auto& [q, vq] : D.col_sparse(a)) acc.add(q * d + b, vp * vq);
            }
        },
        [&](int i, A& acc) {
            for (const auto& [p, vp] : D.col_sparse(i)) {
                int a = p / d, b = p % d;
                for (const auto& [q, vq] : D.col_sparse(b)) acc.add(a * d * d + q, vp * vq);
            }
        }));

    push(detail::compare_law(
        "counit_l", d, d, 1, 1, names,
        [&](int i, A& acc) {
            for (const auto& [p, vp] : D.col_sparse(i)) {
                int a = p / d, b = p % d;
                if (!E.at(0, a).is_zero()) acc.add(b, vp * E.at(0, a));
            }
        },
        [&](int i, A& acc) { acc.add(i, Scalar(1)); }));

    push(detail::compare_law(
        "counit_r", d, d, 1, 1, names,
        [&](int i, A& acc) {
            for (const auto& [p, vp] : D.col_sparse(i)) {
                int a = p / d, b = p % d;
                if (!E.at(0, b).is_zero()) acc.add(a, vp * E.at(0, b));
            }
        },
        [&](int i, A& acc) { acc.add(i, Scalar(1)); }));

    push(detail::compare_law(
        "copy", d * d, 1, 2, 0, names,
        [&](int, A& acc) {
            for (const auto& [x, vx] : U.col_sparse(0))
                for (const auto& [p, vp] : D.col_sparse(x)) acc.add(p, vx * vp);
        },
        [&](int, A& acc) {
            for (const auto& [x, vx] : U.col_sparse(0))
                for (const auto& [y, vy] : U.col_sparse(0)) acc.add(x * d + y, vx * vy);
        }));

    push(detail::compare_law(
        "cocopy", 1, d * d, 0, 2, names,
        [&](int c, A& acc) {
            for (const auto& [r, vr] : M.col_sparse(c))
                if (!E.at(0, r).is_zero()) acc.add(0, vr * E.at(0, r));
        },
        [&](int c, A& acc) {
            int i = c / d, j = c % d;
            acc.add(0, E.at(0, i) * E.at(0, j));
        }));

    push(detail::compare_law(
        "bialg", d * d, d * d, 2, 2, names,
        [&](int c, A& acc) {
            for (const auto& [r, vr] : M.col_sparse(c))
                for (const auto& [p, vp] : D.col_sparse(r)) acc.add(p, vr * vp);
        },
        [&](int c, A& acc) {
            int i = c / d, j = c % d;
            for (const auto& [p, vp] : D.col_sparse(i)) {
                int a = p / d, b = p % d;
                for (const auto& [q, vq] : D.col_sparse(j)) {
                    int x = q / d, y = q % d;
                    Scalar w = vp * vq;
                    for (const auto& [r1, v1] : M.col_sparse(a * d + x))
                        for (const auto& [r2, v2] : M.col_sparse(b * d + y))
                            acc.add(r1 * d + r2, w * v1 * v2);
                }
            }
        }));

    push(detail::compare_law(
        "scalar", 1, 1, 0, 0, names,
        [&](int, A& acc) {
            for (const auto& [x, vx] : U.col_sparse(0))
                if (!E.at(0, x).is_zero()) acc.add(0, vx * E.at(0, x));
        },
        [&](int, A& acc) { acc.add(0, Scalar(1)); }));

    return report;
}

namespace detail {

inline std::optional<LawViolation> check_hopf_side(const HopfData& h, bool antipode_left,
                                                   const std::string& law) {
    const int d = h.dim();
    const LinMap &M = h.b.mult, &U = h.b.unit, &D = h.b.comult, &E = h.b.counit, &S = h.antipode;
    using A = DenseAccum;
    return compare_law(
        law, d, d, 1, 1, h.b.basis_names,
        [&](int i, A& acc) {
            for (const auto& [p, vp] : D.col_sparse(i)) {
                int a = p / d, b = p % d;
                if (antipode_left) {
                    for (const auto& [sx, vs] : S.col_sparse(a))
                        for (const auto& [r, vr] : M.col_sparse(sx * d + b))
                            acc.add(r, vp * vs * vr);
                } else {
                    for (const auto& [sx, vs] : S.col_sparse(b))
                        for (const auto& [r, vr] : M.col_sparse(a * d + sx))
                            acc.add(r, vp * vs * vr);
                }
            }
        },
        [&](int i, A& acc) {
            if (E.at(0, i).is_zero()) return;
            for (const auto& [x, vx] : U.col_sparse(0)) acc.add(x, vx * E.at(0, i));
        });
}

} // namespace detail

// check_bialgebra plus both sides of the Hopf law.
inline ViolationReport check_hopf(const HopfData& h) {
    ViolationReport report = check_bialgebra(h.b);
    if (auto v = detail::check_hopf_side(h, true, "hopf_l")) report.push_back(std::move(*v));
    if (auto v = detail::check_hopf_side(h, false, "hopf_r")) report.push_back(std::move(*v));
    return report;
}

// Convolution product f * g = mult . (f (x) g) . comult.
inline LinMap convolution(const LinMap& f, const LinMap& g, const BialgebraData& bd) {
    const int d = bd.dim;
    if (f.src_dim() != d || f.dst_dim() != d || g.src_dim() != d || g.dst_dim() != d)
        throw DimensionMismatch("convolution: maps must be d x d");
    return compose(bd.mult, kron(f, g), bd.comult);
}

inline LinMap unit_counit(const BialgebraData& bd) { return compose(bd.unit, bd.counit); }

// Solves the d^2-unknown linear system mult.(S (x) id).comult = unit.counit,
// then verifies the right-hand Hopf law also holds. One-sided solutions
// are an error, never silently accepted.
inline HopfData solve_antipode(const BialgebraData& bd) {
    const int d = bd.dim;
    LinMap sys(d * d, d * d); // rows (p,q), unknowns S_{j,i} at j*d+i
    for (int q = 0; q < d; ++q)
        for (const auto& [pr, vpr] : bd.comult.col_sparse(q)) {
            int i = pr / d, a = pr % d;
            for (int j = 0; j < d; ++j)
                for (const auto& [p, vm] : bd.mult.col_sparse(j * d + a))
                    sys.at(p * d + q, j * d + i) += vpr * vm;
        }
    LinMap ue = unit_counit(bd);
    std::vector<Scalar> rhs(d * d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) rhs[p * d + q] = ue.at(p, q);
    auto sol = solve_linear(sys, rhs);
    if (!sol) throw NoAntipode();
    LinMap S(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) S.at(j, i) = (*sol)[j * d + i];
    if (convolution(LinMap::identity(d), S, bd) != ue) throw AntipodeOneSided();
    return HopfData::make(bd, std::move(S));
}

// H^op: both multiplication and comultiplication with arguments swapped;
// the antipode is solved anew.
inline HopfData op_variant(const HopfData& h) {
    const int d = h.dim();
    BialgebraData bd = BialgebraData::make(d, compose(h.b.mult, swap_map(d, d)), h.b.unit,
                                           compose(swap_map(d, d), h.b.comult), h.b.counit,
                                           h.b.basis_names);
    return solve_antipode(bd);
}

// H^sigma: only the comultiplication swapped; not necessarily Hopf.
inline BialgebraData sigma_variant(const HopfData& h) {
    const int d = h.dim();
    return BialgebraData::make(d, h.b.mult, h.b.unit, compose(swap_map(d, d), h.b.comult),
                               h.b.counit, h.b.basis_names);
}

// Least k <= bound with s^k = id, or nullopt.
inline std::optional<int> antipode_order(const HopfData& h, int bound) {
    LinMap id = LinMap::identity(h.dim());
    LinMap cur = h.antipode;
    for (int k = 1; k <= bound; ++k) {
        if (cur == id) return k;
        cur = compose(h.antipode, cur);
    }
    return std::nullopt;
}

// Standard coordinate duality: cap = sum_i e_i (x) e_i as a column,
// cup its row transpose.
inline LinMap standard_cap(int d) {
    LinMap cap(d * d, 1);
    for (int i = 0; i < d; ++i) cap.at(i * d + i, 0) = Scalar(1);
    return cap;
}
inline LinMap standard_cup(int d) {
    LinMap cup(1, d * d);
    for (int i = 0; i < d; ++i) cup.at(0, i * d + i) = Scalar(1);
    return cup;
}

// Dual Hopf algebra realized on the same coordinate space, with the
// pairing <phi, h> = cup(phi (x) h). cap/cup must satisfy both snake
// equations.
inline HopfData dual_hopf(const HopfData& h, const LinMap& cap, const LinMap& cup) {
    const int d = h.dim();
    if (cap.dst_dim() != d * d || cap.src_dim() != 1 || cup.dst_dim() != 1 ||
        cup.src_dim() != d * d)
        throw DimensionMismatch("dual_hopf: cap must be d^2 x 1 and cup 1 x d^2");
    LinMap K(d, d), C(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            K.at(i, j) = cap.at(i * d + j, 0); // H leg, then H* leg
            C.at(i, j) = cup.at(0, i * d + j); // H* leg, then H leg
        }
    LinMap id = LinMap::identity(d);
    if (compose(K, C) != id || compose(C, K) != id) throw SnakeFailure();

    LinMap Ct = C.transpose();
    LinMap Kt = K.transpose();
    LinMap mult_star = compose(Kt, h.b.comult.transpose(), kron(C, C).transpose());
    LinMap comult_star = compose(kron(K, K).transpose(), h.b.mult.transpose(), Ct);
    LinMap unit_star = compose(Kt, h.b.counit.transpose());
    LinMap counit_star = compose(h.b.unit.transpose(), Ct);
    LinMap antipode_star = compose(Kt, h.antipode.transpose(), Ct);

    std::vector<std::string> names;
    names.reserve(d);
    for (const auto& n : h.b.basis_names) names.push_back(n + "*");
    return HopfData::make(BialgebraData::make(d, std::move(mult_star), std::move(unit_star),
                                              std::move(comult_star), std::move(counit_star),
                                              std::move(names)),
                          std::move(antipode_star));
}

// The untwisting identity derived from the bialgebra rule and the Hopf
// law: both composites below agree for every Hopf algebra.
//   (id (x) mult).(id (x) id (x) s).(comult (x) id).(mult (x) id).(id (x) comult)
//   = (mult (x) id).(id (x) swap).(comult (x) id)
inline bool alternate_bialgebra_rule_holds(const HopfData& h) {
    const int d = h.dim();
    const LinMap &M = h.b.mult, &D = h.b.comult, &S = h.antipode;
    using A = detail::DenseAccum;
    auto v = detail::compare_law(
        "alt_bialg", d * d, d * d, 2, 2, h.b.basis_names,
        [&](int c, A& acc) {
            int i = c / d, j = c % d;
            for (const auto& [p, vp] : D.col_sparse(j)) {
                int b1 = p / d, b2 = p % d;
                for (const auto& [m1, vm1] : M.col_sparse(i * d + b1))
                    for (const auto& [q, vq] : D.col_sparse(m1)) {
                        int t1 = q / d, t2 = q % d;
                        for (const auto& [sb, vs] : S.col_sparse(b2))
                            for (const auto& [r, vr] : M.col_sparse(t2 * d + sb))
                                acc.add(t1 * d + r, vp * vm1 * vq * vs * vr);
                    }
            }
        },
        [&](int c, A& acc) {
            int i = c / d, j = c % d;
            for (const auto& [p, vp] : D.col_sparse(i)) {
                int a1 = p / d, a2 = p % d;
                for (const auto& [r, vr] : M.col_sparse(a1 * d + j)) acc.add(r * d + a2, vp * vr);
            }
        });
    return !v.has_value();
}

} // namespace hopfrob

#pragma once

#include <string>
#include <vector>

#include "hopfrob/hopf.hpp"

namespace hopfrob {

// Finite group presented by its multiplication table. Group laws are
// verified on construction.
struct CayleyTable {
    int order = 0;
    std::vector<std::vector<int>> table; // table[i][j] = index of g_i * g_j
    int identity_index = 0;
    std::vector<std::string> names;

    static CayleyTable make(std::vector<std::vector<int>> table, std::vector<std::string> names) {
        CayleyTable t;
        t.order = int(table.size());
        if (t.order == 0) throw NotAGroup("empty table");
        for (const auto& row : table) {
            if (int(row.size()) != t.order) throw NotAGroup("table is not square");
            for (int v : row)
                if (v < 0 || v >= t.order) throw NotAGroup("table entry out of range");
        }
        t.table = std::move(table);
        if (names.empty())
            for (int i = 0; i < t.order; ++i) names.push_back("g" + std::to_string(i));
        if (int(names.size()) != t.order) throw NotAGroup("name count != order");
        t.names = std::move(names);

        int e = -1;
        for (int i = 0; i < t.order && e < 0; ++i) {
            bool ok = true;
            for (int j = 0; j < t.order; ++j)
                if (t.table[i][j] != j || t.table[j][i] != j) { ok = false; break; }
            if (ok) e = i;
        }
        if (e < 0) throw NotAGroup("no identity element");
        t.identity_index = e;
        for (int i = 0; i < t.order; ++i) {
            bool has_inv = false;
            for (int j = 0; j < t.order; ++j)
                if (t.table[i][j] == e && t.table[j][i] == e) { has_inv = true; break; }
            if (!has_inv) throw NotAGroup("element " + t.names[i] + " has no inverse");
        }
        for (int i = 0; i < t.order; ++i)
            for (int j = 0; j < t.order; ++j)
                for (int k = 0; k < t.order; ++k)
                    if (t.table[t.table[i][j]][k] != t.table[i][t.table[j][k]])
                        throw NotAGroup("multiplication is not associative");
        return t;
    }

    int inverse(int i) const {
        for (int j = 0; j < order; ++j)
            if (table[i][j] == identity_index && table[j][i] == identity_index) return j;
        throw NotAGroup("no inverse"); // unreachable after make()
    }
};

inline CayleyTable cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return CayleyTable::make(std::move(t), std::move(names));
}

// Dihedral group of order 2n: rotations r^k at indices 0..n-1,
// reflections f r^k at indices n..2n-1.
inline CayleyTable dihedral_table(int n) {
    if (n < 1) throw NotAGroup("dihedral parameter must be >= 1");
    int N = 2 * n;
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            t[a][b] = (a + b) % n;                  // r^a r^b
            t[a][n + b] = n + ((b - a) % n + n) % n; // r^a f r^b = f r^{b-a}
            t[n + a][b] = n + (a + b) % n;          // f r^a r^b
            t[n + a][n + b] = ((b - a) % n + n) % n; // f r^a f r^b = r^{b-a}
        }
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k)
        names.push_back(k == 0 ? "e" : (k == 1 ? "r" : "r^" + std::to_string(k)));
    for (int k = 0; k < n; ++k)
        names.push_back(k == 0 ? "f" : (k == 1 ? "fr" : "fr^" + std::to_string(k)));
    return CayleyTable::make(std::move(t), std::move(names));
}

// S_3 with the fixed element order (e, r, r2, f, fr, fr2).
inline CayleyTable symmetric3_table() { return dihedral_table(3); }

// Group algebra k[G]: basis = group elements, comult(g) = g (x) g,
// counit = 1, antipode(g) = g^{-1}.
inline HopfData group_algebra(const CayleyTable& t) {
    const int d = t.order;
    LinMap mult(d, d * d), unit(d, 1), comult(d * d, d), counit(1, d), antipode(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) mult.at(t.table[i][j], i * d + j) = Scalar(1);
        comult.at(i * d + i, i) = Scalar(1);
        counit.at(0, i) = Scalar(1);
        antipode.at(t.inverse(i), i) = Scalar(1);
    }
    unit.at(t.identity_index, 0) = Scalar(1);
    return HopfData::make(
        BialgebraData::make(d, std::move(mult), std::move(unit), std::move(comult),
                            std::move(counit), t.names),
        std::move(antipode));
}

// Function algebra k^G on the delta basis: pointwise multiplication,
// comult(delta_g) = sum_{hk=g} delta_h (x) delta_k.
inline HopfData function_algebra(const CayleyTable& t) {
    const int d = t.order;
    LinMap mult(d, d * d), unit(d, 1), comult(d * d, d), counit(1, d), antipode(d, d);
    for (int i = 0; i < d; ++i) {
        mult.at(i, i * d + i) = Scalar(1);
        unit.at(i, 0) = Scalar(1);
        antipode.at(t.inverse(i), i) = Scalar(1);
    }
    for (int h = 0; h < d; ++h)
        for (int k = 0; k < d; ++k) comult.at(h * d + k, t.table[h][k]) = Scalar(1);
    counit.at(0, t.identity_index) = Scalar(1);
    std::vector<std::string> names;
    for (const auto& n : t.names) names.push_back("d_" + n);
    return HopfData::make(
        BialgebraData::make(d, std::move(mult), std::move(unit), std::move(comult),
                            std::move(counit), std::move(names)),
        std::move(antipode));
}

namespace detail {

// Monomial c * g^beta x^alpha in the Taft algebra; alpha >= n means 0.
struct TaftMonomial {
    Scalar c;
    int beta = 0, alpha = 0;
};

// Single commutation rule x g = z g x, applied repeatedly:
// (g^b x^a)(g^e x^f) = z^{a e} g^{b+e} x^{a+f}.
inline TaftMonomial taft_mono_mult(int n, const Scalar& z, const TaftMonomial& u,
                                   const TaftMonomial& v) {
    TaftMonomial r;
    r.alpha = u.alpha + v.alpha;
    r.beta = (u.beta + v.beta) % n;
    if (r.alpha >= n) {
        r.c = Scalar(0);
        r.alpha = 0;
        return r;
    }
    r.c = u.c * v.c * z.pow(long(u.alpha) * v.beta);
    return r;
}

} // namespace detail

// Taft Hopf algebra T_n over Q(zeta_n): dimension n^2, basis g^beta x^alpha
// at index beta*n + alpha, relations x^n = 0, g^n = 1 and the z-commutation
// rule pinned by Appendix-style tables at n = 2 (x g = -g x there).
inline HopfData taft(int n) {
    if (n < 2) throw Error("taft: n must be >= 2");
    const int d = n * n;
    const Scalar z = Scalar::zeta(unsigned(n));
    auto idx = [&](int beta, int alpha) { return beta * n + alpha; };

    std::vector<std::string> names;
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            std::string s;
            if (b == 1) s += "g";
            else if (b > 1) s += "g^" + std::to_string(b);
            if (a == 1) s += "x";
            else if (a > 1) s += "x^" + std::to_string(a);
            names.push_back(s.empty() ? "1" : s);
        }

    LinMap mult(d, d * d);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            for (int e = 0; e < n; ++e)
                for (int f = 0; f < n; ++f) {
                    auto m = detail::taft_mono_mult(n, z, {Scalar(1), b, a}, {Scalar(1), e, f});
                    if (!m.c.is_zero()) mult.at(idx(m.beta, m.alpha), idx(b, a) * d + idx(e, f)) = m.c;
                }

    LinMap unit(d, 1);
    unit.at(0, 0) = Scalar(1);
    LinMap counit(1, d);
    for (int b = 0; b < n; ++b) counit.at(0, idx(b, 0)) = Scalar(1);

    // Delta(g) = g (x) g, Delta(x) = 1 (x) x + x (x) g; powers computed by
    // multiplying in H (x) H, so no n-specific tables are hand-entered.
    auto mul2 = [&](const SVec& p, const SVec& q) {
        detail::DenseAccum acc(d * d);
        for (const auto& [pi, pv] : p) {
            int a1 = pi / d, a2 = pi % d;
            for (const auto& [qi, qv] : q) {
                int b1 = qi / d, b2 = qi % d;
                Scalar w = pv * qv;
                for (const auto& [r1, v1] : mult.col_sparse(a1 * d + b1))
                    for (const auto& [r2, v2] : mult.col_sparse(a2 * d + b2))
                        acc.add(r1 * d + r2, w * v1 * v2);
            }
        }
        SVec out;
        auto touched = acc.touched();
        std::sort(touched.begin(), touched.end());
        for (int i : touched)
            if (!acc.get(i).is_zero()) out.emplace_back(i, acc.get(i));
        return out;
    };
    SVec dg{{idx(1, 0) * d + idx(1, 0), Scalar(1)}};
    SVec dx{{idx(0, 0) * d + idx(0, 1), Scalar(1)}, {idx(0, 1) * d + idx(1, 0), Scalar(1)}};
    LinMap comult(d * d, d);
    for (int b = 0; b < n; ++b) {
        SVec row{{0, Scalar(1)}}; // Delta(1)
        for (int k = 0; k < b; ++k) row = mul2(row, dg);
        for (int a = 0; a < n; ++a) {
            if (a > 0) row = mul2(row, dx);
            for (const auto& [i, v] : row) comult.at(i, idx(b, a)) = v;
        }
    }

    // s(g) = g^{-1}, s(x) = -x g^{-1}; extended as an antihomomorphism.
    LinMap antipode(d, d);
    detail::TaftMonomial sg{Scalar(1), (n - 1) % n, 0};
    detail::TaftMonomial sx = detail::taft_mono_mult(n, z, {Scalar(-1), 0, 1}, sg);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            detail::TaftMonomial m{Scalar(1), 0, 0}; // s(g^b x^a) = s(x)^a s(g)^b
            for (int k = 0; k < a && !m.c.is_zero(); ++k) m = detail::taft_mono_mult(n, z, m, sx);
            for (int k = 0; k < b && !m.c.is_zero(); ++k) m = detail::taft_mono_mult(n, z, m, sg);
            if (!m.c.is_zero()) antipode.at(idx(m.beta, m.alpha), idx(b, a)) = m.c;
        }

    return HopfData::make(
        BialgebraData::make(d, std::move(mult), std::move(unit), std::move(comult),
                            std::move(counit), std::move(names)),
        std::move(antipode));
}

// The one-dimensional Hopf algebra; every structure map is 1.
inline HopfData trivial_hopf() {
    LinMap one = LinMap::scalar(Scalar(1));
    return HopfData::make(BialgebraData::make(1, one, one, one, one, {"1"}), one);
}

// Named presets exposed by the CLI: trivial, cyclic:<n>, sym:3,
// dihedral:<n>, taft:<n>, dual:<preset>.
inline HopfData build_preset(const std::string& name) {
    auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
    if (name == "trivial") return trivial_hopf();
    if (name == "sym:3") return group_algebra(symmetric3_table());
    if (starts("cyclic:")) return group_algebra(cyclic_table(std::stoi(name.substr(7))));
    if (starts("dihedral:")) return group_algebra(dihedral_table(std::stoi(name.substr(9))));
    if (starts("taft:")) return taft(std::stoi(name.substr(5)));
    if (starts("dual:")) {
        HopfData h = build_preset(name.substr(5));
        return dual_hopf(h, standard_cap(h.dim()), standard_cup(h.dim()));
    }
    throw ParseError("unknown preset '" + name + "'");
}

} // namespace hopfrob

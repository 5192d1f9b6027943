#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfrob/cyclotomic.hpp"
#include "hopfrob/error.hpp"

namespace hopfrob {

// Sparse column: (index, value) pairs with nonzero values, ascending index.
using SVec = std::vector<std::pair<int, Scalar>>;

// Dense exact matrix viewed as a linear map k^src -> k^dst. Morphisms
// H^m -> H^n are LinMaps of shape d^n x d^m. The flat index convention
// for tensor legs is fixed globally: e_i (x) e_j of dims (a, b) sits at
// flat index i*b + j.
class LinMap {
public:
    LinMap() : src_(0), dst_(0) {}
    LinMap(int dst, int src) : src_(src), dst_(dst), e_(size_t(dst) * src, Scalar()) {}

    static LinMap identity(int d) {
        LinMap m(d, d);
        for (int i = 0; i < d; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    // Scalar (1x1) map.
    static LinMap scalar(const Scalar& s) {
        LinMap m(1, 1);
        m.at(0, 0) = s;
        return m;
    }

    static LinMap col_vector(const std::vector<Scalar>& v) {
        LinMap m(int(v.size()), 1);
        for (size_t i = 0; i < v.size(); ++i) m.at(int(i), 0) = v[i];
        return m;
    }

    static LinMap row_vector(const std::vector<Scalar>& v) {
        LinMap m(1, int(v.size()));
        for (size_t i = 0; i < v.size(); ++i) m.at(0, int(i)) = v[i];
        return m;
    }

    int src_dim() const { return src_; }
    int dst_dim() const { return dst_; }

    Scalar& at(int r, int c) { return e_[size_t(r) * src_ + c]; }
    const Scalar& at(int r, int c) const { return e_[size_t(r) * src_ + c]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool same_shape(const LinMap& o) const { return src_ == o.src_ && dst_ == o.dst_; }

    friend bool operator==(const LinMap& a, const LinMap& b) {
        if (!a.same_shape(b)) return false;
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return false;
        return true;
    }
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

    LinMap operator-() const {
        LinMap r = *this;
        for (auto& x : r.e_)
            if (!x.is_zero()) x = -x;
        return r;
    }
    friend LinMap operator+(const LinMap& a, const LinMap& b) {
        if (!a.same_shape(b)) throw DimensionMismatch("adding maps of different shapes");
        LinMap r = a;
        for (size_t i = 0; i < r.e_.size(); ++i)
            if (!b.e_[i].is_zero()) r.e_[i] += b.e_[i];
        return r;
    }
    friend LinMap operator-(const LinMap& a, const LinMap& b) {
        if (!a.same_shape(b)) throw DimensionMismatch("subtracting maps of different shapes");
        LinMap r = a;
        for (size_t i = 0; i < r.e_.size(); ++i)
            if (!b.e_[i].is_zero()) r.e_[i] -= b.e_[i];
        return r;
    }

    LinMap scaled(const Scalar& c) const {
        LinMap r = *this;
        for (auto& x : r.e_)
            if (!x.is_zero()) x *= c;
        return r;
    }

    LinMap transpose() const {
        LinMap r(src_, dst_);
        for (int i = 0; i < dst_; ++i)
            for (int j = 0; j < src_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    SVec col_sparse(int j) const {
        SVec v;
        for (int r = 0; r < dst_; ++r)
            if (!at(r, j).is_zero()) v.emplace_back(r, at(r, j));
        return v;
    }

    std::vector<Scalar> col(int j) const {
        std::vector<Scalar> v(dst_);
        for (int r = 0; r < dst_; ++r) v[r] = at(r, j);
        return v;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (int(v.size()) != src_) throw DimensionMismatch("apply: vector length != src dim");
        std::vector<Scalar> out(dst_);
        for (int c = 0; c < src_; ++c) {
            if (v[c].is_zero()) continue;
            for (int r = 0; r < dst_; ++r)
                if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
        }
        return out;
    }

    SVec apply_sparse(const SVec& v) const {
        std::vector<Scalar> out(dst_);
        for (const auto& [c, val] : v)
            for (int r = 0; r < dst_; ++r)
                if (!at(r, c).is_zero()) out[r] += at(r, c) * val;
        SVec s;
        for (int r = 0; r < dst_; ++r)
            if (!out[r].is_zero()) s.emplace_back(r, std::move(out[r]));
        return s;
    }

private:
    int src_, dst_;
    std::vector<Scalar> e_;
};

// Matrix product g . f (vertical composition of diagrams).
inline LinMap compose(const LinMap& g, const LinMap& f) {
    if (f.dst_dim() != g.src_dim())
        throw DimensionMismatch("compose: inner dims " + std::to_string(g.src_dim()) +
                                " vs " + std::to_string(f.dst_dim()));
    LinMap r(g.dst_dim(), f.src_dim());
    for (int j = 0; j < f.src_dim(); ++j)
        for (int k = 0; k < f.dst_dim(); ++k) {
            const Scalar& fkj = f.at(k, j);
            if (fkj.is_zero()) continue;
            for (int i = 0; i < g.dst_dim(); ++i) {
                const Scalar& gik = g.at(i, k);
                if (gik.is_zero()) continue;
                r.at(i, j) += gik * fkj;
            }
        }
    return r;
}

inline LinMap compose(const LinMap& a, const LinMap& b, const LinMap& c) {
    return compose(a, compose(b, c));
}
inline LinMap compose(const LinMap& a, const LinMap& b, const LinMap& c, const LinMap& d) {
    return compose(a, compose(b, compose(c, d)));
}

// Kronecker product: (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j) under
// the fixed flat index convention.
inline LinMap kron(const LinMap& f, const LinMap& g) {
    LinMap r(f.dst_dim() * g.dst_dim(), f.src_dim() * g.src_dim());
    for (int fc = 0; fc < f.src_dim(); ++fc)
        for (int fr = 0; fr < f.dst_dim(); ++fr) {
            const Scalar& fv = f.at(fr, fc);
            if (fv.is_zero()) continue;
            for (int gc = 0; gc < g.src_dim(); ++gc)
                for (int gr = 0; gr < g.dst_dim(); ++gr) {
                    const Scalar& gv = g.at(gr, gc);
                    if (gv.is_zero()) continue;
                    r.at(fr * g.dst_dim() + gr, fc * g.src_dim() + gc) = fv * gv;
                }
        }
    return r;
}

inline LinMap kron(const LinMap& a, const LinMap& b, const LinMap& c) {
    return kron(a, kron(b, c));
}

// The ab x ab permutation sending e_i (x) e_j to e_j (x) e_i.
inline LinMap swap_map(int a, int b) {
    LinMap r(a * b, a * b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) r.at(j * a + i, i * b + j) = Scalar(1);
    return r;
}

// Sparse kron of two sparse vectors living in spaces of dims (a, b).
inline SVec sparse_kron(const SVec& u, const SVec& v, int b) {
    SVec r;
    r.reserve(u.size() * v.size());
    for (const auto& [i, x] : u)
        for (const auto& [j, y] : v) r.emplace_back(i * b + j, x * y);
    return r;
}

} // namespace hopfrob

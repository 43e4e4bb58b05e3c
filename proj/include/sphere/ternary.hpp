#pragma once

/// Ternary algebras with explicit structure constants: the carrier for
/// every spherical space in this library. Trilinear products, inner
/// operators, the torsor law on V^x, and sphere enumeration.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sphere/binary2d.hpp"
#include "sphere/quadratic.hpp"

namespace sphere {

/// A quadratic space plus the trilinear structure constants
/// c[i][j][k] = <e_i e_j e_k>. All products expand trilinearly over c.
template <ring_type R>
struct TernaryAlgebra {
    QuadraticSpace<R> space;
    std::vector<Vec<R>> c; // n^3 entries, index (i*n + j)*n + k
    std::string label;

    // sparse view of c, rebuilt on construction: (coordinate, coefficient)
    std::vector<std::vector<std::pair<std::size_t, typename R::Elem>>> sp;

    TernaryAlgebra(QuadraticSpace<R> s, std::vector<Vec<R>> cc, std::string lb = "")
        : space(std::move(s)), c(std::move(cc)), label(std::move(lb)) {
        const std::size_t n = space.rank;
        if (c.size() != n * n * n) throw RankMismatch("structure constant tensor has wrong size");
        sp.resize(c.size());
        for (std::size_t t = 0; t < c.size(); ++t)
            for (std::size_t d = 0; d < n; ++d)
                if (!space.ring.eq(c[t][d], space.ring.zero())) sp[t].push_back({d, c[t][d]});
    }

    const R& ring() const { return space.ring; }
    std::size_t rank() const { return space.rank; }

    const Vec<R>& cst(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t n = space.rank;
        return c[(i * n + j) * n + k];
    }
};

template <ring_type R>
Vec<R> triple(const TernaryAlgebra<R>& A, const Vec<R>& x, const Vec<R>& y, const Vec<R>& z) {
    const R& K = A.ring();
    const std::size_t n = A.rank();
    if (x.size() != n || y.size() != n || z.size() != n) throw RankMismatch();
    Vec<R> r(n, K.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (K.eq(x[i], K.zero())) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (K.eq(y[j], K.zero())) continue;
            auto xy = K.mul(x[i], y[j]);
            for (std::size_t k = 0; k < n; ++k) {
                if (K.eq(z[k], K.zero())) continue;
                auto coef = K.mul(xy, z[k]);
                for (const auto& [d, v] : A.sp[(i * n + j) * n + k])
                    r[d] = K.add(r[d], K.mul(coef, v));
            }
        }
    }
    return r;
}

/// Opposite algebra: outer arguments reversed. The dual identities of an
/// alternative triple system are the identities of the opposite product.
template <ring_type R>
TernaryAlgebra<R> opposite(const TernaryAlgebra<R>& A) {
    const std::size_t n = A.rank();
    std::vector<Vec<R>> cc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) cc[(i * n + j) * n + k] = A.cst(k, j, i);
    return {A.space, std::move(cc), A.label.empty() ? "op" : A.label + " (opposite)"};
}

/// The canonical rank-2 algebra of a binary form.
template <ring_type R>
TernaryAlgebra<R> canonical_algebra(const BinaryForm<R>& f) {
    std::vector<Vec<R>> cc(8);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) cc[(i * 2 + j) * 2 + k] = basis_product(f, i, j, k);
    const R& K = f.ring;
    return {f.space(), std::move(cc),
            "binary2d(" + K.str(f.alpha) + "," + K.str(f.beta) + "," + K.str(f.gamma) + ")"};
}

/// Left/right choice for doublings, ternary exports, and half-torsor laws.
/// right follows the x(y# z) bracketing (split-null family, left
/// half-torsor spheres), left the (x y#) z one (MT1/MT2 side).
enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

enum class InnerKind { L, R, S };

/// Matrices of the inner operators, with <xyz> = L_{x,y}(z) = R_{z,y}(x) = S_{x,z}(y).
template <ring_type R>
Mat<R> inner_operator(const TernaryAlgebra<R>& A, InnerKind kind, const Vec<R>& a, const Vec<R>& b) {
    const R& K = A.ring();
    const std::size_t n = A.rank();
    Mat<R> m(n, n, K.zero());
    for (std::size_t col = 0; col < n; ++col) {
        Vec<R> e = basis_vec(K, n, col);
        Vec<R> img;
        switch (kind) {
            case InnerKind::L: img = triple(A, a, b, e); break;       // L_{a,b} z = <abz>
            case InnerKind::R: img = triple(A, e, b, a); break;       // R_{a,b} x = <xba>
            case InnerKind::S: img = triple(A, a, e, b); break;       // S_{a,b} y = <ayb>
        }
        for (std::size_t row = 0; row < n; ++row) m.at(row, col) = img[row];
    }
    return m;
}

/// Torsor law (xyz) = <xyz>/q(y) on V^x.
template <ring_type R>
Vec<R> torsor_product(const TernaryAlgebra<R>& A, const Vec<R>& x, const Vec<R>& y, const Vec<R>& z) {
    const R& K = A.ring();
    auto qy_inv = K.invert(eval_q(A.space, y));
    return vec_scale(K, qy_inv, triple(A, x, y, z));
}

// --- carrier enumeration -----------------------------------------------------

/// Visit every vector of the module over a finite ring, in odometer order.
template <ring_type R, typename F>
void for_each_module_vector(const R& ring, std::size_t rank, F&& f) {
    static_assert(std::is_same_v<R, ZmodRing>, "module enumeration needs a finite ring");
    std::vector<std::int64_t> idx(rank, 0);
    Vec<R> v(rank, ring.zero());
    for (;;) {
        for (std::size_t i = 0; i < rank; ++i) v[i] = ring.nth(idx[i]);
        f(v);
        std::size_t k = rank;
        while (k > 0 && idx[k - 1] == ring.size() - 1) idx[--k] = 0;
        if (k == 0) return;
        ++idx[k - 1];
    }
}

/// Visit every vector with coordinates in [-box, box] (Z and Q carriers).
template <ring_type R, typename F>
void for_each_box_vector(const R& ring, std::size_t rank, std::int64_t box, F&& f) {
    std::vector<std::int64_t> idx(rank, -box);
    Vec<R> v(rank, ring.zero());
    for (;;) {
        for (std::size_t i = 0; i < rank; ++i) v[i] = ring.from_int(idx[i]);
        f(v);
        std::size_t k = rank;
        while (k > 0 && idx[k - 1] == box) idx[--k] = -box;
        if (k == 0) return;
        ++idx[k - 1];
    }
}

template <ring_type R>
Vec<R> sample_vector(const R& ring, std::size_t rank, std::mt19937_64& rng) {
    Vec<R> v(rank, ring.zero());
    for (std::size_t i = 0; i < rank; ++i) v[i] = ring.sample(rng);
    return v;
}

namespace detail {

template <ring_type R>
std::vector<Vec<R>> basis_domain(const R& ring, std::size_t n) {
    std::vector<Vec<R>> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(basis_vec(ring, n, i));
    return d;
}

/// Basis vectors plus pairwise sums: a complete evaluation domain for a
/// slot in which an identity is (at most) quadratic. A quadratic map Q
/// vanishes on the whole module iff Q(e_i) = 0 and the polarizations
/// Q(e_i+e_j) - Q(e_i) - Q(e_j) vanish, and the latter are linear
/// combinations of values on this domain.
template <ring_type R>
std::vector<Vec<R>> polarized_domain(const R& ring, std::size_t n) {
    auto d = basis_domain(ring, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d.push_back(vec_add(ring, basis_vec(ring, n, i), basis_vec(ring, n, j)));
    return d;
}

template <ring_type R>
std::vector<Vec<R>> module_domain(const R& ring, std::size_t n) {
    std::vector<Vec<R>> d;
    for_each_module_vector(ring, n, [&](const Vec<R>& v) { d.push_back(v); });
    return d;
}

template <ring_type R>
std::vector<Vec<R>> box_domain(const R& ring, std::size_t n, std::int64_t box) {
    std::vector<Vec<R>> d;
    for_each_box_vector(ring, n, box, [&](const Vec<R>& v) { d.push_back(v); });
    return d;
}

} // namespace detail

/// Whether V^x is non-empty. Finite rings get a definite answer; over Z/Q
/// a box scan can only ever certify presence, so absence inside the box is
/// reported as unknown.
enum class Presence { found, empty, unknown_beyond_box };

template <ring_type R>
Presence invertible_presence(const TernaryAlgebra<R>& A, std::int64_t box = 3) {
    const R& K = A.ring();
    bool found = false;
    auto probe = [&](const Vec<R>& v) { found = found || K.is_invertible(eval_q(A.space, v)); };
    if constexpr (std::is_same_v<R, ZmodRing>) {
        for_each_module_vector(K, A.rank(), probe);
        return found ? Presence::found : Presence::empty;
    } else {
        for_each_box_vector(K, A.rank(), box, probe);
        return found ? Presence::found : Presence::unknown_beyond_box;
    }
}

/// All x with q(x) = c in the search domain: the whole module over a finite
/// ring, the coordinate box over Z/Q. c must be invertible.
template <ring_type R>
std::vector<Vec<R>> sphere_enumerate(const TernaryAlgebra<R>& A, const typename R::Elem& c,
                                     std::int64_t box = 0) {
    const R& K = A.ring();
    if (!K.is_invertible(c)) throw NotInvertible("sphere level must be invertible");
    std::vector<Vec<R>> out;
    auto grab = [&](const Vec<R>& v) {
        if (K.eq(eval_q(A.space, v), c)) out.push_back(v);
    };
    if constexpr (std::is_same_v<R, ZmodRing>) {
        double tot = 1;
        for (std::size_t i = 0; i < A.rank(); ++i) tot *= static_cast<double>(K.size());
        if (tot > 2e8) throw InfeasibleStrategy("carrier too large to enumerate");
        for_each_module_vector(K, A.rank(), grab);
    } else {
        if (box <= 0) throw InfeasibleStrategy("sphere enumeration over an infinite ring needs a box");
        for_each_box_vector(K, A.rank(), box, grab);
    }
    return out;
}

} // namespace sphere

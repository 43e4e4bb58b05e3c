#pragma once

/// Quadratic spaces of any finite rank: form evaluation, polarization,
/// Jordan maps, the three reflection structures on V^x, and box-bounded
/// root-vector enumeration over Z.

#include <cstdint>
#include <vector>

#include "sphere/linalg.hpp"

namespace sphere {

/// Free module of finite rank with q(x) = sum_{i,j} b[i][j] x_i x_j.
/// For binary forms the coefficients are stored upper-triangular:
/// b[0][0] = alpha, b[0][1] = beta, b[1][1] = gamma.
template <ring_type R>
struct QuadraticSpace {
    R ring;
    std::size_t rank = 0;
    Mat<R> b; // rank x rank coefficient table

    QuadraticSpace(const R& r, std::size_t n) : ring(r), rank(n), b(mat_zero(r, n, n)) {}
    QuadraticSpace(const R& r, Mat<R> coef) : ring(r), rank(coef.rows), b(std::move(coef)) {
        if (b.rows != b.cols) throw RankMismatch("b table must be square");
    }

    void check(const Vec<R>& x) const {
        if (x.size() != rank) throw RankMismatch();
    }
};

/// Binary form from (alpha, beta, gamma).
template <ring_type R>
QuadraticSpace<R> binary_space(const R& ring, const typename R::Elem& alpha,
                               const typename R::Elem& beta, const typename R::Elem& gamma) {
    QuadraticSpace<R> s(ring, 2);
    s.b.at(0, 0) = alpha;
    s.b.at(0, 1) = beta;
    s.b.at(1, 1) = gamma;
    return s;
}

template <ring_type R>
typename R::Elem eval_q(const QuadraticSpace<R>& s, const Vec<R>& x) {
    s.check(x);
    auto acc = s.ring.zero();
    for (std::size_t i = 0; i < s.rank; ++i)
        for (std::size_t j = 0; j < s.rank; ++j) {
            const auto& c = s.b.at(i, j);
            if (s.ring.eq(c, s.ring.zero())) continue;
            acc = s.ring.add(acc, s.ring.mul(c, s.ring.mul(x[i], x[j])));
        }
    return acc;
}

/// b_q(x,y) = q(x+y) - q(x) - q(y). Always computed from q, never stored,
/// so form and polarization cannot drift apart.
template <ring_type R>
typename R::Elem polarize(const QuadraticSpace<R>& s, const Vec<R>& x, const Vec<R>& y) {
    s.check(x);
    s.check(y);
    auto qxy = eval_q(s, vec_add(s.ring, x, y));
    return s.ring.sub(s.ring.sub(qxy, eval_q(s, x)), eval_q(s, y));
}

/// Q_x y = b_q(x,y) x - q(x) y
template <ring_type R>
Vec<R> jordan_Q(const QuadraticSpace<R>& s, const Vec<R>& x, const Vec<R>& y) {
    auto bxy = polarize(s, x, y);
    auto qx = eval_q(s, x);
    return vec_sub(s.ring, vec_scale(s.ring, bxy, x), vec_scale(s.ring, qx, y));
}

/// D_{x,z} y = b_q(x,y) z + b_q(y,z) x - b_q(x,z) y
template <ring_type R>
Vec<R> jordan_D(const QuadraticSpace<R>& s, const Vec<R>& x, const Vec<R>& z, const Vec<R>& y) {
    auto r = vec_scale(s.ring, polarize(s, x, y), z);
    vec_axpy(s.ring, r, polarize(s, y, z), x);
    return vec_sub(s.ring, r, vec_scale(s.ring, polarize(s, x, z), y));
}

enum class ReflectionMode { s, j, sigma };

/// The three product maps on V^x. Division happens only through invert(),
/// so a non-unit q-value raises NotInvertible instead of losing exactness.
template <ring_type R>
Vec<R> reflection(const QuadraticSpace<R>& s, ReflectionMode mode, const Vec<R>& x, const Vec<R>& y) {
    const R& K = s.ring;
    auto qx = eval_q(s, x);
    switch (mode) {
        case ReflectionMode::s: {
            // s_x(y) = b_q(y,x)/q(x) x - y
            auto c = K.mul(polarize(s, y, x), K.invert(qx));
            return vec_sub(K, vec_scale(K, c, x), y);
        }
        case ReflectionMode::j: {
            // j_x(y) = q(x)/q(y) y
            if (!K.is_invertible(qx)) throw NotInvertible("q(x) not invertible");
            auto qy = eval_q(s, y);
            return vec_scale(K, K.mul(qx, K.invert(qy)), y);
        }
        case ReflectionMode::sigma: {
            // sigma_x(y) = b_q(y,x)/q(y) x - q(x)/q(y) y
            if (!K.is_invertible(qx)) throw NotInvertible("q(x) not invertible");
            auto qy_inv = K.invert(eval_q(s, y));
            auto r = vec_scale(K, K.mul(polarize(s, y, x), qy_inv), x);
            return vec_sub(K, r, vec_scale(K, K.mul(qx, qy_inv), y));
        }
    }
    throw Error("bad reflection mode");
}

// --- root vectors over Z -----------------------------------------------------

/// n_{y,x} = b_q(x,y) / q(y) for a root vector y (unique over Z).
inline ZRing::Elem root_n_coeff(const QuadraticSpace<ZRing>& s, const Vec<ZRing>& y,
                                const Vec<ZRing>& x) {
    mpz_class qy = eval_q(s, y);
    mpz_class bxy = polarize(s, x, y);
    if (qy == 0 || !mpz_divisible_p(bxy.get_mpz_t(), qy.get_mpz_t()))
        throw Error("not a root vector pairing");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), bxy.get_mpz_t(), qy.get_mpz_t());
    return q;
}

/// All y with coordinates in [-B, B], q(y) != 0, and q(y) | b_q(e_i, y) for
/// every basis vector e_i. By bilinearity of b_q in the first slot this is
/// the for-all-x condition of the root-vector set, restricted to the box.
inline std::vector<Vec<ZRing>> root_vectors(const QuadraticSpace<ZRing>& s, std::int64_t box) {
    const ZRing& K = s.ring;
    std::vector<Vec<ZRing>> out;
    Vec<ZRing> y(s.rank, K.zero());
    std::vector<std::int64_t> idx(s.rank, -box);
    for (;;) {
        for (std::size_t i = 0; i < s.rank; ++i) y[i] = K.from_int(idx[i]);
        mpz_class qy = eval_q(s, y);
        if (qy != 0) {
            bool root = true;
            for (std::size_t i = 0; i < s.rank && root; ++i) {
                mpz_class p = polarize(s, basis_vec(K, s.rank, i), y);
                root = mpz_divisible_p(p.get_mpz_t(), qy.get_mpz_t());
            }
            if (root) out.push_back(y);
        }
        std::size_t k = s.rank;
        while (k > 0 && idx[k - 1] == box) idx[--k] = -box;
        if (k == 0) break;
        ++idx[k - 1];
    }
    return out;
}

} // namespace sphere

#pragma once

/// Space-building recipes: extended Minkowski/Laguerre planes, split null
/// extensions by right modules, polarized spaces, the concrete
/// Clifford-quaternion algebra of a binary form, and the two doubling
/// constructions (binary KD and ternary ABCD).

#include <string>
#include <vector>

#include "sphere/compalg.hpp"
#include "sphere/verify.hpp"

namespace sphere {

// --- extended Minkowski / Laguerre planes ------------------------------------

/// <xyz> = phi(x) psi(y) z + psi(z) phi(y) x - phi(x) psi(z) y on K^n,
/// with q(x) = phi(x) psi(x).
template <ring_type R>
TernaryAlgebra<R> minkowski_extension(const R& K, const Vec<R>& phi, const Vec<R>& psi) {
    const std::size_t n = phi.size();
    if (psi.size() != n || n < 1) throw RankMismatch("covectors must have equal positive rank");
    QuadraticSpace<R> space(K, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) space.b.at(i, j) = K.mul(phi[i], psi[j]);

    std::vector<Vec<R>> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<R> v(n, K.zero());
                v[k] = K.add(v[k], K.mul(phi[i], psi[j]));
                v[i] = K.add(v[i], K.mul(psi[k], phi[j]));
                v[j] = K.sub(v[j], K.mul(phi[i], psi[k]));
                c[(i * n + j) * n + k] = std::move(v);
            }
    return {std::move(space), std::move(c), "minkowski(n=" + std::to_string(n) + ")"};
}

// --- split null extensions ----------------------------------------------------

/// A right module over a group spherical space: matrices rho(R_{e_i,e_j})
/// acting on a rank-m carrier. Validation checks the spiration composition
/// rule rho(R_{<abc>,d}) = rho(R_{c,b}) rho(R_{a,d}) on basis instances.
template <ring_type R>
struct RightModuleAction {
    TernaryAlgebra<R> base;
    std::size_t m = 0;
    std::vector<Mat<R>> rho; // n*n entries, rho[a*n+b] = action of R_{e_a,e_b}

    RightModuleAction(TernaryAlgebra<R> base_, std::size_t m_, std::vector<Mat<R>> rho_)
        : base(std::move(base_)), m(m_), rho(std::move(rho_)) {
        const std::size_t n = base.rank();
        if (rho.size() != n * n) throw RankMismatch("action table has wrong size");
        for (const auto& mt : rho)
            if (mt.rows != m || mt.cols != m) throw RankMismatch("action matrix has wrong shape");
    }

    Mat<R> of(const Vec<R>& a, const Vec<R>& b) const {
        const R& K = base.ring();
        const std::size_t n = base.rank();
        Mat<R> acc = mat_zero(K, m, m);
        for (std::size_t i = 0; i < n; ++i) {
            if (K.eq(a[i], K.zero())) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (K.eq(b[j], K.zero())) continue;
                acc = mat_add(K, acc, mat_scale(K, K.mul(a[i], b[j]), rho[i * n + j]));
            }
        }
        return acc;
    }

    bool respects_composition() const {
        const R& K = base.ring();
        const std::size_t n = base.rank();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t cidx = 0; cidx < n; ++cidx)
                    for (std::size_t d = 0; d < n; ++d) {
                        const Vec<R>& abc = base.cst(a, b, cidx);
                        Mat<R> lhs = mat_zero(K, m, m);
                        for (std::size_t t = 0; t < n; ++t)
                            if (!K.eq(abc[t], K.zero()))
                                lhs = mat_add(K, lhs, mat_scale(K, abc[t], rho[t * n + d]));
                        Mat<R> rhs = mat_mul(K, rho[cidx * n + b], rho[a * n + d]);
                        if (!mat_eq(K, lhs, rhs)) return false;
                    }
        return true;
    }
};

/// W = 0: the extension degenerates to the base itself.
template <ring_type R>
RightModuleAction<R> zero_action(const TernaryAlgebra<R>& base) {
    const std::size_t n = base.rank();
    std::vector<Mat<R>> rho(n * n, Mat<R>(0, 0, base.ring().zero()));
    return {base, 0, std::move(rho)};
}

/// W = V with rho(R_{a,b}) the right spirations of the base itself.
template <ring_type R>
RightModuleAction<R> adjoint_action(const TernaryAlgebra<R>& base) {
    const R& K = base.ring();
    const std::size_t n = base.rank();
    std::vector<Mat<R>> rho;
    rho.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            rho.push_back(inner_operator(base, InnerKind::R, basis_vec(K, n, a), basis_vec(K, n, b)));
    return {base, n, std::move(rho)};
}

/// V0 + W with q extended by zero and
/// <(x0,x1)(y0,y1)(z0,z1)> = (<x0 y0 z0>, R_{y0,z0} x1 - R_{x0,z0} y1 + R_{x0,y0} z1).
template <ring_type R>
TernaryAlgebra<R> split_null_extension(const RightModuleAction<R>& act) {
    const TernaryAlgebra<R>& base = act.base;
    const R& K = base.ring();
    const std::size_t n = base.rank(), m = act.m, N = n + m;

    QuadraticSpace<R> space(K, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) space.b.at(i, j) = base.space.b.at(i, j);

    auto cidx = [N](std::size_t i, std::size_t j, std::size_t k) { return (i * N + j) * N + k; };
    std::vector<Vec<R>> c(N * N * N, Vec<R>(N, K.zero()));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Vec<R>& v = base.cst(i, j, k);
                for (std::size_t d = 0; d < n; ++d) c[cidx(i, j, k)][d] = v[d];
            }
            // z1-slot: + R_{x0,y0} z1
            const Mat<R>& rij = act.rho[i * n + j];
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t d = 0; d < m; ++d)
                    c[cidx(i, j, n + a)][n + d] = rij.at(d, a);
            // y1-slot: - R_{x0,z0} y1   (here i = x0 index, j = z0 index)
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t d = 0; d < m; ++d)
                    c[cidx(i, n + a, j)][n + d] = K.neg(rij.at(d, a));
            // x1-slot: + R_{y0,z0} x1   (here i = y0 index, j = z0 index)
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t d = 0; d < m; ++d)
                    c[cidx(n + a, i, j)][n + d] = rij.at(d, a);
        }
    return {std::move(space), std::move(c), base.label + " (+) W[" + std::to_string(m) + "]"};
}

// --- polarized spaces ----------------------------------------------------------

/// Polarized carrier V1 + V2 with q((x,y)) = b(x,y) and the product forced
/// by the Kirmse identities:
///   V1-part: b(z1,y2)x1 - b(z1,x2)y1 + b(y1,x2)z1
///   V2-part: b(y1,z2)x2 - b(x1,z2)y2 + b(x1,y2)z2
template <ring_type R>
TernaryAlgebra<R> polarized_space(const R& K, const Mat<R>& b) {
    const std::size_t n1 = b.rows, n2 = b.cols, N = n1 + n2;
    if (n1 < 1 || n2 < 1) throw RankMismatch("polarized factors need positive rank");

    QuadraticSpace<R> space(K, N);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) space.b.at(i, n1 + j) = b.at(i, j);

    auto p1 = [&](const Vec<R>& v) { return Vec<R>(v.begin(), v.begin() + n1); };
    auto p2 = [&](const Vec<R>& v) { return Vec<R>(v.begin() + n1, v.end()); };
    auto pair = [&](const Vec<R>& u1, const Vec<R>& u2) {
        auto acc = K.zero();
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                acc = K.add(acc, K.mul(b.at(i, j), K.mul(u1[i], u2[j])));
        return acc;
    };

    std::vector<Vec<R>> c(N * N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k) {
                auto x = basis_vec(K, N, i), y = basis_vec(K, N, j), z = basis_vec(K, N, k);
                auto x1 = p1(x), x2 = p2(x), y1 = p1(y), y2 = p2(y), z1 = p1(z), z2 = p2(z);
                Vec<R> v(N, K.zero());
                Vec<R> top = vec_scale(K, pair(z1, y2), x1);
                vec_axpy(K, top, K.neg(pair(z1, x2)), y1);
                vec_axpy(K, top, pair(y1, x2), z1);
                Vec<R> bot = vec_scale(K, pair(y1, z2), x2);
                vec_axpy(K, bot, K.neg(pair(x1, z2)), y2);
                vec_axpy(K, bot, pair(x1, y2), z2);
                for (std::size_t d = 0; d < n1; ++d) v[d] = top[d];
                for (std::size_t d = 0; d < n2; ++d) v[n1 + d] = bot[d];
                c[(i * N + j) * N + k] = std::move(v);
            }
    return {std::move(space), std::move(c),
            "polarized(" + std::to_string(n1) + "x" + std::to_string(n2) + ")"};
}

/// Condition (BA): the alternating sum
///   sum_{sigma in S3} sgn(sigma) b(y1, z_{s(1)}) b(y2, z_{s(2)}) z_{s(3)}
/// vanishes for basis tuples in both orientations. Equivalent to
/// para-associativity of the polarized product.
template <ring_type R>
VerificationReport<R> check_BA(const R& K, const Mat<R>& b) {
    const std::size_t n1 = b.rows, n2 = b.cols;
    VerificationReport<R> rep;
    rep.identity = "BA";
    rep.strategy = "exhaustive-basis";
    rep.holds = true;

    static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    static constexpr bool odd[6] = {false, false, false, true, true, true};

    // orientation 0: y in V1 basis pairs, z in V2 basis triples (pairing b);
    // orientation 1: roles swapped (pairing transposed)
    for (int orient = 0; orient < 2 && rep.holds; ++orient) {
        const std::size_t ny = orient == 0 ? n1 : n2;
        const std::size_t nz = orient == 0 ? n2 : n1;
        auto B = [&](std::size_t yi, std::size_t zj) {
            return orient == 0 ? b.at(yi, zj) : b.at(zj, yi);
        };
        for (std::size_t y1 = 0; y1 < ny && rep.holds; ++y1)
            for (std::size_t y2 = 0; y2 < ny && rep.holds; ++y2)
                for (std::size_t z1 = 0; z1 < nz && rep.holds; ++z1)
                    for (std::size_t z2 = 0; z2 < nz && rep.holds; ++z2)
                        for (std::size_t z3 = 0; z3 < nz && rep.holds; ++z3) {
                            const std::size_t zi[3] = {z1, z2, z3};
                            Vec<R> acc(nz, K.zero());
                            for (int p = 0; p < 6; ++p) {
                                auto coef = K.mul(B(y1, zi[perms[p][0]]), B(y2, zi[perms[p][1]]));
                                if (odd[p]) coef = K.neg(coef);
                                acc[zi[perms[p][2]]] = K.add(acc[zi[perms[p][2]]], coef);
                            }
                            if (!vec_is_zero(K, acc)) {
                                rep.holds = false;
                                std::ostringstream os;
                                os << "BA fails at orientation " << orient << " y=(" << y1 << ","
                                   << y2 << ") z=(" << z1 << "," << z2 << "," << z3 << ")";
                                rep.witness_text = os.str();
                            }
                        }
    }
    return rep;
}

// --- concrete Clifford-quaternion algebra --------------------------------------

/// H_q = C_q^L + V for a binary form, with coordinates (f0, f1, v1, v2)
/// relative to the basis {I, R_12} of the spiration algebra and {e1, e2}
/// of V. Product (f,v)(g,w) = (fg + R_{v,w}, fw + g# v); unital associative
/// with scalar involution (f,v)# = (f#, -v) and norm N = det(f) - q(v).
template <ring_type R>
CompositionAlgebra<R> clifford_quaternion(const BinaryForm<R>& f) {
    const R& K = f.ring;
    if (spiration_generators_dependent(f))
        throw DependentGenerators("{I, R_12} dependent over this ring");
    const auto al = f.alpha, be = f.beta, ga = f.gamma;
    auto mul_even = [&](const typename R::Elem& f0, const typename R::Elem& f1,
                        const typename R::Elem& g0, const typename R::Elem& g1) {
        // (f0 + f1 X)(g0 + g1 X) with X^2 = beta X - alpha gamma
        auto h0 = K.sub(K.mul(f0, g0), K.mul(K.mul(al, ga), K.mul(f1, g1)));
        auto h1 = K.add(K.add(K.mul(f0, g1), K.mul(f1, g0)), K.mul(be, K.mul(f1, g1)));
        return std::pair{h0, h1};
    };
    auto r12_apply = [&](const typename R::Elem& w1, const typename R::Elem& w2) {
        // R_12 = [[beta, gamma], [-alpha, 0]]
        return std::pair{K.add(K.mul(be, w1), K.mul(ga, w2)), K.neg(K.mul(al, w1))};
    };
    // full product in coordinates
    auto mul = [&](const Vec<R>& x, const Vec<R>& y) {
        auto [e0, e1] = mul_even(x[0], x[1], y[0], y[1]);
        // R_{v,w} = b(w,v) I + [v,w] R_12
        auto bwv = K.add(K.mul(al, K.mul(y[2], x[2])),
                         K.add(K.mul(be, K.mul(y[2], x[3])), K.mul(ga, K.mul(y[3], x[3]))));
        auto vw = K.sub(K.mul(x[2], y[3]), K.mul(x[3], y[2]));
        e0 = K.add(e0, bwv);
        e1 = K.add(e1, vw);
        // f w + g# v, with g# = (g0 + beta g1) - g1 X
        auto [rw1, rw2] = r12_apply(y[2], y[3]);
        auto u1 = K.add(K.mul(x[0], y[2]), K.mul(x[1], rw1));
        auto u2 = K.add(K.mul(x[0], y[3]), K.mul(x[1], rw2));
        auto gs0 = K.add(y[0], K.mul(be, y[1]));
        auto [rv1, rv2] = r12_apply(x[2], x[3]);
        u1 = K.add(u1, K.sub(K.mul(gs0, x[2]), K.mul(y[1], rv1)));
        u2 = K.add(u2, K.sub(K.mul(gs0, x[3]), K.mul(y[1], rv2)));
        return Vec<R>{e0, e1, u1, u2};
    };

    std::vector<Vec<R>> prod(16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            prod[i * 4 + j] = mul(basis_vec(K, 4, i), basis_vec(K, 4, j));

    Vec<R> unit{K.one(), K.zero(), K.zero(), K.zero()};
    Mat<R> sh = mat_zero(K, 4, 4);
    sh.at(0, 0) = K.one();
    sh.at(0, 1) = be;
    sh.at(1, 1) = K.neg(K.one());
    sh.at(2, 2) = K.neg(K.one());
    sh.at(3, 3) = K.neg(K.one());

    QuadraticSpace<R> nm(K, 4);
    nm.b.at(0, 0) = K.one();
    nm.b.at(0, 1) = be;
    nm.b.at(1, 1) = K.mul(al, ga);
    nm.b.at(2, 2) = K.neg(al);
    nm.b.at(2, 3) = K.neg(be);
    nm.b.at(3, 3) = K.neg(ga);
    return {K, std::move(prod), std::move(unit), std::move(sh), std::move(nm),
            "cliffordq(" + K.str(al) + "," + K.str(be) + "," + K.str(ga) + ")"};
}

// --- Cayley-Dickson doubling ----------------------------------------------------

/// Binary KD double. Side::right is the convention
///   (x0,x1)(z0,z1) = (x0 z0 + mu z1# x1, z1 x0 + x1 z0#),
/// Side::left the dual one
///   (x0,x1)(z0,z1) = (x0 z0 + mu z1 x1#, x0# z1 + z0 x1).
/// Involution (x0,x1)# = (x0#, -x1); norm N = N0 (+) (-mu) N0. mu may be 0.
template <ring_type R>
CompositionAlgebra<R> kd_double(const CompositionAlgebra<R>& A, const typename R::Elem& mu,
                                Side side) {
    const R& K = A.ring;
    const std::size_t n = A.n, N = 2 * n;

    auto mul = [&](const Vec<R>& x, const Vec<R>& z) {
        Vec<R> x0(x.begin(), x.begin() + n), x1(x.begin() + n, x.end());
        Vec<R> z0(z.begin(), z.begin() + n), z1(z.begin() + n, z.end());
        Vec<R> even, odd;
        if (side == Side::right) {
            even = vec_add(K, A.mul(x0, z0), vec_scale(K, mu, A.mul(A.conj(z1), x1)));
            odd = vec_add(K, A.mul(z1, x0), A.mul(x1, A.conj(z0)));
        } else {
            even = vec_add(K, A.mul(x0, z0), vec_scale(K, mu, A.mul(z1, A.conj(x1))));
            odd = vec_add(K, A.mul(A.conj(x0), z1), A.mul(z0, x1));
        }
        Vec<R> r(N, K.zero());
        for (std::size_t i = 0; i < n; ++i) { r[i] = even[i]; r[n + i] = odd[i]; }
        return r;
    };

    std::vector<Vec<R>> prod(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) prod[i * N + j] = mul(basis_vec(K, N, i), basis_vec(K, N, j));

    Vec<R> unit(N, K.zero());
    for (std::size_t i = 0; i < n; ++i) unit[i] = A.unit[i];

    Mat<R> sh = mat_zero(K, N, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sh.at(i, j) = A.sharp.at(i, j);
    for (std::size_t i = 0; i < n; ++i) sh.at(n + i, n + i) = K.neg(K.one());

    QuadraticSpace<R> nm(K, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            nm.b.at(i, j) = A.norm.b.at(i, j);
            nm.b.at(n + i, n + j) = K.neg(K.mul(mu, A.norm.b.at(i, j)));
        }
    return {K, std::move(prod), std::move(unit), std::move(sh), std::move(nm),
            "KD(" + A.label + ", mu=" + K.str(mu) + ", " + side_name(side) + ")"};
}

/// Ternary (base point free) doubling of a group spherical algebra.
/// Side::right produces the x(y# z)-pattern double satisfying (A1)-(A3),
/// Side::left the (x y#)z-pattern satisfying the dual identities.
/// q~((x0,x1)) = q(x0) - mu q(x1); mu = 0 is the split null extension by
/// the adjoint module.
template <ring_type R>
TernaryAlgebra<R> abcd_double(const TernaryAlgebra<R>& A, const typename R::Elem& mu, Side side) {
    const R& K = A.ring();
    const std::size_t n = A.rank(), N = 2 * n;

    auto T = [&](const Vec<R>& a, const Vec<R>& b, const Vec<R>& c) { return triple(A, a, b, c); };
    auto trip = [&](const Vec<R>& x, const Vec<R>& y, const Vec<R>& z) {
        Vec<R> x0(x.begin(), x.begin() + n), x1(x.begin() + n, x.end());
        Vec<R> y0(y.begin(), y.begin() + n), y1(y.begin() + n, y.end());
        Vec<R> z0(z.begin(), z.begin() + n), z1(z.begin() + n, z.end());
        Vec<R> even, odd;
        if (side == Side::right) {
            even = T(x0, y0, z0);
            vec_axpy(K, even, K.neg(mu), T(x0, z1, y1));
            vec_axpy(K, even, mu, T(y0, z1, x1));
            vec_axpy(K, even, K.neg(mu), T(z0, y1, x1));
            odd = T(x1, z0, y0);
            odd = vec_sub(K, odd, T(y1, z0, x0));
            odd = vec_add(K, odd, T(z1, y0, x0));
            vec_axpy(K, odd, K.neg(mu), T(x1, y1, z1));
        } else {
            even = T(x0, y0, z0);
            vec_axpy(K, even, K.neg(mu), T(y1, x1, z0));
            vec_axpy(K, even, mu, T(z1, x1, y0));
            vec_axpy(K, even, K.neg(mu), T(z1, y1, x0));
            odd = T(y0, x0, z1);
            odd = vec_sub(K, odd, T(z0, x0, y1));
            odd = vec_add(K, odd, T(z0, y0, x1));
            vec_axpy(K, odd, K.neg(mu), T(x1, y1, z1));
        }
        Vec<R> r(N, K.zero());
        for (std::size_t i = 0; i < n; ++i) { r[i] = even[i]; r[n + i] = odd[i]; }
        return r;
    };

    std::vector<Vec<R>> c(N * N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k)
                c[(i * N + j) * N + k] =
                    trip(basis_vec(K, N, i), basis_vec(K, N, j), basis_vec(K, N, k));

    QuadraticSpace<R> space(K, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            space.b.at(i, j) = A.space.b.at(i, j);
            space.b.at(n + i, n + j) = K.neg(K.mul(mu, A.space.b.at(i, j)));
        }
    return {std::move(space), std::move(c),
            "ABCD(" + A.label + ", mu=" + K.str(mu) + ", " + side_name(side) + ")"};
}

} // namespace sphere

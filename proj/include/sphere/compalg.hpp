#pragma once

/// Unital binary algebras with involution (generalized composition
/// algebras): the homotope view of a spherical space, structural checks,
/// and the round trip back to ternary products.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sphere/ternary.hpp"

namespace sphere {

template <ring_type R>
struct CompositionAlgebra {
    R ring;
    std::size_t n = 0;
    std::vector<Vec<R>> prod; // n*n entries, prod[i*n+j] = e_i e_j
    Vec<R> unit;
    Mat<R> sharp;             // involution, applied as a matrix
    QuadraticSpace<R> norm;   // N with x x# = N(x) 1
    std::string label;

    // sparse product table
    std::vector<std::vector<std::pair<std::size_t, typename R::Elem>>> sp;

    CompositionAlgebra(R K, std::vector<Vec<R>> p, Vec<R> u, Mat<R> sh, QuadraticSpace<R> nm,
                       std::string lb = "")
        : ring(K), n(u.size()), prod(std::move(p)), unit(std::move(u)), sharp(std::move(sh)),
          norm(std::move(nm)), label(std::move(lb)) {
        sp.resize(prod.size());
        for (std::size_t t = 0; t < prod.size(); ++t)
            for (std::size_t d = 0; d < n; ++d)
                if (!ring.eq(prod[t][d], ring.zero())) sp[t].push_back({d, prod[t][d]});
    }

    Vec<R> mul(const Vec<R>& x, const Vec<R>& z) const {
        if (x.size() != n || z.size() != n) throw RankMismatch();
        Vec<R> r(n, ring.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (ring.eq(x[i], ring.zero())) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (ring.eq(z[j], ring.zero())) continue;
                auto coef = ring.mul(x[i], z[j]);
                for (const auto& [d, v] : sp[i * n + j]) r[d] = ring.add(r[d], ring.mul(coef, v));
            }
        }
        return r;
    }

    Vec<R> conj(const Vec<R>& x) const { return mat_apply(ring, sharp, x); }
    typename R::Elem N(const Vec<R>& x) const { return eval_q(norm, x); }
    typename R::Elem trace(const Vec<R>& x) const {
        // t(x) 1 = x + x#; callers only use it where unit extraction succeeds
        auto s = vec_add(ring, x, conj(x));
        auto lam = scalar_of(ring, s, unit);
        if (!lam) throw Error("trace is not scalar");
        return *lam;
    }
};

/// The rank-1 algebra K itself, with trivial involution and norm x^2.
template <ring_type R>
CompositionAlgebra<R> unarion_algebra(const R& K) {
    std::vector<Vec<R>> prod{Vec<R>{K.one()}};
    QuadraticSpace<R> nm(K, 1);
    nm.b.at(0, 0) = K.one();
    return {K, std::move(prod), Vec<R>{K.one()}, mat_identity(K, 1), std::move(nm), "unarion"};
}

/// Homotope at a base point e with q(e) invertible:
/// x . z = <x e z>/q(e), unit e, involution s_e, norm q/q(e).
template <ring_type R>
CompositionAlgebra<R> homotope(const TernaryAlgebra<R>& A, const Vec<R>& e) {
    const R& K = A.ring();
    const std::size_t n = A.rank();
    auto qe = eval_q(A.space, e);
    auto qe_inv = K.invert(qe);

    std::vector<Vec<R>> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            prod[i * n + j] =
                vec_scale(K, qe_inv, triple(A, basis_vec(K, n, i), e, basis_vec(K, n, j)));

    Mat<R> sh(n, n, K.zero());
    for (std::size_t j = 0; j < n; ++j) {
        auto ej = basis_vec(K, n, j);
        auto img = vec_scale(K, K.mul(polarize(A.space, ej, e), qe_inv), e);
        img = vec_sub(K, img, ej);
        for (std::size_t i = 0; i < n; ++i) sh.at(i, j) = img[i];
    }

    QuadraticSpace<R> nm(K, A.rank());
    nm.b = mat_scale(K, qe_inv, A.space.b);
    return {K, std::move(prod), e, std::move(sh), std::move(nm),
            A.label.empty() ? "homotope" : A.label + " @ " + vec_str(K, e)};
}

/// Rebuild the ternary product <xyz> = lambda x (y# z) (right) or
/// lambda (x y#) z (left) with q = lambda N. For associative algebras the
/// two coincide; for the homotope round trip take lambda = q(e).
template <ring_type R>
TernaryAlgebra<R> ternary_of(const CompositionAlgebra<R>& A, const typename R::Elem& lambda,
                             Side side = Side::right) {
    const R& K = A.ring;
    const std::size_t n = A.n;
    std::vector<Vec<R>> c(n * n * n);
    for (std::size_t j = 0; j < n; ++j) {
        auto js = A.conj(basis_vec(K, n, j));
        for (std::size_t i = 0; i < n; ++i) {
            auto ei = basis_vec(K, n, i);
            for (std::size_t k = 0; k < n; ++k) {
                auto ek = basis_vec(K, n, k);
                Vec<R> v = side == Side::right ? A.mul(ei, A.mul(js, ek)) : A.mul(A.mul(ei, js), ek);
                c[(i * n + j) * n + k] = vec_scale(K, lambda, v);
            }
        }
    }
    QuadraticSpace<R> q(K, n);
    q.b = mat_scale(K, lambda, A.norm.b);
    return {std::move(q), std::move(c), A.label + " as ternary(" + side_name(side) + ")"};
}

// --- structural checks -------------------------------------------------------

template <ring_type R>
bool is_unit_element(const CompositionAlgebra<R>& A) {
    const R& K = A.ring;
    for (std::size_t i = 0; i < A.n; ++i) {
        auto e = basis_vec(K, A.n, i);
        if (!vec_eq(K, A.mul(A.unit, e), e) || !vec_eq(K, A.mul(e, A.unit), e)) return false;
    }
    return true;
}

/// Associativity on basis triples (exhaustive by trilinearity).
template <ring_type R>
std::optional<std::array<std::size_t, 3>> associativity_witness(const CompositionAlgebra<R>& A) {
    const R& K = A.ring;
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j)
            for (std::size_t k = 0; k < A.n; ++k) {
                auto a = basis_vec(K, A.n, i), b = basis_vec(K, A.n, j), c = basis_vec(K, A.n, k);
                if (!vec_eq(K, A.mul(A.mul(a, b), c), A.mul(a, A.mul(b, c))))
                    return std::array<std::size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

template <ring_type R>
bool is_associative(const CompositionAlgebra<R>& A) { return !associativity_witness(A); }

template <ring_type R>
std::optional<std::array<std::size_t, 2>> commutativity_witness(const CompositionAlgebra<R>& A) {
    const R& K = A.ring;
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = i + 1; j < A.n; ++j) {
            auto a = basis_vec(K, A.n, i), b = basis_vec(K, A.n, j);
            if (!vec_eq(K, A.mul(a, b), A.mul(b, a))) return std::array<std::size_t, 2>{i, j};
        }
    return std::nullopt;
}

template <ring_type R>
bool is_commutative(const CompositionAlgebra<R>& A) { return !commutativity_witness(A); }

/// Alternativity. The associator is trilinear, so x(xy) = (xx)y for all x
/// reduces to vanishing at basis vectors and vanishing bilinear polarization
/// at basis pairs; likewise on the right.
template <ring_type R>
bool is_alternative(const CompositionAlgebra<R>& A) {
    const R& K = A.ring;
    auto assoc = [&](const Vec<R>& a, const Vec<R>& b, const Vec<R>& c) {
        return vec_sub(K, A.mul(A.mul(a, b), c), A.mul(a, A.mul(b, c)));
    };
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t k = 0; k < A.n; ++k) {
            auto ei = basis_vec(K, A.n, i), ek = basis_vec(K, A.n, k);
            if (!vec_is_zero(K, assoc(ei, ei, ek))) return false;
            if (!vec_is_zero(K, assoc(ek, ei, ei))) return false;
            for (std::size_t j = i + 1; j < A.n; ++j) {
                auto ej = basis_vec(K, A.n, j);
                if (!vec_is_zero(K, vec_add(K, assoc(ei, ej, ek), assoc(ej, ei, ek)))) return false;
                if (!vec_is_zero(K, vec_add(K, assoc(ek, ei, ej), assoc(ek, ej, ei)))) return false;
            }
        }
    return true;
}

/// Moufang identity (ax)(ya) = a((xy)a). Quadratic in a and bilinear in
/// (x,y), so the polarized domain in a with basis (x,y) decides it for the
/// whole module.
template <ring_type R>
bool moufang_identity_holds(const CompositionAlgebra<R>& A) {
    const R& K = A.ring;
    auto check = [&](const Vec<R>& a, const Vec<R>& x, const Vec<R>& y) {
        return vec_eq(K, A.mul(A.mul(a, x), A.mul(y, a)), A.mul(a, A.mul(A.mul(x, y), a)));
    };
    auto dom = detail::polarized_domain(K, A.n);
    for (const auto& a : dom)
        for (std::size_t i = 0; i < A.n; ++i)
            for (std::size_t j = 0; j < A.n; ++j)
                if (!check(a, basis_vec(K, A.n, i), basis_vec(K, A.n, j))) return false;
    return true;
}

/// Moufang identity checked pointwise for every a in the given set (with
/// basis x,y, which by bilinearity covers all x,y in the module).
template <ring_type R>
bool moufang_identity_on_set(const CompositionAlgebra<R>& A, const std::vector<Vec<R>>& as) {
    const R& K = A.ring;
    for (const auto& a : as)
        for (std::size_t i = 0; i < A.n; ++i)
            for (std::size_t j = 0; j < A.n; ++j) {
                auto x = basis_vec(K, A.n, i), y = basis_vec(K, A.n, j);
                if (!vec_eq(K, A.mul(A.mul(a, x), A.mul(y, a)), A.mul(a, A.mul(A.mul(x, y), a))))
                    return false;
            }
    return true;
}

/// Scalar involution: # is an involutive anti-automorphism and
/// x + x# and x x# are multiples of the unit, the latter equal to N(x) 1.
template <ring_type R>
bool has_scalar_involution(const CompositionAlgebra<R>& A) {
    const R& K = A.ring;
    // order two
    if (!mat_eq(K, mat_mul(K, A.sharp, A.sharp), mat_identity(K, A.n))) return false;
    // anti-automorphism on basis pairs (bilinear, hence exhaustive)
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) {
            auto a = basis_vec(K, A.n, i), b = basis_vec(K, A.n, j);
            if (!vec_eq(K, A.conj(A.mul(a, b)), A.mul(A.conj(b), A.conj(a)))) return false;
        }
    // x + x# scalar: linear, basis suffices
    for (std::size_t i = 0; i < A.n; ++i) {
        auto e = basis_vec(K, A.n, i);
        if (!scalar_of(K, vec_add(K, e, A.conj(e)), A.unit)) return false;
    }
    // x x# = N(x) unit = x# x: quadratic, polarized domain suffices
    for (const auto& x : detail::polarized_domain(K, A.n)) {
        auto xs = A.conj(x);
        auto want = vec_scale(K, A.N(x), A.unit);
        if (!vec_eq(K, A.mul(x, xs), want) || !vec_eq(K, A.mul(xs, x), want)) return false;
    }
    return true;
}

} // namespace sphere

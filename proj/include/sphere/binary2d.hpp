#pragma once

/// The canonical trilinear product carried by every rank-2 quadratic space,
/// its basis product tables, and the spiration / spiflection 2x2 matrix
/// calculus.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sphere/quadratic.hpp"

namespace sphere {

template <ring_type R>
struct BinaryForm {
    R ring;
    typename R::Elem alpha, beta, gamma;

    QuadraticSpace<R> space() const { return binary_space(ring, alpha, beta, gamma); }

    /// The non-symmetric bilinear b with b(x,x) = q(x):
    /// b(x,y) = alpha x1 y1 + beta x1 y2 + gamma x2 y2.
    typename R::Elem b(const Vec<R>& x, const Vec<R>& y) const {
        auto t = ring.mul(alpha, ring.mul(x[0], y[0]));
        t = ring.add(t, ring.mul(beta, ring.mul(x[0], y[1])));
        return ring.add(t, ring.mul(gamma, ring.mul(x[1], y[1])));
    }

    typename R::Elem q(const Vec<R>& x) const { return b(x, x); }
};

/// Symplectic bracket [x,y] = x1 y2 - x2 y1.
template <ring_type R>
typename R::Elem sympl(const R& ring, const Vec<R>& x, const Vec<R>& y) {
    return ring.sub(ring.mul(x[0], y[1]), ring.mul(x[1], y[0]));
}

/// The unique q-compatible trilinear product on a rank-2 space,
/// componentwise:
///   <xyz>_1 = a x1 y1 z1 + b x1 y2 z1 + c (x1 y2 z2 + x2 y2 z1 - x2 y1 z2)
///   <xyz>_2 = c x2 y2 z2 + b x2 y1 z2 + a (x1 y1 z2 + x2 y1 z1 - x1 y2 z1)
template <ring_type R>
Vec<R> canonical_ternary(const BinaryForm<R>& f, const Vec<R>& x, const Vec<R>& y, const Vec<R>& z) {
    const R& K = f.ring;
    if (x.size() != 2 || y.size() != 2 || z.size() != 2) throw RankMismatch();
    auto mul3 = [&](const typename R::Elem& a, const typename R::Elem& b2,
                    const typename R::Elem& c) { return K.mul(a, K.mul(b2, c)); };
    auto c1 = K.mul(f.alpha, mul3(x[0], y[0], z[0]));
    c1 = K.add(c1, K.mul(f.beta, mul3(x[0], y[1], z[0])));
    auto g1 = K.add(mul3(x[0], y[1], z[1]), mul3(x[1], y[1], z[0]));
    g1 = K.sub(g1, mul3(x[1], y[0], z[1]));
    c1 = K.add(c1, K.mul(f.gamma, g1));

    auto c2 = K.mul(f.gamma, mul3(x[1], y[1], z[1]));
    c2 = K.add(c2, K.mul(f.beta, mul3(x[1], y[0], z[1])));
    auto g2 = K.add(mul3(x[0], y[0], z[1]), mul3(x[1], y[0], z[0]));
    g2 = K.sub(g2, mul3(x[0], y[1], z[0]));
    c2 = K.add(c2, K.mul(f.alpha, g2));
    return {c1, c2};
}

/// <e_i e_j e_k> for i,j,k in {0,1} — the eight basis products.
template <ring_type R>
Vec<R> basis_product(const BinaryForm<R>& f, int i, int j, int k) {
    const R& K = f.ring;
    return canonical_ternary(f, basis_vec(K, 2, i), basis_vec(K, 2, j), basis_vec(K, 2, k));
}

/// The common value of the three bracketings of <e_{t0} .. e_{t4}>.
/// Throws if the bracketings disagree (they never do; the check is the point).
template <ring_type R>
Vec<R> five_fold(const BinaryForm<R>& f, const std::array<int, 5>& t) {
    const R& K = f.ring;
    auto e = [&](int i) { return basis_vec(K, 2, i); };
    auto b1 = canonical_ternary(f, canonical_ternary(f, e(t[0]), e(t[1]), e(t[2])), e(t[3]), e(t[4]));
    auto b2 = canonical_ternary(f, e(t[0]), canonical_ternary(f, e(t[3]), e(t[2]), e(t[1])), e(t[4]));
    auto b3 = canonical_ternary(f, e(t[0]), e(t[1]), canonical_ternary(f, e(t[2]), e(t[3]), e(t[4])));
    if (!vec_eq(K, b1, b2) || !vec_eq(K, b1, b3)) throw Error("five-fold bracketings disagree");
    return b1;
}

// --- 2x2 matrix calculus -----------------------------------------------------

template <ring_type R>
Mat<R> mat2(const R& ring, const typename R::Elem& a, const typename R::Elem& b,
            const typename R::Elem& c, const typename R::Elem& d) {
    Mat<R> m(2, 2, ring.zero());
    m.at(0, 0) = a; m.at(0, 1) = b; m.at(1, 0) = c; m.at(1, 1) = d;
    return m;
}

template <ring_type R>
typename R::Elem det2(const R& ring, const Mat<R>& m) {
    return ring.sub(ring.mul(m.at(0, 0), m.at(1, 1)), ring.mul(m.at(0, 1), m.at(1, 0)));
}

/// X# = tr(X) I - X, so that X X# = det(X) I.
template <ring_type R>
Mat<R> adjugate(const R& ring, const Mat<R>& m) {
    return mat2(ring, m.at(1, 1), ring.neg(m.at(0, 1)), ring.neg(m.at(1, 0)), m.at(0, 0));
}

/// Matrix of the spiration z |-> <xyz>:
/// [[b(x,y), gamma [x,y]], [alpha [y,x], b(y,x)]].
template <ring_type R>
Mat<R> spiration_R(const BinaryForm<R>& f, const Vec<R>& x, const Vec<R>& y) {
    const R& K = f.ring;
    auto s = sympl(K, x, y);
    return mat2(K, f.b(x, y), K.mul(f.gamma, s), K.mul(f.alpha, K.neg(s)), f.b(y, x));
}

/// Matrix of the spiflection y |-> <xyz>:
/// [[a x1 z1 - c x2 z2, b x1 z1 + c (x1 z2 + x2 z1)],
///  [b x2 z2 + a (x1 z2 + x2 z1), c x2 z2 - a x1 z1]].
template <ring_type R>
Mat<R> spiflection_S(const BinaryForm<R>& f, const Vec<R>& x, const Vec<R>& z) {
    const R& K = f.ring;
    auto x1z1 = K.mul(x[0], z[0]);
    auto x2z2 = K.mul(x[1], z[1]);
    auto mixed = K.add(K.mul(x[0], z[1]), K.mul(x[1], z[0]));
    return mat2(K,
                K.sub(K.mul(f.alpha, x1z1), K.mul(f.gamma, x2z2)),
                K.add(K.mul(f.beta, x1z1), K.mul(f.gamma, mixed)),
                K.add(K.mul(f.beta, x2z2), K.mul(f.alpha, mixed)),
                K.sub(K.mul(f.gamma, x2z2), K.mul(f.alpha, x1z1)));
}

/// True when I and R_{e1,e2} admit a nonzero annihilating coefficient pair,
/// i.e. some c != 0 kills alpha, beta and gamma simultaneously.
template <ring_type R>
bool spiration_generators_dependent(const BinaryForm<R>& f) {
    const R& K = f.ring;
    if constexpr (std::is_same_v<R, ZmodRing>) {
        std::int64_t g = std::gcd(std::gcd(f.alpha, f.beta), std::gcd(f.gamma, K.modulus()));
        return g > 1;
    } else {
        return K.eq(f.alpha, K.zero()) && K.eq(f.beta, K.zero()) && K.eq(f.gamma, K.zero());
    }
}

/// Quadratic relation X^2 = beta X - alpha gamma of the spiration algebra
/// C_q^R = K[X]/(X^2 - beta X + alpha gamma); verified against R_12 exactly.
template <ring_type R>
std::pair<typename R::Elem, typename R::Elem> spiration_quotient(const BinaryForm<R>& f) {
    const R& K = f.ring;
    if (spiration_generators_dependent(f)) throw DependentGenerators("I and R_12 are dependent");
    auto e1 = basis_vec(K, 2, 0), e2 = basis_vec(K, 2, 1);
    auto r12 = spiration_R(f, e1, e2);
    auto lhs = mat_mul(K, r12, r12);
    auto ag = K.mul(f.alpha, f.gamma);
    auto rhs = mat_sub(K, mat_scale(K, f.beta, r12), mat_scale(K, ag, mat_identity(K, 2)));
    if (!mat_eq(K, lhs, rhs)) throw Error("spiration relation failed");
    return {f.beta, ag};
}

/// Two quadratic relations X^2 = b1 X - c1 and X^2 = b2 X - c2 present the
/// same algebra up to unit rescaling of the generator.
template <ring_type R>
bool quotient_relations_isomorphic(const R& ring, std::pair<typename R::Elem, typename R::Elem> r1,
                                   std::pair<typename R::Elem, typename R::Elem> r2,
                                   const typename R::Elem& unit) {
    if (!ring.is_invertible(unit)) return false;
    return ring.eq(r2.first, ring.mul(unit, r1.first)) &&
           ring.eq(r2.second, ring.mul(ring.mul(unit, unit), r1.second));
}

/// Generator matrices of the dihedral algebra D_q = C_q^R + C_q^S.
/// No closed basis is assumed; membership is decided by linear solving.
template <ring_type R>
struct DihedralAlgebra {
    BinaryForm<R> form;
    std::vector<Mat<R>> gens; // I, R12, S11, S12, S22

    explicit DihedralAlgebra(const BinaryForm<R>& f) : form(f) {
        const R& K = f.ring;
        auto e1 = basis_vec(K, 2, 0), e2 = basis_vec(K, 2, 1);
        gens = {mat_identity(K, 2), spiration_R(f, e1, e2), spiflection_S(f, e1, e1),
                spiflection_S(f, e1, e2), spiflection_S(f, e2, e2)};
    }

    std::optional<std::vector<typename R::Elem>> member(const Mat<R>& m) const {
        std::vector<std::vector<typename R::Elem>> flat;
        for (const auto& g : gens) flat.push_back(g.a);
        return span_solve(form.ring, flat, m.a);
    }
};

/// Optional relation q(b) S_{a,a} + q(a) S_{b,b} = b_q(a,b) S_{a,b}, reported
/// but not asserted by the core suite.
template <ring_type R>
bool spiflection_density_relation(const BinaryForm<R>& f, const Vec<R>& a, const Vec<R>& b) {
    const R& K = f.ring;
    auto space = f.space();
    auto lhs = mat_add(K, mat_scale(K, eval_q(space, b), spiflection_S(f, a, a)),
                       mat_scale(K, eval_q(space, a), spiflection_S(f, b, b)));
    auto rhs = mat_scale(K, polarize(space, a, b), spiflection_S(f, a, b));
    return mat_eq(K, lhs, rhs);
}

} // namespace sphere

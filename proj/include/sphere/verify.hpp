#pragma once

/// The identity-verification engine. Multilinear identities are decided on
/// basis index tuples, which is exhaustive by multilinearity. Identities
/// with repeated variables (quadratic slots) are decided either by module
/// enumeration of the repeated slots over finite rings, by the polarized
/// basis domain (basis vectors plus pairwise sums, complete for quadratic
/// slots over any ring), or by box enumeration plus seeded sampling over
/// infinite rings. A fails verdict always carries a witness tuple that
/// re-evaluates to a violation.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sphere/ternary.hpp"

namespace sphere {

/// Identity catalogue. A1-A3 are the alternative-triple identities in the
/// orientation satisfied by the x(y# z) ternary product of an alternative
/// algebra (the split-null family, whose spheres are left half-torsors);
/// A1dual-A3dual are the argument-reversed forms, satisfied by (x y#) z
/// (whose spheres are right half-torsors, the MT1/MT2 side). The two
/// orientations are exchanged by passing to the opposite algebra.
enum class IdentityId { K, PA, AT1, COM, TS, TC, A1, A2, A3, A1dual, A2dual, A3dual, FUFO };

inline const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::K: return "K";
        case IdentityId::PA: return "PA";
        case IdentityId::AT1: return "AT1";
        case IdentityId::COM: return "COM";
        case IdentityId::TS: return "TS";
        case IdentityId::TC: return "TC";
        case IdentityId::A1: return "A1";
        case IdentityId::A2: return "A2";
        case IdentityId::A3: return "A3";
        case IdentityId::A1dual: return "A1dual";
        case IdentityId::A2dual: return "A2dual";
        case IdentityId::A3dual: return "A3dual";
        case IdentityId::FUFO: return "FUFO";
    }
    return "?";
}

inline std::optional<IdentityId> identity_from_name(const std::string& s) {
    for (IdentityId id : {IdentityId::K, IdentityId::PA, IdentityId::AT1, IdentityId::COM,
                          IdentityId::TS, IdentityId::TC, IdentityId::A1, IdentityId::A2,
                          IdentityId::A3, IdentityId::A1dual, IdentityId::A2dual,
                          IdentityId::A3dual, IdentityId::FUFO})
        if (s == identity_name(id)) return id;
    return std::nullopt;
}

struct Strategy {
    enum class Kind { Auto, ExhaustiveBasis, ExhaustiveModule, PolarizedBasis, Sampled, Box };
    Kind kind = Kind::Auto;
    std::uint64_t seed = 0;
    std::size_t count = 1000;
    std::int64_t box = 3;

    static Strategy auto_();
    static Strategy basis() { return {Kind::ExhaustiveBasis, 0, 0, 0}; }
    static Strategy module() { return {Kind::ExhaustiveModule, 0, 0, 0}; }
    static Strategy polarized() { return {Kind::PolarizedBasis, 0, 0, 0}; }
    static Strategy sampled(std::uint64_t seed = 0, std::size_t count = 1000) {
        return {Kind::Sampled, seed, count, 3};
    }
    static Strategy boxed(std::int64_t b = 3, std::uint64_t seed = 0, std::size_t count = 1000) {
        return {Kind::Box, seed, count, b};
    }
};

inline Strategy Strategy::auto_() { return {}; }

template <ring_type R>
struct VerificationReport {
    std::string identity;
    bool holds = false;
    std::string strategy;
    std::vector<Vec<R>> witness; // slot values of the first violation, scan order
    std::string witness_text;
};

namespace detail {

// slot degrees per identity; degree >= 2 marks a repeated variable
inline std::vector<int> slot_degrees(IdentityId id) {
    switch (id) {
        case IdentityId::K: return {2, 1};
        case IdentityId::PA: return {1, 1, 1, 1, 1};
        case IdentityId::AT1: return {1, 1, 1, 1, 1};
        case IdentityId::COM: return {1, 1, 1};
        case IdentityId::TS: return {1, 1, 1};
        case IdentityId::TC: return {2, 2, 2};
        case IdentityId::A1: return {1, 1, 1, 1, 1};
        case IdentityId::A2: return {1, 1, 2, 1};
        case IdentityId::A3: return {2, 2, 1};
        case IdentityId::A1dual: return {1, 1, 1, 1, 1};
        case IdentityId::A2dual: return {1, 1, 2, 1};
        case IdentityId::A3dual: return {2, 2, 1};
        case IdentityId::FUFO: return {4, 2, 1};
    }
    return {};
}

// Residuals that must vanish, one Vec per equation (scalar equations are
// returned as rank-1 vectors).
template <ring_type R>
std::vector<Vec<R>> residuals(const TernaryAlgebra<R>& A, IdentityId id,
                              const std::vector<Vec<R>>& s) {
    const R& K = A.ring();
    auto T = [&](const Vec<R>& a, const Vec<R>& b, const Vec<R>& c) { return triple(A, a, b, c); };
    switch (id) {
        case IdentityId::K: {
            const auto& x = s[0];
            const auto& y = s[1];
            auto qx = eval_q(A.space, x);
            auto qxy = vec_scale(K, qx, y);
            return {vec_sub(K, T(x, x, y), qxy), vec_sub(K, T(y, x, x), qxy)};
        }
        case IdentityId::PA: {
            const auto &a = s[0], &b = s[1], &c = s[2], &d = s[3], &e = s[4];
            auto lhs = T(a, b, T(c, d, e));
            return {vec_sub(K, lhs, T(a, T(d, c, b), e)), vec_sub(K, lhs, T(T(a, b, c), d, e))};
        }
        case IdentityId::AT1: {
            const auto &a = s[0], &b = s[1], &c = s[2], &d = s[3], &e = s[4];
            auto lhs = T(a, b, T(c, d, e));
            return {vec_sub(K, lhs, T(a, T(b, c, d), e)), vec_sub(K, lhs, T(T(a, b, c), d, e))};
        }
        case IdentityId::COM:
            return {vec_sub(K, T(s[0], s[1], s[2]), T(s[2], s[1], s[0]))};
        case IdentityId::TS: {
            auto p = T(s[0], s[1], s[2]);
            return {vec_sub(K, p, T(s[2], s[1], s[0])), vec_sub(K, p, T(s[1], s[0], s[2]))};
        }
        case IdentityId::TC: {
            auto lhs = eval_q(A.space, T(s[0], s[1], s[2]));
            auto rhs = K.mul(eval_q(A.space, s[0]),
                             K.mul(eval_q(A.space, s[1]), eval_q(A.space, s[2])));
            return {Vec<R>{K.sub(lhs, rhs)}};
        }
        // the reversed-orientation forms; A1dual-A3dual below are the forms
        // with slots in the order of the right system
        case IdentityId::A1dual: {
            const auto &u = s[0], &v = s[1], &x = s[2], &y = s[3], &z = s[4];
            auto lhs = vec_add(K, T(u, v, T(x, y, z)), T(x, y, T(u, v, z)));
            auto rhs = vec_add(K, T(T(u, v, x), y, z), T(x, T(v, u, y), z));
            return {vec_sub(K, lhs, rhs)};
        }
        case IdentityId::A2dual: {
            const auto &u = s[0], &v = s[1], &x = s[2], &y = s[3];
            return {vec_sub(K, T(T(u, v, x), y, x), T(u, v, T(x, y, x)))};
        }
        case IdentityId::A3dual: {
            const auto &x = s[0], &y = s[1], &z = s[2];
            return {vec_sub(K, T(x, y, T(x, y, z)), T(T(x, y, x), y, z))};
        }
        case IdentityId::FUFO: {
            const auto &x = s[0], &y = s[1], &z = s[2];
            auto lhs = jordan_Q(A.space, x, jordan_Q(A.space, y, jordan_Q(A.space, x, z)));
            auto rhs = jordan_Q(A.space, jordan_Q(A.space, x, y), z);
            return {vec_sub(K, lhs, rhs)};
        }
        default:
            throw Error("A1-A3 must be dispatched through the opposite algebra");
    }
}

template <ring_type R>
bool all_zero(const R& ring, const std::vector<Vec<R>>& rs) {
    for (const auto& r : rs)
        if (!vec_is_zero(ring, r)) return false;
    return true;
}

// Sweep the product of per-slot domains in lexicographic order; stops at the
// first violation so witnesses are deterministic.
template <ring_type R, typename Domain>
std::optional<std::vector<Vec<R>>> sweep(const TernaryAlgebra<R>& A, IdentityId id,
                                         const std::vector<Domain>& domains) {
    const std::size_t slots = domains.size();
    std::vector<std::size_t> idx(slots, 0);
    std::vector<Vec<R>> args(slots);
    for (;;) {
        for (std::size_t i = 0; i < slots; ++i) args[i] = domains[i][idx[i]];
        if (!all_zero(A.ring(), residuals(A, id, args))) return args;
        std::size_t k = slots;
        while (k > 0 && idx[k - 1] + 1 == domains[k - 1].size()) idx[--k] = 0;
        if (k == 0) return std::nullopt;
        ++idx[k - 1];
    }
}

template <ring_type R>
std::string witness_text(const R& ring, IdentityId id, const std::vector<Vec<R>>& w) {
    std::ostringstream os;
    os << identity_name(id) << " violated at";
    for (std::size_t i = 0; i < w.size(); ++i) os << " s" << i << "=" << vec_str(ring, w[i]);
    return os.str();
}

} // namespace detail

/// Verify one identity on an algebra under the given strategy.
template <ring_type R>
VerificationReport<R> verify(const TernaryAlgebra<R>& A, IdentityId id, Strategy st = {}) {
    using namespace detail;
    // A1-A3 are the dual forms evaluated on the opposite algebra
    if (id == IdentityId::A1 || id == IdentityId::A2 || id == IdentityId::A3) {
        IdentityId rev = id == IdentityId::A1   ? IdentityId::A1dual
                         : id == IdentityId::A2 ? IdentityId::A2dual
                                                : IdentityId::A3dual;
        auto rep = verify(opposite(A), rev, st);
        rep.identity = identity_name(id);
        return rep;
    }

    const R& K = A.ring();
    const std::size_t n = A.rank();
    auto degs = slot_degrees(id);
    bool multilinear = true;
    for (int d : degs) multilinear = multilinear && d == 1;

    auto finish = [&](std::optional<std::vector<Vec<R>>> w,
                      const std::string& strat) -> VerificationReport<R> {
        VerificationReport<R> rep;
        rep.identity = identity_name(id);
        rep.strategy = strat;
        rep.holds = !w.has_value();
        if (w) {
            rep.witness = *w;
            rep.witness_text = witness_text(K, id, *w);
        }
        return rep;
    };

    Strategy::Kind kind = st.kind;
    if (kind == Strategy::Kind::Auto) {
        if (multilinear) kind = Strategy::Kind::ExhaustiveBasis;
        else if constexpr (std::is_same_v<R, ZmodRing>) {
            // module sweep when affordable, else the polarized domain
            double cost = 1;
            double mod_size = 1;
            for (std::size_t i = 0; i < n; ++i) mod_size *= static_cast<double>(K.size());
            for (int d : degs) cost *= d >= 2 ? mod_size : static_cast<double>(n);
            bool quad_only = true;
            for (int d : degs) quad_only = quad_only && d <= 2;
            kind = cost <= 2e7                  ? Strategy::Kind::ExhaustiveModule
                   : quad_only                  ? Strategy::Kind::PolarizedBasis
                                                : Strategy::Kind::Sampled;
        } else {
            kind = Strategy::Kind::Box;
        }
    }

    switch (kind) {
        case Strategy::Kind::ExhaustiveBasis: {
            std::vector<std::vector<Vec<R>>> doms(degs.size(), basis_domain(K, n));
            return finish(sweep(A, id, doms), "exhaustive-basis");
        }
        case Strategy::Kind::PolarizedBasis: {
            for (int d : degs)
                if (d > 2) throw InfeasibleStrategy("polarized domain only covers quadratic slots");
            std::vector<std::vector<Vec<R>>> doms;
            for (int d : degs)
                doms.push_back(d >= 2 ? polarized_domain(K, n) : basis_domain(K, n));
            return finish(sweep(A, id, doms), "polarized-basis");
        }
        case Strategy::Kind::ExhaustiveModule: {
            if constexpr (!std::is_same_v<R, ZmodRing>)
                throw InfeasibleStrategy("exhaustive-module needs a finite ring");
            else {
                // repeated slots over the whole module; linear slots over the
                // basis, which is equivalent by linearity
                double cost = 1;
                double mod_size = 1;
                for (std::size_t i = 0; i < n; ++i) mod_size *= static_cast<double>(K.size());
                for (int d : degs) cost *= d >= 2 ? mod_size : static_cast<double>(n);
                if (cost > 5e7) throw InfeasibleStrategy("exhaustive-module sweep too large");
                std::vector<std::vector<Vec<R>>> doms;
                auto mod = module_domain(K, n);
                for (int d : degs)
                    doms.push_back(d >= 2 ? mod : basis_domain(K, n));
                return finish(sweep(A, id, doms), "exhaustive-module");
            }
        }
        case Strategy::Kind::Box: {
            if constexpr (std::is_same_v<R, ZmodRing>)
                throw InfeasibleStrategy("box strategy is for infinite rings");
            else {
                double box_size = 1;
                for (std::size_t i = 0; i < n; ++i) box_size *= static_cast<double>(2 * st.box + 1);
                double cost = 1;
                for (int d : degs) cost *= d >= 2 ? box_size : static_cast<double>(n);
                if (cost > 5e7) throw InfeasibleStrategy("box sweep too large; use sampled");
                auto box = box_domain(K, n, st.box);
                std::vector<std::vector<Vec<R>>> doms;
                for (int d : degs)
                    doms.push_back(d >= 2 ? box : basis_domain(K, n));
                auto w = sweep(A, id, doms);
                std::string strat = "box(" + std::to_string(st.box) + ")+sampled(count=" +
                                    std::to_string(st.count) + ",seed=" + std::to_string(st.seed) + ")";
                if (w) return finish(w, strat);
                // follow with seeded samples on all slots
                std::mt19937_64 rng(st.seed);
                std::vector<Vec<R>> args(degs.size());
                for (std::size_t it = 0; it < st.count; ++it) {
                    for (auto& a : args) a = sample_vector(K, n, rng);
                    if (!all_zero(K, residuals(A, id, args))) return finish(args, strat);
                }
                return finish(std::nullopt, strat);
            }
        }
        case Strategy::Kind::Sampled: {
            std::mt19937_64 rng(st.seed);
            std::vector<Vec<R>> args(degs.size());
            std::string strat =
                "sampled(count=" + std::to_string(st.count) + ",seed=" + std::to_string(st.seed) + ")";
            for (std::size_t it = 0; it < st.count; ++it) {
                for (auto& a : args) a = sample_vector(K, n, rng);
                if (!all_zero(K, residuals(A, id, args))) return finish(args, strat);
            }
            return finish(std::nullopt, strat);
        }
        case Strategy::Kind::Auto: break;
    }
    throw Error("unreachable strategy");
}

// --- q-analog identities (Moufang spherical calculus) -------------------------

/// q-analog of the Chasles relation. Side::right (the x(y# z) family, whose
/// sphere loops are left half-torsors) checks <ab<bdx>> = q(b) <adx>;
/// Side::left checks the mirrored <<xdb>ba> = q(b) <xda>. The repeated slot
/// b sweeps the module (finite rings) or a box (Z); the linear slots sweep
/// the basis, which decides the identity for the whole module.
template <ring_type R>
VerificationReport<R> check_q_chasles(const TernaryAlgebra<R>& A, Side side, Strategy st = {}) {
    const R& K = A.ring();
    const std::size_t n = A.rank();
    VerificationReport<R> rep;
    rep.identity = side == Side::right ? "q-chasles-left" : "q-chasles-right";
    rep.holds = true;

    auto residual = [&](const Vec<R>& b, const Vec<R>& a, const Vec<R>& d, const Vec<R>& x) {
        auto qb = eval_q(A.space, b);
        if (side == Side::right)
            return vec_sub(K, triple(A, a, b, triple(A, b, d, x)),
                           vec_scale(K, qb, triple(A, a, d, x)));
        return vec_sub(K, triple(A, triple(A, x, d, b), b, a),
                       vec_scale(K, qb, triple(A, x, d, a)));
    };
    auto run_b = [&](const Vec<R>& b) {
        if (!rep.holds) return;
        for (std::size_t ai = 0; ai < n && rep.holds; ++ai)
            for (std::size_t di = 0; di < n && rep.holds; ++di)
                for (std::size_t xi = 0; xi < n && rep.holds; ++xi) {
                    auto a = basis_vec(K, n, ai), d = basis_vec(K, n, di), x = basis_vec(K, n, xi);
                    if (!vec_is_zero(K, residual(b, a, d, x))) {
                        rep.holds = false;
                        rep.witness = {b, a, d, x};
                        rep.witness_text = rep.identity + " violated at b=" + vec_str(K, b) +
                                           " a=" + vec_str(K, a) + " d=" + vec_str(K, d) +
                                           " x=" + vec_str(K, x);
                    }
                }
    };
    if constexpr (std::is_same_v<R, ZmodRing>) {
        rep.strategy = "exhaustive-module";
        for_each_module_vector(K, n, run_b);
    } else {
        rep.strategy = "box(" + std::to_string(st.box) + ")+sampled(count=" +
                       std::to_string(st.count) + ",seed=" + std::to_string(st.seed) + ")";
        for_each_box_vector(K, n, st.box, run_b);
        std::mt19937_64 rng(st.seed);
        for (std::size_t it = 0; it < st.count && rep.holds; ++it) run_b(sample_vector(K, n, rng));
    }
    return rep;
}

/// q-analog of the ternary Moufang autotopy, for all invertible pairs (a,b):
///   Side::right: <<xba><yba><zab>> = q(a)q(b) <<xyz>ab>
///   Side::left:  <<abx><bay><baz>> = q(a)q(b) <ab<xyz>>
/// (x,y,z) sweep the basis; both sides are trilinear there, so this decides
/// the identity on the whole module for each invertible pair.
template <ring_type R>
VerificationReport<R> check_q_autotopy(const TernaryAlgebra<R>& A, Side side, Strategy st = {}) {
    const R& K = A.ring();
    const std::size_t n = A.rank();
    VerificationReport<R> rep;
    rep.identity = side == Side::right ? "q-autotopy-left" : "q-autotopy-right";
    rep.holds = true;

    // inner operator matrices used by both orientations
    auto op_matrix = [&](const Vec<R>& u, const Vec<R>& v, bool left_slot) {
        // left_slot: w -> <u v w>; otherwise w -> <w u v>
        Mat<R> m(n, n, K.zero());
        for (std::size_t col = 0; col < n; ++col) {
            auto e = basis_vec(K, n, col);
            auto img = left_slot ? triple(A, u, v, e) : triple(A, e, u, v);
            for (std::size_t row = 0; row < n; ++row) m.at(row, col) = img[row];
        }
        return m;
    };

    auto check_pair = [&](const Vec<R>& a, const Vec<R>& b) {
        auto qa = eval_q(A.space, a), qb = eval_q(A.space, b);
        if (!K.is_invertible(qa) || !K.is_invertible(qb)) return;
        if (!rep.holds) return;
        auto qq = K.mul(qa, qb);
        Mat<R> F, G, H; // slot transforms and output transform
        if (side == Side::right) {
            F = op_matrix(b, a, false); // x -> <xba>
            G = op_matrix(a, b, false); // z -> <zab>
            H = G;                      // w -> <wab>
        } else {
            F = op_matrix(a, b, true);  // x -> <abx>
            G = op_matrix(b, a, true);  // y -> <bay>
            H = op_matrix(a, b, true);  // w -> <ab w>
        }
        // LHS tensor triple(M1 e_i, M2 e_j, M3 e_k), built by transforming
        // the structure tensor one slot at a time: columns of M are slot
        // images, so for slot 1, dst[(i,j,k)] = sum_r M.at(r, j) src[(i,r,k)].
        const std::size_t nn = n * n * n;
        const Mat<R>& M1 = F;
        const Mat<R>& M2 = side == Side::right ? F : G;
        const Mat<R>& M3 = G;
        std::vector<Vec<R>> cur(A.c.begin(), A.c.end());
        auto slot_apply = [&](const std::vector<Vec<R>>& src, int slot, const Mat<R>& M) {
            std::vector<Vec<R>> dst(nn, Vec<R>(n, K.zero()));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        std::size_t di = (i * n + j) * n + k;
                        std::size_t tgt = slot == 0 ? i : slot == 1 ? j : k;
                        for (std::size_t r = 0; r < n; ++r) {
                            const auto& coef = M.at(r, tgt);
                            if (K.eq(coef, K.zero())) continue;
                            std::size_t si = slot == 0 ? (r * n + j) * n + k
                                           : slot == 1 ? (i * n + r) * n + k
                                                       : (i * n + j) * n + r;
                            vec_axpy(K, dst[di], coef, src[si]);
                        }
                    }
            return dst;
        };
        cur = slot_apply(cur, 2, M3);
        cur = slot_apply(cur, 1, M2);
        cur = slot_apply(cur, 0, M1);
        // RHS: qq * H(c[i][j][k])
        for (std::size_t i = 0; i < n && rep.holds; ++i)
            for (std::size_t j = 0; j < n && rep.holds; ++j)
                for (std::size_t k = 0; k < n && rep.holds; ++k) {
                    auto rhs = vec_scale(K, qq, mat_apply(K, H, A.cst(i, j, k)));
                    if (!vec_eq(K, cur[(i * n + j) * n + k], rhs)) {
                        rep.holds = false;
                        rep.witness = {a, b, basis_vec(K, n, i), basis_vec(K, n, j),
                                       basis_vec(K, n, k)};
                        rep.witness_text = rep.identity + " violated at a=" + vec_str(K, a) +
                                           " b=" + vec_str(K, b) + " basis (" + std::to_string(i) +
                                           "," + std::to_string(j) + "," + std::to_string(k) + ")";
                    }
                }
    };

    if constexpr (std::is_same_v<R, ZmodRing>) {
        rep.strategy = "exhaustive-invertible-pairs";
        std::vector<Vec<R>> mod = detail::module_domain(K, n);
        for (const auto& a : mod) {
            if (!K.is_invertible(eval_q(A.space, a))) continue;
            for (const auto& b : mod) {
                if (!rep.holds) return rep;
                check_pair(a, b);
            }
        }
    } else {
        rep.strategy = "box(" + std::to_string(st.box) + ")+sampled(count=" +
                       std::to_string(st.count) + ",seed=" + std::to_string(st.seed) + ")";
        auto box = detail::box_domain(K, n, st.box);
        for (const auto& a : box)
            for (const auto& b : box) {
                if (!rep.holds) return rep;
                check_pair(a, b);
            }
        std::mt19937_64 rng(st.seed);
        for (std::size_t it = 0; it < st.count && rep.holds; ++it)
            check_pair(sample_vector(K, n, rng), sample_vector(K, n, rng));
    }
    return rep;
}

/// Re-evaluate a witness; true when it indeed violates the identity.
template <ring_type R>
bool witness_violates(const TernaryAlgebra<R>& A, IdentityId id, const std::vector<Vec<R>>& w) {
    if (id == IdentityId::A1 || id == IdentityId::A2 || id == IdentityId::A3) {
        IdentityId rev = id == IdentityId::A1   ? IdentityId::A1dual
                         : id == IdentityId::A2 ? IdentityId::A2dual
                                                : IdentityId::A3dual;
        return witness_violates(opposite(A), rev, w);
    }
    return !detail::all_zero(A.ring(), detail::residuals(A, id, w));
}

} // namespace sphere

#pragma once

/// Dense vectors and small matrices over a ring context. Nothing clever:
/// every carrier in this library has rank <= 16.

#include <cstddef>
#include <string>
#include <vector>

#include "sphere/ring.hpp"

namespace sphere {

template <ring_type R>
using Vec = std::vector<typename R::Elem>;

template <ring_type R>
Vec<R> zero_vec(const R& ring, std::size_t n) {
    return Vec<R>(n, ring.zero());
}

template <ring_type R>
Vec<R> basis_vec(const R& ring, std::size_t n, std::size_t i) {
    Vec<R> v(n, ring.zero());
    v[i] = ring.one();
    return v;
}

template <ring_type R>
Vec<R> vec_add(const R& ring, const Vec<R>& a, const Vec<R>& b) {
    Vec<R> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.add(a[i], b[i]);
    return r;
}

template <ring_type R>
Vec<R> vec_sub(const R& ring, const Vec<R>& a, const Vec<R>& b) {
    Vec<R> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.sub(a[i], b[i]);
    return r;
}

template <ring_type R>
Vec<R> vec_neg(const R& ring, const Vec<R>& a) {
    Vec<R> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.neg(a[i]);
    return r;
}

template <ring_type R>
Vec<R> vec_scale(const R& ring, const typename R::Elem& c, const Vec<R>& a) {
    Vec<R> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.mul(c, a[i]);
    return r;
}

/// r += c * a
template <ring_type R>
void vec_axpy(const R& ring, Vec<R>& r, const typename R::Elem& c, const Vec<R>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.add(r[i], ring.mul(c, a[i]));
}

template <ring_type R>
bool vec_eq(const R& ring, const Vec<R>& a, const Vec<R>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!ring.eq(a[i], b[i])) return false;
    return true;
}

template <ring_type R>
bool vec_is_zero(const R& ring, const Vec<R>& a) {
    for (const auto& x : a)
        if (!ring.eq(x, ring.zero())) return false;
    return true;
}

/// Lexicographic comparison in the ring's canonical element order; used to
/// keep scan orders (and therefore witnesses) deterministic.
template <ring_type R>
int vec_cmp(const R& ring, const Vec<R>& a, const Vec<R>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = ring.cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

template <ring_type R>
std::string vec_str(const R& ring, const Vec<R>& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += ring.str(a[i]);
    }
    return s + ")";
}

/// Row-major dense matrix.
template <ring_type R>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<typename R::Elem> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, typename R::Elem fill)
        : rows(r), cols(c), a(r * c, fill) {}

    typename R::Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const typename R::Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

template <ring_type R>
Mat<R> mat_zero(const R& ring, std::size_t r, std::size_t c) {
    return Mat<R>(r, c, ring.zero());
}

template <ring_type R>
Mat<R> mat_identity(const R& ring, std::size_t n) {
    Mat<R> m(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

template <ring_type R>
Mat<R> mat_add(const R& ring, const Mat<R>& x, const Mat<R>& y) {
    Mat<R> r(x.rows, x.cols, ring.zero());
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = ring.add(x.a[i], y.a[i]);
    return r;
}

template <ring_type R>
Mat<R> mat_sub(const R& ring, const Mat<R>& x, const Mat<R>& y) {
    Mat<R> r(x.rows, x.cols, ring.zero());
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = ring.sub(x.a[i], y.a[i]);
    return r;
}

template <ring_type R>
Mat<R> mat_scale(const R& ring, const typename R::Elem& c, const Mat<R>& x) {
    Mat<R> r(x.rows, x.cols, ring.zero());
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = ring.mul(c, x.a[i]);
    return r;
}

template <ring_type R>
Mat<R> mat_mul(const R& ring, const Mat<R>& x, const Mat<R>& y) {
    Mat<R> r(x.rows, y.cols, ring.zero());
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (ring.eq(xik, ring.zero())) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = ring.add(r.at(i, j), ring.mul(xik, y.at(k, j)));
        }
    return r;
}

template <ring_type R>
Vec<R> mat_apply(const R& ring, const Mat<R>& m, const Vec<R>& v) {
    Vec<R> r(m.rows, ring.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            r[i] = ring.add(r[i], ring.mul(m.at(i, j), v[j]));
    return r;
}

template <ring_type R>
bool mat_eq(const R& ring, const Mat<R>& x, const Mat<R>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!ring.eq(x.a[i], y.a[i])) return false;
    return true;
}

template <ring_type R>
typename R::Elem mat_trace(const R& ring, const Mat<R>& m) {
    auto t = ring.zero();
    for (std::size_t i = 0; i < m.rows; ++i) t = ring.add(t, m.at(i, i));
    return t;
}

template <ring_type R>
std::string mat_str(const R& ring, const Mat<R>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) s += ",";
            s += ring.str(m.at(i, j));
        }
    }
    return s + "]";
}

// --- scalar extraction ------------------------------------------------------

namespace detail {

inline std::int64_t mod_inv64(std::int64_t a, std::int64_t n) {
    std::int64_t t = 0, nt = 1, r = n, nr = a % n;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    return t < 0 ? t + n : t;
}

// Solutions of a*x == b (mod n) as a progression x == r (mod m), m | n.
struct Progression { std::int64_t r, m; };

inline std::optional<Progression> solve_congruence(std::int64_t a, std::int64_t b, std::int64_t n) {
    std::int64_t g = std::gcd(a, n);
    if (g == 0) return b == 0 ? std::optional<Progression>({0, 1}) : std::nullopt;
    if (b % g != 0) return std::nullopt;
    std::int64_t m = n / g;
    if (m == 1) return Progression{0, 1};
    std::int64_t x = ((b / g) % m) * mod_inv64(a / g, m) % m;
    return Progression{x, m};
}

inline std::optional<Progression> merge(const Progression& p, const Progression& q) {
    std::int64_t g = std::gcd(p.m, q.m);
    if ((q.r - p.r) % g != 0) return std::nullopt;
    std::int64_t lcm = p.m / g * q.m;
    // x = p.r + p.m * t with p.m*t == q.r - p.r (mod q.m)
    auto t = solve_congruence(p.m % q.m, ((q.r - p.r) % q.m + q.m) % q.m, q.m);
    if (!t) return std::nullopt;
    std::int64_t x = (p.r + p.m % lcm * (t->r % lcm)) % lcm;
    if (x < 0) x += lcm;
    return Progression{x, lcm};
}

inline std::optional<mpz_class> solve_scalar(const ZRing&, const mpz_class& a, const mpz_class& b) {
    if (a == 0) return b == 0 ? std::optional<mpz_class>(mpz_class(0)) : std::nullopt;
    if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return q;
}

inline std::optional<mpq_class> solve_scalar(const QRing&, const mpq_class& a, const mpq_class& b) {
    if (a == 0) return b == 0 ? std::optional<mpq_class>(mpq_class(0)) : std::nullopt;
    mpq_class q = b / a;
    q.canonicalize();
    return q;
}

} // namespace detail

/// Find lambda with v == lambda * e, if one exists. Over Z/n the
/// per-coordinate linear congruences are intersected by CRT merging.
template <ring_type R>
std::optional<typename R::Elem> scalar_of(const R& ring, const Vec<R>& v, const Vec<R>& e) {
    if constexpr (std::is_same_v<R, ZmodRing>) {
        detail::Progression sol{0, 1};
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto p = detail::solve_congruence(e[i], v[i], ring.modulus());
            if (!p) return std::nullopt;
            auto m = detail::merge(sol, *p);
            if (!m) return std::nullopt;
            sol = *m;
        }
        std::int64_t lam = ring.from_int(sol.r);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!ring.eq(ring.mul(lam, e[i]), v[i])) return std::nullopt;
        return lam;
    } else {
        std::optional<typename R::Elem> lam;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (ring.eq(e[i], ring.zero())) continue;
            lam = detail::solve_scalar(ring, e[i], v[i]);
            if (!lam) return std::nullopt;
            break;
        }
        if (!lam) { // e == 0
            return vec_is_zero(ring, v) ? std::optional<typename R::Elem>(ring.zero()) : std::nullopt;
        }
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!ring.eq(ring.mul(*lam, e[i]), v[i])) return std::nullopt;
        return lam;
    }
}

// --- exact linear solving (span membership) ---------------------------------

namespace detail {

// Gaussian elimination over Q: solve A c = m, A is dim x k.
inline std::optional<std::vector<mpq_class>> solve_q(std::vector<std::vector<mpq_class>> A,
                                                     std::vector<mpq_class> m) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(m[p], m[r]);
        mpq_class inv = 1 / A[r][c];
        for (std::size_t j = c; j < cols; ++j) { A[r][j] *= inv; A[r][j].canonicalize(); }
        m[r] *= inv; m[r].canonicalize();
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            mpq_class f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) { A[i][j] -= f * A[r][j]; A[i][j].canonicalize(); }
            m[i] -= f * m[r]; m[i].canonicalize();
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i] != 0) return std::nullopt;
    std::vector<mpq_class> sol(cols, mpq_class(0));
    for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = m[i];
    return sol;
}

// Column-style Hermite reduction over Z: returns H = A*U (U unimodular) in
// column echelon form together with U, so that A x = b iff H y = b, x = U y.
inline void hermite_columns(std::vector<std::vector<mpz_class>>& A,
                            std::vector<std::vector<mpz_class>>& U) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    U.assign(cols, std::vector<mpz_class>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) U[i][i] = 1;
    auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t i = 0; i < rows; ++i) A[i][dst] -= f * A[i][src];
        for (std::size_t i = 0; i < cols; ++i) U[i][dst] -= f * U[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(A[i][a], A[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(U[i][a], U[i][b]);
    };
    std::size_t c = 0;
    for (std::size_t r = 0; r < rows && c < cols; ++r) {
        // gcd-chase the row entries right of c into column c
        for (;;) {
            std::size_t nz = cols;
            for (std::size_t j = c; j < cols; ++j)
                if (A[r][j] != 0) { nz = j; break; }
            if (nz == cols) break;
            if (nz != c) col_swap(nz, c);
            bool done = true;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (A[r][j] == 0) continue;
                mpz_class q = A[r][j] / A[r][c];
                col_op(j, c, q);
                if (A[r][j] != 0) done = false;
            }
            if (done) break;
            // a smaller remainder appeared somewhere; loop again
            std::size_t best = c;
            for (std::size_t j = c; j < cols; ++j)
                if (A[r][j] != 0 && (A[r][best] == 0 || abs(A[r][j]) < abs(A[r][best]))) best = j;
            if (best != c) col_swap(best, c);
        }
        if (A[r][c] != 0) ++c;
    }
}

inline std::optional<std::vector<mpz_class>> solve_z(std::vector<std::vector<mpz_class>> A,
                                                     std::vector<mpz_class> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::vector<mpz_class>> U;
    hermite_columns(A, U);
    std::vector<mpz_class> y(cols, 0);
    std::size_t c = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class need = b[r];
        for (std::size_t j = 0; j < c; ++j) need -= A[r][j] * y[j];
        if (c < cols && A[r][c] != 0) {
            if (!mpz_divisible_p(need.get_mpz_t(), A[r][c].get_mpz_t())) return std::nullopt;
            mpz_divexact(y[c].get_mpz_t(), need.get_mpz_t(), A[r][c].get_mpz_t());
            ++c;
        } else if (need != 0) {
            return std::nullopt;
        }
    }
    std::vector<mpz_class> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) x[i] += U[i][j] * y[j];
    return x;
}

} // namespace detail

/// Solve sum_j c_j gens[j] == target exactly over the ring, treating the
/// inputs as flat vectors. Over Z/n the (tiny) coefficient space is swept
/// exhaustively; over Z a Hermite-form solve decides lattice membership.
template <ring_type R>
std::optional<std::vector<typename R::Elem>> span_solve(
    const R& ring, const std::vector<std::vector<typename R::Elem>>& gens,
    const std::vector<typename R::Elem>& target) {
    const std::size_t k = gens.size();
    if constexpr (std::is_same_v<R, ZmodRing>) {
        double combos = 1;
        for (std::size_t j = 0; j < k; ++j) combos *= static_cast<double>(ring.size());
        if (combos > 5e7) throw InfeasibleStrategy("span sweep too large over this modulus");
        std::vector<typename R::Elem> c(k, 0);
        for (;;) {
            std::vector<typename R::Elem> acc(target.size(), ring.zero());
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < target.size(); ++i)
                    acc[i] = ring.add(acc[i], ring.mul(c[j], gens[j][i]));
            bool ok = true;
            for (std::size_t i = 0; i < target.size() && ok; ++i) ok = ring.eq(acc[i], target[i]);
            if (ok) return c;
            std::size_t p = k;
            while (p > 0 && c[p - 1] == ring.size() - 1) c[--p] = 0;
            if (p == 0) return std::nullopt;
            ++c[p - 1];
        }
    } else if constexpr (std::is_same_v<R, ZRing>) {
        std::vector<std::vector<mpz_class>> A(target.size(), std::vector<mpz_class>(k, 0));
        for (std::size_t i = 0; i < target.size(); ++i)
            for (std::size_t j = 0; j < k; ++j) A[i][j] = gens[j][i];
        return detail::solve_z(std::move(A), target);
    } else {
        std::vector<std::vector<mpq_class>> A(target.size(), std::vector<mpq_class>(k, 0));
        for (std::size_t i = 0; i < target.size(); ++i)
            for (std::size_t j = 0; j < k; ++j) A[i][j] = gens[j][i];
        return detail::solve_q(std::move(A), target);
    }
}

} // namespace sphere

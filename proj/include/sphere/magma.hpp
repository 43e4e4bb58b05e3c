#pragma once

/// Finite magmas on explicit index tables: the binary loop hierarchy
/// (quasigroup, loop, inverse loop, Moufang), ternary structures (IP,
/// AT1/AT2, half-torsors, ternary Moufang), autotopies and triality, and
/// brute-force isomorphism search for small tables. Everything here is
/// exhaustive; at these sizes brute force gives witnesses for free.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sphere/errors.hpp"

namespace sphere {

struct Magma {
    std::vector<std::string> labels;
    int k = 0;
    std::vector<int> t; // k*k, row x, column y

    int mul(int x, int y) const { return t[x * k + y]; }

    static Magma make(std::vector<std::string> labels_, std::vector<int> table) {
        Magma m;
        m.labels = std::move(labels_);
        m.k = static_cast<int>(m.labels.size());
        m.t = std::move(table);
        if (static_cast<int>(m.t.size()) != m.k * m.k) throw ParseError("bad table size");
        for (int v : m.t)
            if (v < 0 || v >= m.k) throw ParseError("table entry out of range");
        return m;
    }
};

/// Ternary table, dense for small carriers or a closure for larger ones;
/// the property checker treats both uniformly.
struct TernaryMagma {
    std::vector<std::string> labels;
    int k = 0;
    std::vector<int> dense; // k^3 when non-empty
    std::function<int(int, int, int)> fn;

    int op(int x, int y, int z) const {
        return dense.empty() ? fn(x, y, z) : dense[(x * k + y) * k + z];
    }

    bool is_dense() const { return !dense.empty(); }

    TernaryMagma densified() const {
        if (is_dense()) return *this;
        TernaryMagma d;
        d.labels = labels;
        d.k = k;
        d.dense.resize(static_cast<std::size_t>(k) * k * k);
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
                for (int z = 0; z < k; ++z) d.dense[(x * k + y) * k + z] = fn(x, y, z);
        return d;
    }
};

struct LoopReport {
    std::string property;
    bool holds = false;
    std::vector<int> witness; // element indices of the first violation
    std::string text;
};

namespace loops_detail {

inline LoopReport pass(const std::string& p) { return {p, true, {}, ""}; }

inline LoopReport fail(const std::string& p, std::vector<int> w, const std::vector<std::string>& lb,
                       const std::string& why) {
    std::ostringstream os;
    os << p << " fails at (";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << lb[w[i]];
    os << "): " << why;
    return {p, false, std::move(w), os.str()};
}

} // namespace loops_detail

// --- binary structure --------------------------------------------------------

inline std::optional<int> find_unit(const Magma& m) {
    for (int e = 0; e < m.k; ++e) {
        bool ok = true;
        for (int x = 0; x < m.k && ok; ++x) ok = m.mul(e, x) == x && m.mul(x, e) == x;
        if (ok) return e;
    }
    return std::nullopt;
}

inline bool is_quasigroup(const Magma& m, std::vector<int>* w = nullptr) {
    for (int x = 0; x < m.k; ++x) {
        std::vector<bool> row(m.k, false), col(m.k, false);
        for (int y = 0; y < m.k; ++y) {
            int r = m.mul(x, y), c = m.mul(y, x);
            if (row[r] || col[c]) {
                if (w) *w = {x, y};
                return false;
            }
            row[r] = col[c] = true;
        }
    }
    return true;
}

/// Two-sided inverse in a loop with unit e; nullopt when the two sides differ.
inline std::optional<int> inverse_in_loop(const Magma& m, int e, int x) {
    int li = -1, ri = -1;
    for (int y = 0; y < m.k; ++y) {
        if (m.mul(y, x) == e) li = y;
        if (m.mul(x, y) == e) ri = y;
    }
    if (li < 0 || ri < 0 || li != ri) return std::nullopt;
    return li;
}

/// Order of x under left powers x^(n+1) = x * x^n (fine for power-associative
/// tables, and a usable profile invariant for any loop).
inline int element_order(const Magma& m, int e, int x) {
    int p = x, n = 1;
    while (p != e) {
        p = m.mul(x, p);
        ++n;
        if (n > m.k + 1) return -1;
    }
    return n;
}

inline std::vector<int> order_profile(const Magma& m) {
    auto e = find_unit(m);
    std::vector<int> prof(m.k, -1);
    if (!e) return prof;
    for (int x = 0; x < m.k; ++x) prof[x] = element_order(m, *e, x);
    std::sort(prof.begin(), prof.end());
    return prof;
}

inline std::vector<int> left_mult(const Magma& m, int a) {
    std::vector<int> p(m.k);
    for (int x = 0; x < m.k; ++x) p[x] = m.mul(a, x);
    return p;
}

inline std::vector<int> right_mult(const Magma& m, int a) {
    std::vector<int> p(m.k);
    for (int x = 0; x < m.k; ++x) p[x] = m.mul(x, a);
    return p;
}

inline std::vector<int> bimult(const Magma& m, int a) {
    std::vector<int> p(m.k);
    for (int x = 0; x < m.k; ++x) p[x] = m.mul(a, m.mul(x, a));
    return p;
}

/// (f1, f2; f0) is an autotopy iff f0(xy) = f1(x) f2(y) everywhere.
inline bool autotopy_check(const Magma& m, const std::vector<int>& f1, const std::vector<int>& f2,
                           const std::vector<int>& f0) {
    for (int x = 0; x < m.k; ++x)
        for (int y = 0; y < m.k; ++y)
            if (f0[m.mul(x, y)] != m.mul(f1[x], f2[y])) return false;
    return true;
}

/// Ternary autotopy (f1,f2,f3; f0).
inline bool autotopy_check(const TernaryMagma& m, const std::vector<int>& f1,
                           const std::vector<int>& f2, const std::vector<int>& f3,
                           const std::vector<int>& f0) {
    for (int x = 0; x < m.k; ++x)
        for (int y = 0; y < m.k; ++y)
            for (int z = 0; z < m.k; ++z)
                if (f0[m.op(x, y, z)] != m.op(f1[x], f2[y], f3[z])) return false;
    return true;
}

struct Autotopy {
    std::vector<int> f1, f2, f0;
    bool operator==(const Autotopy& o) const { return f1 == o.f1 && f2 == o.f2 && f0 == o.f0; }
    bool operator<(const Autotopy& o) const {
        return std::tie(f1, f2, f0) < std::tie(o.f1, o.f2, o.f0);
    }
};

// --- binary properties --------------------------------------------------------

inline LoopReport check_binary(const Magma& m, const std::string& prop) {
    using loops_detail::fail;
    using loops_detail::pass;
    auto unit = find_unit(m);

    if (prop == "quasigroup") {
        std::vector<int> w;
        return is_quasigroup(m, &w) ? pass(prop) : fail(prop, w, m.labels, "row/column not a permutation");
    }
    if (prop == "loop") {
        std::vector<int> w;
        if (!is_quasigroup(m, &w)) return fail(prop, w, m.labels, "not a quasigroup");
        return unit ? pass(prop) : fail(prop, {}, m.labels, "no two-sided unit");
    }
    if (prop == "commutative") {
        for (int x = 0; x < m.k; ++x)
            for (int y = 0; y < m.k; ++y)
                if (m.mul(x, y) != m.mul(y, x)) return fail(prop, {x, y}, m.labels, "xy != yx");
        return pass(prop);
    }
    if (prop == "associative") {
        for (int x = 0; x < m.k; ++x)
            for (int y = 0; y < m.k; ++y)
                for (int z = 0; z < m.k; ++z)
                    if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z)))
                        return fail(prop, {x, y, z}, m.labels, "(xy)z != x(yz)");
        return pass(prop);
    }
    if (prop == "flexible") {
        for (int a = 0; a < m.k; ++a)
            for (int x = 0; x < m.k; ++x)
                if (m.mul(m.mul(a, x), a) != m.mul(a, m.mul(x, a)))
                    return fail(prop, {a, x}, m.labels, "(ax)a != a(xa)");
        return pass(prop);
    }
    if (prop == "alternative") {
        for (int x = 0; x < m.k; ++x)
            for (int y = 0; y < m.k; ++y) {
                if (m.mul(x, m.mul(x, y)) != m.mul(m.mul(x, x), y))
                    return fail(prop, {x, y}, m.labels, "x(xy) != (xx)y");
                if (m.mul(m.mul(y, x), x) != m.mul(y, m.mul(x, x)))
                    return fail(prop, {x, y}, m.labels, "(yx)x != y(xx)");
            }
        return pass(prop);
    }
    if (prop == "inverse-loop") {
        if (!unit) return fail(prop, {}, m.labels, "no unit");
        for (int x = 0; x < m.k; ++x) {
            auto xi = inverse_in_loop(m, *unit, x);
            if (!xi) return fail(prop, {x}, m.labels, "no two-sided inverse");
            for (int y = 0; y < m.k; ++y) {
                bool ok = m.mul(*xi, m.mul(x, y)) == y && m.mul(x, m.mul(*xi, y)) == y &&
                          m.mul(m.mul(y, x), *xi) == y && m.mul(m.mul(y, *xi), x) == y;
                if (!ok) return fail(prop, {x, y}, m.labels, "inverse identities fail");
            }
        }
        return pass(prop);
    }
    if (prop == "moufang") { // defining identity (ax)(ya) = a((xy)a)
        for (int a = 0; a < m.k; ++a)
            for (int x = 0; x < m.k; ++x)
                for (int y = 0; y < m.k; ++y)
                    if (m.mul(m.mul(a, x), m.mul(y, a)) != m.mul(a, m.mul(m.mul(x, y), a)))
                        return fail(prop, {a, x, y}, m.labels, "(ax)(ya) != a((xy)a)");
        return pass(prop);
    }
    if (prop == "moufang-m1") { // z(x(zy)) = ((zx)z)y
        for (int z = 0; z < m.k; ++z)
            for (int x = 0; x < m.k; ++x)
                for (int y = 0; y < m.k; ++y)
                    if (m.mul(z, m.mul(x, m.mul(z, y))) != m.mul(m.mul(m.mul(z, x), z), y))
                        return fail(prop, {z, x, y}, m.labels, "z(x(zy)) != ((zx)z)y");
        return pass(prop);
    }
    if (prop == "moufang-m2") { // ((yz)x)z = y(z(xz))
        for (int z = 0; z < m.k; ++z)
            for (int x = 0; x < m.k; ++x)
                for (int y = 0; y < m.k; ++y)
                    if (m.mul(m.mul(m.mul(y, z), x), z) != m.mul(y, m.mul(z, m.mul(x, z))))
                        return fail(prop, {z, x, y}, m.labels, "((yz)x)z != y(z(xz))");
        return pass(prop);
    }
    throw ParseError("unknown binary property '" + prop + "'");
}

// --- ternary properties ---------------------------------------------------------

inline LoopReport check_ternary(const TernaryMagma& m, const std::string& prop) {
    using loops_detail::fail;
    using loops_detail::pass;

    auto sweep2 = [&](auto f, const char* why) -> LoopReport {
        for (int x = 0; x < m.k; ++x)
            for (int y = 0; y < m.k; ++y)
                if (!f(x, y)) return fail(prop, {x, y}, m.labels, why);
        return pass(prop);
    };
    auto sweep3 = [&](auto f, const char* why) -> LoopReport {
        for (int x = 0; x < m.k; ++x)
            for (int y = 0; y < m.k; ++y)
                for (int z = 0; z < m.k; ++z)
                    if (!f(x, y, z)) return fail(prop, {x, y, z}, m.labels, why);
        return pass(prop);
    };
    auto sweep4 = [&](auto f, const char* why) -> LoopReport {
        for (int a = 0; a < m.k; ++a)
            for (int b = 0; b < m.k; ++b)
                for (int c = 0; c < m.k; ++c)
                    for (int d = 0; d < m.k; ++d)
                        if (!f(a, b, c, d)) return fail(prop, {a, b, c, d}, m.labels, why);
        return pass(prop);
    };
    auto sweep5 = [&](auto f, const char* why) -> LoopReport {
        for (int a = 0; a < m.k; ++a)
            for (int b = 0; b < m.k; ++b)
                for (int c = 0; c < m.k; ++c)
                    for (int d = 0; d < m.k; ++d)
                        for (int e = 0; e < m.k; ++e)
                            if (!f(a, b, c, d, e)) return fail(prop, {a, b, c, d, e}, m.labels, why);
        return pass(prop);
    };

    if (prop == "quasigroup") {
        // all three families of displacement operators bijective
        for (int a = 0; a < m.k; ++a)
            for (int b = 0; b < m.k; ++b) {
                std::vector<bool> sl(m.k, false), sr(m.k, false), sm(m.k, false);
                for (int x = 0; x < m.k; ++x) {
                    int l = m.op(a, b, x), r = m.op(x, b, a), s = m.op(a, x, b);
                    if (sl[l] || sr[r] || sm[s]) return fail(prop, {a, b, x}, m.labels, "operator not bijective");
                    sl[l] = sr[r] = sm[s] = true;
                }
            }
        return pass(prop);
    }
    if (prop == "IP")
        return sweep2([&](int x, int y) { return m.op(x, y, y) == x && m.op(y, y, x) == x; },
                      "(xyy) != x or (yyx) != x");
    if (prop == "AT1")
        return sweep5(
            [&](int a, int b, int c, int d, int e) {
                int v = m.op(a, b, m.op(c, d, e));
                return v == m.op(a, m.op(b, c, d), e) && v == m.op(m.op(a, b, c), d, e);
            },
            "AT1 bracketings disagree");
    if (prop == "AT2")
        return sweep5(
            [&](int a, int b, int c, int d, int e) {
                int v = m.op(a, b, m.op(c, d, e));
                return v == m.op(a, m.op(d, c, b), e) && v == m.op(m.op(a, b, c), d, e);
            },
            "AT2 bracketings disagree");
    if (prop == "torsor") {
        auto r = check_ternary(m, "IP");
        if (!r.holds) { r.property = prop; return r; }
        r = check_ternary(m, "AT2");
        r.property = prop;
        return r;
    }
    if (prop == "left-chasles")
        return sweep4([&](int x, int y, int z, int u) { return m.op(x, y, m.op(y, z, u)) == m.op(x, z, u); },
                      "(xy(yzu)) != (xzu)");
    if (prop == "right-chasles")
        return sweep4([&](int u, int z, int y, int x) { return m.op(m.op(u, z, y), y, x) == m.op(u, z, x); },
                      "((uzy)yx) != (uzx)");
    if (prop == "MT1")
        return sweep4([&](int u, int v, int x, int y) {
            return m.op(m.op(u, v, x), y, x) == m.op(u, v, m.op(x, y, x));
        }, "((uvx)yx) != (uv(xyx))");
    if (prop == "MT2")
        return sweep3([&](int x, int y, int z) {
            return m.op(x, y, m.op(x, y, z)) == m.op(m.op(x, y, x), y, z);
        }, "(xy(xyz)) != ((xyx)yz)");
    if (prop == "left-ternary-moufang-autotopy")
        return sweep5(
            [&](int x, int y, int z, int a, int b) {
                return m.op(m.op(x, b, a), m.op(y, b, a), m.op(z, a, b)) == m.op(m.op(x, y, z), a, b);
            },
            "((xba)(yba)(zab)) != ((xyz)ab)");
    if (prop == "right-ternary-moufang-autotopy")
        return sweep5(
            [&](int x, int y, int z, int a, int b) {
                return m.op(m.op(a, b, x), m.op(b, a, y), m.op(b, a, z)) == m.op(a, b, m.op(x, y, z));
            },
            "((abx)(bay)(baz)) != (ab(xyz))");
    if (prop == "reflection-space") {
        // mu(x,y) = (xyx): (S1) mu(x,x)=x, (S2) involutive, (S3) automorphism rule
        auto mu = [&](int x, int y) { return m.op(x, y, x); };
        for (int x = 0; x < m.k; ++x)
            if (mu(x, x) != x) return fail(prop, {x}, m.labels, "(S1) fails");
        for (int x = 0; x < m.k; ++x)
            for (int y = 0; y < m.k; ++y)
                if (mu(x, mu(x, y)) != y) return fail(prop, {x, y}, m.labels, "(S2) fails");
        return sweep3([&](int x, int y, int z) { return mu(x, mu(y, z)) == mu(mu(x, y), mu(x, z)); },
                      "(S3) fails");
    }
    throw ParseError("unknown ternary property '" + prop + "'");
}

inline bool is_binary_property(const std::string& p) {
    for (const char* s : {"quasigroup", "loop", "inverse-loop", "flexible", "alternative",
                          "moufang", "moufang-m1", "moufang-m2", "associative", "commutative"})
        if (p == s) return true;
    return false;
}

inline bool is_ternary_property(const std::string& p) {
    for (const char* s : {"quasigroup", "IP", "AT1", "AT2", "torsor", "left-chasles",
                          "right-chasles", "MT1", "MT2", "left-ternary-moufang-autotopy",
                          "right-ternary-moufang-autotopy", "reflection-space"})
        if (p == s) return true;
    return false;
}

/// Exhaustive property check with the table-size cap (default 64, the CLI
/// reads SPHERE_MAX_TABLE to override it).
inline LoopReport check_property(const Magma& m, const std::string& prop, int cap = 64) {
    if (!is_binary_property(prop)) {
        if (is_ternary_property(prop)) throw ArityMismatch("'" + prop + "' needs a ternary table");
        throw ParseError("unknown property '" + prop + "'");
    }
    if (m.k > cap) throw InfeasibleStrategy("table larger than cap");
    return check_binary(m, prop);
}

inline LoopReport check_property(const TernaryMagma& m, const std::string& prop, int cap = 64) {
    if (!is_ternary_property(prop)) {
        if (is_binary_property(prop)) throw ArityMismatch("'" + prop + "' needs a binary table");
        throw ParseError("unknown property '" + prop + "'");
    }
    if (m.k > cap) throw InfeasibleStrategy("table larger than cap");
    return check_ternary(m, prop);
}

// --- homotopes and half-torsors ---------------------------------------------------

/// Binary homotope x*z = <xyz> of a ternary table at y.
inline Magma homotope_at(const TernaryMagma& m, int y) {
    Magma b;
    b.labels = m.labels;
    b.k = m.k;
    b.t.resize(static_cast<std::size_t>(m.k) * m.k);
    for (int x = 0; x < m.k; ++x)
        for (int z = 0; z < m.k; ++z) b.t[x * m.k + z] = m.op(x, y, z);
    return b;
}

enum class LoopSide { left, right };

/// (xyz) = x(y^{-1} z) (left) or (x y^{-1}) z (right) from a binary inverse loop.

inline TernaryMagma ternary_from_inverse_loop(const Magma& m, LoopSide side) {
    auto rep = check_binary(m, "inverse-loop");
    if (!rep.holds) throw NotInverseLoop(rep.text.empty() ? "not an inverse loop" : rep.text);
    int e = *find_unit(m);
    std::vector<int> inv(m.k);
    for (int x = 0; x < m.k; ++x) inv[x] = *inverse_in_loop(m, e, x);
    TernaryMagma t;
    t.labels = m.labels;
    t.k = m.k;
    t.dense.resize(static_cast<std::size_t>(m.k) * m.k * m.k);
    for (int x = 0; x < m.k; ++x)
        for (int y = 0; y < m.k; ++y)
            for (int z = 0; z < m.k; ++z)
                t.dense[(x * m.k + y) * m.k + z] = side == LoopSide::left
                                                       ? m.mul(x, m.mul(inv[y], z))
                                                       : m.mul(m.mul(x, inv[y]), z);
    return t;
}

/// The six transforms of an autotopy under triality (Prop. on autotopy
/// groups of inverse loops); contains the hexad of (L_a, R_a; B_a) in a
/// Moufang loop.
inline std::vector<Autotopy> triality_orbit(const Magma& m, const Autotopy& f) {
    auto rep = check_binary(m, "inverse-loop");
    if (!rep.holds) throw NotInverseLoop();
    int e = *find_unit(m);
    std::vector<int> j(m.k);
    for (int x = 0; x < m.k; ++x) j[x] = *inverse_in_loop(m, e, x);
    auto conj = [&](const std::vector<int>& f_) {
        std::vector<int> r(m.k);
        for (int x = 0; x < m.k; ++x) r[x] = j[f_[j[x]]];
        return r;
    };
    auto T = [&](const Autotopy& a) { return Autotopy{conj(a.f0), a.f1, conj(a.f2)}; };
    auto S = [&](const Autotopy& a) { return Autotopy{conj(a.f2), conj(a.f1), conj(a.f0)}; };
    std::vector<Autotopy> orbit{f};
    for (std::size_t i = 0; i < orbit.size() && orbit.size() < 12; ++i) {
        for (auto g : {T(orbit[i]), S(orbit[i])})
            if (std::find(orbit.begin(), orbit.end(), g) == orbit.end()) orbit.push_back(g);
    }
    return orbit;
}

// --- isomorphism search -------------------------------------------------------

namespace loops_detail {

inline std::vector<int> generating_sequence(const Magma& m) {
    std::vector<int> gens;
    std::vector<bool> in(m.k, false);
    auto e = find_unit(m);
    std::vector<int> closure;
    if (e) { in[*e] = true; closure.push_back(*e); }
    auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < closure.size(); ++i)
                for (std::size_t j = 0; j < closure.size(); ++j) {
                    int p = m.mul(closure[i], closure[j]);
                    if (!in[p]) { in[p] = true; closure.push_back(p); grew = true; }
                }
        }
    };
    close();
    for (int x = 0; x < m.k; ++x)
        if (!in[x]) {
            gens.push_back(x);
            in[x] = true;
            closure.push_back(x);
            close();
        }
    return gens;
}

// Extend a partial map by closing products of known elements.
inline bool close_map(const Magma& A, const Magma& B, std::vector<int>& img, std::vector<int>& used) {
    std::vector<int> known;
    for (int x = 0; x < A.k; ++x)
        if (img[x] >= 0) known.push_back(x);
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t j = 0; j < known.size(); ++j) {
            int p = A.mul(known[i], known[j]);
            int q = B.mul(img[known[i]], img[known[j]]);
            if (img[p] < 0) {
                if (used[q] >= 0 && used[q] != p) return false;
                img[p] = q;
                used[q] = p;
                known.push_back(p);
            } else if (img[p] != q) {
                return false;
            }
        }
    return true;
}

inline bool extend(const Magma& A, const Magma& B, const std::vector<int>& gens, std::size_t gi,
                   std::vector<int> img, std::vector<int> used,
                   const std::vector<int>& orderA, const std::vector<int>& orderB) {
    if (gi == gens.size()) {
        for (int x = 0; x < A.k; ++x)
            if (img[x] < 0) return false;
        for (int x = 0; x < A.k; ++x)
            for (int y = 0; y < A.k; ++y)
                if (img[A.mul(x, y)] != B.mul(img[x], img[y])) return false;
        return true;
    }
    int g = gens[gi];
    for (int cand = 0; cand < B.k; ++cand) {
        if (used[cand] >= 0 || orderA[g] != orderB[cand]) continue;
        auto img2 = img;
        auto used2 = used;
        img2[g] = cand;
        used2[cand] = g;
        if (close_map(A, B, img2, used2) && extend(A, B, gens, gi + 1, img2, used2, orderA, orderB))
            return true;
    }
    return false;
}

} // namespace loops_detail

/// Exhaustive isomorphism test for loops with units, order-profile
/// prefiltered, generator-image backtracking. Intended for k <= 24.
inline bool loops_isomorphic(const Magma& A, const Magma& B) {
    if (A.k != B.k) return false;
    auto ea = find_unit(A), eb = find_unit(B);
    if (!ea || !eb) throw Error("isomorphism search expects loops with units");
    if (order_profile(A) != order_profile(B)) return false;
    std::vector<int> ordA(A.k), ordB(B.k);
    for (int x = 0; x < A.k; ++x) ordA[x] = element_order(A, *ea, x);
    for (int x = 0; x < B.k; ++x) ordB[x] = element_order(B, *eb, x);
    auto gens = loops_detail::generating_sequence(A);
    std::vector<int> img(A.k, -1), used(B.k, -1);
    img[*ea] = *eb;
    used[*eb] = *ea;
    return loops_detail::extend(A, B, gens, 0, img, used, ordA, ordB);
}

// --- small groups catalog -----------------------------------------------------

inline Magma cyclic_group(int n) {
    Magma m;
    m.k = n;
    m.labels.resize(n);
    for (int i = 0; i < n; ++i) m.labels[i] = "g" + std::to_string(i);
    m.labels[0] = "e";
    m.t.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.t[i * n + j] = (i + j) % n;
    return m;
}

inline Magma direct_product(const Magma& A, const Magma& B) {
    Magma m;
    m.k = A.k * B.k;
    m.labels.resize(m.k);
    m.t.resize(static_cast<std::size_t>(m.k) * m.k);
    auto id = [&](int a, int b) { return a * B.k + b; };
    for (int a = 0; a < A.k; ++a)
        for (int b = 0; b < B.k; ++b) m.labels[id(a, b)] = A.labels[a] + "." + B.labels[b];
    for (int a = 0; a < A.k; ++a)
        for (int b = 0; b < B.k; ++b)
            for (int c = 0; c < A.k; ++c)
                for (int d = 0; d < B.k; ++d)
                    m.t[id(a, b) * m.k + id(c, d)] = id(A.mul(a, c), B.mul(b, d));
    return m;
}

} // namespace sphere

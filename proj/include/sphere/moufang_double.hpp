#pragma once

/// The Moufang double D(G) of a finite group with central involution,
/// its dihedral/dicyclic specializations, the ternary double table, and
/// doubling chains with per-stage classification.

#include <optional>
#include <string>
#include <vector>

#include "sphere/magma.hpp"

namespace sphere {

/// A finite group together with a central involution. Validated on
/// construction; the center is computed once.
struct FiniteGroup {
    Magma m;
    std::vector<int> sharp;
    int unit = 0;
    std::vector<bool> central; // central[x] iff x in Z(G)

    static FiniteGroup make(Magma g, std::vector<int> sharp_) {
        FiniteGroup G;
        G.m = std::move(g);
        G.sharp = std::move(sharp_);
        auto rep = check_binary(G.m, "associative");
        if (!rep.holds) throw ParseError("not a group: " + rep.text);
        auto e = find_unit(G.m);
        if (!e || !is_quasigroup(G.m)) throw ParseError("not a group: missing unit or inverses");
        G.unit = *e;
        if (static_cast<int>(G.sharp.size()) != G.m.k)
            throw InvolutionNotAntiAutomorphism("involution has wrong size");
        for (int x = 0; x < G.m.k; ++x)
            if (G.sharp[G.sharp[x]] != x)
                throw InvolutionNotAntiAutomorphism("involution is not of order <= 2");
        for (int x = 0; x < G.m.k; ++x)
            for (int y = 0; y < G.m.k; ++y)
                if (G.sharp[G.m.mul(x, y)] != G.m.mul(G.sharp[y], G.sharp[x]))
                    throw InvolutionNotAntiAutomorphism("(xy)# != y# x#");
        G.central.assign(G.m.k, true);
        for (int z = 0; z < G.m.k; ++z)
            for (int x = 0; x < G.m.k; ++x)
                if (G.m.mul(z, x) != G.m.mul(x, z)) { G.central[z] = false; break; }
        // central involution: x x# = x# x central for all x
        for (int x = 0; x < G.m.k; ++x) {
            int a = G.m.mul(x, G.sharp[x]);
            if (a != G.m.mul(G.sharp[x], x) || !G.central[a])
                throw InvolutionNotAntiAutomorphism("x x# is not central");
        }
        return G;
    }

    static FiniteGroup with_inverse_involution(Magma g) {
        auto e = find_unit(g);
        if (!e) throw ParseError("not a group: no unit");
        std::vector<int> inv(g.k, -1);
        for (int x = 0; x < g.k; ++x) {
            auto xi = inverse_in_loop(g, *e, x);
            if (!xi) throw ParseError("not a group: missing inverse");
            inv[x] = *xi;
        }
        return make(std::move(g), std::move(inv));
    }

    int inv(int x) const { return *inverse_in_loop(m, unit, x); }
};

/// A loop with a distinguished involution (the doubled structure; in
/// general non-associative, so only magma-level guarantees).
struct LoopWithInvolution {
    Magma m;
    std::vector<int> sharp;
    int unit = 0;
};

enum class DoubleConvention { bullet, bullet_prime };

namespace detail_double {

// odd copies get a tick mark, extended until no label collides with an
// even one (iterated doubles reuse tick-marked names)
inline std::vector<std::string> doubled_labels(const std::vector<std::string>& base) {
    const std::size_t k = base.size();
    std::string mark = "'";
    for (bool collision = true; collision;) {
        collision = false;
        for (std::size_t x = 0; x < k && !collision; ++x)
            for (std::size_t y = 0; y < k && !collision; ++y)
                collision = base[x] + mark == base[y];
        if (collision) mark += "'";
    }
    std::vector<std::string> out(2 * k);
    for (std::size_t x = 0; x < k; ++x) {
        out[x] = base[x];
        out[k + x] = base[x] + mark;
    }
    return out;
}

} // namespace detail_double

/// The graded product on D(G) = G_0 + G_1.
/// bullet:        x0 y0 = (xy)0, x0 y1 = (yx)1, x1 y0 = (x y#)1, x1 y1 = (mu eps y# x)0
/// bullet-prime:  x0 y0 = (xy)0, x0 y1 = (x# y)1, x1 y0 = (yx)1, x1 y1 = (mu eps y x#)0
/// New involution: x0 |-> (x#)0, x1 |-> (eps x)1.
inline LoopWithInvolution moufang_double(const FiniteGroup& G, int eps, int mu,
                                         DoubleConvention conv = DoubleConvention::bullet) {
    const int k = G.m.k;
    auto check_param = [&](int p, const char* name) {
        if (p < 0 || p >= k) throw NonCentralParameter(std::string(name) + " out of range");
        if (!G.central[p]) throw NonCentralParameter(std::string(name) + " not central");
        if (G.sharp[p] != p) throw NonCentralParameter(std::string(name) + " not fixed by #");
    };
    check_param(eps, "eps");
    check_param(mu, "mu");
    if (G.m.mul(eps, eps) != G.unit) throw NonCentralParameter("eps^2 != e");

    LoopWithInvolution D;
    D.m.k = 2 * k;
    D.m.labels = detail_double::doubled_labels(G.m.labels);
    D.m.t.resize(static_cast<std::size_t>(2 * k) * (2 * k));
    auto mul = [&](int a, int b) { return G.m.mul(a, b); };
    int me = mul(mu, eps);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            int v00, v01, v10, v11;
            if (conv == DoubleConvention::bullet) {
                v00 = mul(x, y);
                v01 = mul(y, x);
                v10 = mul(x, G.sharp[y]);
                v11 = mul(me, mul(G.sharp[y], x));
            } else {
                v00 = mul(x, y);
                v01 = mul(G.sharp[x], y);
                v10 = mul(y, x);
                v11 = mul(me, mul(y, G.sharp[x]));
            }
            D.m.t[x * D.m.k + y] = v00;
            D.m.t[x * D.m.k + (k + y)] = k + v01;
            D.m.t[(k + x) * D.m.k + y] = k + v10;
            D.m.t[(k + x) * D.m.k + (k + y)] = v11;
        }
    D.unit = G.unit;
    D.sharp.resize(2 * k);
    for (int x = 0; x < k; ++x) {
        D.sharp[x] = G.sharp[x];
        D.sharp[k + x] = k + mul(eps, x);
    }
    return D;
}

inline LoopWithInvolution dihedral_loop(const FiniteGroup& G) {
    return moufang_double(G, G.unit, G.unit);
}

inline LoopWithInvolution dicyclic_loop(const FiniteGroup& G, int z) {
    if (z == G.unit || G.m.mul(z, z) != G.unit)
        throw NonCentralParameter("dicyclic loop needs a central element of order 2");
    return moufang_double(G, z, G.unit);
}

/// Ternary double table in closed form per tridegree, using the old
/// ternary product <xyz> = x y# z on G. Agrees with a.(b#.c) computed in
/// the doubled loop (the (1,1,1) row lands in the odd part).
inline TernaryMagma ternary_double(const FiniteGroup& G, int eps, int mu) {
    const int k = G.m.k;
    // parameter validation as in moufang_double
    (void)moufang_double(G, eps, mu);
    auto mul = [&](int a, int b) { return G.m.mul(a, b); };
    auto told = [&](int x, int y, int z) { return mul(x, mul(G.sharp[y], z)); };
    TernaryMagma t;
    t.k = 2 * k;
    t.labels = detail_double::doubled_labels(G.m.labels);
    t.dense.resize(static_cast<std::size_t>(2 * k) * (2 * k) * (2 * k));
    int me = mul(mu, eps);
    for (int xi = 0; xi < 2 * k; ++xi)
        for (int yi = 0; yi < 2 * k; ++yi)
            for (int zi = 0; zi < 2 * k; ++zi) {
                int x = xi % k, y = yi % k, z = zi % k;
                int px = xi / k, py = yi / k, pz = zi / k;
                int par = (px + py + pz) % 2;
                int v;
                switch (px * 4 + py * 2 + pz) {
                    case 0b000: v = told(x, y, z); break;
                    case 0b001: v = told(z, y, x); break;
                    case 0b010: v = mul(eps, told(y, z, x)); break;
                    case 0b100: v = told(x, z, y); break;
                    case 0b110: v = mul(mu, told(z, y, x)); break;
                    case 0b101: v = mul(me, told(y, z, x)); break;
                    case 0b011: v = mul(mu, told(x, z, y)); break;
                    default: v = mul(mu, told(x, y, z)); break; // (1,1,1)
                }
                t.dense[(xi * 2 * k + yi) * 2 * k + zi] = par * k + v;
            }
    return t;
}

// --- identification -----------------------------------------------------------

inline Magma dihedral_group(int n) { // order 2n
    return dihedral_loop(FiniteGroup::with_inverse_involution(cyclic_group(n))).m;
}

inline Magma dicyclic_group(int n) { // order 4n, Dic_n = Dic(C_2n, n)
    auto c = cyclic_group(2 * n);
    return dicyclic_loop(FiniteGroup::with_inverse_involution(std::move(c)), n).m;
}

struct NamedTable {
    std::string name;
    Magma table;
};

/// Small groups the doubling chains can land on, plus both 16-element
/// octonion loops for chain identification.
inline const std::vector<NamedTable>& identification_catalog() {
    static const std::vector<NamedTable> cat = [] {
        std::vector<NamedTable> v;
        for (int n = 2; n <= 16; ++n) v.push_back({"C" + std::to_string(n), cyclic_group(n)});
        v.push_back({"C2xC2", direct_product(cyclic_group(2), cyclic_group(2))});
        v.push_back({"C4xC2", direct_product(cyclic_group(4), cyclic_group(2))});
        v.push_back({"C2xC2xC2",
                     direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))});
        v.push_back({"C6xC2", direct_product(cyclic_group(6), cyclic_group(2))});
        v.push_back({"S3", dihedral_group(3)});
        v.push_back({"D4", dihedral_group(4)});
        v.push_back({"D6", dihedral_group(6)});
        v.push_back({"Q8", dicyclic_group(2)});
        v.push_back({"Dic3", dicyclic_group(3)});
        v.push_back({"Dic4", dicyclic_group(4)});
        // O16: triple double of C2 with eps = -1, mu = 1; even copies keep
        // their index, so the image of eps stays index 1
        {
            auto g = FiniteGroup::with_inverse_involution(cyclic_group(2));
            auto d1 = moufang_double(g, 1, 0);
            auto g1 = FiniteGroup::make(d1.m, d1.sharp);
            auto d2 = moufang_double(g1, 1, 0);
            auto g2 = FiniteGroup::make(d2.m, d2.sharp);
            auto d3 = moufang_double(g2, 1, 0);
            v.push_back({"O16", d3.m});
        }
        // split O16: eps = mu = -1 throughout
        {
            auto g = FiniteGroup::with_inverse_involution(cyclic_group(2));
            auto d1 = moufang_double(g, 1, 1);
            auto g1 = FiniteGroup::make(d1.m, d1.sharp);
            auto d2 = moufang_double(g1, 1, 1);
            auto g2 = FiniteGroup::make(d2.m, d2.sharp);
            auto d3 = moufang_double(g2, 1, 1);
            v.push_back({"split-O16", d3.m});
        }
        return v;
    }();
    return cat;
}

/// Name a loop by exhaustive isomorphism search against the catalog;
/// "unidentified" when nothing matches (tables above 24 are not searched).
inline std::string identify(const Magma& m) {
    if (m.k > 24) return "unidentified";
    for (const auto& cand : identification_catalog()) {
        if (cand.table.k != m.k) continue;
        if (loops_isomorphic(m, cand.table)) return cand.name;
    }
    return "unidentified";
}

// --- doubling chains ----------------------------------------------------------

/// Stage parameter token: the unit, the designated central order-2 element
/// ("-1", resolved to the image of the previous stage's eps after stage
/// one), or an explicit element label.
struct StageParam {
    enum class Kind { one, minus_one, label } kind = Kind::one;
    std::string label;

    static StageParam one() { return {Kind::one, ""}; }
    static StageParam minus_one() { return {Kind::minus_one, ""}; }
    static StageParam named(std::string l) { return {Kind::label, std::move(l)}; }

    static StageParam parse(const std::string& s) {
        if (s == "1" || s == "e") return one();
        if (s == "-1") return minus_one();
        return named(s);
    }
};

struct ChainStage {
    LoopWithInvolution loop;
    int cardinality = 0;
    bool commutative = false;
    bool associative = false;
    bool moufang = false;
    std::vector<int> profile;
    std::string name; // identification or "unidentified"
};

namespace detail_chain {

inline int resolve(const FiniteGroup& G, const StageParam& p, std::optional<int> prev_eps_image,
                   const char* what) {
    switch (p.kind) {
        case StageParam::Kind::one:
            return G.unit;
        case StageParam::Kind::label: {
            for (int i = 0; i < G.m.k; ++i)
                if (G.m.labels[i] == p.label) return i;
            throw InvalidStageParameter(std::string(what) + ": no element labelled '" + p.label + "'");
        }
        case StageParam::Kind::minus_one: {
            if (prev_eps_image) return *prev_eps_image;
            // designated order-2 central #-fixed element; must be unique
            std::vector<int> cands;
            for (int x = 0; x < G.m.k; ++x)
                if (x != G.unit && G.central[x] && G.sharp[x] == x && G.m.mul(x, x) == G.unit)
                    cands.push_back(x);
            if (cands.size() != 1)
                throw InvalidStageParameter(std::string(what) +
                                            ": '-1' is ambiguous or missing; give a label");
            return cands[0];
        }
    }
    throw InvalidStageParameter("bad stage parameter");
}

} // namespace detail_chain

/// Iterated Moufang doubles. Stage s uses the involution produced by stage
/// s-1; the "-1" token resolves to the image of the previous eps, and mu
/// defaults to the unit unless given.
inline std::vector<ChainStage> doubling_chain(const FiniteGroup& seed, std::size_t steps,
                                              StageParam eps, StageParam mu,
                                              DoubleConvention conv = DoubleConvention::bullet) {
    std::vector<ChainStage> out;
    FiniteGroup cur = seed;
    std::optional<int> eps_image, mu_image;
    auto classify = [](LoopWithInvolution lw) {
        ChainStage st;
        st.cardinality = lw.m.k;
        st.commutative = check_binary(lw.m, "commutative").holds;
        st.associative = check_binary(lw.m, "associative").holds;
        st.moufang = check_binary(lw.m, "moufang").holds;
        st.profile = order_profile(lw.m);
        st.name = identify(lw.m);
        st.loop = std::move(lw);
        return st;
    };
    for (std::size_t s = 0; s < steps; ++s) {
        int e = detail_chain::resolve(cur, eps, eps_image, "eps");
        int u = detail_chain::resolve(cur, mu, mu_image, "mu");
        auto dbl = moufang_double(cur, e, u, conv);
        out.push_back(classify(dbl));
        if (s + 1 < steps) {
            if (!out.back().associative)
                throw InvalidStageParameter("cannot double further: stage is not a group");
            cur = FiniteGroup::make(out.back().loop.m, out.back().loop.sharp);
            // even copies keep their index, so images are the same indices
            eps_image = e;
            mu_image = u;
        }
    }
    return out;
}

} // namespace sphere

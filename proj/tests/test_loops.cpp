#include <catch_amalgamated.hpp>

#include "sphere/constructions.hpp"
#include "sphere/moufang_double.hpp"
#include "sphere/sphere_loop.hpp"

using namespace sphere;

namespace {

Magma o16() {
    auto g = FiniteGroup::with_inverse_involution(cyclic_group(2));
    auto d1 = moufang_double(g, 1, 0);
    auto g1 = FiniteGroup::make(d1.m, d1.sharp);
    auto d2 = moufang_double(g1, 1, 0);
    auto g2 = FiniteGroup::make(d2.m, d2.sharp);
    return moufang_double(g2, 1, 0).m;
}

// a loop with unit that is not an inverse loop
Magma five_loop() {
    std::vector<int> t{0, 1, 2, 3, 4,
                       1, 0, 3, 4, 2,
                       2, 4, 0, 1, 3,
                       3, 2, 4, 0, 1,
                       4, 3, 1, 2, 0};
    return Magma::make({"e", "a", "b", "c", "d"}, t);
}

std::vector<int> tern_L(const TernaryMagma& t, int a, int b) {
    std::vector<int> p(t.k);
    for (int z = 0; z < t.k; ++z) p[z] = t.op(a, b, z);
    return p;
}
std::vector<int> tern_R(const TernaryMagma& t, int a, int b) {
    std::vector<int> p(t.k);
    for (int x = 0; x < t.k; ++x) p[x] = t.op(x, b, a);
    return p;
}
std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
    return r;
}

} // namespace

TEST_CASE("binary property checks") {
    auto c4 = cyclic_group(4);
    for (const char* p : {"quasigroup", "loop", "inverse-loop", "flexible", "alternative",
                          "moufang", "moufang-m1", "moufang-m2", "associative", "commutative"})
        CHECK(check_property(c4, p).holds);

    SECTION("a loop without the inverse property") {
        auto m = five_loop();
        CHECK(check_property(m, "loop").holds);
        auto rep = check_property(m, "inverse-loop");
        REQUIRE_FALSE(rep.holds);
        CHECK_FALSE(rep.text.empty());
        CHECK_THROWS_AS(ternary_from_inverse_loop(m, LoopSide::left), NotInverseLoop);
    }
    SECTION("witnesses re-evaluate") {
        auto m = five_loop();
        auto rep = check_property(m, "associative");
        REQUIRE_FALSE(rep.holds);
        REQUIRE(rep.witness.size() == 3);
        int x = rep.witness[0], y = rep.witness[1], z = rep.witness[2];
        CHECK(m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z)));
    }
    SECTION("table size cap") {
        CHECK_THROWS_AS(check_property(cyclic_group(6), "loop", 4), InfeasibleStrategy);
    }
    SECTION("arity dispatch") {
        CHECK_THROWS_AS(check_property(cyclic_group(4), "AT2"), ArityMismatch);
        auto t = ternary_from_inverse_loop(cyclic_group(4), LoopSide::left);
        CHECK_THROWS_AS(check_property(t, "moufang"), ArityMismatch);
        CHECK_THROWS_AS(check_property(t, "nonsense"), ParseError);
        CHECK(check_property(t, "quasigroup").holds); // shared name, ternary reading
    }
}

TEST_CASE("torsor of a group") {
    auto c6 = cyclic_group(6);
    auto t = ternary_from_inverse_loop(c6, LoopSide::left);
    CHECK(check_property(t, "IP").holds);
    CHECK(check_property(t, "AT2").holds);
    CHECK(check_property(t, "torsor").holds);
    CHECK(check_property(t, "left-chasles").holds);
    CHECK(check_property(t, "right-chasles").holds);
    CHECK(check_property(t, "quasigroup").holds);

    SECTION("left and right constructions agree on groups") {
        auto tr = ternary_from_inverse_loop(c6, LoopSide::right);
        CHECK(t.densified().dense == tr.densified().dense);
    }
    SECTION("homotope at the unit gives back the group") {
        auto h = homotope_at(t, 0);
        CHECK(h.t == c6.t);
    }
    SECTION("homotopes at all points are isomorphic groups") {
        for (int y = 0; y < t.k; ++y) {
            auto h = homotope_at(t, y);
            CHECK(find_unit(h) == y);
            CHECK(check_property(h, "associative").holds);
            CHECK(loops_isomorphic(h, c6));
        }
    }
    SECTION("round trip through a homotope reproduces the table") {
        for (int y : {0, 2, 5}) {
            auto back = ternary_from_inverse_loop(homotope_at(t, y), LoopSide::left);
            CHECK(back.densified().dense == t.densified().dense);
        }
    }
}

TEST_CASE("operator identities on half-torsors") {
    auto O = o16();
    auto tr = ternary_from_inverse_loop(O, LoopSide::right);
    auto tl = ternary_from_inverse_loop(O, LoopSide::left);

    SECTION("inverse operator identities") {
        for (const auto* t : {&tr, &tl}) {
            for (int x = 0; x < t->k; ++x)
                for (int y = 0; y < t->k; ++y)
                    for (int u = 0; u < t->k; ++u) {
                        CHECK(t->op(x, y, t->op(y, x, u)) == u);   // L_{x,y}^{-1} = L_{y,x}
                        CHECK(t->op(t->op(u, x, y), y, x) == u);   // R_{x,y}^{-1} = R_{y,x}
                        CHECK(t->op(x, t->op(y, u, x), y) == u);   // S_{x,y}^{-1} = S_{y,x}
                    }
        }
    }
    SECTION("flexibility and automorphic inverse") {
        for (const auto* t : {&tr, &tl}) {
            for (int a = 0; a < t->k; ++a)
                for (int y = 0; y < t->k; ++y) {
                    for (int x = 0; x < t->k; ++x) {
                        CHECK(t->op(a, y, t->op(x, y, a)) == t->op(t->op(a, y, x), y, a));
                        CHECK(t->op(y, t->op(y, x, y), y) == x); // inversion has order two
                    }
                    for (int x = 0; x < t->k; ++x)
                        for (int z = 0; z < t->k; ++z)
                            CHECK(t->op(y, t->op(x, y, z), y) ==
                                  t->op(t->op(y, z, y), y, t->op(y, x, y)));
                }
        }
    }
}

TEST_CASE("octonion loop of order 16") {
    auto O = o16();
    REQUIRE(O.k == 16);
    for (const char* p : {"inverse-loop", "flexible", "alternative", "moufang"})
        CHECK(check_property(O, p).holds);
    CHECK_FALSE(check_property(O, "associative").holds);

    auto tr = ternary_from_inverse_loop(O, LoopSide::right);
    SECTION("right table satisfies MT1 and MT2, torsor laws fail") {
        CHECK(check_property(tr, "IP").holds);
        CHECK(check_property(tr, "MT1").holds);
        CHECK(check_property(tr, "MT2").holds);
        CHECK(check_property(tr, "right-chasles").holds);
        CHECK(check_property(tr, "right-ternary-moufang-autotopy").holds);
        auto at2 = check_property(tr, "AT2");
        REQUIRE_FALSE(at2.holds);
        REQUIRE(at2.witness.size() == 5);
        const auto& w = at2.witness;
        CHECK(tr.op(w[0], w[1], tr.op(w[2], w[3], w[4])) !=
              tr.op(tr.op(w[0], w[1], w[2]), w[3], w[4]));
        CHECK_FALSE(check_property(tr, "left-chasles").holds);
        CHECK_FALSE(check_property(tr, "torsor").holds);
    }
    SECTION("left table satisfies the left laws") {
        auto tl = ternary_from_inverse_loop(O, LoopSide::left);
        CHECK(check_property(tl, "left-chasles").holds);
        CHECK(check_property(tl, "left-ternary-moufang-autotopy").holds);
        CHECK_FALSE(check_property(tl, "right-chasles").holds);
    }
    SECTION("homotopes of the ternary tables are Moufang loops") {
        for (int y : {0, 3, 9, 15}) {
            auto h = homotope_at(tr, y);
            CHECK(find_unit(h) == y);
            CHECK(check_property(h, "moufang").holds);
        }
    }
    SECTION("reflection space structure mu(x,y) = (xyx)") {
        CHECK(check_property(tr, "reflection-space").holds);
        auto tl = ternary_from_inverse_loop(O, LoopSide::left);
        CHECK(check_property(tl, "reflection-space").holds);
    }
    SECTION("inner-operator autotopies of the ternary tables") {
        // right table: (R_{a,b}, B_{a,b}, B_{a,b}; R_{a,b})
        for (int a = 0; a < tr.k; ++a)
            for (int b = 0; b < tr.k; ++b) {
                auto L = tern_L(tr, a, b), Rm = tern_R(tr, a, b);
                auto B = compose(L, Rm);
                CHECK(B == compose(Rm, L));
                CHECK(autotopy_check(tr, Rm, B, B, Rm));
            }
        // left table: (B_{a,b}, B_{a,b}, L_{a,b}; L_{a,b})
        auto tl = ternary_from_inverse_loop(O, LoopSide::left);
        for (int a = 0; a < tl.k; ++a)
            for (int b = 0; b < tl.k; ++b) {
                auto L = tern_L(tl, a, b), Rm = tern_R(tl, a, b);
                auto B = compose(L, Rm);
                CHECK(autotopy_check(tl, B, B, L, L));
            }
    }
}

TEST_CASE("a table is a torsor exactly when both Chasles laws hold") {
    auto O = o16();
    std::vector<TernaryMagma> tables;
    tables.push_back(ternary_from_inverse_loop(cyclic_group(6), LoopSide::left));
    tables.push_back(ternary_from_inverse_loop(dicyclic_group(2), LoopSide::right));
    tables.push_back(ternary_from_inverse_loop(O, LoopSide::left));
    tables.push_back(ternary_from_inverse_loop(O, LoopSide::right));
    for (const auto& t : tables) {
        REQUIRE(check_property(t, "IP").holds);
        bool both = check_property(t, "left-chasles").holds &&
                    check_property(t, "right-chasles").holds;
        CHECK(check_property(t, "torsor").holds == both);
    }
}

TEST_CASE("autotopies and triality") {
    auto q8 = dicyclic_group(2);
    REQUIRE(identify(q8) == "Q8");
    int e = *find_unit(q8);
    int a = -1;
    for (int x = 0; x < q8.k; ++x)
        if (element_order(q8, e, x) == 4) { a = x; break; }
    REQUIRE(a >= 0);
    int ai = *inverse_in_loop(q8, e, a);

    auto La = left_mult(q8, a), Ra = right_mult(q8, a), Ba = bimult(q8, a);
    auto Li = left_mult(q8, ai), Ri = right_mult(q8, ai), Bi = bimult(q8, ai);
    REQUIRE(autotopy_check(q8, La, Ra, Ba));

    SECTION("the identity autotopy has a trivial orbit") {
        std::vector<int> id(q8.k);
        for (int i = 0; i < q8.k; ++i) id[i] = i;
        auto orbit = triality_orbit(q8, {id, id, id});
        CHECK(orbit.size() == 1);
    }
    SECTION("the hexad of (L_a, R_a; B_a)") {
        auto orbit = triality_orbit(q8, {La, Ra, Ba});
        CHECK(orbit.size() == 6);
        std::vector<Autotopy> expect = {{La, Ra, Ba},  {Ba, Li, La}, {Ra, Bi, Ri},
                                        {Li, Ri, Bi}, {Bi, La, Li}, {Ri, Ba, Ra}};
        for (const auto& member : expect) {
            CHECK(autotopy_check(q8, member.f1, member.f2, member.f0));
            CHECK(std::find(orbit.begin(), orbit.end(), member) != orbit.end());
        }
    }
    SECTION("hexads in the octonion loop") {
        auto O = o16();
        int eo = *find_unit(O);
        for (int pick : {1, 5, 11}) {
            auto Lp = left_mult(O, pick), Rp = right_mult(O, pick), Bp = bimult(O, pick);
            REQUIRE(autotopy_check(O, Lp, Rp, Bp));
            auto orbit = triality_orbit(O, {Lp, Rp, Bp});
            int pi = *inverse_in_loop(O, eo, pick);
            Autotopy want{right_mult(O, pick), bimult(O, pi), right_mult(O, pi)};
            CHECK(std::find(orbit.begin(), orbit.end(), want) != orbit.end());
            for (const auto& f : orbit) CHECK(autotopy_check(O, f.f1, f.f2, f.f0));
        }
    }
}

TEST_CASE("isomorphism search and identification") {
    CHECK(identify(cyclic_group(4)) == "C4");
    CHECK(identify(cyclic_group(5)) == "C5");
    CHECK(identify(direct_product(cyclic_group(2), cyclic_group(2))) == "C2xC2");
    CHECK(identify(dihedral_group(4)) == "D4");
    CHECK(identify(dicyclic_group(3)) == "Dic3");
    CHECK_FALSE(loops_isomorphic(cyclic_group(4),
                                 direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK_FALSE(loops_isomorphic(dihedral_group(4), dicyclic_group(2)));
    CHECK(loops_isomorphic(dihedral_group(3), dihedral_group(3)));
    CHECK(identify(o16()) == "O16");
}

TEST_CASE("sphere loops") {
    SECTION("Eisenstein unit sphere is a 6 element torsor with C6 homotopes") {
        ZRing z;
        auto A = canonical_algebra(BinaryForm<ZRing>{z, z.one(), z.from_int(-1), z.one()});
        auto t = sphere_loop(A, z.one(), 2);
        REQUIRE(t.k == 6);
        CHECK(t.is_dense());
        CHECK(check_property(t, "torsor").holds);
        for (int y = 0; y < t.k; ++y) CHECK(loops_isomorphic(homotope_at(t, y), cyclic_group(6)));
    }
    SECTION("group spherical spheres give IP and AT2") {
        ZmodRing z7(7);
        auto A = canonical_algebra(BinaryForm<ZmodRing>{z7, 1, 0, 1});
        auto t = sphere_loop(A, z7.one());
        CHECK(t.k == 8);
        CHECK(check_property(t, "IP").holds);
        CHECK(check_property(t, "AT2").holds);
    }
    SECTION("large spheres stay lazy and evaluate consistently") {
        ZmodRing z3(3);
        auto bin = homotope(canonical_algebra(BinaryForm<ZmodRing>{z3, 1, 0, 1}),
                            Vec<ZmodRing>{1, 0});
        auto quat = kd_double(bin, z3.from_int(-1), Side::right);
        auto T = ternary_of(quat, z3.one(), Side::right);
        auto t = sphere_loop(T, z3.one());
        CHECK_FALSE(t.is_dense());
        auto pts = sphere_enumerate(T, z3.one());
        REQUIRE(t.k == static_cast<int>(pts.size()));
        // spot check the closure against direct torsor products
        std::mt19937_64 rng(109);
        auto pick = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(t.k)); };
        for (int trial = 0; trial < 50; ++trial) {
            int i = pick(), j = pick(), k = pick();
            auto direct = torsor_product(T, pts[i], pts[j], pts[k]);
            CHECK(vec_eq(z3, pts[t.op(i, j, k)], direct));
        }
    }
    SECTION("empty spheres are reported") {
        ZmodRing z3(3);
        auto B = canonical_algebra(BinaryForm<ZmodRing>{z3, 0, 0, 1}); // q = x2^2
        CHECK_THROWS_AS(sphere_loop(B, z3.from_int(2)), EmptySphere); // 2 is not a square mod 3
    }
    SECTION("octonion sphere over Z/3: Moufang laws hold, para-associativity fails") {
        ZmodRing z3(3);
        auto bin = homotope(canonical_algebra(BinaryForm<ZmodRing>{z3, 1, 0, 1}),
                            Vec<ZmodRing>{1, 0});
        auto oct = kd_double(kd_double(bin, z3.from_int(-1), Side::right), z3.from_int(-1),
                             Side::right);
        auto T = ternary_of(oct, z3.one(), Side::left); // (x y#) z family
        // the torsor law on the unit sphere scales both sides of MT1/MT2 by
        // the same unit, so the module-level identities decide the sphere
        // table exhaustively
        CHECK(verify(T, IdentityId::A2dual).holds);
        CHECK(verify(T, IdentityId::A3dual).holds);
        auto t = sphere_loop(T, z3.one());
        CHECK_FALSE(t.is_dense());
        CHECK(t.k > 2000);
        // AT2 genuinely fails on the sphere: scan for a witness
        bool found = false;
        for (int a = 0; a < 8 && !found; ++a)
            for (int b = 0; b < 8 && !found; ++b)
                for (int c = 0; c < t.k && !found; ++c)
                    for (int d = 0; d < 8 && !found; ++d)
                        for (int e = 0; e < 8 && !found; ++e)
                            found = t.op(a, b, t.op(c, d, e)) != t.op(t.op(a, b, c), d, e);
        CHECK(found);
        // spot-check the right Chasles law on sphere samples
        std::mt19937_64 rng(131);
        auto pick = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(t.k)); };
        for (int trial = 0; trial < 200; ++trial) {
            int u = pick(), zv = pick(), y = pick(), x = pick();
            CHECK(t.op(t.op(u, zv, y), y, x) == t.op(u, zv, x));
        }
    }
}

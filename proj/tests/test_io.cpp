#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "sphere/constructions.hpp"
#include "sphere/io.hpp"

using namespace sphere;

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = std::string(SPHERE_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

std::string temp_path(const std::string& name) {
    return std::string("io_test_") + name;
}

} // namespace

TEST_CASE("algebra files round trip byte-stably") {
    ZmodRing z5(5);
    auto A = canonical_algebra(BinaryForm<ZmodRing>{z5, 1, 1, 2});
    auto text = serialize_algebra(A);
    auto back = parse_algebra(text);
    auto* same = std::get_if<TernaryAlgebra<ZmodRing>>(&back);
    REQUIRE(same != nullptr);
    CHECK(serialize_algebra(*same) == text);
    CHECK(same->label == A.label);

    QRing q;
    Vec<QRing> phi{q.parse("1/2"), q.zero(), q.one()};
    auto M = minkowski_extension(q, phi, phi);
    auto mt = serialize_algebra(M);
    auto mb = parse_algebra(mt);
    CHECK(serialize_algebra(std::get<TernaryAlgebra<QRing>>(mb)) == mt);
}

TEST_CASE("form files accept numbers and strings") {
    auto v = parse_space(R"({ "ring": "zmod:5", "rank": 2, "b": [[1,1],[0,2]] })");
    auto* s = std::get_if<QuadraticSpace<ZmodRing>>(&v);
    REQUIRE(s != nullptr);
    CHECK(eval_q(*s, Vec<ZmodRing>{1, 2}) == 1);

    auto v2 = parse_space(R"({ "ring": "rat", "rank": 1, "b": [["2/4"]] })");
    auto* s2 = std::get_if<QuadraticSpace<QRing>>(&v2);
    REQUIRE(s2 != nullptr);
    CHECK(s2->ring.eq(eval_q(*s2, Vec<QRing>{mpq_class(2)}), mpq_class(2)));

    CHECK_THROWS_AS(parse_space(R"({ "ring": "int", "rank": 2, "b": [[1]] })"), ParseError);
    CHECK_THROWS_AS(parse_space(R"({ "ring": "nope", "rank": 1, "b": [[1]] })"), ParseError);
    CHECK_THROWS_AS(parse_algebra(R"({ "ring": "int", "rank": 1, "b": [[1]], "c": [[["1","2"]]] })"),
                    ParseError); // tensor entries must be rank-vectors
}

TEST_CASE("cayley table files") {
    auto c4 = cyclic_group(4);
    auto text = serialize_magma(c4);
    auto var = parse_cayley(text);
    auto* m = std::get_if<Magma>(&var);
    REQUIRE(m != nullptr);
    CHECK(m->t == c4.t);
    CHECK(serialize_magma(*m) == text);

    auto t = ternary_from_inverse_loop(c4, LoopSide::left);
    auto ttext = serialize_ternary_magma(t);
    auto tvar = parse_cayley(ttext);
    auto* tm = std::get_if<TernaryMagma>(&tvar);
    REQUIRE(tm != nullptr);
    CHECK(tm->dense == t.densified().dense);

    CHECK_THROWS_AS(parse_cayley("no header\n"), ParseError);
    CHECK_THROWS_AS(parse_cayley("elements: a,b\na b\n"), ParseError); // wrong row count
}

TEST_CASE("command line end to end") {
    SECTION("roots reproduce the hexagonal count") {
        int code = -1;
        auto out = run_cli("roots --form 1,-1,1 --box 2", &code);
        CHECK(code == 0);
        CHECK(out.find("count 12") != std::string::npos);
    }
    SECTION("verify with expectation and determinism") {
        auto alg = temp_path("eis.json");
        int code = -1;
        run_cli("build --recipe cliffordq --ring zmod:5 --form 1,0,1 -o " + alg, &code);
        REQUIRE(code == 0);
        auto out1 = run_cli("verify --alg " + alg + " --id PA --expect holds", &code);
        CHECK(code == 0);
        CHECK(out1.find("RESULT PA holds exhaustive-basis") != std::string::npos);
        auto out2 = run_cli("verify --alg " + alg + " --id PA --expect holds");
        CHECK(out1 == out2); // byte-identical reports
        run_cli("verify --alg " + alg + " --id COM --expect holds", &code);
        CHECK(code == 1); // quaternions are not commutative
        std::remove(alg.c_str());
    }
    SECTION("build emits files that re-parse identically") {
        auto f1 = temp_path("mink.json");
        int code = -1;
        run_cli("build --recipe minkowski --ring zmod:3 --phi 1,0,0 --psi 0,1,0 -o " + f1, &code);
        REQUIRE(code == 0);
        auto text = read_file(f1);
        auto var = parse_algebra(text);
        auto re = std::visit([](const auto& a) { return serialize_algebra(a); }, var);
        CHECK(re == text);
        std::remove(f1.c_str());
    }
    SECTION("abcd build path") {
        auto base = temp_path("base.json"), out = temp_path("oct.json");
        int code = -1;
        run_cli("build --recipe cliffordq --ring zmod:3 --form 1,0,1 -o " + base, &code);
        REQUIRE(code == 0);
        run_cli("build --recipe abcd --alg " + base + " --mu -1 --side right -o " + out, &code);
        REQUIRE(code == 0);
        auto r = run_cli("verify --alg " + out + " --id PA --expect fails", &code);
        CHECK(code == 0);
        CHECK(r.find("RESULT PA fails") != std::string::npos);
        CHECK(r.find("witness:") != std::string::npos);
        run_cli("verify --alg " + out + " --id A1 --expect holds", &code);
        CHECK(code == 0);
        std::remove(base.c_str());
        std::remove(out.c_str());
    }
    SECTION("loop checks honour the table cap override") {
        auto tbl = temp_path("c6.tbl");
        write_file(tbl, serialize_magma(cyclic_group(6)));
        int code = -1;
        auto out = run_cli("loop --table " + tbl + " --check moufang --expect holds", &code);
        CHECK(code == 0);
        CHECK(out.find("RESULT moufang holds") != std::string::npos);
        std::string env = std::string("SPHERE_MAX_TABLE=4 ") + SPHERE_CLI_PATH + " loop --table " +
                          tbl + " --check moufang 2>&1";
        FILE* p = popen(env.c_str(), "r");
        REQUIRE(p != nullptr);
        std::string capped;
        char buf[512];
        while (std::size_t n = fread(buf, 1, sizeof buf, p)) capped.append(buf, n);
        int status = pclose(p);
        CHECK(WEXITSTATUS(status) == 1);
        CHECK(capped.find("cap") != std::string::npos);
        std::remove(tbl.c_str());
    }
    SECTION("double chain emits a Cayley table") {
        auto tbl = temp_path("o16.tbl");
        int code = -1;
        auto out = run_cli("double --seed c2 --eps -1 --mu 1 --steps 3 --emit-cayley " + tbl, &code);
        REQUIRE(code == 0);
        CHECK(out.find("identified C4") != std::string::npos);
        CHECK(out.find("identified Q8") != std::string::npos);
        CHECK(out.find("identified O16") != std::string::npos);
        auto var = parse_cayley(read_file(tbl));
        auto* m = std::get_if<Magma>(&var);
        REQUIRE(m != nullptr);
        CHECK(m->k == 16);
        CHECK(check_property(*m, "moufang").holds);
        std::remove(tbl.c_str());
    }
    SECTION("sphere-enum") {
        auto alg = temp_path("circle.json");
        ZmodRing z7(7);
        write_file(alg, serialize_algebra(canonical_algebra(BinaryForm<ZmodRing>{z7, 1, 0, 1})));
        int code = -1;
        auto out = run_cli("sphere-enum --alg " + alg + " --c 1", &code);
        CHECK(code == 0);
        CHECK(out.find("count 8") != std::string::npos);
        std::remove(alg.c_str());
    }
    SECTION("usage errors exit with 2") {
        int code = -1;
        run_cli("roots --form 1,2", &code);
        CHECK(code == 2);
        auto base = temp_path("side.json");
        run_cli("build --recipe cliffordq --ring zmod:3 --form 1,0,1 -o " + base, &code);
        REQUIRE(code == 0);
        auto msg = run_cli("build --recipe abcd --alg " + base + " --mu -1 -o out.json", &code);
        CHECK(code == 2); // doubling requires an explicit side
        CHECK(msg.find("--side") != std::string::npos);
        std::remove(base.c_str());
        run_cli("verify --alg missing.json --id NOPE", &code);
        CHECK(code == 2);
        run_cli("frobnicate", &code);
        CHECK(code == 2);
        run_cli("roots --form 1,0,1 --ring rat", &code);
        CHECK(code == 2);
    }
}

// sphere: construct, verify and enumerate group/Moufang spherical spaces
// and their finite loops. Reports are line oriented; verification commands
// end with a machine-readable "RESULT <id> <holds|fails> <strategy>" line.
// All randomness flows from --seed (default 0); identical configurations
// produce byte-identical reports.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sphere/constructions.hpp"
#include "sphere/io.hpp"
#include "sphere/moufang_double.hpp"
#include "sphere/sphere_loop.hpp"

using namespace sphere;

namespace {

struct CommonOpts {
    std::string ring = "int";
    std::uint64_t seed = 0;
    std::size_t count = 1000;
    std::int64_t box = 3;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

template <ring_type R>
BinaryForm<R> parse_form(const R& ring, const std::string& s) {
    auto parts = split_list(s, ',');
    if (parts.size() != 3) throw ParseError("--form needs three coefficients a,b,c");
    return {ring, ring.parse(parts[0]), ring.parse(parts[1]), ring.parse(parts[2])};
}

template <ring_type R>
Vec<R> parse_vec(const R& ring, const std::string& s) {
    Vec<R> v;
    for (auto& p : split_list(s, ',')) v.push_back(ring.parse(p));
    return v;
}

template <ring_type R>
Mat<R> parse_mat(const R& ring, const std::string& s) {
    auto rows = split_list(s, ';');
    std::vector<Vec<R>> rv;
    for (auto& r : rows) rv.push_back(parse_vec(ring, r));
    Mat<R> m(rv.size(), rv.empty() ? 0 : rv[0].size(), ring.zero());
    for (std::size_t i = 0; i < rv.size(); ++i) {
        if (rv[i].size() != m.cols) throw ParseError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rv[i][j];
    }
    return m;
}

Strategy make_strategy(const std::string& name, const CommonOpts& o) {
    Strategy st;
    st.seed = o.seed;
    st.count = o.count;
    st.box = o.box;
    if (name == "auto" || name == "exhaustive") st.kind = Strategy::Kind::Auto;
    else if (name == "basis" || name == "exhaustive-basis") st.kind = Strategy::Kind::ExhaustiveBasis;
    else if (name == "module" || name == "exhaustive-module") st.kind = Strategy::Kind::ExhaustiveModule;
    else if (name == "polarized" || name == "polarized-basis") st.kind = Strategy::Kind::PolarizedBasis;
    else if (name == "sampled") st.kind = Strategy::Kind::Sampled;
    else if (name == "box") st.kind = Strategy::Kind::Box;
    else throw ParseError("unknown strategy '" + name + "'");
    return st;
}

int loop_cap() {
    if (const char* env = std::getenv("SPHERE_MAX_TABLE")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw ParseError("SPHERE_MAX_TABLE must be an integer");
        }
    }
    return 64;
}

int cmd_table(const std::string& ring_desc, const std::string& form_str, bool five) {
    return with_ring(RingDesc::parse(ring_desc), [&](auto ring) {
        auto f = parse_form(ring, form_str);
        const auto& K = f.ring;
        if (!five) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        std::cout << "<e" << i + 1 << " e" << j + 1 << " e" << k + 1
                                  << "> = " << vec_str(K, basis_product(f, i, j, k)) << "\n";
        } else {
            const std::array<std::array<int, 5>, 10> tuples{{{0, 0, 0, 0, 0},
                                                             {1, 0, 0, 0, 0},
                                                             {0, 1, 0, 0, 0},
                                                             {0, 0, 1, 0, 0},
                                                             {1, 1, 0, 0, 0},
                                                             {1, 0, 1, 0, 0},
                                                             {1, 0, 0, 1, 0},
                                                             {1, 0, 0, 0, 1},
                                                             {0, 1, 1, 0, 0},
                                                             {0, 1, 0, 1, 0}}};
            for (const auto& t : tuples) {
                std::cout << "<";
                for (int i : t) std::cout << " e" << i + 1;
                std::cout << " > = " << vec_str(K, five_fold(f, t)) << "\n";
            }
        }
        return 0;
    });
}

int cmd_verify(const std::string& alg_path, const std::string& id_str, const std::string& strat,
               const CommonOpts& opts, const std::string& expect) {
    auto id = identity_from_name(id_str);
    if (!id) throw ParseError("unknown identity '" + id_str + "'");
    auto var = load_algebra(alg_path);
    return std::visit(
        [&](const auto& alg) {
            auto rep = verify(alg, *id, make_strategy(strat, opts));
            if (!rep.holds) std::cout << "witness: " << rep.witness_text << "\n";
            std::cout << "RESULT " << rep.identity << " " << (rep.holds ? "holds" : "fails") << " "
                      << rep.strategy << "\n";
            if (expect == "holds" && !rep.holds) return 1;
            if (expect == "fails" && rep.holds) return 1;
            return 0;
        },
        var);
}

struct BuildOpts {
    std::string recipe, ring = "int", form, phi, psi, b, alg, e, mu = "0", side, out;
};

int cmd_build(const BuildOpts& bo) {
    Side side = Side::right;
    if (bo.recipe == "kd" || bo.recipe == "abcd") {
        // the two doubling conventions genuinely differ; no silent default
        if (bo.side == "left") side = Side::left;
        else if (bo.side == "right") side = Side::right;
        else throw ParseError("--side left|right is required for the " + bo.recipe + " recipe");
    }
    std::string text;
    if (bo.recipe == "minkowski") {
        text = with_ring(RingDesc::parse(bo.ring), [&](auto ring) {
            auto phi = parse_vec(ring, bo.phi), psi = parse_vec(ring, bo.psi);
            return serialize_algebra(minkowski_extension(ring, phi, psi));
        });
    } else if (bo.recipe == "polarized") {
        text = with_ring(RingDesc::parse(bo.ring), [&](auto ring) {
            return serialize_algebra(polarized_space(ring, parse_mat(ring, bo.b)));
        });
    } else if (bo.recipe == "cliffordq") {
        text = with_ring(RingDesc::parse(bo.ring), [&](auto ring) {
            auto f = parse_form(ring, bo.form);
            auto H = clifford_quaternion(f);
            return serialize_algebra(ternary_of(H, ring.one(), Side::right));
        });
    } else if (bo.recipe == "splitnull") {
        auto var = load_algebra(bo.alg);
        text = std::visit(
            [&](const auto& base) { return serialize_algebra(split_null_extension(adjoint_action(base))); },
            var);
    } else if (bo.recipe == "kd") {
        auto var = load_algebra(bo.alg);
        text = std::visit(
            [&](const auto& base) {
                const auto& K = base.ring();
                auto e = parse_vec(K, bo.e);
                auto dbl = kd_double(homotope(base, e), K.parse(bo.mu), side);
                return serialize_algebra(ternary_of(dbl, K.one(), side));
            },
            var);
    } else if (bo.recipe == "abcd") {
        auto var = load_algebra(bo.alg);
        text = std::visit(
            [&](const auto& base) {
                const auto& K = base.ring();
                return serialize_algebra(abcd_double(base, K.parse(bo.mu), side));
            },
            var);
    } else {
        throw ParseError("unknown recipe '" + bo.recipe + "'");
    }
    if (bo.out.empty()) {
        std::cout << text;
    } else {
        write_file(bo.out, text);
        std::cout << "wrote " << bo.out << "\n";
    }
    return 0;
}

int cmd_loop(const std::string& table_path, const std::string& prop, const std::string& expect) {
    auto var = parse_cayley(read_file(table_path));
    LoopReport rep = std::visit([&](const auto& t) { return check_property(t, prop, loop_cap()); }, var);
    if (!rep.holds) std::cout << "witness: " << rep.text << "\n";
    std::cout << "RESULT " << rep.property << " " << (rep.holds ? "holds" : "fails")
              << " exhaustive-table\n";
    if (expect == "holds" && !rep.holds) return 1;
    if (expect == "fails" && rep.holds) return 1;
    return 0;
}

Magma seed_table(const std::string& name) {
    if (name == "c2") return cyclic_group(2);
    if (name == "c3") return cyclic_group(3);
    if (name == "c4") return cyclic_group(4);
    if (name == "c6") return cyclic_group(6);
    if (name == "c2xc2") return direct_product(cyclic_group(2), cyclic_group(2));
    if (name == "q8") return dicyclic_group(2);
    // otherwise a Cayley table file
    auto var = parse_cayley(read_file(name));
    if (auto* m = std::get_if<Magma>(&var)) return *m;
    throw ParseError("seed file must hold a binary Cayley table");
}

int cmd_double(const std::string& seed, const std::string& eps, const std::string& mu,
               std::size_t steps, const std::string& emit, const std::string& conv_str) {
    auto conv = conv_str == "bullet-prime" ? DoubleConvention::bullet_prime : DoubleConvention::bullet;
    auto G = FiniteGroup::with_inverse_involution(seed_table(seed));
    auto chain = doubling_chain(G, steps, StageParam::parse(eps), StageParam::parse(mu), conv);
    for (std::size_t s = 0; s < chain.size(); ++s) {
        const auto& st = chain[s];
        std::cout << "stage " << s + 1 << ": order " << st.cardinality << ", "
                  << (st.commutative ? "commutative" : "non-commutative") << ", "
                  << (st.associative ? "group" : "non-associative") << ", "
                  << (st.moufang ? "Moufang" : "not Moufang") << ", "
                  << (st.name == "unidentified" ? st.name : "identified " + st.name)
                  << ", order profile [";
        for (std::size_t i = 0; i < st.profile.size(); ++i)
            std::cout << (i ? "," : "") << st.profile[i];
        std::cout << "]\n";
    }
    if (!emit.empty() && !chain.empty()) {
        write_file(emit, serialize_magma(chain.back().loop.m));
        std::cout << "wrote " << emit << "\n";
    }
    const auto& last = chain.back();
    std::cout << "RESULT double " << (last.moufang ? "moufang" : "not-moufang") << " order-"
              << last.cardinality << (last.associative ? " associative" : " non-associative") << "\n";
    return 0;
}

int cmd_sphere_enum(const std::string& alg_path, const std::string& c_expr, std::int64_t box) {
    auto var = load_algebra(alg_path);
    return std::visit(
        [&](const auto& alg) {
            const auto& K = alg.ring();
            auto c = ring_eval(K, c_expr);
            auto pts = sphere_enumerate(alg, c, box);
            for (const auto& p : pts) std::cout << vec_str(K, p) << "\n";
            std::cout << "count " << pts.size() << "\n";
            return 0;
        },
        var);
}

int cmd_roots(const std::string& ring_desc, const std::string& form_str, std::int64_t box) {
    auto desc = RingDesc::parse(ring_desc);
    if (desc.kind != RingDesc::Kind::integers)
        throw ParseError("roots requires --ring int (root vectors are enumerated over Z)");
    ZRing K;
    auto f = parse_form(K, form_str);
    auto roots = root_vectors(f.space(), box);
    for (const auto& r : roots) std::cout << vec_str(K, r) << "\n";
    std::cout << "count " << roots.size() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for group and loop spheres"};
    app.require_subcommand(1);

    CommonOpts opts;

    // table
    auto* table = app.add_subcommand("table", "basis product tables of a binary form");
    std::string t_form, t_ring = "int";
    bool t_five = false;
    table->add_option("--form", t_form, "binary form coefficients a,b,c")->required();
    table->add_option("--ring", t_ring, "ring descriptor (int, zmod:<n>, rat)");
    table->add_flag("--five", t_five, "emit 5-fold products instead of triples");

    // verify
    auto* ver = app.add_subcommand("verify", "verify an identity on an algebra file");
    std::string v_alg, v_id, v_strategy = "auto", v_expect;
    ver->add_option("--alg", v_alg, "algebra file")->required();
    ver->add_option("--id", v_id, "identity (K PA AT1 COM TS TC A1 A2 A3 A1dual A2dual A3dual FUFO)")
        ->required();
    ver->add_option("--strategy", v_strategy, "auto|exhaustive|basis|module|polarized|sampled|box");
    ver->add_option("--seed", opts.seed, "sampling seed (default 0)");
    ver->add_option("--count", opts.count, "sample count (default 1000)");
    ver->add_option("--box", opts.box, "coordinate box for Z/Q sweeps (default 3)");
    ver->add_option("--expect", v_expect, "exit 1 unless verdict matches (holds|fails)");

    // build
    auto* bld = app.add_subcommand("build", "construct an algebra and emit its file");
    BuildOpts bo;
    bld->add_option("--recipe", bo.recipe, "minkowski|splitnull|polarized|cliffordq|kd|abcd")
        ->required();
    bld->add_option("--ring", bo.ring, "ring descriptor");
    bld->add_option("--form", bo.form, "binary form a,b,c (cliffordq)");
    bld->add_option("--phi", bo.phi, "covector (minkowski)");
    bld->add_option("--psi", bo.psi, "covector (minkowski)");
    bld->add_option("--b", bo.b, "bilinear table rows r1;r2;... (polarized)");
    bld->add_option("--alg", bo.alg, "base algebra file (splitnull, kd, abcd)");
    bld->add_option("--e", bo.e, "base point coordinates (kd)");
    bld->add_option("--mu", bo.mu, "doubling scalar (kd, abcd)");
    bld->add_option("--side", bo.side, "left|right (kd, abcd)");
    bld->add_option("-o,--out", bo.out, "output file (stdout when omitted)");

    // loop
    auto* lp = app.add_subcommand("loop", "check a property of a Cayley table");
    std::string l_table, l_check, l_expect;
    lp->add_option("--table", l_table, "Cayley table file")->required();
    lp->add_option("--check", l_check, "property name")->required();
    lp->add_option("--expect", l_expect, "exit 1 unless verdict matches (holds|fails)");

    // double
    auto* dbl = app.add_subcommand("double", "iterate the Moufang double of a group");
    std::string d_seed, d_eps = "1", d_mu = "1", d_emit, d_conv = "bullet";
    std::size_t d_steps = 1;
    dbl->add_option("--seed", d_seed, "c2|c3|c4|c6|c2xc2|q8 or a Cayley table file")->required();
    dbl->add_option("--eps", d_eps, "1, -1, or an element label");
    dbl->add_option("--mu", d_mu, "1, -1, or an element label");
    dbl->add_option("--steps", d_steps, "number of doublings");
    dbl->add_option("--emit-cayley", d_emit, "write final Cayley table here");
    dbl->add_option("--convention", d_conv, "bullet|bullet-prime");

    // sphere-enum
    auto* se = app.add_subcommand("sphere-enum", "enumerate a sphere q^{-1}(c)");
    std::string s_alg, s_c = "1";
    std::int64_t s_box = 0;
    se->add_option("--alg", s_alg, "algebra file")->required();
    se->add_option("--c", s_c, "level (ring expression)");
    se->add_option("--box", s_box, "coordinate box for Z carriers");

    // roots
    auto* rt = app.add_subcommand("roots", "enumerate root vectors in a box");
    std::string r_form, r_ring = "int";
    std::int64_t r_box = 2;
    rt->add_option("--form", r_form, "binary form coefficients a,b,c")->required();
    rt->add_option("--ring", r_ring, "must be int");
    rt->add_option("--box", r_box, "coordinate box (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) return cmd_table(t_ring, t_form, t_five);
        if (*ver) return cmd_verify(v_alg, v_id, v_strategy, opts, v_expect);
        if (*bld) return cmd_build(bo);
        if (*lp) return cmd_loop(l_table, l_check, l_expect);
        if (*dbl) return cmd_double(d_seed, d_eps, d_mu, d_steps, d_emit, d_conv);
        if (*se) return cmd_sphere_enum(s_alg, s_c, s_box);
        if (*rt) return cmd_roots(r_ring, r_form, r_box);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

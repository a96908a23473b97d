#include "artifact/io.hpp"
#include "artifact/suites.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace stq;

namespace {

constexpr int kPass = 0, kFail = 1, kIoError = 2;

struct Global {
    uint64_t seed = 1;
    int dim = 4;
    int weight = 0;
    int oracle_points = 5;
    long box = 25;
    std::string out;
};

void emit(const Global& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw ParseError("cannot write " + g.out);
    f << text;
}

void emit_json(const Global& g, const json& j) { emit(g, j.dump(2) + "\n"); }

std::vector<Vec> parse_vectors_arg(const std::string& s) {
    try {
        return vectors_from_json(json::parse(s));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad vector list: ") + e.what());
    }
}

int cmd_reduce(const Global& g, const std::string& file, bool unimodular) {
    StElement x = st_from_json(read_json_file(file));
    StElement nf = normal_form(x);
    json out{{"seed", g.seed}, {"input", st_to_json(x)}, {"normal_form", st_to_json(nf)}, {"zero", nf.empty()}};
    if (unimodular) out["unimodular"] = st_to_json(ash_rudolph_reduce(x));
    emit_json(g, out);
    return kPass;
}

int cmd_symbol(const Global& g, const std::string& kind, const std::string& arg) {
    json out{{"seed", g.seed}, {"kind", kind}};
    if (kind == "Li") {
        std::vector<int> n;
        try {
            n = json::parse(arg).get<std::vector<int>>();
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad exponent tuple: ") + e.what());
        }
        if (n.empty()) throw ParseError("empty exponent tuple");
        for (int x : n)
            if (x < 1) throw ParseError("exponents must be positive");
        BarSym b = bar_sym_normalize(sigma(iterated_delta(LiSum{{standard_li(n), 1}})));
        auto st = truncated_symbol(LiSum{{standard_li(n), 1}});
        bool agree = st && st2_sym_equal(*st, truncated_symbol_closed(n));
        out["exponents"] = n;
        out["bar"] = barsym_to_json(b);
        out["st2"] = st ? st2sym_to_json(*st) : json(nullptr);
        out["matches_closed_form"] = agree;
        emit_json(g, out);
        return agree ? kPass : kFail;
    }
    auto v = parse_vectors_arg(arg);
    int d = (int)v.size();
    if ((int)v[0].size() != d || det(v) == 0) throw ParseError("vectors must form a basis");
    BarElement b;
    if (kind == "L") b = symbol_L(v);
    else if (kind == "I") b = symbol_I(v);
    else throw ParseError("kind must be L, I or Li");
    BarElement direct = embed_s(kind == "L" ? make_L(v) : make_I(v));
    BarElement dl = direct;
    lc_add(dl, b, Q(-1));
    bool agree = bar_normalize(dl).empty();
    out["vectors"] = json::array();
    for (auto& x : v) out["vectors"].push_back(vec_to_json(x));
    out["terms"] = bar_to_json(b);
    out["count"] = b.size();
    out["matches_s_map"] = agree;
    emit_json(g, out);
    return agree ? kPass : kFail;
}

St2Element claim_term(const json& t) {
    std::string kind = t.at("kind").get<std::string>();
    auto v = vectors_from_json(t.at("vectors"));
    if (kind == "L") return make_L(v);
    if (kind == "I") return make_I(v);
    if (kind == "corr") return make_corr(v);
    if (kind == "corr_colon") return make_corr_colon(v);
    if (kind == "pair") return make_pair_element(v, vectors_from_json(t.at("right")));
    throw ParseError("unknown term kind " + kind);
}

// a fixture claims that a combination of St^2 generators vanishes
SuiteReport run_claims(const Global& g, const std::string& file) {
    json j = read_json_file(file);
    SuiteReport r;
    r.name = "fixture";
    int idx = 0;
    for (auto& c : j.at("claims")) {
        St2Element x;
        try {
            for (auto& t : c.at("terms")) lc_add(x, claim_term(t), t.contains("coeff") ? q_from_json(t.at("coeff")) : Q(1));
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad claim: ") + e.what());
        }
        std::string mode = c.value("mode", "st2");
        bool ok = mode == "stinf" ? is_zero_st_infty(x, g.seed) : is_zero_st2(x);
        std::string name = c.value("name", "claim " + std::to_string(idx));
        r.check(ok, name + ": residual " + to_string(st2_normal_form(x)));
        ++idx;
    }
    return r;
}

int cmd_verify(const Global& g, const std::string& suite, int trials, const std::string& fixture) {
    SuiteConfig c;
    c.seed = g.seed;
    c.max_dim = g.dim;
    c.trials = trials;
    c.oracle_points = g.oracle_points;
    c.box = g.box;
    c.max_weight = g.weight;
    SuiteReport r;
    if (!fixture.empty()) r = run_claims(g, fixture);
    else if (suite == "shuffle") r = suite_shuffle(c);
    else if (suite == "dihedral") r = suite_dihedral(c);
    else if (suite == "cobracket") r = suite_cobracket(c);
    else if (suite == "duality") r = suite_duality(c);
    else if (suite == "ashrudolph") r = suite_ashrudolph(c);
    else if (suite == "relations") r = suite_relations(c);
    else if (suite == "flag") r = suite_flag_basis(c);
    else if (suite == "smap") r = suite_smap(c);
    else if (suite == "symbol") r = suite_symbol(c);
    else if (suite == "equivariance") r = suite_equivariance(c);
    else throw ParseError("unknown suite " + suite);
    json out{{"seed", g.seed}, {"suite", fixture.empty() ? suite : r.name}, {"cases", r.cases},
             {"failures", r.failures}, {"failing", r.witnesses}, {"notes", r.notes},
             {"verdict", r.ok() ? "PASS" : "FAIL"}};
    emit_json(g, out);
    return r.ok() ? kPass : kFail;
}

int cmd_st(const Global& g, const std::string& file) {
    IdentityFile f = identity_from_json(read_json_file(file));
    IdentityReport rep = verify_li_identity(f.terms, f.dim, g.seed);
    json out{{"seed", g.seed}, {"verdict", rep.ok ? "PASS" : "FAIL"}};
    if (!rep.ok) out["residual"] = st2sym_to_json(rep.residual);
    emit_json(g, out);
    return rep.ok ? kPass : kFail;
}

int cmd_fourier_study(const Global& g, const std::string& spec_file, int n, const std::string& xs, long m, double tol) {
    FourierSpec s;
    if (!spec_file.empty()) {
        s = fourier_from_json(read_json_file(spec_file));
        if (s.u.size() != 1) throw ParseError("convergence studies need a one-dimensional spec");
    } else {
        s.cone.rays = {{1}, {-1}};
        s.u = {{1}};
        s.n = {n};
    }
    double x = parse_rational(xs).get_d();
    auto ref = bernoulli_reference(s.n[0], x);
    std::ostringstream os;
    os << "seed,M,real_error,imag_error\n";
    double last = 0;
    for (long mm = 10; mm <= m; mm *= 10) {
        auto v = truncated_fourier_sum(s, {x}, mm);
        os << g.seed << "," << mm << "," << std::abs(v.real() - ref.real()) << "," << std::abs(v.imag() - ref.imag()) << "\n";
        last = std::abs(v - ref);
    }
    emit(g, os.str());
    if (tol <= 0) tol = s.n[0] == 1 ? 1e-2 : 1e-6;
    return last <= tol ? kPass : kFail;
}

int cmd_fourier_shuffle(const Global& g) {
    FourierSpec l1 = standard_li_spec({1});
    auto spec2 = [](std::vector<Vec> rays) {
        FourierSpec s;
        s.cone.rays = rays;
        s.u = {{1, 0}, {0, 1}};
        s.n = {1, 1};
        return s;
    };
    std::vector<std::pair<Q, FourierSpec>> dec{{1, spec2({{0, 1}, {1, 1}})}, {1, spec2({{1, 0}, {1, 1}})}, {-1, spec2({{1, 1}})}};
    CheckResult r = coefficient_shuffle_check(l1, l1, dec, g.box);
    json out{{"seed", g.seed}, {"box", g.box}, {"verdict", r.ok ? "PASS" : "FAIL"}};
    if (!r.ok) out["witness"] = ivec_to_json(r.witness);
    emit_json(g, out);
    return r.ok ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in Steinberg modules and multiple polylogarithms on tori"};
    Global g;
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--dim", g.dim, "maximal dimension for randomized suites");
    app.add_option("--weight", g.weight, "maximal weight for symbol suites");
    app.add_option("--oracle-points", g.oracle_points, "evaluation points of the partial fraction oracle");
    app.add_option("--box", g.box, "box size for coefficient checks");
    app.add_option("--out", g.out, "write output to this file");
    app.require_subcommand(1);

    std::string file, kind, arg, suite, fixture, spec, xs = "1/3";
    bool unimodular = false;
    int trials = 0, n = 2;
    long m = 10000;
    double tol = 0;

    auto* reduce = app.add_subcommand("reduce", "flag basis normal form of a Steinberg element");
    reduce->add_option("file", file)->required();
    reduce->add_flag("--unimodular", unimodular, "also rewrite in unimodular apartments");

    auto* symbol = app.add_subcommand("symbol", "bar symbol of L[v], I[v] or the truncated symbol of Li_n");
    symbol->add_option("kind", kind)->required()->check(CLI::IsMember({"L", "I", "Li"}));
    symbol->add_option("vectors", arg, "JSON list of vectors, or an exponent tuple for Li")->required();

    auto* verify = app.add_subcommand("verify", "randomized identity suites");
    verify->add_option("suite", suite)->check(CLI::IsMember(
        {"shuffle", "dihedral", "cobracket", "duality", "ashrudolph", "relations", "flag", "smap", "symbol", "equivariance"}));
    verify->add_option("--trials", trials, "cases per dimension");
    verify->add_option("--fixture", fixture, "JSON file of claimed vanishing combinations");

    auto* st = app.add_subcommand("st", "verify a polylogarithm identity through the truncated symbol");
    st->add_option("file", file)->required();

    auto* fourier = app.add_subcommand("fourier", "truncated Fourier sums and coefficient checks");
    fourier->require_subcommand(1);
    auto* study = fourier->add_subcommand("study", "CSV of truncation errors against the Bernoulli reference");
    study->add_option("--spec", spec, "one-dimensional spec file");
    study->add_option("-n", n, "exponent when no spec is given");
    study->add_option("-x", xs, "evaluation point");
    study->add_option("-M", m, "largest truncation");
    study->add_option("--tol", tol, "tolerance on the last row");
    auto* fshuffle = fourier->add_subcommand("shuffle", "coefficient shuffle check for Li1 x Li1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kIoError;
    }

    try {
        if (*reduce) return cmd_reduce(g, file, unimodular);
        if (*symbol) return cmd_symbol(g, kind, arg);
        if (*verify) {
            if (suite.empty() && fixture.empty()) throw ParseError("verify needs a suite or --fixture");
            return cmd_verify(g, suite, trials, fixture);
        }
        if (*st) return cmd_st(g, file);
        if (*study) return cmd_fourier_study(g, spec, n, xs, m, tol);
        if (*fshuffle) return cmd_fourier_shuffle(g);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kIoError;
}

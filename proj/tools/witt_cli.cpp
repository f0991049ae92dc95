// Command-line front end: verification suites, brackets, characters, probes,
// depth-one pairing ranks. Exit codes: 0 pass, 1 check failure, 2 usage or
// parse error, 3 precondition violation.

#include "witt/highest_weight.hpp"
#include "witt/json_io.hpp"
#include "witt/prng.hpp"
#include "witt/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace witt;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

GlModule builtin_module(const std::string& name, GlDims d) {
    if (name == "trivial") return gl_trivial(d);
    if (name == "natural") return gl_natural(d);
    if (name == "dual") return gl_dual(gl_natural(d));
    throw ParseError("unknown builtin module '" + name + "'");
}

GlModule resolve_module(const std::string& builtin, const std::string& file, GlDims d) {
    if (!file.empty()) {
        GlModule V = io::glmodule_from_json(load_json_file(file), d.p, d.q);
        const auto rep = V.verify();
        if (!rep.ok) throw PreconditionError("module file fails gl relations: " + rep.first_failure);
        return V;
    }
    return builtin_module(builtin, d);
}

struct CommonOpts {
    int m = 2, n = 2;
    int window = 2;
    std::uint64_t seed = 0;
    std::string out = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--m", o.m, "number of even variables");
    cmd->add_option("--n", o.n, "number of odd variables");
    cmd->add_option("--window", o.window, "exponent window bound");
    cmd->add_option("--seed", o.seed, "PRNG seed");
    cmd->add_option("--out", o.out, "output format")->check(CLI::IsMember({"json", "tsv"}));
}

void check_mn(const CommonOpts& o) {
    if (o.m < 0 || o.n < 0 || (o.m == 0 && o.n == 0))
        throw PreconditionError("need (m, n) != (0, 0) and non-negative dimensions");
    if (o.window < 0) throw PreconditionError("window must be non-negative");
}

json suite_report(const SuiteResult& r) {
    json rep;
    rep["suite"] = r.suite;
    rep["checked"] = r.checked;
    rep["failed"] = r.failures.size();
    json fails = json::array();
    for (const auto& f : r.failures) {
        json e;
        e["pair"] = f.pair;
        e["status"] = "fail";
        e["lhs"] = f.lhs;
        e["rhs"] = f.rhs;
        fails.push_back(std::move(e));
    }
    rep["failures"] = std::move(fails);
    return rep;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, long samples, bool exhaustive) {
    check_mn(o);
    SuiteConfig cfg;
    cfg.m = o.m;
    cfg.n = o.n;
    cfg.window = o.window;
    cfg.seed = o.seed;
    cfg.samples = samples;
    cfg.exhaustive = exhaustive;
    std::vector<std::string> names;
    if (suite.empty()) {
        names = suite_names();
    } else {
        const auto known = suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
            throw ParseError("unknown suite '" + suite + "'");
        names.push_back(suite);
    }
    bool all_ok = true;
    json out = json::array();
    for (const auto& name : names) {
        const SuiteResult r = run_suite(name, cfg);
        all_ok = all_ok && r.passed();
        if (o.out == "tsv")
            std::cout << r.suite << "\t" << r.checked << "\t" << r.failures.size() << "\t"
                      << (r.passed() ? "pass" : "FAIL") << "\n";
        else
            out.push_back(suite_report(r));
    }
    if (o.out != "tsv") std::cout << out.dump(2) << "\n";
    return all_ok ? kExitPass : kExitCheckFailure;
}

int cmd_bracket(const CommonOpts& o, const std::string& xfile, const std::string& yfile,
                bool tilde) {
    check_mn(o);
    const json jx = load_json_file(xfile);
    const json jy = load_json_file(yfile);
    if (tilde) {
        const WTildeElement x = io::wtilde_from_json(jx, o.m, o.n);
        const WTildeElement y = io::wtilde_from_json(jy, o.m, o.n);
        std::cout << io::to_json(bracket_tilde(x, y)).dump(2) << "\n";
    } else {
        const WElement x = io::welement_from_json(jx, o.m, o.n);
        const WElement y = io::welement_from_json(jy, o.m, o.n);
        std::cout << io::to_json(bracket(x, y)).dump(2) << "\n";
    }
    return kExitPass;
}

int cmd_char(const CommonOpts& o, const std::string& lambda_csv, const std::string& builtin,
             const std::string& file) {
    check_mn(o);
    const auto lambda = io::parse_weight_list(lambda_csv);
    if (static_cast<int>(lambda.size()) != o.m) throw PreconditionError("lambda length != m");
    const GlModule V = resolve_module(builtin, file, GlDims{o.m, o.n});
    const WeightTable table = weight_char(lambda, V, o.m, o.n, exp_window(o.m, o.window));
    if (o.out == "tsv") {
        for (const auto& [w, d] : table) {
            for (const auto& c : w) std::cout << c.str() << "\t";
            std::cout << d << "\n";
        }
    } else {
        json out = json::array();
        for (const auto& [w, d] : table) {
            json row;
            row["weight"] = io::weights_to_json(w);
            row["dim"] = d;
            out.push_back(std::move(row));
        }
        std::cout << out.dump(2) << "\n";
    }
    return kExitPass;
}

int cmd_probe_l0(const CommonOpts& o, const std::string& lambda_csv, const std::string& gamma_csv,
                 const std::string& builtin, const std::string& file, long samples, int lmax) {
    check_mn(o);
    const auto lambda = io::parse_weight_list(lambda_csv);
    if (static_cast<int>(lambda.size()) != o.m) throw PreconditionError("lambda length != m");
    const ExpVec gamma = io::parse_int_list(gamma_csv);
    if (static_cast<int>(gamma.size()) != o.m) throw PreconditionError("gamma length != m");
    if (is_zero_exp(gamma)) throw PreconditionError("gamma must be nonzero");
    const GlModule V = resolve_module(builtin, file, GlDims{o.m, o.n});
    Rng rng(o.seed);
    std::vector<ProbeSample> ps;
    for (long s = 0; s < samples; ++s) {
        ProbeSample smp;
        smp.alpha = rng.exp_vec(o.m, 1);
        smp.beta = rng.exp_vec(o.m, 1);
        smp.I = rng.mask(o.n);
        if (o.n > 0 && (rng.next() & 1))
            smp.del = gen_del(static_cast<int>(rng.uniform(1, o.n)));
        else
            smp.del = gen_d(static_cast<int>(rng.uniform(1, o.m)));
        for (int i = 0; i < o.m; ++i) smp.mu.push_back(rng.rational(3));
        ps.push_back(std::move(smp));
    }
    const ProbeSearchResult res = find_min_l0(gamma, lambda, V, o.m, o.n, ps, zero_exp(o.m), lmax);
    json out;
    out["found"] = res.found;
    out["l0"] = res.l0;
    out["per_sample_l0"] = res.per_sample_l0;
    std::cout << out.dump(2) << "\n";
    if (!res.found) throw PreconditionError("no l0 found within bound");
    return kExitPass;
}

int cmd_depth1(const CommonOpts& o, const std::string& lambda_csv, const std::string& g_rows_csv,
               const std::string& beta_csv, const std::string& targets_csv, int R, int Rp,
               const std::string& builtin, const std::string& file) {
    check_mn(o);
    if (o.m < 2) throw PreconditionError("depth1 needs m >= 2");
    const auto lambda = io::parse_weight_list(lambda_csv);
    if (static_cast<int>(lambda.size()) != o.m) throw PreconditionError("lambda length != m");
    LatticeSplit split;
    split.beta = io::parse_int_list(beta_csv);
    std::istringstream rows(g_rows_csv);
    std::string row;
    while (std::getline(rows, row, ';')) split.g_rows.push_back(io::parse_int_list(row));
    split.validate();
    if (split.m() != o.m) throw PreconditionError("split dimension != m");
    const GlModule V = resolve_module(builtin, file, GlDims{o.m - 1, o.n});
    CuspidalInput X{lambda, V};

    std::vector<ExpVec> targets;
    std::istringstream ts(targets_csv);
    std::string tok;
    while (std::getline(ts, tok, ';')) targets.push_back(io::parse_int_list(tok));
    if (targets.empty()) targets.push_back(zero_exp(o.m - 1));

    std::vector<PairingReport> reports;
    for (const auto& t : targets) reports.push_back(depth1_quotient_dim(X, split, t, R, Rp));
    if (o.out == "tsv") {
        for (const auto& rep : reports) {
            for (const auto& c : rep.target_weight) std::cout << c.str() << "\t";
            std::cout << rep.final_rank() << "\t" << (rep.stabilized ? "stabilized" : "open")
                      << "\n";
        }
    } else {
        json out = json::array();
        for (const auto& rep : reports) out.push_back(io::to_json(rep));
        std::cout << out.dump(2) << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the Witt superalgebra W_{m,n} and its weight modules"};
    app.require_subcommand(1);

    CommonOpts vo;
    std::string v_suite;
    long v_samples = 1500;
    bool v_exhaustive = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, vo);
    verify->add_option("--suite", v_suite, "suite name (default: all)");
    verify->add_option("--samples", v_samples, "sample count for sampled sweeps");
    verify->add_flag("--exhaustive", v_exhaustive, "full acceptance-scale sweeps");

    CommonOpts bo;
    std::string b_x, b_y;
    bool b_tilde = false;
    auto* br = app.add_subcommand("bracket", "bracket of two serialized elements");
    add_common(br, bo);
    br->add_option("--x", b_x, "left operand file")->required();
    br->add_option("--y", b_y, "right operand file")->required();
    br->add_flag("--tilde", b_tilde, "bracket in W x| A instead of W");

    CommonOpts co;
    std::string c_lambda = "0,0", c_builtin = "natural", c_file;
    auto* ch = app.add_subcommand("char", "weight character of Gamma(lambda, V)");
    add_common(ch, co);
    ch->add_option("--lambda", c_lambda, "comma-separated rational weight");
    ch->add_option("--module", c_builtin, "builtin module: trivial|natural|dual");
    ch->add_option("--module-file,--input", c_file, "module JSON file");

    CommonOpts po;
    std::string p_lambda = "0,0", p_gamma, p_builtin = "natural", p_file;
    long p_samples = 5;
    int p_lmax = 16;
    auto* pr = app.add_subcommand("probe-l0", "annihilator-identity probe");
    add_common(pr, po);
    pr->add_option("--lambda", p_lambda, "comma-separated rational weight");
    pr->add_option("--gamma", p_gamma, "comma-separated integer direction")->required();
    pr->add_option("--module", p_builtin, "builtin module: trivial|natural|dual");
    pr->add_option("--module-file,--input", p_file, "module JSON file");
    pr->add_option("--samples", p_samples, "number of sampled (alpha, beta, I, del, mu)");
    pr->add_option("--lmax", p_lmax, "search bound for l0");

    CommonOpts d1;
    std::string d_lambda = "0,0", d_grows = "1,0", d_beta = "0,1", d_targets = "0",
                d_builtin = "trivial", d_file;
    int d_R = 4, d_Rp = 4;
    auto* dp = app.add_subcommand("depth1", "depth-one pairing ranks of M(G, beta, X)");
    add_common(dp, d1);
    dp->add_option("--lambda", d_lambda, "comma-separated rational weight (length m)");
    dp->add_option("--g-rows", d_grows, "subgroup basis rows, ';'-separated");
    dp->add_option("--beta", d_beta, "beta vector");
    dp->add_option("--targets", d_targets, "target G offsets, ';'-separated");
    dp->add_option("--R", d_R, "lowering window (strict bound)");
    dp->add_option("--raising-window", d_Rp, "raising window (strict bound)");
    dp->add_option("--module", d_builtin, "builtin gl(m-1,n) module");
    dp->add_option("--module-file,--input", d_file, "module JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(vo, v_suite, v_samples, v_exhaustive);
        if (br->parsed()) return cmd_bracket(bo, b_x, b_y, b_tilde);
        if (ch->parsed()) return cmd_char(co, c_lambda, c_builtin, c_file);
        if (pr->parsed()) return cmd_probe_l0(po, p_lambda, p_gamma, p_builtin, p_file, p_samples, p_lmax);
        if (dp->parsed()) return cmd_depth1(d1, d_lambda, d_grows, d_beta, d_targets, d_R, d_Rp,
                                            d_builtin, d_file);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimMismatchError& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}

// Command-line front end: construction, measurement, derivation, duality
// checks, bounds, table verification, and randomized search. Every command
// prints a JSON report to stdout; --human switches to terse text. Exit codes:
// 0 success, 1 verification mismatch, 2 invalid input.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcadd/errors.hpp"
#include "qcadd/report.hpp"

using namespace qcadd;

namespace {

struct Output {
    bool human = false;
    int exit_code = 0;

    void emit(const json& j, const std::string& human_text) const {
        if (human)
            std::cout << human_text << "\n";
        else
            std::cout << j.dump(2) << "\n";
    }
};

Gf2Poly cli_poly(const std::string& s, int n) {
    if (s.rfind("p:", 0) == 0) {
        std::vector<int> powers;
        std::stringstream ss(s.substr(2));
        std::string tok;
        while (std::getline(ss, tok, ',')) powers.push_back(std::atoi(tok.c_str()));
        return Gf2Poly::from_powers(powers);
    }
    if (s.rfind("q:", 0) == 0) {
        if (n < 1) fail("invalid-input", "quotient polynomial needs --n");
        return cyclotomic_quotient(cli_poly(s.substr(2), n), n);
    }
    return parse_runlength(s);
}

BinaryCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("invalid-input", "cannot open code file " + path);
    return read_code(in);
}

void store_code(const std::string& path, const BinaryCode& c) {
    std::ofstream out(path);
    if (!out) fail("invalid-input", "cannot write code file " + path);
    write_code(out, c);
}

std::uint64_t log2_budget(int budget_log2) {
    if (budget_log2 < 0 || budget_log2 > 30)
        fail("invalid-input", "budget exponent must be in [0, 30]");
    return std::uint64_t(1) << budget_log2;
}

QcGeneratorTuple parse_gen_spec(const std::string& spec, int n) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail("invalid-input", "generator spec must be g:f0,f1[,f2,f3]");
    QcGeneratorTuple t;
    t.g = cli_poly(spec.substr(0, colon), n);
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) t.fs.push_back(cli_poly(tok, n));
    return t;
}

json code_report(const BinaryCode& code, bool with_distance, WeightMode mode,
                 const DistanceOptions& opts, bool gf4) {
    json j;
    j["code"] = to_json(code);
    if (gf4 && code.length % 2 == 0) {
        const AdditiveCode a = make_additive(code);
        j["additive"] = json{{"n", a.n}, {"dimension", dim_string(a.k2())}};
        j["gf4_rows"] = gf4_generator_strings(a);
    }
    if (with_distance && code.rank > 0) {
        const DistanceReport rep = min_distance(code, mode, opts);
        j["distance"] = to_json(rep);
        if (code.length % 2 == 0)
            j["params"] = params_string(int(code.length / 2), code.rank, rep.value);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-cyclic construction toolkit for quaternary additive codes"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--human", out.human, "print terse text instead of JSON");

    std::string data_dir_flag;
    app.add_option("--data-dir", data_dir_flag,
                   "dataset directory (default: QCADD_DATA_DIR or the built-in path)");
    auto data_dir = [&]() {
        return data_dir_flag.empty() ? default_data_dir()
                                     : std::filesystem::path(data_dir_flag);
    };

    int rc = 0;
    std::function<void()> action;

    // ---- poly ----------------------------------------------------------
    auto* poly = app.add_subcommand("poly", "parse or format polynomials");
    auto* poly_parse = poly->add_subcommand("parse", "expand run-length notation");
    static std::string poly_in;
    poly_parse->add_option("value", poly_in)->required();
    poly_parse->callback([&]() {
        const Gf2Poly p = parse_runlength(poly_in);
        out.emit(to_json(p), p.to_power_string());
    });
    auto* poly_format = poly->add_subcommand("format", "canonical run-length of a 0/1 string");
    static std::string poly_fmt_in;
    poly_format->add_option("value", poly_fmt_in)->required();
    poly_format->callback([&]() {
        const Gf2Poly p = Gf2Poly::from_coeffs(poly_fmt_in);
        out.emit(to_json(p), format_runlength(p));
    });

    // ---- cyclic ----------------------------------------------------------
    auto* cyclic = app.add_subcommand("cyclic", "build a cyclic code from g | x^n-1");
    static int cy_n = 0;
    static std::string cy_g;
    static bool cy_dist = false;
    static int cy_budget = 24, cy_workers = 1;
    cyclic->add_option("--n", cy_n)->required();
    cyclic->add_option("--g", cy_g)->required();
    cyclic->add_flag("--distance", cy_dist);
    cyclic->add_option("--budget", cy_budget, "log2 of the codeword budget");
    cyclic->add_option("--workers", cy_workers);
    cyclic->callback([&]() {
        const BinaryCode code = build_cyclic(cy_n, cli_poly(cy_g, cy_n));
        DistanceOptions opts;
        opts.budget = log2_budget(cy_budget);
        opts.workers = cy_workers;
        const json j = code_report(code, cy_dist, WeightMode::hamming, opts, false);
        out.emit(j, "[" + std::to_string(code.length) + "," + std::to_string(code.rank) +
                        (cy_dist ? "," + std::to_string(j["distance"]["value"].get<std::uint64_t>())
                                 : "") +
                        "]");
    });

    // ---- qc --------------------------------------------------------------
    auto* qc = app.add_subcommand("qc", "build quasi-cyclic codes");
    static int qc_n = 0, qc_budget = 24, qc_workers = 1;
    static std::vector<std::string> qc_gens;
    static std::string qc_fl, qc_fr, qc_out;
    static bool qc_dist = false, qc_gf4 = false, qc_hamming = false;
    qc->add_option("--n", qc_n)->required();
    qc->add_option("--gen", qc_gens, "g:f0,f1[,f2,f3]; repeat for multi-generator codes")
        ->required();
    qc->add_option("--double-fl", qc_fl, "double the index with this left multiplier");
    qc->add_option("--double-fr", qc_fr, "right multiplier for index doubling");
    qc->add_flag("--distance", qc_dist);
    qc->add_flag("--gf4", qc_gf4, "print the additive generators");
    qc->add_flag("--hamming", qc_hamming, "measure Hamming instead of symplectic weight");
    qc->add_option("--budget", qc_budget);
    qc->add_option("--workers", qc_workers);
    qc->add_option("--out", qc_out, "serialize the code to this file");
    qc->callback([&]() {
        std::vector<QcGeneratorTuple> gens;
        for (const auto& s : qc_gens) gens.push_back(parse_gen_spec(s, qc_n));
        BinaryCode code;
        json extra;
        if (!qc_fl.empty() || !qc_fr.empty()) {
            if (gens.size() != 1) fail("invalid-input", "index doubling needs one generator");
            BoundReport conditions;
            code = double_index({qc_n, gens[0].g, gens[0].fs}, cli_poly(qc_fl, qc_n),
                                cli_poly(qc_fr, qc_n), &conditions);
            extra = to_json(conditions);
        } else {
            code = build_qc_multi(qc_n, gens);
        }
        DistanceOptions opts;
        opts.budget = log2_budget(qc_budget);
        opts.workers = qc_workers;
        json j = code_report(code, qc_dist,
                             qc_hamming ? WeightMode::hamming : WeightMode::symplectic, opts,
                             qc_gf4);
        if (!extra.is_null()) j["doubling_conditions"] = extra;
        if (!qc_out.empty()) store_code(qc_out, code);
        out.emit(j, j.contains("params") ? j["params"].get<std::string>()
                                         : "[" + std::to_string(code.length) + "," +
                                               std::to_string(code.rank) + "]");
    });

    // ---- distance ----------------------------------------------------------
    auto* dist = app.add_subcommand("distance", "measure a serialized code");
    static std::string di_code;
    static bool di_hamming = false, di_sample_only = false;
    static int di_budget = 24, di_workers = 1;
    static std::uint64_t di_trials = 0, di_seed = 0;
    static bool di_seed_set = false;
    dist->add_option("--code", di_code)->required();
    dist->add_flag("--hamming", di_hamming);
    dist->add_flag("--sample-only", di_sample_only, "sampled upper bound instead of enumeration");
    dist->add_option("--budget", di_budget);
    dist->add_option("--workers", di_workers);
    dist->add_option("--trials", di_trials);
    dist->add_option("--seed", di_seed)->each([&](const std::string&) { di_seed_set = true; });
    dist->callback([&]() {
        const BinaryCode code = load_code(di_code);
        const WeightMode mode = di_hamming ? WeightMode::hamming : WeightMode::symplectic;
        DistanceReport rep;
        if (di_sample_only) {
            if (!di_seed_set) fail("invalid-input", "sampling requires an explicit --seed");
            if (di_trials == 0) fail("invalid-input", "sampling requires --trials");
            rep = sampled_upper_bound(code, mode, di_trials, di_seed, di_workers);
        } else {
            DistanceOptions opts;
            opts.budget = log2_budget(di_budget);
            opts.workers = di_workers;
            if (di_seed_set) opts.fallback_seed = di_seed;
            if (di_trials) opts.fallback_trials = di_trials;
            rep = min_distance(code, mode, opts);
        }
        out.emit(to_json(rep), std::to_string(rep.value) + " (" + to_string(rep.certainty) + ")");
    });

    // ---- derive ----------------------------------------------------------
    auto* derive = app.add_subcommand("derive", "extend/puncture/shorten/augment/dual chains");
    static std::string de_code, de_chain, de_with, de_xsub, de_xaux, de_out;
    static std::vector<int> de_punct, de_short;
    static bool de_acd = false, de_dist = false;
    static int de_budget = 24, de_workers = 1;
    derive->add_option("--code", de_code)->required();
    derive->add_option("--chain", de_chain, "comma list of D,Au,DoubleAu,Ex,P,S");
    derive->add_option("--puncture", de_punct, "positions to puncture");
    derive->add_option("--shorten", de_short, "positions to shorten");
    derive->add_option("--juxtapose-with", de_with, "code file to juxtapose after the chain");
    derive->add_option("--x-sub", de_xsub, "subcode file for construction X");
    derive->add_option("--x-aux", de_xaux, "auxiliary code file for construction X");
    derive->add_flag("--acd", de_acd, "use the hull-restoring shorten and checked assemblies");
    derive->add_flag("--distance", de_dist);
    derive->add_option("--budget", de_budget);
    derive->add_option("--workers", de_workers);
    derive->add_option("--out", de_out);
    derive->callback([&]() {
        AdditiveCode code = make_additive(load_code(de_code));
        const Dataset data;  // chains here never reference embedded matrices
        ChainContext ctx{&data, log2_budget(de_budget), "", de_acd};
        if (!de_chain.empty()) code = apply_chain(code, de_chain, ctx);
        if (!de_punct.empty()) code = puncture(code, de_punct);
        if (!de_short.empty()) code = shorten(code, de_short);
        if (!de_with.empty()) {
            const AdditiveCode other = make_additive(load_code(de_with));
            code = de_acd ? acd_juxtapose(code, other) : juxtapose(code, other);
        }
        if (!de_xsub.empty() || !de_xaux.empty()) {
            if (de_xsub.empty() || de_xaux.empty())
                fail("invalid-input", "construction X needs both --x-sub and --x-aux");
            const AdditiveCode sub = make_additive(load_code(de_xsub));
            const AdditiveCode aux = make_additive(load_code(de_xaux));
            code = de_acd ? acd_construction_x(code, sub, aux) : construction_x(code, sub, aux);
        }
        json j;
        j["code"] = to_json(code);
        if (de_dist && code.k2() > 0) {
            DistanceOptions opts;
            opts.budget = log2_budget(de_budget);
            opts.workers = de_workers;
            const auto rep = additive_distance(code, opts);
            j["distance"] = to_json(rep);
            j["params"] = params_string(code.n, code.k2(), rep.value);
        }
        if (!de_out.empty()) store_code(de_out, code.preimage);
        out.emit(j, j.contains("params") ? j["params"].get<std::string>()
                                         : params_string(code.n, code.k2(), 0));
    });

    // ---- check ----------------------------------------------------------
    auto* check = app.add_subcommand("check", "duality checks");
    static std::string ck_code;
    auto add_code_check = [&](const char* name, const char* help, auto fn) {
        auto* sub = check->add_subcommand(name, help);
        sub->add_option("--code", ck_code)->required();
        sub->callback([&out, fn]() {
            const AdditiveCode code = make_additive(load_code(ck_code));
            fn(out, code);
        });
        return sub;
    };
    add_code_check("acd", "complementary-dual verdict", [](const Output& o, const AdditiveCode& c) {
        const auto res = is_acd(c);
        json j = to_json(res.gram);
        j["acd"] = res.acd;
        o.emit(j, std::string(res.acd ? "acd" : "not-acd") + " hull_dim=" +
                      std::to_string(res.gram.hull_dim));
    });
    add_code_check("self-orthogonal", "trace-Hermitian self-orthogonality",
                   [](const Output& o, const AdditiveCode& c) {
                       const bool so = is_trace_hermitian_self_orthogonal(c);
                       const auto gram = symplectic_gram(c.preimage);
                       json j = to_json(gram);
                       j["self_orthogonal"] = so;
                       o.emit(j, so ? "self-orthogonal" : "not-self-orthogonal");
                   });
    add_code_check("hull", "hull dimension and basis", [](const Output& o, const AdditiveCode& c) {
        const BinaryCode h = hull(c.preimage);
        json j = to_json(symplectic_gram(c.preimage));
        j["hull"] = to_json(h);
        o.emit(j, "hull_dim=" + std::to_string(h.rank));
    });
    auto* lcdpoly = check->add_subcommand("lcd-poly", "polynomial LCD criterion for 1-generator "
                                                      "quasi-cyclic specs");
    static int lp_n = 0;
    static std::string lp_g;
    static std::vector<std::string> lp_fs;
    lcdpoly->add_option("--n", lp_n)->required();
    lcdpoly->add_option("--g", lp_g)->required();
    lcdpoly->add_option("--f", lp_fs)->required();
    lcdpoly->callback([&]() {
        std::vector<Gf2Poly> fs;
        for (const auto& s : lp_fs) fs.push_back(cli_poly(s, lp_n));
        const auto crit = qc_lcd_criterion(lp_n, cli_poly(lp_g, lp_n), fs);
        out.emit(to_json(crit), crit.lcd ? "lcd" : "not-lcd");
    });

    // ---- bound ----------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "distance bounds and classification");
    auto* b_lower = bound->add_subcommand("qc-lower", "index-2m quasi-cyclic distance floor");
    static int bl_q = 2, bl_m = 1;
    static std::uint64_t bl_dg = 0;
    b_lower->add_option("--q", bl_q);
    b_lower->add_option("--m", bl_m)->required();
    b_lower->add_option("--dg", bl_dg)->required();
    b_lower->callback([&]() {
        const auto v = qc_distance_lower_bound(bl_q, bl_m, bl_dg);
        out.emit(json{{"bound", v}}, std::to_string(v));
    });
    auto* b_cond = bound->add_subcommand("qc-conditions", "gcd/degree hypotheses for an f-list");
    static int bc_n = 0;
    static std::string bc_g;
    static std::vector<std::string> bc_fs;
    static std::uint64_t bc_dg = 0;
    b_cond->add_option("--n", bc_n)->required();
    b_cond->add_option("--g", bc_g)->required();
    b_cond->add_option("--f", bc_fs)->required();
    b_cond->add_option("--dg", bc_dg, "distance of the seed cyclic code");
    b_cond->callback([&]() {
        std::vector<Gf2Poly> fs;
        for (const auto& s : bc_fs) fs.push_back(cli_poly(s, bc_n));
        const auto rep = qc_bound_conditions(bc_n, cli_poly(bc_g, bc_n), fs, bc_dg);
        out.emit(to_json(rep), rep.hypotheses_hold ? "hold" : rep.failed_condition);
    });
    auto* b_g = bound->add_subcommand("griesmer", "concatenation distance ceiling check");
    static std::uint64_t bg_n = 0, bg_k2 = 0, bg_d = 0;
    b_g->add_option("--n", bg_n)->required();
    b_g->add_option("--k2", bg_k2)->required();
    b_g->add_option("--d", bg_d)->required();
    b_g->callback([&]() {
        const bool ok = griesmer_concat_check(bg_n, bg_k2, bg_d);
        const std::uint64_t max_d = griesmer_concat_max_d(bg_n, bg_k2);
        json j{{"holds", ok}, {"max_d", max_d}, {"tight", ok && bg_d == max_d}};
        out.emit(j, ok ? (bg_d == max_d ? "tight/optimal" : "holds") : "violated");
    });
    auto* b_gm = bound->add_subcommand("griesmer-max", "largest d passing the ceiling");
    static std::uint64_t bm_n = 0, bm_k2 = 0;
    b_gm->add_option("--n", bm_n)->required();
    b_gm->add_option("--k2", bm_k2)->required();
    b_gm->callback([&]() {
        const auto v = griesmer_concat_max_d(bm_n, bm_k2);
        out.emit(json{{"max_d", v}}, std::to_string(v));
    });
    auto* b_cls = bound->add_subcommand("classify", "compare against best-known linear codes");
    static int cls_n = 0, cls_k2 = 0, cls_d = 0;
    static std::string cls_ref;
    b_cls->add_option("--n", cls_n)->required();
    b_cls->add_option("--k2", cls_k2)->required();
    b_cls->add_option("--d", cls_d)->required();
    b_cls->add_option("--reference", cls_ref, "reference file (default: dataset linear list)");
    b_cls->callback([&]() {
        const auto refs = cls_ref.empty()
                              ? load_reference_file(data_dir() / "linear_reference.txt")
                              : load_reference_file(cls_ref);
        const auto cls = classify_vs_reference(cls_n, cls_k2, cls_d, refs);
        out.emit(json{{"classification", to_string(cls)}}, to_string(cls));
    });

    // ---- verify-tables -----------------------------------------------------
    auto* verify = app.add_subcommand("verify-tables", "re-derive the embedded tables");
    static std::string vt_table;
    static std::vector<int> vt_rows;
    static int vt_dimcap = 24, vt_budget = 24, vt_workers = 1;
    static std::uint64_t vt_trials = 200000, vt_seed = 1;
    verify->add_option("--table", vt_table, "I..VI")->required();
    verify->add_option("--rows", vt_rows, "restrict to these row numbers");
    verify->add_option("--dim-cap", vt_dimcap, "verify exactly up to this binary dimension");
    verify->add_option("--budget", vt_budget, "log2 of the codeword budget");
    verify->add_option("--workers", vt_workers);
    verify->add_option("--trials", vt_trials, "sampling trials for out-of-cap rows");
    verify->add_option("--seed", vt_seed, "sampling seed");
    verify->callback([&]() {
        const Dataset data = load_dataset(data_dir());
        VerifyOptions opts;
        opts.budget = log2_budget(vt_budget);
        opts.dim_cap = vt_dimcap;
        opts.workers = vt_workers;
        opts.sample_trials = vt_trials;
        opts.seed = vt_seed;
        auto reports = verify_table(data, vt_table, opts);
        if (!vt_rows.empty()) {
            std::erase_if(reports, [&](const VerificationReport& r) {
                return std::find(vt_rows.begin(), vt_rows.end(), r.no) == vt_rows.end();
            });
        }
        json arr = json::array();
        int mismatches = 0, confirmed = 0;
        std::string text;
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
            if (r.verdict == Verdict::mismatch || r.verdict == Verdict::budget_exceeded)
                ++mismatches;
            if (r.verdict == Verdict::confirmed) ++confirmed;
            text += r.table + ":" + std::to_string(r.no) +
                    (r.chain.empty() ? "" : "(" + r.chain + ")") + " " + r.claimed + " -> " +
                    to_string(r.verdict) + "\n";
        }
        json j{{"table", vt_table},
               {"confirmed", confirmed},
               {"mismatches", mismatches},
               {"rows", arr}};
        out.emit(j, text + std::to_string(confirmed) + " confirmed, " +
                        std::to_string(mismatches) + " mismatched");
        if (mismatches > 0) rc = 1;
    });

    // ---- search ----------------------------------------------------------
    auto* search = app.add_subcommand("search", "randomized f-polynomial search");
    static SearchConfig sc;
    static std::string se_g, se_out;
    static int se_budget = 20;
    static bool se_no_filter = false;
    search->add_option("--n", sc.n)->required();
    search->add_option("--g", se_g)->required();
    search->add_option("--ell", sc.ell);
    search->add_option("--trials", sc.trials)->required();
    search->add_option("--seed", sc.seed)->required();
    search->add_option("--budget", se_budget);
    search->add_option("--keep", sc.keep);
    search->add_flag("--no-filter", se_no_filter, "skip the bound-hypothesis filter");
    search->add_flag("--divisor-f", sc.divisor_sampling, "sample f from divisors of g");
    search->add_option("--workers", sc.workers);
    search->add_option("--out", se_out, "append hits to a findings file in the dataset format");
    search->callback([&]() {
        sc.g = cli_poly(se_g, sc.n);
        sc.budget = log2_budget(se_budget);
        sc.filter_conditions = !se_no_filter;
        const auto hits = search_f_polynomials(sc);
        json arr = json::array();
        std::string text;
        for (const auto& h : hits) {
            arr.push_back(to_json(h));
            text += params_string(sc.n * sc.ell / 2, h.rank, h.distance.value) + " trial " +
                    std::to_string(h.trial) + "\n";
        }
        if (!se_out.empty()) {
            std::ofstream f(se_out, std::ios::app);
            if (!f) fail("invalid-input", "cannot open findings file " + se_out);
            for (const auto& h : hits) {
                f << "F\t" << h.trial << "\t"
                  << params_string(sc.n * sc.ell / 2, h.rank, h.distance.value) << "\t" << sc.ell
                  << "\t" << format_runlength(sc.g);
                for (const auto& fp : h.fs) f << "\t" << format_runlength(fp);
                f << "\t-\n";
            }
        }
        out.emit(json{{"hits", arr}}, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

// Acceptance suite: re-derives the headline pipelines end to end and prints
// one PASS/FAIL line per criterion. Exit code 0 only when everything passed.
//
// QCADD_ACCEPT_FULL=1 additionally runs the 2^26..2^28 enumerations (minutes);
// without it those rows are checked in sampled mode.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "qcadd/additive.hpp"
#include "qcadd/bounds.hpp"
#include "qcadd/codes.hpp"
#include "qcadd/distance.hpp"
#include "qcadd/duality.hpp"
#include "qcadd/errors.hpp"
#include "qcadd/search.hpp"
#include "qcadd/tables.hpp"

using namespace qcadd;

namespace {

int failures = 0;

class Criterion {
   public:
    explicit Criterion(std::string name) : name_(std::move(name)) {
        start_ = std::chrono::steady_clock::now();
    }

    void check(bool ok, const std::string& what) {
        if (!ok) {
            problems_.push_back(what);
        }
    }

    template <class T, class U>
    void check_eq(const T& got, const U& expected, const std::string& what) {
        if (!(got == static_cast<T>(expected))) {
            std::ostringstream ss;
            ss << what << " (got " << got << ", expected " << expected << ")";
            problems_.push_back(ss.str());
        }
    }

    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (std::uncaught_exceptions() > 0) problems_.push_back("aborted by exception");
        std::ostringstream line;
        if (problems_.empty()) {
            line << "PASS " << name_;
        } else {
            ++failures;
            line << "FAIL " << name_ << " [";
            for (std::size_t i = 0; i < problems_.size(); ++i)
                line << (i ? "; " : "") << problems_[i];
            line << "]";
        }
        line.precision(2);
        line << " (" << std::fixed << secs << "s)";
        std::cout << line.str() << std::endl;
    }

   private:
    std::string name_;
    std::vector<std::string> problems_;
    std::chrono::steady_clock::time_point start_;
};

int hw_workers() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : int(hc);
}

DistanceOptions exact_opts(int log2_budget = 24) {
    DistanceOptions o;
    o.budget = std::uint64_t(1) << log2_budget;
    o.workers = hw_workers();
    return o;
}

bool full_mode() {
    const char* env = std::getenv("QCADD_ACCEPT_FULL");
    return env && std::string(env) == "1";
}

}  // namespace

static void criterion1(const Dataset& data) {
    Criterion c("criterion-1 cyclic [31,5,16] -> additive (31,2.5,24), ceiling tight");
    const auto& spec = data.example_codes.at("ex31");
    const BinaryCode cyclic = build_cyclic(spec.n, spec.gens[0].g);
    c.check_eq(cyclic.rank, 5, "cyclic rank");
    const auto d_h = min_distance(cyclic, WeightMode::hamming, exact_opts());
    c.check(d_h.certainty == Certainty::exact, "cyclic distance exactness");
    c.check_eq(d_h.value, 16, "cyclic Hamming distance");

    const BinaryCode qc = build_qc_multi(spec.n, spec.gens);
    c.check_eq(qc.rank, 5, "quasi-cyclic rank");
    const auto d_s = min_distance(qc, WeightMode::symplectic, exact_opts());
    c.check(d_s.certainty == Certainty::exact, "symplectic distance exactness");
    c.check_eq(d_s.value, 24, "symplectic distance");

    const auto cond = qc_bound_conditions(spec.n, spec.gens[0].g, spec.gens[0].fs, d_h.value);
    c.check(cond.hypotheses_hold, "bound hypotheses");
    c.check_eq(cond.bound_value, 24, "bound value");
    c.check(griesmer_concat_check(31, 5, 24), "ceiling holds at 24");
    c.check_eq(griesmer_concat_max_d(31, 5), 24, "ceiling equality (optimal)");
}

static void criterion2(const Dataset& data) {
    Criterion c("criterion-2 [127,7,64] -> d_s 96 at 254 and 192 at 508, ceilings tight");
    const auto& spec = data.example_codes.at("ex127");
    const BinaryCode cyclic = build_cyclic(spec.n, spec.gens[0].g);
    c.check_eq(cyclic.rank, 7, "cyclic rank");
    c.check_eq(min_distance(cyclic, WeightMode::hamming, exact_opts()).value, 64,
               "cyclic Hamming distance");

    const BinaryCode qc = build_qc_multi(spec.n, spec.gens);
    c.check_eq(qc.length, 254, "doubled length");
    c.check_eq(qc.rank, 7, "rank");
    c.check_eq(min_distance(qc, WeightMode::hamming, exact_opts()).value, 128,
               "Hamming distance at 254");
    c.check_eq(min_distance(qc, WeightMode::symplectic, exact_opts()).value, 96,
               "symplectic distance at 254");

    BoundReport conditions;
    const BinaryCode doubled =
        double_index({spec.n, spec.gens[0].g, spec.gens[0].fs}, Gf2Poly::from_coeffs("11"),
                     Gf2Poly::one(), &conditions);
    c.check(conditions.hypotheses_hold, "doubling hypotheses");
    c.check_eq(doubled.length, 508, "length after doubling");
    c.check_eq(doubled.rank, 7, "rank after doubling");
    c.check_eq(min_distance(doubled, WeightMode::symplectic, exact_opts()).value, 192,
               "symplectic distance at 508");

    c.check_eq(griesmer_concat_max_d(127, 7), 96, "ceiling equality at (127,3.5,96)");
    c.check_eq(griesmer_concat_max_d(254, 7), 192, "ceiling equality at (254,3.5,192)");
}

static void criterion3(const Dataset& data) {
    Criterion c("criterion-3 (63,5,45): augment to (63,5.5,45), extend to (64,5,46)");
    const AdditiveCode base = build_example_code(data, "ex63");
    c.check_eq(base.k2(), 10, "base dimension");
    c.check_eq(additive_distance(base, exact_opts()).value, 45, "base distance");

    const AdditiveCode augmented = augment(base, AugmentMode::half);
    c.check_eq(augmented.k2(), 11, "augmented dimension");
    c.check_eq(additive_distance(augmented, exact_opts()).value, 45, "augmented distance");

    const AdditiveCode extended = extend(base, ExtendMode::even_like, 1);
    c.check_eq(extended.n, 64, "extended length");
    c.check_eq(extended.k2(), 10, "extended dimension");
    c.check_eq(additive_distance(extended, exact_opts()).value, 46, "extended distance");
}

static void criterion4(const Dataset& data) {
    Criterion c("criterion-4 (35,3.5,26) + weight-30 subcode + (5,2,4) -> (40,3.5,30)");
    const AdditiveCode base = build_example_code(data, "ex35");
    c.check_eq(base.k2(), 7, "base dimension");
    c.check_eq(additive_distance(base, exact_opts()).value, 26, "base distance");

    const BinaryMatrix words =
        codewords_of_weight(base.preimage, WeightMode::symplectic, 30, 1 << 20);
    const AdditiveCode sub = span_subcode(words, base.n);
    c.check_eq(sub.k2(), 3, "weight-30 span dimension");
    c.check_eq(additive_distance(sub, exact_opts()).value, 30, "subcode distance");

    const auto& auxm = data.gf4_matrices.at("aux524");
    const AdditiveCode aux = span_gf4_rows(auxm.rows, auxm.linear);
    c.check_eq(aux.n, 5, "auxiliary length");
    c.check_eq(aux.k2(), 4, "auxiliary dimension");
    c.check_eq(additive_distance(aux, exact_opts()).value, 4, "auxiliary distance");

    const AdditiveCode x = construction_x(base, sub, aux);
    c.check_eq(x.n, 40, "output length");
    c.check_eq(x.k2(), 7, "output dimension");
    c.check_eq(additive_distance(x, exact_opts()).value, 30, "output distance");
}

static void criterion5(const Dataset& data) {
    Criterion c("criterion-5 combination-table rows with k2 <= 24 confirmed exactly");
    VerifyOptions opts;
    opts.budget = std::uint64_t(1) << 24;
    opts.dim_cap = 24;
    opts.workers = hw_workers();
    bool saw_required[6] = {};
    for (const auto& claim : data.table5) {
        if (claim.claimed.k2 > 24) continue;
        const auto rep = verify_claim(data, claim, opts);
        c.check(rep.verdict == Verdict::confirmed,
                "V:" + std::to_string(claim.no) + (claim.chain.empty() ? "" : "(" + claim.chain +
                ")") + " " + rep.claimed + " -> " + to_string(rep.verdict) + " " + rep.diagnostic);
        const int required[6] = {1, 2, 3, 4, 5, 10};
        for (int i = 0; i < 6; ++i)
            if (claim.no == required[i] && claim.chain.empty()) saw_required[i] = true;
    }
    for (bool seen : saw_required) c.check(seen, "required row missing from the dataset");
}

static void criterion6(const Dataset& data) {
    Criterion c("criterion-6 complementary-dual table rows confirmed, hulls zero, criteria agree");
    VerifyOptions opts;
    opts.budget = std::uint64_t(1) << 24;
    opts.dim_cap = 24;
    opts.workers = hw_workers();
    for (const auto& claim : data.table6) {
        VerifyOptions row_opts = opts;
        if (claim.claimed.k2 > 24 && claim.claimed.k2 <= 30) {
            if (claim.claimed.k2 == 30) {
                // the dual-resolved (27,15,8) row enumerates 2^30 words
                row_opts.budget = std::uint64_t(1) << 30;
                row_opts.dim_cap = 30;
            } else if (full_mode()) {
                row_opts.budget = std::uint64_t(1) << 28;
                row_opts.dim_cap = 28;
            } else {
                row_opts.sample_trials = 2000000;
            }
        }
        const auto rep = verify_claim(data, claim, row_opts);
        const bool must_confirm = row_opts.dim_cap >= claim.claimed.k2;
        const std::string label = "VI:" + std::to_string(claim.no) +
                                  (claim.chain.empty() ? "" : "(" + claim.chain + ")") + " " +
                                  rep.claimed;
        if (must_confirm)
            c.check(rep.verdict == Verdict::confirmed,
                    label + " -> " + to_string(rep.verdict) + " " + rep.diagnostic);
        else
            c.check(rep.verdict == Verdict::bound_consistent,
                    label + " -> " + to_string(rep.verdict) + " " + rep.diagnostic);
        if (rep.acd_checked) c.check(rep.acd, label + " hull must be zero");
        c.check(rep.lcd_poly_checked && rep.lcd_poly_agrees,
                label + " polynomial criterion must agree with the Gram verdict");
    }
}

static void criterion7(const Dataset& data) {
    Criterion c("criterion-7 complementary-dual pipelines (26,6,15), (29,4,>=19), (27,4,>=18), "
                "(30,4,20)");
    const AdditiveCode acd26 = build_example_code(data, "ex13acd");
    c.check_eq(acd26.n, 26, "(26,6,15) length");
    c.check_eq(acd26.k2(), 12, "(26,6,15) dimension");
    c.check(is_acd(acd26).acd, "(26,6,15) complementary-dual");
    c.check_eq(additive_distance(acd26, exact_opts()).value, 15, "(26,6,15) distance");

    const AdditiveCode lcd12 = build_example_code(data, "ex12lcd");
    const AdditiveCode so17 = build_example_code(data, "ex17so");
    const AdditiveCode lcd10 = build_example_code(data, "ex10lcd");
    c.check(is_acd(lcd12).acd, "(12,4,7) complementary-dual");
    c.check(is_trace_hermitian_self_orthogonal(so17), "(17,4,12) self-orthogonal");
    c.check(is_acd(lcd10).acd, "(10,4,6) complementary-dual");
    c.check_eq(additive_distance(lcd12, exact_opts()).value, 7, "(12,4,7) distance");
    c.check_eq(additive_distance(so17, exact_opts()).value, 12, "(17,4,12) distance");
    c.check_eq(additive_distance(lcd10, exact_opts()).value, 6, "(10,4,6) distance");

    const AdditiveCode jux29 = acd_juxtapose(lcd12, so17);
    c.check_eq(jux29.n, 29, "(29,4,*) length");
    c.check_eq(jux29.k2(), 8, "(29,4,*) dimension");
    c.check(is_acd(jux29).acd, "(29,4,*) complementary-dual");
    c.check(additive_distance(jux29, exact_opts()).value >= 19, "(29,4,*) distance >= 19");

    const AdditiveCode jux27 = acd_juxtapose(lcd10, so17);
    c.check_eq(jux27.n, 27, "(27,4,*) length");
    c.check(is_acd(jux27).acd, "(27,4,*) complementary-dual");
    c.check(additive_distance(jux27, exact_opts()).value >= 18, "(27,4,*) distance >= 18");

    const AdditiveCode x30 = build_source(data, "acd30");
    c.check_eq(x30.n, 30, "(30,4,20) length");
    c.check_eq(x30.k2(), 8, "(30,4,20) dimension");
    c.check(is_acd(x30).acd, "(30,4,20) complementary-dual");
    c.check_eq(additive_distance(x30, exact_opts()).value, 20, "(30,4,20) distance");
}

static void criterion8(const Dataset& data) {
    Criterion c("criterion-8 beyond-budget rows: rank exact, 10^7-trial sampling consistent");
    const std::uint64_t trials = 10000000;
    const int workers = hw_workers();

    // the (47,35,7) two-generator code
    const AdditiveCode big = build_example_code(data, "ex47");
    c.check_eq(big.n, 47, "(47,35,7) length");
    c.check_eq(big.k2(), 70, "(47,35,7) binary rank");
    const auto s47 = sampled_upper_bound(big.preimage, WeightMode::symplectic, trials, 7, workers);
    c.check(s47.value >= 7, "(47,35,7) sampling must not find a lighter word");

    // a weight-7 codeword pins the distance from above (found by an offline
    // syndrome meet-in-the-middle over the dual; membership is re-checked)
    const BitVec w7 = BitVec::from_string(
        "00010000100000000000000111000100000000000000000000"
        "10001100000000000000000000100000000000000000");
    c.check(code_contains(big.preimage, w7), "(47,35,7) weight-7 word membership");
    c.check_eq(weight(w7, WeightMode::symplectic), 7, "(47,35,7) witness weight");

    // the dual-derived (42,24.5,10) code
    const AdditiveCode dual42 = build_source(data, "V:6:D");
    c.check_eq(dual42.n, 42, "(42,24.5,10) length");
    c.check_eq(dual42.k2(), 49, "(42,24.5,10) binary rank");
    const auto s42 =
        sampled_upper_bound(dual42.preimage, WeightMode::symplectic, trials, 7, workers);
    c.check(s42.value >= 10, "(42,24.5,10) sampling must not find a lighter word");

    // every other claim with k2 > 30 stays rank-exact and sampling-consistent
    VerifyOptions opts;
    opts.dim_cap = 0;  // force sampled mode
    opts.sample_trials = trials;
    opts.workers = workers;
    for (const auto& claim : data.table5) {
        if (claim.claimed.k2 <= 30 || !claim.chain.empty()) continue;
        const auto rep = verify_claim(data, claim, opts);
        c.check(rep.verdict == Verdict::bound_consistent,
                "V:" + std::to_string(claim.no) + " " + rep.claimed + " -> " +
                    to_string(rep.verdict) + " " + rep.diagnostic);
    }
}

static void criterion9(const Dataset& data) {
    Criterion c("criterion-9 property suites");
    std::mt19937_64 rng(20240817);

    // weight identity on 10^5 random pairs
    bool identity_ok = true;
    for (int it = 0; it < 100000 && identity_ok; ++it) {
        const std::size_t n = 1 + rng() % 24;
        BitVec x(n), y(n), xy(n), v(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool xb = rng() & 1, yb = rng() & 1;
            x.set(i, xb);
            y.set(i, yb);
            xy.set(i, xb ^ yb);
            v.set(i, xb);
            v.set(n + i, yb);
        }
        identity_ok = 2 * weight(v, WeightMode::symplectic) ==
                      weight(x, WeightMode::hamming) + weight(y, WeightMode::hamming) +
                          weight(xy, WeightMode::hamming);
    }
    c.check(identity_ok, "2 w_s = w_H(x)+w_H(y)+w_H(x+y) on 10^5 pairs");

    // bijection and weight preservation on 10^5 words
    bool phi_ok = true;
    for (int it = 0; it < 100000 && phi_ok; ++it) {
        const std::size_t n = 1 + rng() % 24;
        BitVec v(2 * n);
        for (std::size_t i = 0; i < 2 * n; ++i) v.set(i, rng() & 1);
        const Gf4Word u = phi_map(v);
        std::size_t hw = 0;
        for (auto s : u) hw += s != 0;
        phi_ok = phi_inverse(u) == v && hw == weight(v, WeightMode::symplectic);
    }
    c.check(phi_ok, "phi bijectivity and weight preservation on 10^5 words");

    // distance floor on >= 100 random valid small specs
    int specs_done = 0;
    bool bound_ok = true;
    while (specs_done < 100 && bound_ok) {
        const int n = 5 + 2 * int(rng() % 16);
        std::string bits(std::size_t(n), '0');
        for (auto& ch : bits)
            if (rng() & 1) ch = '1';
        const Gf2Poly g = poly_gcd(Gf2Poly::xn_minus_one(n), Gf2Poly::from_coeffs(bits));
        if (g.is_zero() || g.degree() < 1 || g.degree() >= n) continue;
        if (n - g.degree() > 20) continue;
        std::vector<Gf2Poly> fs;
        for (int j = 0; j < 2; ++j) {
            std::string fb(std::size_t(n), '0');
            for (auto& ch : fb)
                if (rng() & 1) ch = '1';
            Gf2Poly f = Gf2Poly::from_coeffs(fb);
            if (f.is_zero()) f = Gf2Poly::one();
            fs.push_back(std::move(f));
        }
        const std::uint64_t d_g = min_distance(build_cyclic(n, g), WeightMode::hamming).value;
        const auto cond = qc_bound_conditions(n, g, fs, d_g);
        if (!cond.hypotheses_hold) continue;
        const auto d = min_distance(build_qc_1gen({n, g, fs}), WeightMode::symplectic).value;
        bound_ok = d >= cond.bound_value;
        ++specs_done;
    }
    c.check(bound_ok, "distance floor never violated on 100 random specs");

    // shorten/puncture duality on codes with n <= 10
    bool duality_ok = true;
    int duality_done = 0;
    while (duality_done < 60 && duality_ok) {
        const int n = 2 + int(rng() % 9);
        BinaryMatrix m{std::size_t(2 * n)};
        const std::size_t rows = 1 + rng() % 6;
        for (std::size_t r = 0; r < rows; ++r) {
            BitVec v{std::size_t(2 * n)};
            for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng() & 1);
            m.rows.push_back(std::move(v));
        }
        const AdditiveCode code = span_subcode(m, n);
        if (code.k2() == 0 || code.k2() == std::size_t(2 * n)) continue;
        const int pos[1] = {int(rng() % std::uint64_t(n))};
        const AdditiveCode dual = make_additive(dual_code(code.preimage, DualForm::symplectic));
        const AdditiveCode lhs = shorten(dual, pos);
        const AdditiveCode rhs =
            make_additive(dual_code(puncture(code, pos).preimage, DualForm::symplectic));
        duality_ok = same_row_space(lhs.preimage.generators, rhs.preimage.generators);
        ++duality_done;
    }
    c.check(duality_ok, "shorten of the dual equals the dual of the puncture");

    // multi-worker enumeration is bit-identical
    {
        BinaryMatrix m(44);
        for (int r = 0; r < 19; ++r) {
            BitVec v(44);
            for (std::size_t i = 0; i < 44; ++i) v.set(i, rng() & 1);
            m.rows.push_back(std::move(v));
        }
        const BinaryCode code = make_code(44, m, true);
        DistanceOptions one, many;
        one.workers = 1;
        many.workers = 4;
        const auto a = min_distance(code, WeightMode::symplectic, one);
        const auto b = min_distance(code, WeightMode::symplectic, many);
        c.check(a.value == b.value && a.enumerated == b.enumerated &&
                    a.certainty == b.certainty && a.budget == b.budget,
                "multi-worker result identical to single-worker");
    }

    // embedded dataset round-trips through the run-length notation
    bool rl_ok = true;
    for (const auto* table : {&data.table5, &data.table6}) {
        for (const auto& claim : *table) {
            rl_ok = rl_ok && parse_runlength(format_runlength(claim.g)) == claim.g;
            for (const auto& f : claim.fs)
                rl_ok = rl_ok && parse_runlength(format_runlength(f)) == f;
        }
    }
    c.check(rl_ok, "run-length round trip over the embedded dataset");

    c.check_eq(griesmer_concat_max_d(28, 7), 20, "ceiling at (28, k2=7)");
    c.check_eq(griesmer_concat_max_d(254, 7), 192, "ceiling at (254, k2=7)");
}

int main() {
    try {
        const Dataset data = load_dataset(default_data_dir());
        criterion1(data);
        criterion2(data);
        criterion3(data);
        criterion4(data);
        criterion5(data);
        criterion6(data);
        criterion7(data);
        criterion8(data);
        criterion9(data);
    } catch (const std::exception& e) {
        std::cout << "FAIL suite-setup [" << e.what() << "]" << std::endl;
        return 1;
    }
    if (failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
}

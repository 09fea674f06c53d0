#include "qcadd/search.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "qcadd/bounds.hpp"
#include "qcadd/errors.hpp"

namespace qcadd {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDull;
    x ^= x >> 33;
    x *= 0xC4CEB9FE1A85EC53ull;
    x ^= x >> 33;
    return x;
}

Gf2Poly random_poly(std::mt19937_64& rng, int n) {
    std::string bits(std::size_t(n), '0');
    for (int i = 0; i < n; ++i)
        if (rng() & 1) bits[std::size_t(i)] = '1';
    return Gf2Poly::from_coeffs(bits);
}

struct TrialOutcome {
    bool kept = false;
    SearchHit hit;
};

TrialOutcome run_trial(const SearchConfig& cfg, std::uint64_t d_g, std::uint64_t trial) {
    std::mt19937_64 rng(mix(cfg.seed, trial));
    TrialOutcome out;
    std::vector<Gf2Poly> fs;
    for (int j = 0; j < cfg.ell; ++j) {
        Gf2Poly f = random_poly(rng, cfg.n);
        if (cfg.divisor_sampling) f = f.is_zero() ? Gf2Poly::one() : poly_gcd(cfg.g, f);
        if (f.is_zero()) f = Gf2Poly::one();
        fs.push_back(std::move(f));
    }
    if (cfg.filter_conditions) {
        const auto cond = qc_bound_conditions(cfg.n, cfg.g, fs, d_g);
        if (!cond.hypotheses_hold) return out;
    }
    const BinaryCode code = build_qc_1gen({cfg.n, cfg.g, fs});
    DistanceOptions opts;
    opts.budget = cfg.budget;
    out.hit.trial = trial;
    out.hit.fs = std::move(fs);
    out.hit.rank = code.rank;
    out.hit.distance = min_distance(code, WeightMode::symplectic, opts);
    out.kept = true;
    return out;
}

}  // namespace

std::vector<SearchHit> search_f_polynomials(const SearchConfig& cfg) {
    if (cfg.trials < 1) fail("invalid-input", "need at least one trial");
    if (cfg.ell < 2 || cfg.ell % 2 != 0) fail("invalid-index", "index must be even");
    cyclotomic_quotient(cfg.g, cfg.n);  // throws not-a-generator early

    // distance of the seed cyclic code, for the condition filter's bound value
    std::uint64_t d_g = 0;
    if (cfg.n - cfg.g.degree() <= 24) {
        DistanceOptions opts;
        opts.budget = std::uint64_t(1) << 24;
        d_g = min_distance(build_cyclic(cfg.n, cfg.g), WeightMode::hamming, opts).value;
    }

    std::vector<TrialOutcome> outcomes(cfg.trials);
    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (std::uint64_t t = 0; t < cfg.trials; ++t) outcomes[t] = run_trial(cfg, d_g, t);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w]() {
                for (std::uint64_t t = std::uint64_t(w); t < cfg.trials;
                     t += std::uint64_t(workers))
                    outcomes[t] = run_trial(cfg, d_g, t);
            });
        }
        for (auto& th : threads) th.join();
    }

    std::vector<SearchHit> hits;
    for (auto& o : outcomes)
        if (o.kept) hits.push_back(std::move(o.hit));
    std::stable_sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.distance.value != b.distance.value) return a.distance.value > b.distance.value;
        return a.trial < b.trial;
    });
    if (hits.size() > cfg.keep) hits.resize(cfg.keep);
    return hits;
}

}  // namespace qcadd

#include "qcadd/distance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>

#include "qcadd/errors.hpp"

namespace qcadd {

std::string to_string(Certainty c) {
    switch (c) {
        case Certainty::exact: return "exact";
        case Certainty::upper_bound_sampled: return "upper-bound-sampled";
        case Certainty::lower_bound_only: return "lower-bound-only";
    }
    return "exact";
}

std::string to_string(WeightMode m) { return m == WeightMode::hamming ? "hamming" : "symplectic"; }

std::size_t weight(const BitVec& v, WeightMode mode) {
    if (mode == WeightMode::hamming) return v.popcount();
    if (v.size() % 2 != 0) fail("invalid-form", "symplectic weight requires even length");
    const std::size_t n = v.size() / 2;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += (v.get(i) || v.get(n + i)) ? 1 : 0;
    return w;
}

namespace {

// Rows packed for the enumeration kernel: the x and y halves of each
// generator are padded to whole words so the symplectic weight is
// sum(popcount(x | y)) over aligned words. Hamming mode packs the entire row
// into the x side and leaves y empty.
struct PackedRows {
    std::size_t words = 0;
    std::size_t k = 0;
    bool symplectic = false;
    std::vector<std::uint64_t> x;  // k * words
    std::vector<std::uint64_t> y;  // k * words (empty for hamming)
};

PackedRows pack_rows(const BinaryCode& c, WeightMode mode) {
    PackedRows p;
    p.k = c.rank;
    p.symplectic = mode == WeightMode::symplectic;
    if (p.symplectic) {
        if (c.length % 2 != 0) fail("invalid-form", "symplectic mode requires even length");
        const std::size_t n = c.length / 2;
        p.words = (n + 63) / 64;
        p.x.assign(p.k * p.words, 0);
        p.y.assign(p.k * p.words, 0);
        for (std::size_t r = 0; r < p.k; ++r) {
            const auto& row = c.generators.rows[r];
            for (std::size_t i = 0; i < n; ++i) {
                if (row.get(i)) p.x[r * p.words + (i >> 6)] |= std::uint64_t(1) << (i & 63);
                if (row.get(n + i)) p.y[r * p.words + (i >> 6)] |= std::uint64_t(1) << (i & 63);
            }
        }
    } else {
        p.words = (c.length + 63) / 64;
        p.x.assign(p.k * p.words, 0);
        for (std::size_t r = 0; r < p.k; ++r) {
            const auto& row = c.generators.rows[r];
            auto rw = row.words();
            for (std::size_t w = 0; w < rw.size(); ++w) p.x[r * p.words + w] = rw[w];
        }
    }
    return p;
}

template <int W, bool Symplectic>
std::uint64_t enum_range(const PackedRows& p, std::uint64_t begin, std::uint64_t end,
                         std::uint64_t stop_at) {
    std::uint64_t xacc[W] = {};
    std::uint64_t yacc[W] = {};
    const std::uint64_t* xr = p.x.data();
    const std::uint64_t* yr = Symplectic ? p.y.data() : nullptr;

    const std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < p.k; ++j) {
        if ((gray >> j) & 1u) {
            for (int w = 0; w < W; ++w) xacc[w] ^= xr[j * W + w];
            if constexpr (Symplectic)
                for (int w = 0; w < W; ++w) yacc[w] ^= yr[j * W + w];
        }
    }

    auto eval = [&]() {
        std::uint64_t wsum = 0;
        if constexpr (Symplectic) {
            for (int w = 0; w < W; ++w) wsum += std::uint64_t(std::popcount(xacc[w] | yacc[w]));
        } else {
            for (int w = 0; w < W; ++w) wsum += std::uint64_t(std::popcount(xacc[w]));
        }
        return wsum;
    };

    std::uint64_t best = ~std::uint64_t(0);
    if (begin != 0) best = eval();
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        if (best <= stop_at) break;
        const unsigned j = unsigned(std::countr_zero(i));
        for (int w = 0; w < W; ++w) xacc[w] ^= xr[j * W + w];
        if constexpr (Symplectic)
            for (int w = 0; w < W; ++w) yacc[w] ^= yr[j * W + w];
        const std::uint64_t wv = eval();
        if (wv < best) best = wv;
    }
    return best;
}

// Generic fallback for very long codes (word count known only at runtime).
std::uint64_t enum_range_any(const PackedRows& p, std::uint64_t begin, std::uint64_t end,
                             std::uint64_t stop_at) {
    const std::size_t W = p.words;
    std::vector<std::uint64_t> xacc(W, 0), yacc(W, 0);
    const std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < p.k; ++j) {
        if ((gray >> j) & 1u) {
            for (std::size_t w = 0; w < W; ++w) xacc[w] ^= p.x[j * W + w];
            if (p.symplectic)
                for (std::size_t w = 0; w < W; ++w) yacc[w] ^= p.y[j * W + w];
        }
    }
    auto eval = [&]() {
        std::uint64_t wsum = 0;
        if (p.symplectic)
            for (std::size_t w = 0; w < W; ++w)
                wsum += std::uint64_t(std::popcount(xacc[w] | yacc[w]));
        else
            for (std::size_t w = 0; w < W; ++w) wsum += std::uint64_t(std::popcount(xacc[w]));
        return wsum;
    };
    std::uint64_t best = ~std::uint64_t(0);
    if (begin != 0) best = eval();
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        if (best <= stop_at) break;
        const unsigned j = unsigned(std::countr_zero(i));
        for (std::size_t w = 0; w < W; ++w) xacc[w] ^= p.x[j * W + w];
        if (p.symplectic)
            for (std::size_t w = 0; w < W; ++w) yacc[w] ^= p.y[j * W + w];
        const std::uint64_t wv = eval();
        if (wv < best) best = wv;
    }
    return best;
}

std::uint64_t enum_dispatch(const PackedRows& p, std::uint64_t begin, std::uint64_t end,
                            std::uint64_t stop_at) {
    if (p.symplectic) {
        switch (p.words) {
            case 1: return enum_range<1, true>(p, begin, end, stop_at);
            case 2: return enum_range<2, true>(p, begin, end, stop_at);
            case 3: return enum_range<3, true>(p, begin, end, stop_at);
            case 4: return enum_range<4, true>(p, begin, end, stop_at);
            default: return enum_range_any(p, begin, end, stop_at);
        }
    }
    switch (p.words) {
        case 1: return enum_range<1, false>(p, begin, end, stop_at);
        case 2: return enum_range<2, false>(p, begin, end, stop_at);
        case 3: return enum_range<3, false>(p, begin, end, stop_at);
        case 4: return enum_range<4, false>(p, begin, end, stop_at);
        default: return enum_range_any(p, begin, end, stop_at);
    }
}

// Partitions gray indices [1, total] into contiguous worker ranges; the
// minimum of the per-range minima is independent of the partition.
std::uint64_t enumerate_min(const PackedRows& p, std::uint64_t total, int workers,
                            std::uint64_t stop_at) {
    if (workers <= 1 || total < 1 << 16) return enum_dispatch(p, 0, total + 1, stop_at);
    const std::uint64_t nw = std::uint64_t(workers);
    const std::uint64_t per = total / nw, extra = total % nw;
    std::vector<std::uint64_t> results(nw, ~std::uint64_t(0));
    std::vector<std::thread> threads;
    std::uint64_t cur = 1;
    for (std::uint64_t t = 0; t < nw; ++t) {
        const std::uint64_t len = per + (t < extra ? 1 : 0);
        const std::uint64_t b = cur, e = cur + len;
        cur = e;
        if (b >= e) continue;
        threads.emplace_back(
            [&results, &p, t, b, e, stop_at]() { results[t] = enum_dispatch(p, b, e, stop_at); });
    }
    for (auto& th : threads) th.join();
    std::uint64_t best = ~std::uint64_t(0);
    for (auto r : results) best = std::min(best, r);
    return best;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// 8-bit chunk tables: entry c of table t is the xor of the rows selected by
// byte value c within row group t, so a trial costs ceil(k/8) lookups.
struct ChunkTables {
    std::size_t words = 0;   // words per half (or per row in hamming mode)
    std::size_t stride = 0;  // words per table entry (2x for symplectic)
    std::size_t chunks = 0;
    bool symplectic = false;
    std::vector<std::uint64_t> data;  // chunks * 256 * stride

    const std::uint64_t* entry(std::size_t chunk, std::uint8_t byte) const {
        return data.data() + (chunk * 256 + byte) * stride;
    }
};

ChunkTables build_chunk_tables(const PackedRows& p) {
    ChunkTables t;
    t.words = p.words;
    t.symplectic = p.symplectic;
    t.stride = p.symplectic ? 2 * p.words : p.words;
    t.chunks = (p.k + 7) / 8;
    t.data.assign(t.chunks * 256 * t.stride, 0);
    for (std::size_t c = 0; c < t.chunks; ++c) {
        for (std::size_t byte = 1; byte < 256; ++byte) {
            const std::size_t low = std::size_t(std::countr_zero(unsigned(byte)));
            const std::size_t rest = byte & (byte - 1);
            std::uint64_t* dst = t.data.data() + (c * 256 + byte) * t.stride;
            const std::uint64_t* prev = t.data.data() + (c * 256 + rest) * t.stride;
            const std::size_t row = c * 8 + low;
            for (std::size_t w = 0; w < t.stride; ++w) dst[w] = prev[w];
            if (row < p.k) {
                for (std::size_t w = 0; w < p.words; ++w) dst[w] ^= p.x[row * p.words + w];
                if (p.symplectic)
                    for (std::size_t w = 0; w < p.words; ++w)
                        dst[p.words + w] ^= p.y[row * p.words + w];
            }
        }
    }
    return t;
}

std::uint64_t sample_range(const ChunkTables& t, std::size_t k, std::uint64_t seed,
                           std::uint64_t begin, std::uint64_t end) {
    const std::size_t info_words = (k + 63) / 64;
    std::uint64_t best = ~std::uint64_t(0);
    std::vector<std::uint64_t> acc(t.stride);
    std::vector<std::uint64_t> info(info_words);
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        std::uint64_t s = splitmix64(seed ^ splitmix64(trial));
        bool zero = true;
        for (std::size_t w = 0; w < info_words; ++w) {
            s = splitmix64(s);
            std::uint64_t bits = s;
            if (w + 1 == info_words && (k & 63)) bits &= (std::uint64_t(1) << (k & 63)) - 1;
            info[w] = bits;
            zero = zero && bits == 0;
        }
        if (zero) info[0] = 1;  // skip the zero codeword deterministically
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t c = 0; c < t.chunks; ++c) {
            const std::uint8_t byte = std::uint8_t((info[c / 8] >> ((c % 8) * 8)) & 0xFF);
            if (!byte) continue;
            const std::uint64_t* e = t.entry(c, byte);
            for (std::size_t w = 0; w < t.stride; ++w) acc[w] ^= e[w];
        }
        std::uint64_t wsum = 0;
        if (t.symplectic) {
            for (std::size_t w = 0; w < t.words; ++w)
                wsum += std::uint64_t(std::popcount(acc[w] | acc[t.words + w]));
        } else {
            for (std::size_t w = 0; w < t.words; ++w) wsum += std::uint64_t(std::popcount(acc[w]));
        }
        if (wsum < best) best = wsum;
    }
    return best;
}

}  // namespace

DistanceReport sampled_upper_bound(const BinaryCode& c, WeightMode mode, std::uint64_t trials,
                                   std::uint64_t seed, int workers) {
    if (c.rank == 0) fail("no-codewords", "zero code has no nonzero codewords");
    if (trials < 1) fail("invalid-input", "need at least one trial");
    const auto start = std::chrono::steady_clock::now();
    const PackedRows packed = pack_rows(c, mode);
    const ChunkTables tables = build_chunk_tables(packed);

    std::uint64_t best = ~std::uint64_t(0);
    if (workers <= 1 || trials < 1 << 14) {
        best = sample_range(tables, c.rank, seed, 0, trials);
    } else {
        const std::uint64_t nw = std::uint64_t(workers);
        std::vector<std::uint64_t> results(nw, ~std::uint64_t(0));
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (trials + nw - 1) / nw;
        for (std::uint64_t t = 0; t < nw; ++t) {
            const std::uint64_t b = t * chunk, e = std::min(trials, b + chunk);
            if (b >= e) continue;
            threads.emplace_back([&results, &tables, &c, seed, t, b, e]() {
                results[t] = sample_range(tables, c.rank, seed, b, e);
            });
        }
        for (auto& th : threads) th.join();
        for (auto r : results) best = std::min(best, r);
    }

    DistanceReport rep;
    rep.value = best;
    rep.certainty = Certainty::upper_bound_sampled;
    rep.upper_bound = best;
    rep.enumerated = trials;
    rep.budget = trials;
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

DistanceReport min_distance(const BinaryCode& c, WeightMode mode, const DistanceOptions& opts) {
    if (c.rank == 0) fail("no-codewords", "zero code has no nonzero codewords");
    const auto start = std::chrono::steady_clock::now();
    DistanceReport rep;
    rep.budget = opts.budget;

    const std::uint64_t total =
        c.rank >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << c.rank) - 1;
    if (total <= opts.budget) {
        const PackedRows packed = pack_rows(c, mode);
        const std::uint64_t stop_at = opts.lower_bound_hint;
        rep.value = enumerate_min(packed, total, opts.workers, stop_at);
        rep.certainty = Certainty::exact;
        rep.upper_bound = rep.value;
        rep.enumerated = total;
    } else {
        DistanceReport sampled = sampled_upper_bound(c, mode, opts.fallback_trials,
                                                     opts.fallback_seed, opts.workers);
        rep.value = std::max<std::uint64_t>(opts.lower_bound_hint, 1);
        rep.certainty = Certainty::lower_bound_only;
        rep.upper_bound = sampled.value;
        rep.enumerated = sampled.enumerated;
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

BinaryMatrix codewords_of_weight(const BinaryCode& c, WeightMode mode, std::uint64_t w,
                                 std::uint64_t budget) {
    BinaryMatrix out(c.length);
    if (w == 0) {
        out.rows.push_back(BitVec(c.length));
        return out;
    }
    if (c.rank == 0) return out;
    const std::uint64_t total =
        c.rank >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << c.rank) - 1;
    if (total > budget)
        fail("budget-error", "codeword extraction would enumerate " + std::to_string(total) +
                                 " words, budget is " + std::to_string(budget));
    BitVec acc(c.length);
    for (std::uint64_t i = 1; i <= total; ++i) {
        acc.xor_with(c.generators.rows[std::size_t(std::countr_zero(i))]);
        if (weight(acc, mode) == w) out.rows.push_back(acc);
    }
    return out;
}

}  // namespace qcadd

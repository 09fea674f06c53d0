#ifndef QCADD_DISTANCE_HPP
#define QCADD_DISTANCE_HPP

#include <cstdint>
#include <string>

#include "qcadd/codes.hpp"

namespace qcadd {

enum class WeightMode { hamming, symplectic };

enum class Certainty { exact, upper_bound_sampled, lower_bound_only };
std::string to_string(Certainty c);
std::string to_string(WeightMode m);

struct DistanceReport {
    std::uint64_t value = 0;        // exact distance, or the best lower bound
    Certainty certainty = Certainty::exact;
    std::uint64_t upper_bound = 0;  // equals value when exact; sampled minimum otherwise
    std::uint64_t enumerated = 0;   // codewords visited
    std::uint64_t budget = 0;
    double elapsed_seconds = 0.0;
};

struct DistanceOptions {
    std::uint64_t budget = std::uint64_t(1) << 24;
    int workers = 1;
    /// Proven lower bound; enumeration stops early once the running minimum
    /// reaches it. 0 disables early stopping (full deterministic sweep).
    std::uint64_t lower_bound_hint = 0;
    /// Sampling fallback used when the budget is exceeded.
    std::uint64_t fallback_trials = 100000;
    std::uint64_t fallback_seed = 1;
};

std::size_t weight(const BitVec& v, WeightMode mode);

/// Exact minimum weight by Gray-code enumeration of all 2^rank - 1 nonzero
/// codewords when that fits the budget; otherwise a lower-bound-only report
/// whose upper_bound field carries a sampled minimum.
DistanceReport min_distance(const BinaryCode& c, WeightMode mode, const DistanceOptions& opts = {});

/// Minimum weight over `trials` pseudorandom nonzero codewords. Trial i is
/// derived counter-style from (seed, i), so worker count never changes the
/// result.
DistanceReport sampled_upper_bound(const BinaryCode& c, WeightMode mode, std::uint64_t trials,
                                   std::uint64_t seed, int workers = 1);

/// All codewords of the given weight, as matrix rows (w = 0 yields the zero word).
BinaryMatrix codewords_of_weight(const BinaryCode& c, WeightMode mode, std::uint64_t w,
                                 std::uint64_t budget);

}  // namespace qcadd

#endif

#ifndef QCADD_SEARCH_HPP
#define QCADD_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "qcadd/codes.hpp"
#include "qcadd/distance.hpp"

namespace qcadd {

struct SearchConfig {
    int n = 0;
    Gf2Poly g;
    int ell = 2;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::uint64_t budget = std::uint64_t(1) << 20;
    std::size_t keep = 10;
    bool filter_conditions = true;  // keep only f-lists passing the bound hypotheses
    bool divisor_sampling = false;  // draw f as gcd(g, random), mirroring the shortcut lemma
    int workers = 1;
};

struct SearchHit {
    std::uint64_t trial = 0;
    std::vector<Gf2Poly> fs;
    DistanceReport distance;
    std::size_t rank = 0;
};

/// Randomized search over f-lists for a fixed seed polynomial. Trial i derives
/// its randomness counter-style from (seed, i), so the ranked result list is
/// identical for any worker count.
std::vector<SearchHit> search_f_polynomials(const SearchConfig& cfg);

}  // namespace qcadd

#endif

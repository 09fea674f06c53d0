#ifndef QCADD_BOUNDS_HPP
#define QCADD_BOUNDS_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qcadd/gf2poly.hpp"

namespace qcadd {

struct BoundReport {
    std::uint64_t bound_value = 0;
    bool hypotheses_hold = false;
    std::string failed_condition;  // empty when hypotheses hold
};

/// m * ceil((q+1)/q * d_g), the symplectic distance floor for index-2m
/// quasi-cyclic codes built from a cyclic code of distance d_g.
std::uint64_t qc_distance_lower_bound(int q, int m, std::uint64_t d_g);

/// Checks the gcd and degree hypotheses behind the bound for the f-list of a
/// 1-generator quasi-cyclic code (q = 2). d_g is the Hamming distance of the
/// cyclic seed code <g>; pass 0 when unknown (bound_value is then 0).
BoundReport qc_bound_conditions(int n, const Gf2Poly& g, std::span<const Gf2Poly> fs,
                                std::uint64_t d_g = 0);

/// Divisor shortcut: for odd n and f | g, gcd(f + a, (x^n-1)/g) = 1 for a in GF(2).
bool divisor_implies_coprime(int n, const Gf2Poly& g, const Gf2Poly& f);

/// Griesmer-concatenation bound for quaternary additive codes:
/// 3n >= sum_{i=0}^{k2-1} ceil(d / 2^{i-1}), the i = 0 term being 2d.
bool griesmer_concat_check(std::uint64_t n, std::uint64_t k2, std::uint64_t d);
std::uint64_t griesmer_concat_max_d(std::uint64_t n, std::uint64_t k2);

struct LinearRef {
    int n = 0, k = 0, d = 0;
};

std::vector<LinearRef> load_reference_file(const std::filesystem::path& file);

enum class Classification { strong_sense_better, higher_rate, gap_filler, not_better, unknown };
std::string to_string(Classification c);

/// Compares an additive (n, k2/2, d) code against best-known linear codes of
/// dimensions floor(k2/2) and ceil(k2/2).
Classification classify_vs_reference(int n, int k2, int d, std::span<const LinearRef> reference);

}  // namespace qcadd

#endif

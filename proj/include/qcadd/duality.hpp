#ifndef QCADD_DUALITY_HPP
#define QCADD_DUALITY_HPP

#include <span>
#include <string>

#include "qcadd/additive.hpp"
#include "qcadd/codes.hpp"

namespace qcadd {

enum class GramVerdict { lcd, self_orthogonal, mixed };
std::string to_string(GramVerdict v);

struct GramReport {
    BinaryMatrix gram;          // k2 x k2, symmetric with zero diagonal over GF(2)
    std::size_t gram_rank = 0;
    std::size_t hull_dim = 0;   // k2 - gram_rank
    GramVerdict verdict = GramVerdict::lcd;
};

GramReport symplectic_gram(const BinaryCode& c);

/// C intersected with its symplectic dual, as a code of the same length.
BinaryCode hull(const BinaryCode& c);

struct AcdCheck {
    bool acd = false;
    GramReport gram;
};
AcdCheck is_acd(const AdditiveCode& c);

bool is_trace_hermitian_self_orthogonal(const AdditiveCode& c);

/// Polynomial LCD test for 1-generator quasi-cyclic codes of even index:
/// the seed must equal its reciprocal and the pairing polynomial
/// Lambda = sum_j (f_j conj(f_{m+j}) + f_{m+j} conj(f_j)) must be coprime to
/// (x^n-1)/g, with conj(f) = f(x^{-1}) mod x^n-1. The verdict characterizes
/// the Gram test for codes of full dimension n - deg g with gcd(n, 2) = 1;
/// that equivalence is cross-checked against the Gram verdict in the tests.
struct QcLcdCriterion {
    bool lcd = false;
    bool palindromic_seed = false;
    bool lambda_coprime = false;
    Gf2Poly lambda;
    Gf2Poly lambda_gcd;
};
QcLcdCriterion qc_lcd_criterion(int n, const Gf2Poly& g, std::span<const Gf2Poly> fs);

/// ACD (c1) next to trace-Hermitian self-orthogonal (c2): output stays ACD
/// with distance at least d1 + d2.
AdditiveCode acd_juxtapose(const AdditiveCode& c1, const AdditiveCode& c2);

/// Construction X that preserves the complementary-dual property: c1 must be
/// ACD and aux trace-Hermitian self-orthogonal.
AdditiveCode acd_construction_x(const AdditiveCode& c1, const AdditiveCode& c2,
                                const AdditiveCode& aux);

struct AcdShortenResult {
    AdditiveCode code;
    std::size_t hull_dim_after_shorten = 0;
    bool hull_removed = false;  // false means the result is returned unverified
};
/// Shortens an ACD code at one position and removes the 1-dimensional hull
/// that generically appears, restoring an ACD code with k2 - 2.
AcdShortenResult acd_shorten(const AdditiveCode& c, int position);

}  // namespace qcadd

#endif

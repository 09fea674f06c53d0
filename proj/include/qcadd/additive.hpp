#ifndef QCADD_ADDITIVE_HPP
#define QCADD_ADDITIVE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcadd/codes.hpp"
#include "qcadd/distance.hpp"

namespace qcadd {

/// GF(4) symbol encoded as the binary pair (x, y) with symbol = x + w*y:
/// value 0 = 0, 1 = 1, 2 = w, 3 = w^2 (since w^2 = 1 + w).
/// Printable alphabet: 0, 1, w, W with W = w^2.
using Gf4Word = std::vector<std::uint8_t>;

char gf4_to_char(std::uint8_t symbol);
std::uint8_t gf4_from_char(char c);
std::uint8_t gf4_mul_w(std::uint8_t symbol);

/// Quaternary additive code held by its binary symplectic preimage of length
/// 2n; the GF(2) dimension k2 may be odd (half-integer GF(4) dimension).
struct AdditiveCode {
    int n = 0;
    BinaryCode preimage;  // length 2n, symplectic_view set

    std::size_t k2() const { return preimage.rank; }
};

AdditiveCode make_additive(BinaryCode preimage);

/// Formats "(n,k,d)" with the GF(4) dimension printed as k2/2, one decimal
/// when odd: (21,10.5,8).
std::string params_string(int n, std::size_t k2, std::uint64_t d);
std::string dim_string(std::size_t k2);

Gf4Word phi_map(const BitVec& v);
BitVec phi_inverse(const Gf4Word& u);
Gf4Word parse_gf4_word(std::string_view s);
std::string gf4_word_string(const Gf4Word& u);

/// Generator rows of the additive code as GF(4) strings.
std::vector<std::string> gf4_generator_strings(const AdditiveCode& c);

/// GF(2) span of explicit binary preimage rows (each of length 2n).
AdditiveCode span_subcode(const BinaryMatrix& rows, int n);
/// GF(2) span of GF(4) rows; with linear_closure also adjoins w times each row.
AdditiveCode span_gf4_rows(std::span<const Gf4Word> rows, bool linear_closure = false);

enum class ExtendMode { zero_pad, even_like };
AdditiveCode extend(const AdditiveCode& c, ExtendMode mode, int count = 1);

AdditiveCode puncture(const AdditiveCode& c, std::span<const int> positions);
AdditiveCode shorten(const AdditiveCode& c, std::span<const int> positions);

enum class AugmentMode { half, full };
/// Adjoins the all-one word (half: 1_n; full: 1_n and w_n). Fails with
/// "augment-forbidden" when the adjoined words already lie in the code.
AdditiveCode augment(const AdditiveCode& c, AugmentMode mode);

/// Subcode/auxiliary assembly: rows completing c2 to c1 get aux rows attached,
/// rows of c2 get zeros.
AdditiveCode construction_x(const AdditiveCode& c1, const AdditiveCode& c2,
                            const AdditiveCode& aux);

/// Row-wise concatenation respecting the symplectic split; requires equal k2.
AdditiveCode juxtapose(const AdditiveCode& c1, const AdditiveCode& c2);

DistanceReport additive_distance(const AdditiveCode& c, const DistanceOptions& opts = {});

}  // namespace qcadd

#endif

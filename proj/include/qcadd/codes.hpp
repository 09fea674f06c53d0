#ifndef QCADD_CODES_HPP
#define QCADD_CODES_HPP

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "qcadd/binary_matrix.hpp"
#include "qcadd/bounds.hpp"
#include "qcadd/gf2poly.hpp"

namespace qcadd {

/// Binary linear code held as a reduced-row-echelon generator basis.
/// symplectic_view marks even-length codes whose distance queries default to
/// the symplectic weight over coordinate pairs (i, length/2 + i).
struct BinaryCode {
    std::size_t length = 0;
    BinaryMatrix generators;  // RREF basis, rank() rows
    std::size_t rank = 0;
    bool symplectic_view = false;
};

/// 1-generator quasi-cyclic spec: circulant size n, seed g | x^n - 1, and the
/// per-block multipliers f_0 .. f_{l-1}.
struct QcGeneratorSpec {
    int n = 0;
    Gf2Poly g;
    std::vector<Gf2Poly> fs;
};

BinaryCode make_code(std::size_t length, const BinaryMatrix& rows, bool symplectic_view);

/// n x n matrix whose row i is x^i * p mod x^n - 1.
BinaryMatrix circulant_expand(const Gf2Poly& p, int n);

BinaryCode build_cyclic(int n, const Gf2Poly& g);
BinaryCode build_qc_1gen(const QcGeneratorSpec& spec);

struct QcGeneratorTuple {
    Gf2Poly g;
    std::vector<Gf2Poly> fs;
};
BinaryCode build_qc_multi(int n, std::span<const QcGeneratorTuple> gens);

/// Doubles the index: rows become ([g f_j f_l] over all j, then [g f_j f_r]).
/// The gcd/degree hypotheses for (f_l, f_r) are reported through `conditions`
/// when non-null (bound_value left at 0; the caller knows the base distance).
BinaryCode double_index(const QcGeneratorSpec& spec, const Gf2Poly& f_l, const Gf2Poly& f_r,
                        BoundReport* conditions = nullptr);

enum class DualForm { euclidean, symplectic };
BinaryCode dual_code(const BinaryCode& c, DualForm form);

bool code_contains(const BinaryCode& c, const BitVec& word);
bool same_code(const BinaryCode& a, const BinaryCode& b);

void write_code(std::ostream& os, const BinaryCode& c);
BinaryCode read_code(std::istream& is);

}  // namespace qcadd

#endif

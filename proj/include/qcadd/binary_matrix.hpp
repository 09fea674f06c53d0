#ifndef QCADD_BINARY_MATRIX_HPP
#define QCADD_BINARY_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "qcadd/bitvec.hpp"

namespace qcadd {

/// Dense GF(2) matrix; all rows share the same length.
struct BinaryMatrix {
    std::size_t cols = 0;
    std::vector<BitVec> rows;

    BinaryMatrix() = default;
    explicit BinaryMatrix(std::size_t c) : cols(c) {}
    BinaryMatrix(std::size_t c, std::vector<BitVec> r) : cols(c), rows(std::move(r)) {}

    std::size_t row_count() const noexcept { return rows.size(); }
    void append_row(BitVec v);
    bool operator==(const BinaryMatrix&) const = default;
};

struct RowReduceResult {
    std::size_t rank = 0;
    BinaryMatrix rowbasis;   // reduced row echelon basis of the row space
    BinaryMatrix nullbasis;  // basis of { v : M v^T = 0 }
};

RowReduceResult row_reduce(const BinaryMatrix& m);

/// Reduced row echelon form only (cheaper when the nullspace is not needed).
BinaryMatrix rref(const BinaryMatrix& m);
std::size_t rank_of(const BinaryMatrix& m);

/// True when v lies in the row space of the RREF basis.
bool in_row_space(const BinaryMatrix& rref_basis, const BitVec& v);
bool same_row_space(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace qcadd

#endif

#include "qcadd/binary_matrix.hpp"

#include <algorithm>

#include "qcadd/errors.hpp"

namespace qcadd {

void BinaryMatrix::append_row(BitVec v) {
    if (v.size() != cols) fail("shape-error", "row length does not match matrix width");
    rows.push_back(std::move(v));
}

BinaryMatrix rref(const BinaryMatrix& m) {
    BinaryMatrix r = m;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols && pivot_row < r.rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows.size() && !r.rows[sel].get(col)) ++sel;
        if (sel == r.rows.size()) continue;
        std::swap(r.rows[pivot_row], r.rows[sel]);
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            if (i != pivot_row && r.rows[i].get(col)) r.rows[i].xor_with(r.rows[pivot_row]);
        ++pivot_row;
    }
    r.rows.resize(pivot_row);
    return r;
}

std::size_t rank_of(const BinaryMatrix& m) { return rref(m).rows.size(); }

RowReduceResult row_reduce(const BinaryMatrix& m) {
    RowReduceResult res;
    res.rowbasis = rref(m);
    res.rank = res.rowbasis.rows.size();

    // pivot column of each basis row
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(m.cols, false);
    for (const auto& row : res.rowbasis.rows) {
        const std::size_t p = row.lowest_set();
        pivots.push_back(p);
        is_pivot[p] = true;
    }

    res.nullbasis = BinaryMatrix(m.cols);
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(m.cols);
        v.set(f, true);
        for (std::size_t r = 0; r < res.rank; ++r)
            if (res.rowbasis.rows[r].get(f)) v.set(pivots[r], true);
        res.nullbasis.rows.push_back(std::move(v));
    }
    return res;
}

bool in_row_space(const BinaryMatrix& rref_basis, const BitVec& v) {
    BitVec acc = v;
    for (const auto& row : rref_basis.rows) {
        const std::size_t p = row.lowest_set();
        if (p < acc.size() && acc.get(p)) acc.xor_with(row);
    }
    return acc.is_zero();
}

bool same_row_space(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols != b.cols) return false;
    return rref(a) == rref(b);
}

}  // namespace qcadd

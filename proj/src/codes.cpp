#include "qcadd/codes.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qcadd/errors.hpp"

namespace qcadd {

BinaryCode make_code(std::size_t length, const BinaryMatrix& rows, bool symplectic_view) {
    if (symplectic_view && length % 2 != 0)
        fail("invalid-form", "symplectic view requires even length");
    BinaryCode c;
    c.length = length;
    c.generators = rref(rows);
    c.rank = c.generators.rows.size();
    c.symplectic_view = symplectic_view;
    return c;
}

BinaryMatrix circulant_expand(const Gf2Poly& p, int n) {
    if (p.degree() >= n) fail("invalid-input", "polynomial degree must be below n");
    BinaryMatrix m{std::size_t(n)};
    Gf2Poly row = p;
    for (int i = 0; i < n; ++i) {
        BitVec v{std::size_t(n)};
        for (int d : row.powers()) v.set(std::size_t(d), true);
        m.rows.push_back(std::move(v));
        row = poly_mul_mod(row, Gf2Poly::monomial(1), n);
    }
    return m;
}

static void check_generator(const Gf2Poly& g, int n) {
    if (!poly_divides(g, Gf2Poly::xn_minus_one(n)))
        fail("not-a-generator",
             g.to_power_string() + " does not divide x^" + std::to_string(n) + "-1");
}

BinaryCode build_cyclic(int n, const Gf2Poly& g) {
    check_generator(g, n);
    const int k = n - g.degree();
    BinaryMatrix rows{std::size_t(n)};
    Gf2Poly shift = g;
    for (int i = 0; i < k; ++i) {
        BitVec v{std::size_t(n)};
        for (int d : shift.powers()) v.set(std::size_t(d), true);
        rows.rows.push_back(std::move(v));
        shift = poly_mul_mod(shift, Gf2Poly::monomial(1), n);
    }
    return make_code(std::size_t(n), rows, false);
}

static BitVec qc_row(int n, std::span<const Gf2Poly> blocks) {
    BitVec v{std::size_t(n) * blocks.size()};
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int d : blocks[b].powers()) v.set(b * std::size_t(n) + std::size_t(d), true);
    return v;
}

static void append_qc_block_rows(BinaryMatrix& rows, int n, const Gf2Poly& g,
                                 std::span<const Gf2Poly> fs) {
    std::vector<Gf2Poly> blocks;
    blocks.reserve(fs.size());
    for (const auto& f : fs) blocks.push_back(poly_mul_mod(g, f, n));
    for (int i = 0; i < n; ++i) {
        rows.rows.push_back(qc_row(n, blocks));
        for (auto& b : blocks) b = poly_mul_mod(b, Gf2Poly::monomial(1), n);
    }
}

BinaryCode build_qc_1gen(const QcGeneratorSpec& spec) {
    if (spec.fs.empty()) fail("invalid-input", "need at least one block multiplier");
    for (const auto& f : spec.fs)
        if (f.degree() >= spec.n) fail("invalid-input", "f degree must be below n");
    check_generator(spec.g, spec.n);
    BinaryMatrix rows{std::size_t(spec.n) * spec.fs.size()};
    append_qc_block_rows(rows, spec.n, spec.g, spec.fs);
    const std::size_t length = std::size_t(spec.n) * spec.fs.size();
    return make_code(length, rows, length % 2 == 0);
}

BinaryCode build_qc_multi(int n, std::span<const QcGeneratorTuple> gens) {
    if (gens.empty()) fail("invalid-input", "need at least one generator tuple");
    const std::size_t ell = gens.front().fs.size();
    for (const auto& t : gens) {
        if (t.fs.size() != ell) fail("shape-error", "all tuples must share the same index");
        check_generator(t.g, n);
        for (const auto& f : t.fs)
            if (f.degree() >= n) fail("invalid-input", "f degree must be below n");
    }
    BinaryMatrix rows{std::size_t(n) * ell};
    for (const auto& t : gens) append_qc_block_rows(rows, n, t.g, t.fs);
    const std::size_t length = std::size_t(n) * ell;
    return make_code(length, rows, length % 2 == 0);
}

BinaryCode double_index(const QcGeneratorSpec& spec, const Gf2Poly& f_l, const Gf2Poly& f_r,
                        BoundReport* conditions) {
    if (conditions) {
        const Gf2Poly pair[2] = {f_l, f_r};
        *conditions = qc_bound_conditions(spec.n, spec.g, pair);
    }
    QcGeneratorSpec doubled;
    doubled.n = spec.n;
    doubled.g = spec.g;
    for (const auto& f : spec.fs) doubled.fs.push_back(poly_mul_mod(f, f_l, spec.n));
    for (const auto& f : spec.fs) doubled.fs.push_back(poly_mul_mod(f, f_r, spec.n));
    return build_qc_1gen(doubled);
}

static BitVec swap_halves(const BitVec& v) {
    const std::size_t n = v.size() / 2;
    BitVec out(v.size());
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, v.get(n + i));
        out.set(n + i, v.get(i));
    }
    return out;
}

BinaryCode dual_code(const BinaryCode& c, DualForm form) {
    if (form == DualForm::symplectic && c.length % 2 != 0)
        fail("invalid-form", "symplectic dual requires even length");
    BinaryMatrix m = c.generators;
    if (form == DualForm::symplectic)
        for (auto& row : m.rows) row = swap_halves(row);
    auto rr = row_reduce(m);
    // the nullspace of an empty generator set is the full space
    if (m.rows.empty()) {
        BinaryMatrix full(c.length);
        for (std::size_t i = 0; i < c.length; ++i) {
            BitVec e(c.length);
            e.set(i, true);
            full.rows.push_back(std::move(e));
        }
        return make_code(c.length, full, c.symplectic_view);
    }
    return make_code(c.length, rr.nullbasis, c.symplectic_view);
}

bool code_contains(const BinaryCode& c, const BitVec& word) {
    if (word.size() != c.length) return false;
    return in_row_space(c.generators, word);
}

bool same_code(const BinaryCode& a, const BinaryCode& b) {
    return a.length == b.length && a.generators == b.generators;
}

void write_code(std::ostream& os, const BinaryCode& c) {
    os << "length " << c.length << "\n";
    os << "rank " << c.rank << "\n";
    os << "symplectic " << (c.symplectic_view ? 1 : 0) << "\n";
    for (const auto& row : c.generators.rows) os << "row " << row.to_string() << "\n";
}

BinaryCode read_code(std::istream& is) {
    std::size_t length = 0, rank = 0;
    int symplectic = 0;
    BinaryMatrix rows;
    bool have_length = false;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "length") {
            ss >> length;
            rows = BinaryMatrix(length);
            have_length = true;
        } else if (key == "rank") {
            ss >> rank;
        } else if (key == "symplectic") {
            ss >> symplectic;
        } else if (key == "row") {
            std::string bits;
            ss >> bits;
            if (!have_length) fail("invalid-input", "row before length in code file");
            rows.append_row(BitVec::from_string(bits));
        } else {
            fail("invalid-input", "unknown key '" + key + "' in code file");
        }
    }
    if (!have_length) fail("invalid-input", "code file missing length");
    BinaryCode c = make_code(length, rows, symplectic != 0);
    if (rank != 0 && rank != c.rank)
        fail("invalid-input", "declared rank does not match generator rows");
    return c;
}

}  // namespace qcadd

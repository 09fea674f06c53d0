#include "qcadd/duality.hpp"

#include "qcadd/errors.hpp"

namespace qcadd {

std::string to_string(GramVerdict v) {
    switch (v) {
        case GramVerdict::lcd: return "lcd";
        case GramVerdict::self_orthogonal: return "self-orthogonal";
        case GramVerdict::mixed: return "mixed";
    }
    return "mixed";
}

static bool symplectic_pair(const BitVec& a, const BitVec& b) {
    // <a,b>_s = sum a_i b_{n+i} + a_{n+i} b_i; over GF(2) the minus collapses
    const std::size_t n = a.size() / 2;
    bool acc = false;
    for (std::size_t i = 0; i < n; ++i)
        acc ^= (a.get(i) && b.get(n + i)) ^ (a.get(n + i) && b.get(i));
    return acc;
}

GramReport symplectic_gram(const BinaryCode& c) {
    if (c.length % 2 != 0) fail("invalid-form", "symplectic Gram requires even length");
    const std::size_t k = c.rank;
    GramReport rep;
    rep.gram = BinaryMatrix(k);
    for (std::size_t i = 0; i < k; ++i) rep.gram.rows.emplace_back(BitVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (symplectic_pair(c.generators.rows[i], c.generators.rows[j])) {
                rep.gram.rows[i].set(j, true);
                rep.gram.rows[j].set(i, true);
            }
    rep.gram_rank = rank_of(rep.gram);
    rep.hull_dim = k - rep.gram_rank;
    if (rep.hull_dim == 0)
        rep.verdict = GramVerdict::lcd;
    else if (rep.gram_rank == 0)
        rep.verdict = GramVerdict::self_orthogonal;
    else
        rep.verdict = GramVerdict::mixed;
    return rep;
}

BinaryCode hull(const BinaryCode& c) {
    if (!c.symplectic_view && c.length % 2 != 0)
        fail("invalid-form", "hull requires a symplectic code");
    const GramReport rep = symplectic_gram(c);
    // u in null(gram)  <=>  u^T G lies in the dual as well
    const auto rr = row_reduce(rep.gram);
    BinaryMatrix rows(c.length);
    for (const auto& combo : rr.nullbasis.rows) {
        BitVec v(c.length);
        for (std::size_t r = 0; r < c.rank; ++r)
            if (combo.get(r)) v.xor_with(c.generators.rows[r]);
        rows.rows.push_back(std::move(v));
    }
    return make_code(c.length, rows, true);
}

AcdCheck is_acd(const AdditiveCode& c) {
    AcdCheck res;
    res.gram = symplectic_gram(c.preimage);
    res.acd = res.gram.hull_dim == 0;
    return res;
}

bool is_trace_hermitian_self_orthogonal(const AdditiveCode& c) {
    return symplectic_gram(c.preimage).gram_rank == 0;
}

QcLcdCriterion qc_lcd_criterion(int n, const Gf2Poly& g, std::span<const Gf2Poly> fs) {
    if (fs.size() % 2 != 0 || fs.empty()) fail("invalid-index", "index must be even");
    const Gf2Poly h = cyclotomic_quotient(g, n);  // throws not-a-generator
    QcLcdCriterion res;
    res.palindromic_seed = (poly_reciprocal(g) == g);
    const std::size_t m = fs.size() / 2;
    Gf2Poly lambda;
    for (std::size_t j = 0; j < m; ++j) {
        lambda = lambda + poly_mul_mod(fs[j], ring_conjugate(fs[j + m], n), n) +
                 poly_mul_mod(fs[j + m], ring_conjugate(fs[j], n), n);
    }
    res.lambda = lambda;
    if (lambda.is_zero()) {
        res.lambda_gcd = h;
        res.lambda_coprime = h.is_one();
    } else {
        res.lambda_gcd = poly_gcd(lambda, h);
        res.lambda_coprime = res.lambda_gcd.is_one();
    }
    res.lcd = res.palindromic_seed && res.lambda_coprime;
    return res;
}

AdditiveCode acd_juxtapose(const AdditiveCode& c1, const AdditiveCode& c2) {
    if (c2.k2() == 0 && c2.n == 0) return c1;
    if (!is_acd(c1).acd) fail("not-acd", "first argument must be complementary-dual");
    if (!is_trace_hermitian_self_orthogonal(c2))
        fail("not-self-orthogonal", "second argument must be trace-Hermitian self-orthogonal");
    return juxtapose(c1, c2);
}

AdditiveCode acd_construction_x(const AdditiveCode& c1, const AdditiveCode& c2,
                                const AdditiveCode& aux) {
    if (!is_acd(c1).acd) fail("not-acd", "containing code must be complementary-dual");
    if (!is_trace_hermitian_self_orthogonal(aux))
        fail("not-self-orthogonal", "auxiliary code must be trace-Hermitian self-orthogonal");
    return construction_x(c1, c2, aux);
}

// Complement of the hull inside the code; any complement of the radical
// carries a nondegenerate form, so the result is complementary-dual.
static AdditiveCode remove_hull(const AdditiveCode& c, const BinaryCode& h) {
    BinaryMatrix acc = h.generators;
    BinaryMatrix comp(c.preimage.length);
    std::size_t rank = acc.rows.size();
    for (const auto& row : c.preimage.generators.rows) {
        acc.rows.push_back(row);
        const std::size_t r = rank_of(acc);
        if (r > rank) {
            rank = r;
            comp.rows.push_back(row);
        } else {
            acc.rows.pop_back();
        }
    }
    return span_subcode(comp, c.n);
}

AcdShortenResult acd_shorten(const AdditiveCode& c, int position) {
    if (c.k2() < 2) fail("invalid-input", "need k2 >= 2 to shorten");
    if (position < 0 || position >= c.n) fail("invalid-input", "position out of range");
    if (!is_acd(c).acd) fail("not-acd", "input must be complementary-dual");

    const int pos[1] = {position};
    AdditiveCode shortened = shorten(c, pos);

    AcdShortenResult res;
    res.code = shortened;
    const BinaryCode h = hull(shortened.preimage);
    res.hull_dim_after_shorten = h.rank;
    if (h.rank == 0) {
        res.hull_removed = true;
        return res;
    }
    // a hull dimension above one cannot be removed without dropping below the
    // shortened dimension; the caller gets the shortened code unverified
    if (h.rank > 1) return res;
    res.code = remove_hull(shortened, h);
    res.hull_removed = true;
    return res;
}

}  // namespace qcadd

#include <doctest.h>

#include <random>

#include "qcadd/codes.hpp"
#include "qcadd/duality.hpp"
#include "qcadd/errors.hpp"

using namespace qcadd;

namespace {

AdditiveCode random_additive(std::mt19937_64& rng, int n, std::size_t rows) {
    BinaryMatrix m{std::size_t(2 * n)};
    for (std::size_t r = 0; r < rows; ++r) {
        BitVec v{std::size_t(2 * n)};
        for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng() & 1);
        m.rows.push_back(std::move(v));
    }
    return span_subcode(m, n);
}

// divisor of x^n-1 equal to its own reciprocal (and not the full modulus);
// lcm(d, reciprocal(d)) works because x^n-1 is self-reciprocal
Gf2Poly random_palindromic_divisor(std::mt19937_64& rng, int n) {
    const Gf2Poly modulus = Gf2Poly::xn_minus_one(n);
    for (int tries = 0; tries < 64; ++tries) {
        std::string bits(std::size_t(n), '0');
        for (auto& c : bits)
            if (rng() & 1) c = '1';
        const Gf2Poly d = poly_gcd(modulus, Gf2Poly::from_coeffs(bits));
        if (d.is_zero() || d.degree() >= n || d.degree() < 1) continue;
        const Gf2Poly dr = poly_reciprocal(d);
        const Gf2Poly lcm = poly_divrem(d * dr, poly_gcd(d, dr)).first;
        if (lcm.degree() >= n || lcm.degree() < 1) continue;
        if (!poly_divides(lcm, modulus)) continue;
        if (poly_reciprocal(lcm) == lcm) return lcm;
    }
    return Gf2Poly::from_coeffs("11");  // 1+x divides x^n-1 for every n
}

}  // namespace

TEST_CASE("gram report basics") {
    // single isotropic generator
    BinaryMatrix iso(2);
    iso.rows.push_back(BitVec::from_string("10"));
    const BinaryCode line = make_code(2, iso, true);
    const GramReport g1 = symplectic_gram(line);
    CHECK(g1.gram_rank == 0);
    CHECK(g1.hull_dim == 1);
    CHECK(g1.verdict == GramVerdict::self_orthogonal);

    // symplectic pair e1, e_{n+1}
    BinaryMatrix pair(2);
    pair.rows.push_back(BitVec::from_string("10"));
    pair.rows.push_back(BitVec::from_string("01"));
    const BinaryCode sp = make_code(2, pair, true);
    const GramReport g2 = symplectic_gram(sp);
    CHECK(g2.gram_rank == 2);
    CHECK(g2.hull_dim == 0);
    CHECK(g2.verdict == GramVerdict::lcd);
    CHECK(g2.gram.rows[0].get(1));
    CHECK(g2.gram.rows[1].get(0));
}

TEST_CASE("gram invariants on random codes") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 80; ++it) {
        const int n = 2 + int(rng() % 8);
        const AdditiveCode c = random_additive(rng, n, 1 + rng() % 6);
        if (c.k2() == 0) continue;
        const GramReport rep = symplectic_gram(c.preimage);
        CHECK(rep.hull_dim + rep.gram_rank == c.k2());
        for (std::size_t i = 0; i < c.k2(); ++i) {
            CHECK_FALSE(rep.gram.rows[i].get(i));
            for (std::size_t j = 0; j < c.k2(); ++j)
                CHECK(rep.gram.rows[i].get(j) == rep.gram.rows[j].get(i));
        }
        // hull dimension matches the brute-force intersection with the dual
        const BinaryCode h = hull(c.preimage);
        CHECK(h.rank == rep.hull_dim);
        const BinaryCode dual = dual_code(c.preimage, DualForm::symplectic);
        for (const auto& row : h.generators.rows) {
            CHECK(code_contains(c.preimage, row));
            CHECK(code_contains(dual, row));
        }
        // is_acd mirrors zero hull
        CHECK(is_acd(c).acd == (h.rank == 0));
    }
}

TEST_CASE("polynomial LCD criterion agrees with the Gram test") {
    // the criterion characterizes full-dimension codes over squarefree rings,
    // so the generator draws odd n and keeps rank n - deg g instances
    std::mt19937_64 rng(103);
    int done = 0;
    while (done < 1000) {
        const int n = 3 + 2 * int(rng() % 14);
        const Gf2Poly g = random_palindromic_divisor(rng, n);
        const int ell = (rng() & 1) ? 2 : 4;
        std::vector<Gf2Poly> fs;
        for (int j = 0; j < ell; ++j) {
            std::string bits(std::size_t(n), '0');
            for (auto& c : bits)
                if (rng() & 1) c = '1';
            Gf2Poly f = Gf2Poly::from_coeffs(bits);
            if (f.is_zero()) f = Gf2Poly::one();
            fs.push_back(std::move(f));
        }
        const BinaryCode code = build_qc_1gen({n, g, fs});
        if (code.rank != std::size_t(n - g.degree())) continue;
        const auto crit = qc_lcd_criterion(n, g, fs);
        const bool gram_lcd = symplectic_gram(code).hull_dim == 0;
        CHECK(crit.lcd == gram_lcd);
        ++done;
    }
}

TEST_CASE("polynomial LCD criterion rejects repeated halves") {
    const Gf2Poly g = Gf2Poly::from_coeffs("11");
    const Gf2Poly f = Gf2Poly::from_powers({0, 2, 5});
    const std::vector<Gf2Poly> fs{f, f};
    const auto crit = qc_lcd_criterion(13, g, fs);
    CHECK(crit.lambda.is_zero());
    CHECK_FALSE(crit.lcd);

    const std::vector<Gf2Poly> odd{f};
    CHECK_THROWS_AS(qc_lcd_criterion(13, g, odd), Error);
}

TEST_CASE("self-orthogonality is preserved under juxtaposition") {
    std::mt19937_64 rng(107);
    int done = 0;
    while (done < 30) {
        const int n = 2 + int(rng() % 6);
        const AdditiveCode c = random_additive(rng, n, 1 + rng() % 4);
        if (c.k2() == 0 || !is_trace_hermitian_self_orthogonal(c)) continue;
        const AdditiveCode jj = juxtapose(c, c);
        CHECK(is_trace_hermitian_self_orthogonal(jj));
        ++done;
    }
}

TEST_CASE("acd juxtapose keeps the gram of the complementary-dual part") {
    // symplectic pair (ACD) next to an isotropic line repeated (self-orthogonal)
    BinaryMatrix pair(2);
    pair.rows.push_back(BitVec::from_string("10"));
    pair.rows.push_back(BitVec::from_string("01"));
    const AdditiveCode acd = span_subcode(pair, 1);

    BinaryMatrix iso(4);
    iso.rows.push_back(BitVec::from_string("1100"));
    iso.rows.push_back(BitVec::from_string("0011"));
    const AdditiveCode so = span_subcode(iso, 2);
    REQUIRE(is_trace_hermitian_self_orthogonal(so));

    const AdditiveCode out = acd_juxtapose(acd, so);
    CHECK(out.n == 3);
    CHECK(out.k2() == 2);
    CHECK(is_acd(out).acd);

    CHECK_THROWS_AS(acd_juxtapose(so, so), Error);
    CHECK_THROWS_AS(acd_juxtapose(acd, acd), Error);
}

TEST_CASE("acd shorten on the symplectic-pair toy") {
    BinaryMatrix pair(4);
    pair.rows.push_back(BitVec::from_string("1000"));
    pair.rows.push_back(BitVec::from_string("0010"));
    const AdditiveCode acd = span_subcode(pair, 2);
    REQUIRE(is_acd(acd).acd);
    const auto res = acd_shorten(acd, 0);
    CHECK(res.hull_removed);
    CHECK(res.code.k2() == 0);
}

TEST_CASE("acd shorten keeps the complementary-dual property on random codes") {
    std::mt19937_64 rng(109);
    int done = 0;
    while (done < 30) {
        const int n = 3 + int(rng() % 6);
        const AdditiveCode c = random_additive(rng, n, 2 + rng() % 5);
        if (c.k2() < 2 || !is_acd(c).acd) continue;
        const auto res = acd_shorten(c, int(rng() % std::uint64_t(n)));
        if (res.hull_removed && res.code.k2() > 0) CHECK(is_acd(res.code).acd);
        ++done;
    }
}

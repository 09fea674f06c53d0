#include <doctest.h>

#include <random>

#include "qcadd/errors.hpp"
#include "qcadd/gf2poly.hpp"

using namespace qcadd;

namespace {

Gf2Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::string bits(std::size_t(max_deg) + 1, '0');
    for (auto& c : bits)
        if (rng() & 1) c = '1';
    return Gf2Poly::from_coeffs(bits);
}

}  // namespace

TEST_CASE("coefficient strings round-trip") {
    CHECK(Gf2Poly::from_coeffs("1101").to_power_string() == "1+x+x^3");
    CHECK(Gf2Poly::from_coeffs("0").is_zero());
    CHECK(Gf2Poly::zero().to_coeff_string() == "0");
    CHECK(Gf2Poly::from_coeffs("011").degree() == 2);
    CHECK(Gf2Poly::from_powers({0, 1, 3}).to_coeff_string() == "1101");
}

TEST_CASE("zero polynomial has the sentinel degree") {
    CHECK(Gf2Poly::zero().degree() == Gf2Poly::kZeroDegree);
    CHECK(Gf2Poly::kZeroDegree != 0);
    CHECK(Gf2Poly::one().degree() == 0);
}

TEST_CASE("mul mod x^n-1") {
    const Gf2Poly one_x = Gf2Poly::from_coeffs("11");  // 1+x
    // char-2 squaring: (1+x)^2 = 1+x^2 mod x^3-1
    CHECK(poly_mul_mod(one_x, one_x, 3) == Gf2Poly::from_coeffs("101"));
    // exponent wrap: x^2 * x^2 = x^4 = x mod x^3-1
    CHECK(poly_mul_mod(Gf2Poly::monomial(2), Gf2Poly::monomial(2), 3) == Gf2Poly::monomial(1));
    // the two factors of x^7+1 multiply to zero in the ring
    const Gf2Poly a = Gf2Poly::from_powers({0, 1, 3});
    const Gf2Poly b = Gf2Poly::from_powers({0, 1, 2, 4});
    CHECK(a * b == Gf2Poly::xn_minus_one(7));
    CHECK(poly_mul_mod(a, b, 7).is_zero());
    CHECK_THROWS_AS(poly_mul_mod(a, b, 0), Error);
}

TEST_CASE("mul mod properties on random samples") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + int(rng() % 40);
        const Gf2Poly a = random_poly(rng, n - 1), b = random_poly(rng, n - 1),
                      c = random_poly(rng, n - 1);
        CHECK(poly_mul_mod(a, b, n) == poly_mul_mod(b, a, n));
        CHECK(poly_mul_mod(poly_mul_mod(a, b, n), c, n) ==
              poly_mul_mod(a, poly_mul_mod(b, c, n), n));
        CHECK(poly_mul_mod(a, Gf2Poly::one(), n) == a);
    }
}

TEST_CASE("divrem") {
    const auto [q1, r1] = poly_divrem(Gf2Poly::from_powers({0, 3}), Gf2Poly::from_coeffs("11"));
    CHECK(q1 == Gf2Poly::from_coeffs("111"));
    CHECK(r1.is_zero());

    const auto [q2, r2] = poly_divrem(Gf2Poly::from_coeffs("11"), Gf2Poly::from_powers({0, 3}));
    CHECK(q2.is_zero());
    CHECK(r2 == Gf2Poly::from_coeffs("11"));

    // x^5+x+1 = (x^2+x+1)(x^3+x^2+1), remainder-free
    const auto [q3, r3] =
        poly_divrem(Gf2Poly::from_powers({0, 1, 5}), Gf2Poly::from_powers({0, 1, 2}));
    CHECK(r3.is_zero());
    CHECK(q3 == Gf2Poly::from_powers({0, 2, 3}));
    CHECK(q3 * Gf2Poly::from_powers({0, 1, 2}) == Gf2Poly::from_powers({0, 1, 5}));

    CHECK_THROWS_AS(poly_divrem(q3, Gf2Poly::zero()), Error);
}

TEST_CASE("divrem reconstruction on random pairs") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        const Gf2Poly a = random_poly(rng, int(rng() % 50));
        Gf2Poly b = random_poly(rng, int(rng() % 20));
        if (b.is_zero()) b = Gf2Poly::one();
        const auto [q, r] = poly_divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd") {
    // x^2+1 = (x+1)^2 in characteristic 2
    CHECK(poly_gcd(Gf2Poly::from_coeffs("101"), Gf2Poly::from_coeffs("11")) ==
          Gf2Poly::from_coeffs("11"));
    // distinct irreducibles
    CHECK(poly_gcd(Gf2Poly::from_powers({0, 1, 3}), Gf2Poly::from_powers({0, 2, 3})).is_one());
    const Gf2Poly p = Gf2Poly::from_powers({0, 4, 7});
    CHECK(poly_gcd(p, Gf2Poly::zero()) == p);
    CHECK_THROWS_AS(poly_gcd(Gf2Poly::zero(), Gf2Poly::zero()), Error);
}

TEST_CASE("reciprocal") {
    CHECK(poly_reciprocal(Gf2Poly::from_coeffs("11")) == Gf2Poly::from_coeffs("11"));
    CHECK(poly_reciprocal(Gf2Poly::from_powers({0, 1, 3})) == Gf2Poly::from_powers({0, 2, 3}));
    // support {0,1,2,3,5,6,7} reversed under d -> 7-d
    CHECK(poly_reciprocal(Gf2Poly::from_powers({0, 1, 2, 3, 5, 6, 7})) ==
          Gf2Poly::from_powers({0, 1, 2, 4, 5, 6, 7}));
    CHECK_THROWS_AS(poly_reciprocal(Gf2Poly::zero()), Error);
}

TEST_CASE("reciprocal is an involution for nonzero constant term") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        Gf2Poly p = random_poly(rng, int(rng() % 40));
        p = p + Gf2Poly::one() + (p.coeff(0) ? Gf2Poly::one() : Gf2Poly::zero());
        if (!p.coeff(0)) p = p + Gf2Poly::one();
        CHECK(poly_reciprocal(poly_reciprocal(p)) == p);
    }
}

TEST_CASE("ring conjugate") {
    CHECK(ring_conjugate(Gf2Poly::monomial(1), 7) == Gf2Poly::monomial(6));
    CHECK(ring_conjugate(Gf2Poly::one(), 11) == Gf2Poly::one());
    CHECK(ring_conjugate(Gf2Poly::from_powers({1, 2}), 7) == Gf2Poly::from_powers({5, 6}));
    CHECK_THROWS_AS(ring_conjugate(Gf2Poly::monomial(7), 7), Error);

    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
        const int n = 2 + int(rng() % 30);
        const Gf2Poly f = random_poly(rng, n - 1);
        CHECK(ring_conjugate(ring_conjugate(f, n), n) == f);
    }
}

TEST_CASE("cyclotomic quotient") {
    CHECK(cyclotomic_quotient(Gf2Poly::from_powers({0, 1, 3}), 7) ==
          Gf2Poly::from_powers({0, 1, 2, 4}));
    CHECK(cyclotomic_quotient(Gf2Poly::one(), 5) == Gf2Poly::xn_minus_one(5));
    CHECK_THROWS_AS(cyclotomic_quotient(Gf2Poly::from_coeffs("101"), 7), Error);

    std::mt19937_64 rng(19);
    for (int it = 0; it < 100; ++it) {
        const int n = 2 + int(rng() % 30);
        Gf2Poly g = poly_gcd(Gf2Poly::xn_minus_one(n), random_poly(rng, n - 1));
        if (g.is_zero()) g = Gf2Poly::one();
        const Gf2Poly h = cyclotomic_quotient(g, n);
        CHECK(poly_mul_mod(g, h, n).is_zero());
        CHECK(g * h == Gf2Poly::xn_minus_one(n));
    }
}

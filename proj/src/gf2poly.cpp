#include "qcadd/gf2poly.hpp"

#include <algorithm>
#include <bit>

#include "qcadd/errors.hpp"

namespace qcadd {

void Gf2Poly::ensure_words(std::size_t nbits) {
    const std::size_t need = (nbits + 63) / 64;
    if (w_.size() < need) w_.resize(need, 0);
}

void Gf2Poly::recompute_degree() {
    for (std::size_t k = w_.size(); k-- > 0;) {
        if (w_[k]) {
            degree_ = int(k * 64 + 63 - std::countl_zero(w_[k]));
            w_.resize(k + 1);
            return;
        }
    }
    degree_ = kZeroDegree;
    w_.clear();
}

Gf2Poly Gf2Poly::monomial(int d) {
    Gf2Poly p;
    p.ensure_words(std::size_t(d) + 1);
    p.w_[d >> 6] |= std::uint64_t(1) << (d & 63);
    p.degree_ = d;
    return p;
}

Gf2Poly Gf2Poly::from_coeffs(std::string_view s01) {
    Gf2Poly p;
    p.ensure_words(s01.size());
    for (std::size_t i = 0; i < s01.size(); ++i) {
        const char c = s01[i];
        if (c == '1')
            p.w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else if (c != '0')
            fail("invalid-input", "coefficient string may contain only 0/1");
    }
    p.recompute_degree();
    return p;
}

Gf2Poly Gf2Poly::from_powers(std::span<const int> powers) {
    Gf2Poly p;
    for (int d : powers) {
        if (d < 0) fail("invalid-input", "negative exponent");
        p.ensure_words(std::size_t(d) + 1);
        p.w_[d >> 6] ^= std::uint64_t(1) << (d & 63);
    }
    p.recompute_degree();
    return p;
}

Gf2Poly Gf2Poly::from_powers(std::initializer_list<int> powers) {
    return from_powers(std::span<const int>(powers.begin(), powers.size()));
}

Gf2Poly Gf2Poly::xn_minus_one(int n) {
    if (n < 1) fail("invalid-modulus", "modulus exponent must be positive");
    Gf2Poly p = monomial(n);
    p.w_[0] ^= 1;
    return p;
}

bool Gf2Poly::coeff(int i) const noexcept {
    if (i < 0 || std::size_t(i >> 6) >= w_.size()) return false;
    return (w_[i >> 6] >> (i & 63)) & 1u;
}

int Gf2Poly::weight() const noexcept {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::string Gf2Poly::to_coeff_string() const {
    if (is_zero()) return "0";
    std::string s(std::size_t(degree_) + 1, '0');
    for (int i = 0; i <= degree_; ++i)
        if (coeff(i)) s[std::size_t(i)] = '1';
    return s;
}

std::string Gf2Poly::to_power_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d : powers()) {
        if (!s.empty()) s += "+";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += "x";
        else
            s += "x^" + std::to_string(d);
    }
    return s;
}

std::vector<int> Gf2Poly::powers() const {
    std::vector<int> out;
    for (int i = 0; i <= degree_; ++i)
        if (coeff(i)) out.push_back(i);
    return out;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r = *this;
    r.ensure_words(std::size_t(std::max(degree_, o.degree_)) + 1);
    for (std::size_t k = 0; k < o.w_.size(); ++k) r.w_[k] ^= o.w_[k];
    r.recompute_degree();
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return Gf2Poly();
    Gf2Poly r;
    r.ensure_words(std::size_t(degree_) + std::size_t(o.degree_) + 1);
    for (int i = 0; i <= degree_; ++i) {
        if (!coeff(i)) continue;
        // xor o shifted left by i into r
        const int ws = i >> 6, bs = i & 63;
        for (std::size_t k = 0; k < o.w_.size(); ++k) {
            r.w_[k + ws] ^= o.w_[k] << bs;
            if (bs && k + ws + 1 < r.w_.size()) r.w_[k + ws + 1] ^= o.w_[k] >> (64 - bs);
        }
    }
    r.recompute_degree();
    return r;
}

Gf2Poly Gf2Poly::shifted(int k) const {
    if (is_zero()) return Gf2Poly();
    Gf2Poly r;
    r.ensure_words(std::size_t(degree_) + std::size_t(k) + 1);
    for (int i = 0; i <= degree_; ++i)
        if (coeff(i)) r.w_[(i + k) >> 6] ^= std::uint64_t(1) << ((i + k) & 63);
    r.recompute_degree();
    return r;
}

Gf2Poly poly_mul_mod(const Gf2Poly& a, const Gf2Poly& b, int n) {
    if (n < 1) fail("invalid-modulus", "quotient ring needs n >= 1");
    Gf2Poly prod = a * b;
    if (prod.degree() < n) return prod;
    // fold exponents mod n
    Gf2Poly r;
    for (int d : prod.powers()) {
        Gf2Poly term = Gf2Poly::monomial(d % n);
        r = r + term;
    }
    return r;
}

std::pair<Gf2Poly, Gf2Poly> poly_divrem(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) fail("division-by-zero", "polynomial division by zero");
    Gf2Poly q, r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        q = q + Gf2Poly::monomial(shift);
        r = r + b.shifted(shift);
    }
    return {q, r};
}

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero()) fail("undefined-gcd", "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_divides(const Gf2Poly& d, const Gf2Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_divrem(a, d).second.is_zero();
}

Gf2Poly poly_reciprocal(const Gf2Poly& p) {
    if (p.is_zero()) fail("invalid-input", "reciprocal of the zero polynomial");
    std::vector<int> rev;
    for (int d : p.powers()) rev.push_back(p.degree() - d);
    return Gf2Poly::from_powers(rev);
}

Gf2Poly ring_conjugate(const Gf2Poly& f, int n) {
    if (n < 1) fail("invalid-modulus", "quotient ring needs n >= 1");
    if (f.degree() >= n) fail("invalid-input", "conjugate input must have degree < n");
    std::vector<int> mapped;
    for (int d : f.powers()) mapped.push_back((n - d) % n);
    return Gf2Poly::from_powers(mapped);
}

Gf2Poly cyclotomic_quotient(const Gf2Poly& g, int n) {
    if (n < 1) fail("invalid-modulus", "quotient ring needs n >= 1");
    if (g.is_zero()) fail("not-a-generator", "zero polynomial generates nothing");
    auto [q, r] = poly_divrem(Gf2Poly::xn_minus_one(n), g);
    if (!r.is_zero())
        fail("not-a-generator",
             g.to_power_string() + " does not divide x^" + std::to_string(n) + "-1");
    return q;
}

}  // namespace qcadd

#ifndef QCADD_GF2POLY_HPP
#define QCADD_GF2POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcadd {

/// Polynomial over GF(2), coefficient of x^i stored as bit i.
///
/// The zero polynomial has the distinguished degree Gf2Poly::kZeroDegree so
/// divisibility checks can never confuse it with a nonzero constant.
class Gf2Poly {
   public:
    static constexpr int kZeroDegree = -1;

    Gf2Poly() = default;

    static Gf2Poly zero() { return Gf2Poly(); }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly monomial(int d);
    /// Ascending 0/1 coefficient string, "1101" = 1 + x + x^3.
    static Gf2Poly from_coeffs(std::string_view s01);
    static Gf2Poly from_powers(std::span<const int> powers);
    static Gf2Poly from_powers(std::initializer_list<int> powers);
    static Gf2Poly xn_minus_one(int n);

    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return degree_ == kZeroDegree; }
    bool is_one() const noexcept { return degree_ == 0; }
    bool coeff(int i) const noexcept;
    int weight() const noexcept;

    std::string to_coeff_string() const;  // ascending, "0" for the zero polynomial
    std::string to_power_string() const;  // "1+x^2+x^3"
    std::vector<int> powers() const;

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly operator*(const Gf2Poly& o) const;
    bool operator==(const Gf2Poly&) const = default;

    /// Multiply by x^k.
    Gf2Poly shifted(int k) const;

   private:
    std::vector<std::uint64_t> w_;
    int degree_ = kZeroDegree;

    void recompute_degree();
    void ensure_words(std::size_t nbits);
    friend std::pair<Gf2Poly, Gf2Poly> poly_divrem(const Gf2Poly&, const Gf2Poly&);
};

/// a * b reduced modulo x^n - 1.
Gf2Poly poly_mul_mod(const Gf2Poly& a, const Gf2Poly& b, int n);
/// Quotient and remainder of a by b; throws "division-by-zero" for b = 0.
std::pair<Gf2Poly, Gf2Poly> poly_divrem(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b);
bool poly_divides(const Gf2Poly& d, const Gf2Poly& a);
/// x^deg(p) * p(1/x): coefficient reversal.
Gf2Poly poly_reciprocal(const Gf2Poly& p);
/// f(x^{n-1}) in GF(2)[x]/(x^n - 1): coefficient of x^i moves to x^{(n-i) mod n}.
Gf2Poly ring_conjugate(const Gf2Poly& f, int n);
/// (x^n - 1)/g, or "not-a-generator" when g does not divide x^n - 1.
Gf2Poly cyclotomic_quotient(const Gf2Poly& g, int n);

}  // namespace qcadd

#endif

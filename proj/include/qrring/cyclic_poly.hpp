#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qrring/prime_field.hpp"

namespace qrring {

/// Dense polynomial in F_p[x]; coefficient i multiplies x^i, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(PrimeField field, std::vector<FieldElem> coeffs);

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    FieldElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    FieldElem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

    Poly monic() const;
    FieldElem eval(FieldElem a) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

private:
    void trim();

    PrimeField field_;
    std::vector<FieldElem> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// x^n - 1 over the field.
Poly x_pow_minus_one(const PrimeField& field, std::size_t n);
/// Coefficient-reversed polynomial, normalized monic. Throws ZeroConstantTerm if h(0) = 0.
Poly reciprocal(const Poly& h);

/// Element of F_p[x]/(x^q - 1), stored as exactly q coefficients.
class CyclicPoly {
public:
    CyclicPoly() = default;
    CyclicPoly(PrimeField field, std::vector<FieldElem> coeffs);

    static CyclicPoly zero(const PrimeField& field, std::size_t q);
    static CyclicPoly constant(const PrimeField& field, std::size_t q, FieldElem c);
    static CyclicPoly monomial(const PrimeField& field, std::size_t q, std::size_t power, FieldElem c = 1);
    /// Reduces an ordinary polynomial modulo x^q - 1.
    static CyclicPoly from_poly(const Poly& f, std::size_t q);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t q() const noexcept { return c_.size(); }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    FieldElem operator[](std::size_t i) const noexcept { return c_[i]; }

    CyclicPoly scaled(FieldElem s) const;
    FieldElem eval(FieldElem a) const;
    /// f(x^{-1}): coefficient i moves to (q - i) mod q.
    CyclicPoly reversed() const;
    /// x^k * f.
    CyclicPoly shifted(std::size_t k) const;
    Poly to_poly() const;
    bool is_zero() const noexcept;

    friend bool operator==(const CyclicPoly& a, const CyclicPoly& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

private:
    PrimeField field_;
    std::vector<FieldElem> c_;
};

/// All three throw MixedContext when (p, q) differ.
CyclicPoly operator+(const CyclicPoly& a, const CyclicPoly& b);
CyclicPoly operator-(const CyclicPoly& a, const CyclicPoly& b);
CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b);

bool is_idempotent(const CyclicPoly& f);

/// Idempotent of the dual code, 1 - E(x^{-1}).
CyclicPoly dual_idempotent(const CyclicPoly& e);

/// Idempotents of the intersection and the sum of <E1> and <E2>.
std::pair<CyclicPoly, CyclicPoly> intersect_sum_idempotents(const CyclicPoly& e1, const CyclicPoly& e2);

/// Monic generator gcd(E, x^q - 1) of the cyclic code <E>. The zero idempotent maps to x^q - 1.
Poly idempotent_to_generator(const CyclicPoly& e);

/// mu_n: coefficient at i moves to n*i mod q. Throws NotCoprime unless gcd(n, q) = 1.
CyclicPoly multiplier(const CyclicPoly& f, std::int64_t n);

/// Rows x^j g(x), 0 <= j < q - deg g, as length-q coefficient vectors.
std::vector<std::vector<FieldElem>> generator_shifts(const Poly& g, std::size_t q);

}  // namespace qrring

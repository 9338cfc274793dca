#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qrring/cyclic_poly.hpp"
#include "qrring/prime_field.hpp"

namespace qrring {

/// a_0 + a_1 u + ... + a_{m-1} u^{m-1}, tagged with the (p, m) of its ring.
struct RingElem {
    std::uint32_t p = 0;
    int m = 0;
    std::vector<FieldElem> coeffs;

    friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// A polynomial in R[x]/(x^q - 1): q ring coefficients.
using RingPoly = std::vector<RingElem>;

/// R = F_p[u]/(u^m - u), p = 1 (mod m-1), split by the orthogonal idempotents eta_1..eta_m.
///
/// eta_1 = 1 - u^{m-1} and eta_j (j >= 2) is the indicator of the evaluation point
/// returned by `slot_point(j)`: 0 for j = 1, 1 for j = 2 and xi^{-(j-2)} for j >= 3.
class ResidueRing {
public:
    const PrimeField& field() const noexcept { return field_; }
    std::uint32_t p() const noexcept { return field_.p(); }
    int m() const noexcept { return m_; }
    /// alpha^{(p-1)/(m-1)}; equals 1 when m = 2.
    FieldElem xi() const noexcept { return xi_; }
    /// 1-based.
    const RingElem& eta(int i) const { return etas_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<RingElem>& etas() const noexcept { return etas_; }
    /// Point of F_p at which eta_i evaluates to 1 (1-based).
    FieldElem slot_point(int i) const { return slot_points_.at(static_cast<std::size_t>(i - 1)); }

    RingElem zero() const;
    RingElem one() const;
    RingElem constant(FieldElem c) const;
    /// u^k reduced with u^m = u.
    RingElem u_pow(int k) const;
    /// Throws DimensionMismatch unless exactly m coefficients are given.
    RingElem element(std::vector<FieldElem> coeffs) const;

    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;
    RingElem scale(const RingElem& a, FieldElem s) const;
    /// a(point) in F_p.
    FieldElem eval(const RingElem& a, FieldElem point) const;

    /// (x_1..x_m) with a = sum eta_i x_i.
    std::vector<FieldElem> crt_split(const RingElem& a) const;
    RingElem crt_join(const std::vector<FieldElem>& slots) const;

    // R[x]/(x^q - 1)
    RingPoly poly_add(const RingPoly& a, const RingPoly& b) const;
    RingPoly poly_sub(const RingPoly& a, const RingPoly& b) const;
    RingPoly poly_mul(const RingPoly& a, const RingPoly& b) const;
    /// Embeds f in F_p[x] as a constant-coefficient ring polynomial.
    RingPoly lift(const CyclicPoly& f) const;
    /// sum_i eta_i f_i.
    RingPoly join_components(const std::vector<CyclicPoly>& components) const;
    std::vector<CyclicPoly> split_components(const RingPoly& f) const;

    /// Euclidean inner product over R.
    RingElem dot(const std::vector<RingElem>& a, const std::vector<RingElem>& b) const;

    bool owns(const RingElem& a) const noexcept {
        return a.p == field_.p() && a.m == m_ && a.coeffs.size() == static_cast<std::size_t>(m_);
    }
    void require_owns(const RingElem& a) const;

    friend bool operator==(const ResidueRing& a, const ResidueRing& b) { return a.p() == b.p() && a.m_ == b.m_; }

private:
    friend ResidueRing make_ring(std::int64_t p, int m);

    PrimeField field_;
    int m_ = 0;
    FieldElem xi_ = 0;
    std::vector<RingElem> etas_;
    std::vector<FieldElem> slot_points_;
};

/// Throws CongruenceViolation if p != 1 (mod m-1); prime-field errors for bad p.
ResidueRing make_ring(std::int64_t p, int m);

}  // namespace qrring

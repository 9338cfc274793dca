#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qrring/fp_matrix.hpp"
#include "qrring/residue_ring.hpp"

namespace qrring {

/// Phi: R^n -> F_p^{mn}, r |-> (r(0), r(1), r(xi), ..., r(xi^{m-2})) V applied per coordinate.
class GrayMap {
public:
    const ResidueRing& ring() const noexcept { return ring_; }
    /// Row j, column k: u^j evaluated at the k-th point (0, 1, xi, ..., xi^{m-2}).
    const FpMatrix& M() const noexcept { return M_; }
    const FpMatrix& V() const noexcept { return V_; }
    const FpMatrix& MV() const noexcept { return MV_; }
    /// lambda with V V^T = lambda I, when V has that shape.
    std::optional<FieldElem> lambda() const noexcept { return lambda_; }
    /// The m evaluation points in column order of M.
    const std::vector<FieldElem>& points() const noexcept { return points_; }

    FpRow phi(const RingElem& r) const;
    FpRow phi(const std::vector<RingElem>& v) const;
    /// Same map computed as evaluations times V.
    FpRow phi_by_evaluation(const std::vector<RingElem>& v) const;
    /// Throws BadLength unless w.size() is a multiple of m.
    std::vector<RingElem> phi_inverse(const FpRow& w) const;
    std::size_t gray_weight(const std::vector<RingElem>& v) const;
    std::size_t gray_distance(const std::vector<RingElem>& a, const std::vector<RingElem>& b) const;

private:
    friend GrayMap build_gray(const ResidueRing& ring, const FpMatrix& V);

    ResidueRing ring_;
    FpMatrix M_;
    FpMatrix V_;
    FpMatrix MV_;
    FpMatrix MV_inv_;
    std::optional<FieldElem> lambda_;
    std::vector<FieldElem> points_;
};

/// Evaluation matrix M for the ring's xi.
FpMatrix gray_evaluation_matrix(const ResidueRing& ring);

/// lambda if V V^T = lambda I with lambda != 0 (every entry checked).
std::optional<FieldElem> orthogonality_scalar(const PrimeField& f, const FpMatrix& V);

/// Throws DimensionMismatch for a non m x m V and SingularV when det V = 0.
GrayMap build_gray(const ResidueRing& ring, const FpMatrix& V);
/// V = I_m.
GrayMap build_gray(const ResidueRing& ring);

}  // namespace qrring

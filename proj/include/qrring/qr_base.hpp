#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qrring/cyclic_poly.hpp"
#include "qrring/prime_field.hpp"

namespace qrring {

/// Quadratic residues and non-residues modulo an odd prime q, sorted.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> qr_sets(std::int64_t q);

/// Per-(p, q) data for quadratic residue codes of length q over F_p.
///
/// d1, d2 are the odd-like and e1, e2 the even-like idempotents. theta is the
/// smaller square root of -q (q = 3 mod 4) or q (q = 1 mod 4), so the (1, 2)
/// labels may be swapped relative to a labeling fixed by a root of unity.
struct QRContext {
    PrimeField field;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> residues;
    std::vector<std::uint32_t> nonresidues;
    CyclicPoly j1, j2, h;
    FieldElem theta = 0;
    CyclicPoly d1, d2, e1, e2;

    std::uint32_t p() const noexcept { return field.p(); }
    /// (1/q) h, the idempotent of the repetition code.
    CyclicPoly repetition_idempotent() const;
    bool q_is_3_mod_4() const noexcept { return q % 4 == 3; }
};

/// Throws NotQuadraticResidue unless p is a nonzero square mod q, NoSquareRoot if
/// theta does not exist in F_p.
QRContext make_qr_context(std::int64_t p, std::int64_t q);

/// The six identities relating d1, d2, e1, e2 and (1/q) h.
bool qr_identities_hold(const QRContext& ctx);

}  // namespace qrring

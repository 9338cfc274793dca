#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qrring/cyclic_poly.hpp"
#include "qrring/gray_map.hpp"
#include "qrring/linear_code.hpp"
#include "qrring/qr_base.hpp"
#include "qrring/residue_ring.hpp"

namespace qrring {

/// Sorted, 1-based indices into {1..m}.
using Subset = std::vector<int>;
using RingRow = std::vector<RingElem>;
using RingMatrix = std::vector<RingRow>;

/// Sorts and validates; throws EmptySubset or InvalidSubset.
Subset canonical_subset(Subset s, int m);
/// {1..m} minus s.
Subset complement(const Subset& s, int m);

/// D and D' are odd-like (d1/d2 per slot), E and E' even-like (e1/e2 per slot).
enum class IdempotentKind { D, DPrime, E, EPrime };
std::string to_string(IdempotentKind kind);

/// sum over slots i of eta_i * (d1 or d2 / e1 or e2), chosen by membership of i in the subset.
struct RingIdempotent {
    ResidueRing ring;
    QRContext qr;
    Subset subset;
    IdempotentKind kind = IdempotentKind::D;
    RingPoly poly;
    std::vector<CyclicPoly> components;
};

/// Throws EmptySubset/InvalidSubset, ContextMismatch when the ring and QR context use different p.
RingIdempotent build_idempotent(const ResidueRing& ring, const QRContext& qr, const Subset& subset, IdempotentKind kind);
bool is_ring_idempotent(const ResidueRing& ring, const RingPoly& f);
/// mu_n applied to each coefficient position of a ring polynomial.
RingPoly ring_multiplier(const RingPoly& f, std::int64_t n);

/// Cyclic code over R of length q, stored through its CRT components.
struct RingCyclicCode {
    ResidueRing ring;
    std::size_t length = 0;
    std::vector<CyclicPoly> component_idempotents;
    /// Monic g_i dividing x^q - 1, one per slot.
    std::vector<Poly> component_generators;
    /// eta_i x^j g_i for every slot i and 0 <= j < q - deg g_i.
    RingMatrix generator_rows;
    std::optional<RingIdempotent> source;

    /// log_p |C| = m q - sum deg g_i.
    std::size_t log_size() const;
    /// Cyclic code <g_i> over F_p (the zero code when g_i = x^q - 1).
    LinearCode component_code(int slot) const;
};

RingCyclicCode code_from_components(const ResidueRing& ring, const std::vector<CyclicPoly>& component_idempotents);
RingCyclicCode code_from_ring_idempotent(const ResidueRing& ring, const RingPoly& idempotent);
RingCyclicCode code_from_idempotent(const RingIdempotent& idempotent);
/// Q_S, Q'_S, S_S, S'_S for kinds D, D', E, E'.
RingCyclicCode qr_code(const ResidueRing& ring, const QRContext& qr, const Subset& subset, IdempotentKind kind);

/// Rows with the same F_p-span as the R-span of `rows`: every eta_i * row, zero rows dropped.
RingMatrix fp_spanning_rows(const ResidueRing& ring, const RingMatrix& rows);
/// log_p of the size of the R-span of `rows`, from the coefficient embedding R -> F_p^m.
std::size_t ring_span_log_size(const ResidueRing& ring, const RingMatrix& rows);
/// True iff every row of `a` is orthogonal over R to every row of `b`.
bool rows_orthogonal(const ResidueRing& ring, const RingMatrix& a, const RingMatrix& b);
/// Gray image of the code spanned over R by `rows`.
LinearCode gray_image(const GrayMap& gray, const RingMatrix& rows);

enum class ExtensionVariant {
    /// q = 3 mod 4: bottom row (r, 1, ..., 1) with r^2 = -q, over S_S.
    Q3,
    /// q = 1 mod 4: bottom row (1, 1, ..., 1) over S_S.
    Q1Plain,
    /// q = 1 mod 4: bottom row (-q, 1, ..., 1) over S'_S.
    Q1Primed,
};
std::string to_string(ExtensionVariant v);
ExtensionVariant default_extension(const QRContext& qr);

struct ExtendedCode {
    RingCyclicCode base;
    ExtensionVariant variant = ExtensionVariant::Q3;
    FieldElem scalar = 0;
    /// Position of the infinity coordinate: 0, or q when moved last.
    std::size_t infinity_column = 0;
    RingMatrix generator_rows;

    std::size_t length() const noexcept { return base.length + 1; }
    std::size_t log_size() const;
};

/// Throws WrongResidueClass, NoExtensionScalar, or ContextMismatch when the base
/// is not the even-like code the variant needs (E for Q3/Q1Plain, E' for Q1Primed).
ExtendedCode extend_code(const RingCyclicCode& even_code, ExtensionVariant variant, bool infinity_last = false);
ExtendedCode extended_qr_code(const ResidueRing& ring, const QRContext& qr, const Subset& subset,
                              ExtensionVariant variant, bool infinity_last = false);

struct CheckResult {
    std::string name;
    bool passed = false;
};

struct CheckReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Intersection/sum identities of the subset-indexed idempotents. Throws SubsetTooLarge for |S| > m/2.
CheckReport subset_identity_suite(const ResidueRing& ring, const QRContext& qr, const Subset& subset);

struct EquivalenceClasses {
    std::size_t count = 0;
    /// Smallest subset of each class (by size, then lexicographically), kind D.
    std::vector<Subset> representatives;
};

/// Groups all odd-like codes Q_S, Q'_S (S nonempty, proper) under Q'_S ~ Q_S and Q'_S = Q_{A-S}.
EquivalenceClasses equivalence_classes(int m);

/// Component-wise dual relations, self-orthogonality and extended-code duality for one subset.
CheckReport duality_checks(const ResidueRing& ring, const QRContext& qr, const Subset& subset);

}  // namespace qrring

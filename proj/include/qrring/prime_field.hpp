#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace qrring {

using FieldElem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Legendre symbol (a/q) for an odd prime q, by Euler's criterion.
int legendre(std::int64_t a, std::uint32_t q);

/// The prime field F_p (odd p < 2^31) with its smallest primitive root.
class PrimeField {
public:
    PrimeField() = default;

    std::uint32_t p() const noexcept { return p_; }
    FieldElem alpha() const noexcept { return alpha_; }

    FieldElem reduce(std::int64_t a) const noexcept {
        auto r = a % static_cast<std::int64_t>(p_);
        return static_cast<FieldElem>(r < 0 ? r + p_ : r);
    }

    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    FieldElem neg(FieldElem a) const noexcept { return a == 0 ? 0 : p_ - a; }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        return static_cast<FieldElem>(static_cast<std::uint64_t>(a) * b % p_);
    }
    FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    /// Multiplicative order of a nonzero element.
    std::uint32_t order(FieldElem a) const;

    /// Both square roots {r, p - r} with r <= p - r, or nothing for a non-residue.
    /// sqrt(0) is {0, 0}.
    std::optional<std::pair<FieldElem, FieldElem>> sqrt(FieldElem a) const;

    bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

private:
    friend PrimeField make_field(std::int64_t p);

    std::uint32_t p_ = 0;
    FieldElem alpha_ = 0;
};

/// Throws NotPrime for composite (or < 2) input and EvenPrime for p = 2.
PrimeField make_field(std::int64_t p);

}  // namespace qrring

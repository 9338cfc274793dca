#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrring/fp_matrix.hpp"
#include "qrring/prime_field.hpp"

namespace qrring {

/// Linear [n, k] code over F_p held as its RREF generator matrix, so equal
/// codes compare equal. The zero code (k = 0) only arises as a dual.
class LinearCode {
public:
    const PrimeField& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return G_.size(); }
    const FpMatrix& G() const noexcept { return G_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Row-space membership.
    bool contains(const FpRow& v) const;
    /// Codeword m G for a message of length k.
    FpRow encode(const FpRow& message) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.G_ == b.G_;
    }

private:
    friend LinearCode make_code(const PrimeField& f, std::size_t n, FpMatrix rows);

    PrimeField field_;
    std::size_t n_ = 0;
    FpMatrix G_;
    std::vector<std::size_t> pivots_;
};

/// Row space of `rows` (possibly the zero code).
LinearCode make_code(const PrimeField& f, std::size_t n, FpMatrix rows);
/// Throws EmptyCode when every row is zero, DimensionMismatch on ragged rows.
LinearCode from_rows(const FpMatrix& rows, std::int64_t p);
LinearCode from_rows(const FpMatrix& rows, const PrimeField& f);

LinearCode dual(const LinearCode& c);
/// Coordinate i moves to position perm[i]. Throws BadPermutation.
LinearCode permute_coordinates(const LinearCode& c, const std::vector<std::size_t>& perm);

bool is_self_orthogonal(const LinearCode& c);

/// p^k when it is at most `cap`, nothing otherwise.
std::optional<std::uint64_t> code_size_capped(const LinearCode& c, std::uint64_t cap);

struct Budget {
    double seconds = 600.0;
    /// Exhaustive enumeration is used when p^k is at most this.
    std::uint64_t exhaustive_threshold = std::uint64_t{1} << 24;
    std::uint64_t seed = 0x5eedULL;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

enum class DistanceMethod { Exhaustive, InfoSet, WitnessOnly };
std::string to_string(DistanceMethod method);

struct MinDistanceResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool exact = false;
    DistanceMethod method = DistanceMethod::WitnessOnly;
    FpRow witness;
    /// Information sets used (info-set method only).
    std::size_t info_sets = 0;
};

/// Exhaustive when p^k fits the budget threshold, information-set search otherwise.
/// A budget overrun returns the partial bounds with exact = false. Throws EmptyCode for k = 0.
MinDistanceResult min_distance(const LinearCode& c, const Budget& budget = {});
MinDistanceResult min_distance_exhaustive(const LinearCode& c, unsigned threads = 0);
MinDistanceResult min_distance_info_set(const LinearCode& c, const Budget& budget = {});

/// A_0..A_n. Throws TooLarge when p^k exceeds the threshold.
std::vector<std::uint64_t> weight_enumerator(const LinearCode& c,
                                             std::uint64_t threshold = std::uint64_t{1} << 24,
                                             unsigned threads = 0);

struct DualityReport {
    bool self_orthogonal = false;
    bool self_dual = false;
    bool dual_containing = false;
    /// Nothing when the weight enumerators were too large to compute.
    std::optional<bool> formally_self_dual;

    /// self-dual, self-orthogonal, dual-containing, formally-self-dual or none.
    std::string label() const;
    /// "true", "false" or "unknown (budget)".
    std::string formal_status() const;
};

DualityReport classify_duality(const LinearCode& c, std::uint64_t threshold = std::uint64_t{1} << 24,
                               unsigned threads = 0);

}  // namespace qrring

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qrring/prime_field.hpp"

namespace qrring {

using FpRow = std::vector<FieldElem>;
using FpMatrix = std::vector<FpRow>;

/// Reduces `a` in place to reduced row echelon form, drops zero rows, and
/// returns the pivot column of each remaining row. Columns are scanned in
/// `column_order` when given (pivots then come out in that order).
std::vector<std::size_t> rref_in_place(const PrimeField& f, FpMatrix& a,
                                       const std::vector<std::size_t>* column_order = nullptr);

std::size_t rank(const PrimeField& f, FpMatrix a);
FieldElem determinant(const PrimeField& f, FpMatrix a);
/// Nothing for a singular matrix.
std::optional<FpMatrix> inverse(const PrimeField& f, const FpMatrix& a);

FpMatrix multiply(const PrimeField& f, const FpMatrix& a, const FpMatrix& b);
FpMatrix transpose(const FpMatrix& a);
FpMatrix identity(std::size_t n);
/// Row vector times matrix.
FpRow vec_mat(const PrimeField& f, const FpRow& v, const FpMatrix& a);
FieldElem dot(const PrimeField& f, const FpRow& a, const FpRow& b);
std::size_t hamming_weight(const FpRow& v);
bool is_zero_matrix(const FpMatrix& a);

}  // namespace qrring

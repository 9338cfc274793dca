#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qrring {

using BigInt = boost::multiprecision::cpp_int;

/// Weight distribution of the dual of a length-n code over F_p with
/// distribution `a`: B_j = |C|^{-1} sum_i A_i K_j(i), K_j the Krawtchouk
/// polynomials. Throws InternalInvariant if a B_j is not a non-negative integer.
std::vector<BigInt> macwilliams_transform(const std::vector<std::uint64_t>& a, std::uint32_t p);

}  // namespace qrring

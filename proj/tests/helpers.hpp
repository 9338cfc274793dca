#pragma once

#include <random>
#include <vector>

#include <doctest.h>

#include "qrring/error.hpp"

/// Checks that `expr` throws qrring::Error of the given kind.
#define CHECK_THROWS_KIND(expr, expected_kind)                                  \
    do {                                                                        \
        bool thrown_ = false;                                                   \
        try {                                                                   \
            (void)(expr);                                                       \
        } catch (const qrring::Error& e_) {                                     \
            thrown_ = true;                                                     \
            CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());             \
        }                                                                       \
        CHECK_MESSAGE(thrown_, "expected qrring::Error from " #expr);           \
    } while (0)

namespace testing_support {

template <class T>
bool same_pair(const T& a, const T& b, const T& x, const T& y) {
    return (a == x && b == y) || (a == y && b == x);
}

inline std::vector<std::uint32_t> random_vec(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace testing_support

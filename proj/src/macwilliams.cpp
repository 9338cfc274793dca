#include "qrring/macwilliams.hpp"

#include "qrring/error.hpp"

namespace qrring {

namespace {

BigInt binom(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    BigInt out = 1;
    for (std::size_t i = 0; i < r; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

}  // namespace

std::vector<BigInt> macwilliams_transform(const std::vector<std::uint64_t>& a, std::uint32_t p) {
    const std::size_t n = a.size() - 1;
    BigInt size = 0;
    for (auto x : a) size += x;

    std::vector<BigInt> pw(n + 1);
    pw[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) pw[i] = pw[i - 1] * (p - 1);

    std::vector<BigInt> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt total = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            BigInt kraw = 0;
            for (std::size_t s = 0; s <= j; ++s) {
                BigInt term = binom(i, s) * binom(n - i, j - s) * pw[j - s];
                if (s % 2) kraw -= term;
                else kraw += term;
            }
            total += kraw * a[i];
        }
        if (total < 0 || total % size != 0)
            throw Error(ErrorKind::InternalInvariant, "MacWilliams transform is not integral");
        out[j] = total / size;
    }
    return out;
}

}  // namespace qrring

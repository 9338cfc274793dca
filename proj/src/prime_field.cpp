#include "qrring/prime_field.hpp"

#include <string>
#include <vector>

#include "qrring/error.hpp"

namespace qrring {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

int legendre(std::int64_t a, std::uint32_t q) {
    auto r = a % static_cast<std::int64_t>(q);
    if (r < 0) r += q;
    if (r == 0) return 0;
    return pow_mod(static_cast<std::uint64_t>(r), (q - 1) / 2, q) == 1 ? 1 : -1;
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const noexcept {
    return static_cast<FieldElem>(pow_mod(a, e, p_));
}

FieldElem PrimeField::inv(FieldElem a) const {
    if (a % p_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p_));
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

std::uint32_t PrimeField::order(FieldElem a) const {
    if (a % p_ == 0) throw Error(ErrorKind::DivisionByZero, "order of 0");
    std::uint64_t ord = p_ - 1;
    for (auto f : prime_factors(p_ - 1)) {
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    }
    return static_cast<std::uint32_t>(ord);
}

std::optional<std::pair<FieldElem, FieldElem>> PrimeField::sqrt(FieldElem a) const {
    a %= p_;
    if (a == 0) return std::pair<FieldElem, FieldElem>{0, 0};
    if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;

    // Tonelli-Shanks: p - 1 = s * 2^e with s odd
    std::uint64_t s = p_ - 1;
    unsigned e = 0;
    while (s % 2 == 0) {
        s /= 2;
        ++e;
    }
    FieldElem z = 2;
    while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;

    FieldElem x = pow(a, (s + 1) / 2);
    FieldElem b = pow(a, s);
    FieldElem g = pow(z, s);
    unsigned r = e;
    while (b != 1) {
        unsigned t = 0;
        for (FieldElem bb = b; bb != 1; bb = mul(bb, bb)) ++t;
        FieldElem gs = g;
        for (unsigned i = 0; i + 1 < r - t; ++i) gs = mul(gs, gs);
        x = mul(x, gs);
        g = mul(gs, gs);
        b = mul(b, g);
        r = t;
    }
    FieldElem other = neg(x);
    if (other < x) std::swap(x, other);
    return std::pair<FieldElem, FieldElem>{x, other};
}

PrimeField make_field(std::int64_t p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorKind::EvenPrime, "p = 2 is not supported");
    if (p >= (std::int64_t{1} << 31)) throw Error(ErrorKind::InvalidParameter, "p must be below 2^31");

    PrimeField f;
    f.p_ = static_cast<std::uint32_t>(p);
    for (FieldElem g = 1; g < f.p_; ++g) {
        if (f.order(g) == f.p_ - 1) {
            f.alpha_ = g;
            break;
        }
    }
    return f;
}

}  // namespace qrring

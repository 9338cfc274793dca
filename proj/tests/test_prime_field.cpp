#include "helpers.hpp"
#include "oracles.hpp"
#include "qrring/prime_field.hpp"

using namespace qrring;

TEST_SUITE("prime_field") {

TEST_CASE("smallest primitive root is chosen") {
    CHECK(make_field(7).alpha() == 3);
    CHECK(make_field(5).alpha() == 2);
    for (std::uint32_t p = 3; p < 200; ++p) {
        if (!oracle::is_prime(p)) continue;
        const auto f = make_field(p);
        CHECK(f.p() == p);
        CHECK(f.alpha() == oracle::smallest_primitive_root(p));
        CHECK(oracle::order(f.alpha(), p) == p - 1);
    }
}

TEST_CASE("invalid moduli are rejected") {
    CHECK_THROWS_KIND(make_field(9), ErrorKind::NotPrime);
    CHECK_THROWS_KIND(make_field(1), ErrorKind::NotPrime);
    CHECK_THROWS_KIND(make_field(0), ErrorKind::NotPrime);
    CHECK_THROWS_KIND(make_field(-7), ErrorKind::NotPrime);
    CHECK_THROWS_KIND(make_field(2), ErrorKind::EvenPrime);
}

TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == oracle::is_prime(static_cast<std::int64_t>(n)));
}

TEST_CASE("inverses") {
    CHECK(make_field(7).inv(3) == 5);
    CHECK(make_field(13).inv(3) == 9);
    CHECK(make_field(11).inv(1) == 1);
    CHECK_THROWS_KIND(make_field(7).inv(0), ErrorKind::DivisionByZero);
    for (std::uint32_t p : {3u, 5u, 7u, 31u, 97u}) {
        const auto f = make_field(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.inv(f.inv(a)) == a);
            CHECK(f.inv(a) == oracle::inverse(a, p));
        }
    }
}

TEST_CASE("Fermat's little theorem for p < 100") {
    for (std::uint32_t p = 3; p < 100; ++p) {
        if (!oracle::is_prime(p)) continue;
        const auto f = make_field(p);
        for (std::uint32_t a = 1; a < p; ++a) CHECK(f.pow(a, p - 1) == 1);
    }
}

TEST_CASE("field operations match integer arithmetic") {
    const auto f = make_field(31);
    for (std::uint32_t a = 0; a < 31; ++a)
        for (std::uint32_t b = 0; b < 31; ++b) {
            CHECK(f.add(a, b) == (a + b) % 31);
            CHECK(f.sub(a, b) == (a + 31 - b) % 31);
            CHECK(f.mul(a, b) == a * b % 31);
        }
    CHECK(f.reduce(-1) == 30);
    CHECK(f.reduce(62) == 0);
    CHECK(f.neg(0) == 0);
}

TEST_CASE("Legendre symbol") {
    CHECK(legendre(5, 11) == 1);
    CHECK(legendre(2, 3) == -1);
    CHECK(legendre(22, 11) == 0);
    CHECK(legendre(-3, 7) == 1);
    for (std::uint32_t q = 3; q < 100; ++q) {
        if (!oracle::is_prime(q)) continue;
        const auto squares = oracle::nonzero_squares(q);
        for (std::int64_t a = -2 * static_cast<std::int64_t>(q); a < 2 * static_cast<std::int64_t>(q); ++a) {
            const auto r = static_cast<std::uint32_t>(((a % q) + q) % q);
            const int expected = r == 0 ? 0 : (squares.count(r) ? 1 : -1);
            CHECK(legendre(a, q) == expected);
        }
    }
}

TEST_CASE("square roots") {
    CHECK(make_field(7).sqrt(4) == std::optional<std::pair<FieldElem, FieldElem>>({2, 5}));
    CHECK_FALSE(make_field(5).sqrt(3).has_value());
    CHECK(make_field(13).sqrt(10) == std::optional<std::pair<FieldElem, FieldElem>>({6, 7}));
    CHECK(make_field(11).sqrt(0) == std::optional<std::pair<FieldElem, FieldElem>>({0, 0}));

    for (std::uint32_t p = 3; p < 200; ++p) {
        if (!oracle::is_prime(p)) continue;
        const auto f = make_field(p);
        std::uint32_t nonempty = 0;
        for (std::uint32_t a = 0; a < p; ++a) {
            const auto r = f.sqrt(a);
            const auto brute = oracle::all_sqrts(a, p);
            REQUIRE(r.has_value() == !brute.empty());
            if (!r) continue;
            ++nonempty;
            CHECK(r->first <= r->second);
            CHECK(f.mul(r->first, r->first) == a);
            CHECK(r->first == brute.front());
            CHECK(r->second == brute.back());
        }
        CHECK(nonempty == (p + 1) / 2);
    }
}

}  // TEST_SUITE

#include "helpers.hpp"
#include "oracles.hpp"
#include "qrring/residue_ring.hpp"

using namespace qrring;
using testing_support::random_vec;

namespace {

std::vector<std::pair<std::uint32_t, int>> valid_pairs(std::uint32_t max_p, int max_m) {
    std::vector<std::pair<std::uint32_t, int>> out;
    for (std::uint32_t p = 3; p < max_p; ++p) {
        if (!oracle::is_prime(p)) continue;
        for (int m = 2; m <= max_m; ++m)
            if ((p - 1) % static_cast<std::uint32_t>(m - 1) == 0) out.emplace_back(p, m);
    }
    return out;
}

}  // namespace

TEST_SUITE("residue_ring") {

TEST_CASE("ring for p = 7, m = 3") {
    const auto r = make_ring(7, 3);
    CHECK(r.xi() == 6);
    CHECK(r.eta(1).coeffs == std::vector<FieldElem>{1, 0, 6});
    CHECK(r.eta(2).coeffs == std::vector<FieldElem>{0, 4, 4});
    CHECK(r.eta(3).coeffs == std::vector<FieldElem>{0, 3, 4});
    CHECK(r.mul(r.eta(2), r.eta(3)) == r.zero());
    CHECK(r.add(r.eta(1), r.add(r.eta(2), r.eta(3))) == r.one());
    CHECK(r.mul(r.u_pow(1), r.u_pow(2)) == r.u_pow(1));
    CHECK(r.u_pow(3) == r.u_pow(1));
    CHECK(r.u_pow(0) == r.one());
}

TEST_CASE("m = 2 idempotents are 1 - u and u") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const auto r = make_ring(p, 2);
        CHECK(r.xi() == 1);
        CHECK(r.eta(1) == r.sub(r.one(), r.u_pow(1)));
        CHECK(r.eta(2) == r.u_pow(1));
        CHECK(r.crt_split(r.u_pow(1)) == std::vector<FieldElem>{0, 1});
    }
}

TEST_CASE("congruence condition") {
    CHECK_NOTHROW(make_ring(7, 4));
    CHECK_THROWS_KIND(make_ring(5, 4), ErrorKind::CongruenceViolation);
    CHECK_THROWS_KIND(make_ring(7, 5), ErrorKind::CongruenceViolation);
    CHECK_THROWS_KIND(make_ring(9, 3), ErrorKind::NotPrime);
    CHECK_THROWS_KIND(make_ring(2, 2), ErrorKind::EvenPrime);
    CHECK_THROWS_KIND(make_ring(7, 1), ErrorKind::InvalidParameter);
}

TEST_CASE("xi and the idempotent identities for p < 100, m <= 6") {
    for (auto [p, m] : valid_pairs(100, 6)) {
        const auto r = make_ring(p, m);
        const auto& f = r.field();
        CHECK(r.xi() == f.pow(f.alpha(), (p - 1) / static_cast<std::uint32_t>(m - 1)));
        CHECK(f.pow(r.xi(), static_cast<std::uint64_t>(m - 1)) == 1);
        if (m > 2) {
            CHECK(r.xi() != 1);
            FieldElem s = 0;
            for (int t = 0; t <= m - 2; ++t) s = f.add(s, f.pow(r.xi(), static_cast<std::uint64_t>(t)));
            CHECK(s == 0);
        }
        RingElem total = r.zero();
        for (int i = 1; i <= m; ++i) {
            CHECK(r.mul(r.eta(i), r.eta(i)) == r.eta(i));
            for (int j = i + 1; j <= m; ++j) CHECK(r.mul(r.eta(i), r.eta(j)) == r.zero());
            total = r.add(total, r.eta(i));
        }
        CHECK(total == r.one());
        // slot points are the m distinct evaluation points 0, 1, xi, ..., xi^{m-2} in some order
        std::vector<FieldElem> pts, expected{0};
        for (int i = 1; i <= m; ++i) pts.push_back(r.slot_point(i));
        for (int t = 0; t <= m - 2; ++t) expected.push_back(f.pow(r.xi(), static_cast<std::uint64_t>(t)));
        std::sort(pts.begin(), pts.end());
        std::sort(expected.begin(), expected.end());
        CHECK(pts == expected);
    }
}

TEST_CASE("multiplication agrees with naive reduction of u^m = u") {
    std::mt19937_64 rng(3);
    for (auto [p, m] : valid_pairs(40, 6)) {
        const auto r = make_ring(p, m);
        for (int t = 0; t < 20; ++t) {
            const auto a = random_vec(rng, static_cast<std::size_t>(m), p);
            const auto b = random_vec(rng, static_cast<std::size_t>(m), p);
            CHECK(r.mul(r.element(a), r.element(b)).coeffs == oracle::ring_mul(a, b, p));
        }
    }
}

TEST_CASE("CRT split and join") {
    const auto r = make_ring(7, 3);
    CHECK(r.crt_split(r.one()) == std::vector<FieldElem>{1, 1, 1});
    CHECK(r.crt_split(r.eta(2)) == std::vector<FieldElem>{0, 1, 0});
    CHECK(r.crt_join({0, 0, 0}) == r.zero());
    CHECK(r.crt_join({1, 1, 1}) == r.one());
    CHECK(r.crt_join({1, 0, 0}) == r.eta(1));
    CHECK(r.crt_join({1, 0, 0}).coeffs == std::vector<FieldElem>{1, 0, 6});  // 1 - u^2

    std::mt19937_64 rng(4);
    for (auto [p, m] : valid_pairs(60, 6)) {
        const auto ring = make_ring(p, m);
        for (int i = 1; i <= m; ++i) {
            std::vector<FieldElem> ind(static_cast<std::size_t>(m), 0);
            ind[static_cast<std::size_t>(i - 1)] = 1;
            CHECK(ring.crt_split(ring.eta(i)) == ind);
        }
        for (int t = 0; t < 20; ++t) {
            const auto a = ring.element(random_vec(rng, static_cast<std::size_t>(m), p));
            const auto b = ring.element(random_vec(rng, static_cast<std::size_t>(m), p));
            const auto sa = ring.crt_split(a), sb = ring.crt_split(b), sab = ring.crt_split(ring.mul(a, b));
            const auto sum = ring.crt_split(ring.add(a, b));
            for (std::size_t i = 0; i < sa.size(); ++i) {
                CHECK(sab[i] == ring.field().mul(sa[i], sb[i]));
                CHECK(sum[i] == ring.field().add(sa[i], sb[i]));
                // slot value is the evaluation at the slot point
                CHECK(sa[i] == oracle::eval(a.coeffs, ring.slot_point(static_cast<int>(i) + 1), p));
            }
            // a = sum eta_i x_i
            RingElem back = ring.zero();
            for (int i = 1; i <= m; ++i) back = ring.add(back, ring.scale(ring.eta(i), sa[static_cast<std::size_t>(i - 1)]));
            CHECK(back == a);
        }
    }
}

TEST_CASE("join after split is the identity on small rings") {
    for (auto [p, m] : valid_pairs(40, 6)) {
        std::uint64_t size = 1;
        for (int i = 0; i < m; ++i) size *= p;
        if (size > 100000) continue;
        const auto r = make_ring(p, m);
        bool all = true;
        oracle::for_each_vector(static_cast<std::size_t>(m), p, [&](const oracle::Vec& v) {
            const auto a = r.element(v);
            all = all && r.crt_join(r.crt_split(a)) == a && r.crt_split(r.crt_join(v)) == v;
        });
        CHECK_MESSAGE(all, "p=" << p << " m=" << m);
    }
}

TEST_CASE("context checks") {
    const auto a = make_ring(7, 3);
    const auto b = make_ring(7, 4);
    const auto c = make_ring(13, 3);
    CHECK_THROWS_KIND(a.add(a.one(), b.one()), ErrorKind::MixedContext);
    CHECK_THROWS_KIND(a.mul(a.one(), c.one()), ErrorKind::MixedContext);
    CHECK_THROWS_KIND(a.element({1, 2}), ErrorKind::DimensionMismatch);
}

TEST_CASE("polynomials over the ring") {
    const auto r = make_ring(7, 3);
    const auto f = r.field();
    const CyclicPoly d1(f, {3, 4, 1}), d2(f, {3, 1, 4});
    const auto joined = r.join_components({d1, d2, d2});
    const auto parts = r.split_components(joined);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == d1);
    CHECK(parts[1] == d2);
    CHECK(parts[2] == d2);
    CHECK(r.poly_mul(joined, joined) == joined);
    // componentwise product
    const auto prod = r.split_components(r.poly_mul(r.join_components({d1, d1, d2}), r.join_components({d2, d1, d1})));
    CHECK(prod[0] == d1 * d2);
    CHECK(prod[1] == d1);
    CHECK(prod[2] == d2 * d1);
    CHECK(r.lift(d1) == r.join_components({d1, d1, d1}));
}

}  // TEST_SUITE

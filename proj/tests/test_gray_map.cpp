#include "helpers.hpp"
#include "oracles.hpp"
#include "qrring/gray_map.hpp"
#include "qrring/qr_ring.hpp"

using namespace qrring;
using testing_support::random_vec;

namespace {

const FpMatrix V1 = {{2, 5, 1}, {1, 2, 2}, {2, 1, 5}};

std::vector<RingElem> random_word(const ResidueRing& r, std::mt19937_64& rng, std::size_t n) {
    std::vector<RingElem> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(r.element(random_vec(rng, static_cast<std::size_t>(r.m()), r.p())));
    return v;
}

}  // namespace

TEST_SUITE("gray_map") {

TEST_CASE("orthogonality scalar") {
    const auto r = make_ring(7, 3);
    CHECK(build_gray(r, V1).lambda() == FieldElem{2});
    CHECK(build_gray(r).lambda() == FieldElem{1});
    CHECK_FALSE(build_gray(r, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}).lambda().has_value());
    CHECK_THROWS_KIND(build_gray(r, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), ErrorKind::SingularV);
    CHECK_THROWS_KIND(build_gray(r, {{1, 0}, {0, 1}}), ErrorKind::DimensionMismatch);
    CHECK_THROWS_KIND(build_gray(r, {{1, 0, 0}, {0, 1}, {0, 0, 1}}), ErrorKind::DimensionMismatch);
}

TEST_CASE("evaluation matrix") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, int>>{{7, 2}, {7, 3}, {7, 4}, {13, 5}, {11, 6}, {31, 6}}) {
        const auto r = make_ring(p, m);
        const auto& M = gray_evaluation_matrix(r);
        const auto g = build_gray(r);
        CHECK(g.M() == M);
        REQUIRE(M.size() == static_cast<std::size_t>(m));
        CHECK(M[0] == FpRow(static_cast<std::size_t>(m), 1));
        FpRow last(static_cast<std::size_t>(m), 1);
        last[0] = 0;
        CHECK(M.back() == last);
        CHECK(g.points()[0] == 0);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                oracle::Vec uj(static_cast<std::size_t>(m), 0);
                uj[static_cast<std::size_t>(j)] = 1;
                CHECK(M[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] == oracle::eval(uj, g.points()[static_cast<std::size_t>(k)], p));
            }
        CHECK(determinant(r.field(), M) != 0);
    }
}

TEST_CASE("images of single elements") {
    const auto r = make_ring(7, 3);
    const auto g = build_gray(r, V1);
    CHECK(g.phi(r.zero()) == FpRow{0, 0, 0});
    CHECK(g.phi(r.u_pow(2)) == FpRow{3, 3, 0});
    CHECK(build_gray(r).phi(r.one()) == FpRow{1, 1, 1});
    CHECK(g.phi_inverse({3, 3, 0}) == std::vector<RingElem>{r.u_pow(2)});
    CHECK(g.phi_inverse({0, 0, 0}) == std::vector<RingElem>{r.zero()});
    CHECK(g.gray_weight({r.zero()}) == 0);
    CHECK(g.gray_weight({r.u_pow(2)}) == 2);
    CHECK_THROWS_KIND(g.phi_inverse({1, 2}), ErrorKind::BadLength);
}

TEST_CASE("both formulations agree on every element of small rings") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, int>>{{7, 3}, {7, 4}, {5, 5}, {11, 3}, {13, 4}, {3, 2}}) {
        const auto r = make_ring(p, m);
        std::mt19937_64 rng(p * 100 + static_cast<unsigned>(m));
        FpMatrix V;
        do {
            V.clear();
            for (int i = 0; i < m; ++i) V.push_back(random_vec(rng, static_cast<std::size_t>(m), p));
        } while (determinant(r.field(), V) == 0);
        const auto g = build_gray(r, V);
        bool all = true;
        oracle::for_each_vector(static_cast<std::size_t>(m), p, [&](const oracle::Vec& v) {
            const std::vector<RingElem> w{r.element(v)};
            all = all && g.phi(w) == g.phi_by_evaluation(w);
        });
        CHECK_MESSAGE(all, "p=" << p << " m=" << m);
    }
}

TEST_CASE("linearity, bijectivity and distances") {
    std::mt19937_64 rng(5);
    const auto r = make_ring(13, 5);
    const auto f = r.field();
    FpMatrix V;
    for (const auto& row : std::vector<std::vector<int>>{{2, -2, 1, 2, -1}, {1, 2, 2, 1, 2}, {5, 9, -5, 0, 0}, {3, -5, -6, 5, -6}, {-1, 2, 0, 7, -5}}) {
        FpRow x;
        for (int a : row) x.push_back(f.reduce(a));
        V.push_back(x);
    }
    const auto g = build_gray(r, V);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_word(r, rng, 4), b = random_word(r, rng, 4);
        const FieldElem s = random_vec(rng, 1, 13)[0], u = random_vec(rng, 1, 13)[0];
        std::vector<RingElem> comb, diff;
        for (std::size_t i = 0; i < a.size(); ++i) {
            comb.push_back(r.add(r.scale(a[i], s), r.scale(b[i], u)));
            diff.push_back(r.sub(a[i], b[i]));
        }
        FpRow expected;
        const auto pa = g.phi(a), pb = g.phi(b);
        for (std::size_t i = 0; i < pa.size(); ++i) expected.push_back(f.add(f.mul(s, pa[i]), f.mul(u, pb[i])));
        CHECK(g.phi(comb) == expected);
        CHECK(g.phi_inverse(g.phi(a)) == a);
        CHECK(g.gray_distance(a, b) == g.gray_weight(diff));
        std::size_t hd = 0;
        for (std::size_t i = 0; i < pa.size(); ++i) hd += pa[i] != pb[i];
        CHECK(g.gray_distance(a, b) == hd);
    }
    const auto w = random_vec(rng, 20, 13);
    CHECK(g.phi(g.phi_inverse(w)) == w);
}

TEST_CASE("orthogonal ring vectors map to orthogonal images when V V^T = lambda I") {
    // codewords of the self-dual extended code for (p, q, m) = (7, 3, 3)
    const auto r = make_ring(7, 3);
    const auto qr = make_qr_context(7, 3);
    const auto ext = extended_qr_code(r, qr, {1}, ExtensionVariant::Q3);
    const auto g = build_gray(r, V1);
    std::mt19937_64 rng(6);
    auto random_codeword = [&] {
        std::vector<RingElem> c(ext.length(), r.zero());
        for (const auto& row : ext.generator_rows) {
            const auto coef = r.element(random_vec(rng, 3, 7));
            for (std::size_t j = 0; j < c.size(); ++j) c[j] = r.add(c[j], r.mul(coef, row[j]));
        }
        return c;
    };
    for (int t = 0; t < 200; ++t) {
        const auto a = random_codeword(), b = random_codeword();
        REQUIRE(r.dot(a, b) == r.zero());
        CHECK(dot(r.field(), g.phi(a), g.phi(b)) == 0);
    }
}

}  // TEST_SUITE

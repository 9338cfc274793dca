#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qrring/workbench.hpp"

using namespace qrring;

namespace {

CodeRequest request(std::int64_t p, std::int64_t q, std::int64_t m, Subset s, IdempotentKind kind, bool extended,
                    std::string v = "") {
    CodeRequest r;
    r.p = p;
    r.q = q;
    r.m = m;
    r.subset = std::move(s);
    r.kind = kind;
    r.extended = extended;
    r.v_preset = std::move(v);
    return r;
}

}  // namespace

TEST_SUITE("workbench") {

TEST_CASE("presets") {
    CHECK(preset_names().size() == 5);
    CHECK(preset_matrix("example1", 7) == FpMatrix{{2, 5, 1}, {1, 2, 2}, {2, 1, 5}});
    CHECK(preset_matrix("example2", 7) == FpMatrix{{2, 5, 1}, {1, 2, 2}, {2, 1, 5}});
    for (const auto& name : preset_names()) {
        const auto& ints = preset_integer_matrix(name);
        const std::uint32_t p = name == "example2" ? 5 : name == "example4" ? 13 : name == "example5" ? 11 : 7;
        CAPTURE(name);
        const auto V = preset_matrix(name, p);
        REQUIRE(V.size() == ints.size());
        for (std::size_t i = 0; i < V.size(); ++i)
            for (std::size_t j = 0; j < V.size(); ++j)
                CHECK(static_cast<std::int64_t>(V[i][j]) == ((ints[i][j] % p) + p) % p);
        CHECK(oracle::rank(V, p) == V.size());
    }
    CHECK_THROWS_KIND(preset_matrix("example9", 7), ErrorKind::InvalidParameter);
    CHECK(parse_kind("S'") == IdempotentKind::EPrime);
    CHECK(parse_variant("q1-plain") == ExtensionVariant::Q1Plain);
    CHECK_THROWS_KIND(parse_kind("T"), ErrorKind::InvalidParameter);
    CHECK_THROWS_KIND(parse_variant("q2"), ErrorKind::InvalidParameter);
}

TEST_CASE("building the small worked codes") {
    const auto s = cmd_build(request(7, 3, 3, {1}, IdempotentKind::E, false, "example1"));
    CHECK(s.analysis.n == 9);
    CHECK(s.analysis.k == 3);
    CHECK(s.analysis.distance->upper == 6);
    CHECK(s.analysis.distance->exact);
    CHECK(s.analysis.duality->self_orthogonal);
    CHECK(s.provenance.lambda == FieldElem{2});
    CHECK(s.ring_log_size == 3);

    const auto ext = cmd_build(request(7, 3, 3, {1}, IdempotentKind::D, true, "example1"));
    CHECK(ext.analysis.n == 12);
    CHECK(ext.analysis.k == 6);
    CHECK(ext.analysis.distance->upper == 4);
    CHECK(ext.analysis.duality->self_dual);
    CHECK(ext.provenance.r == FieldElem{2});
    CHECK(ext.infinity_column == std::size_t{0});

    // V = I is the default
    const auto plain = cmd_build(request(7, 3, 3, {1}, IdempotentKind::E, false));
    CHECK(plain.provenance.V == FpMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(plain.provenance.lambda == FieldElem{1});

    CHECK_THROWS_KIND(cmd_build(request(5, 7, 3, {1}, IdempotentKind::E, false)), ErrorKind::NotQuadraticResidue);
    CHECK_THROWS_KIND(cmd_build(request(7, 3, 5, {1}, IdempotentKind::E, false)), ErrorKind::CongruenceViolation);
    CHECK_THROWS_KIND(cmd_build(request(7, 3, 3, {4}, IdempotentKind::E, false)), ErrorKind::InvalidSubset);
    CHECK_THROWS_KIND(cmd_build(request(7, 3, 3, {1}, IdempotentKind::E, true)), ErrorKind::InvalidParameter);
    auto wrong = request(11, 5, 6, {1}, IdempotentKind::DPrime, true);
    wrong.extension_variant = ExtensionVariant::Q1Plain;
    CHECK_THROWS_KIND(cmd_build(wrong), ErrorKind::InvalidParameter);
    auto q3_on_q1 = request(11, 5, 6, {1}, IdempotentKind::D, true);
    q3_on_q1.extension_variant = ExtensionVariant::Q3;
    CHECK_THROWS_KIND(cmd_build(q3_on_q1), ErrorKind::WrongResidueClass);
    auto singular = request(7, 3, 3, {1}, IdempotentKind::E, false);
    singular.v_matrix = std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {1, 1, 1}, {0, 0, 1}};
    CHECK_THROWS_KIND(cmd_build(singular), ErrorKind::SingularV);
}

TEST_CASE("q = 1 mod 4 extensions") {
    auto plain = request(11, 5, 6, {1}, IdempotentKind::D, true);
    const auto a = cmd_build(plain);
    CHECK(a.extension_variant == ExtensionVariant::Q1Plain);
    CHECK(a.provenance.r == FieldElem{1});
    const auto b = cmd_build(request(11, 5, 6, {1}, IdempotentKind::DPrime, true));
    CHECK(b.extension_variant == ExtensionVariant::Q1Primed);
    CHECK(b.provenance.r == FieldElem{6});
    CHECK(a.analysis.k + b.analysis.k == 36);
    // the two extended codes are mutually orthogonal after the Gray map with V = I
    for (const auto& x : a.gray.G())
        for (const auto& y : b.gray.G()) CHECK(dot(a.gray.field(), x, y) == 0);
}

TEST_CASE("report JSON") {
    auto req = request(7, 3, 3, {1}, IdempotentKind::D, true, "example1");
    req.analyses.weight_enumerator = true;
    const auto rep = cmd_build(req);
    const json j = to_json(rep);
    for (const char* key : {"parameters", "duality", "weight_enumerator", "description", "code", "ring", "ring_generator_matrix",
                            "gray_generator_matrix", "provenance"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["parameters"]["n"] == 12);
    CHECK(j["parameters"]["k"] == 6);
    CHECK(j["parameters"]["d"]["exact"] == true);
    CHECK(j["duality"]["class"] == "self-dual");
    CHECK(j["code"]["kind"] == "Q");
    CHECK(j["code"]["extension_variant"] == "q3");
    CHECK(j["provenance"]["theta"] == 2);
    CHECK(j["provenance"]["xi"] == 6);
    CHECK(j["provenance"]["lambda"] == 2);
    CHECK(j["ring"]["log_p_size"] == 6);
    const auto weights = j["weight_enumerator"].get<std::vector<std::uint64_t>>();
    CHECK(weights.size() == 13);
    CHECK(weights[0] == 1);

    const auto g = j["gray_generator_matrix"].get<FpMatrix>();
    CHECK(from_rows(g, 7) == rep.gray);
    const auto witness = j["parameters"]["d"]["witness"].get<FpRow>();
    CHECK(rep.gray.contains(witness));
    CHECK(hamming_weight(witness) == 4);
}

TEST_CASE("request JSON") {
    auto req = request(13, 3, 5, {1, 3}, IdempotentKind::DPrime, true, "example4");
    req.extension_variant = ExtensionVariant::Q1Primed;
    req.infinity_last = true;
    req.budget.seconds = 12.5;
    req.budget.seed = 99;
    req.analyses.weight_enumerator = true;
    const auto back = request_from_json(request_to_json(req));
    CHECK(request_to_json(back) == request_to_json(req));
    CHECK(back.subset == Subset{1, 3});
    CHECK(back.kind == IdempotentKind::DPrime);
    CHECK(back.v_preset == "example4");
    CHECK(back.budget.seed == 99);
    CHECK(back.infinity_last);

    const json parsed = json::parse(R"({"p": 7, "q": 3, "m": 3, "subset": [1], "kind": "S", "V": [[2,5,1],[1,2,2],[2,1,5]]})");
    const auto r = request_from_json(parsed);
    CHECK(r.v_matrix.has_value());
    CHECK(cmd_build(r).provenance.lambda == FieldElem{2});

    CHECK_THROWS_KIND(request_from_json(json::parse(R"({"p": 7, "q": 3, "m": 3, "subset": [1], "colour": 1})")),
                      ErrorKind::InvalidParameter);
    CHECK_THROWS_KIND(request_from_json(json::parse(R"({"p": 7, "q": 3, "m": 3})")), ErrorKind::InvalidParameter);
    CHECK_THROWS_KIND(request_from_json(json::parse(R"([1, 2])")), ErrorKind::InvalidParameter);
    const auto out_of_range = request_from_json(json::parse(R"({"p": 7, "q": 3, "m": 3, "subset": [1], "V": [[9,0,0],[0,1,0],[0,0,1]]})"));
    CHECK_THROWS_KIND(cmd_build(out_of_range), ErrorKind::InvalidParameter);
}

TEST_CASE("builds are deterministic") {
    const auto req = request(5, 11, 3, {1}, IdempotentKind::D, true, "example2");
    const json a = to_json(cmd_build(req));
    const json b = to_json(cmd_build(req));
    CHECK(a == b);
}

TEST_CASE("worked examples") {
    for (int n = 1; n <= 5; ++n) {
        std::ostringstream log;
        const auto out = cmd_example(n, RunOptions{}, log);
        CAPTURE(n);
        CAPTURE(log.str());
        CHECK(out.number == n);
        CHECK(out.all_passed());
        CHECK_FALSE(out.claims.empty());
        CHECK(log.str().find("FAIL") == std::string::npos);
    }
    std::ostringstream sink;
    CHECK_THROWS_KIND(cmd_example(0, RunOptions{}, sink), ErrorKind::InvalidParameter);
    CHECK_THROWS_KIND(cmd_example(6, RunOptions{}, sink), ErrorKind::InvalidParameter);
}

TEST_CASE("theorem grid") {
    TheoremGrid small;
    small.max_p = 13;
    small.max_q = 11;
    small.m_values = {2, 3};
    const auto triples = grid_triples(small);
    CHECK_FALSE(triples.empty());
    for (const auto& [p, q, m] : triples) {
        CHECK(oracle::is_prime(static_cast<std::uint64_t>(p)));
        CHECK(oracle::is_prime(static_cast<std::uint64_t>(q)));
        CHECK(p != q);
        CHECK(oracle::nonzero_squares(static_cast<std::uint32_t>(q)).count(static_cast<std::uint32_t>(p % q)) == 1);
        CHECK((p - 1) % (m - 1) == 0);
    }
    // (7, 3, 3) is on the grid, (5, 7, 3) is not
    CHECK(std::find(triples.begin(), triples.end(), std::array<std::int64_t, 3>{7, 3, 3}) != triples.end());
    CHECK(std::find(triples.begin(), triples.end(), std::array<std::int64_t, 3>{5, 7, 3}) == triples.end());

    std::ostringstream log;
    const auto out = cmd_theorems(small, log);
    CHECK(out.all_passed());
    CHECK_FALSE(out.rows.empty());
}

TEST_CASE("analyze") {
    const json in = json::parse(R"({"p": 3, "matrix": [[1, 1, 1], [0, 1, 2]]})");
    Analyses a;
    a.weight_enumerator = true;
    const json out = cmd_analyze(in, a, Budget{});
    CHECK(out["parameters"]["n"] == 3);
    CHECK(out["parameters"]["k"] == 2);
    CHECK(out["parameters"]["d"]["upper"] == 2);
    CHECK(out["weight_enumerator"] == json::array({1, 0, 6, 2}));
    CHECK(out["p"] == 3);
    CHECK_THROWS_KIND(cmd_analyze(json::parse(R"({"p": 3, "matrix": [[1, 3]]})"), a, Budget{}), ErrorKind::InvalidParameter);
    CHECK_THROWS_KIND(cmd_analyze(json::parse(R"({"p": 4, "matrix": [[1, 1]]})"), a, Budget{}), ErrorKind::NotPrime);
    CHECK_THROWS_KIND(cmd_analyze(json::parse(R"({"matrix": [[1, 1]]})"), a, Budget{}), ErrorKind::InvalidParameter);
}

}  // TEST_SUITE

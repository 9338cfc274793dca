#include "qrring/workbench.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "qrring/error.hpp"
#include "qrring/gray_map.hpp"

namespace qrring {

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

const std::map<std::string, IntMatrix>& presets() {
    static const std::map<std::string, IntMatrix> table{
        {"example1", {{2, -2, 1}, {1, 2, 2}, {2, 1, -2}}},
        {"example2", {{2, -2, 1}, {1, 2, 2}, {2, 1, -2}}},
        {"example3", {{2, -2, 1, 1}, {-1, 1, 2, 2}, {2, 2, 1, -1}, {1, 1, -2, 2}}},
        {"example4", {{2, -2, 1, 2, -1}, {1, 2, 2, 1, 2}, {5, 9, -5, 0, 0}, {3, -5, -6, 5, -6}, {-1, 2, 0, 7, -5}}},
        {"example5",
         {{1, 1, 1, 1, 1, 1},
          {1, 2, -3, 1, 2, -3},
          {1, -3, 2, 1, -3, 2},
          {1, 1, 1, -1, -1, -1},
          {1, 2, -3, -1, -2, 3},
          {1, -3, 2, -1, 3, -2}}},
    };
    return table;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidParameter, what); }

std::string subset_text(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string params_text(const CodeAnalysis& a) {
    std::string d = "?";
    if (a.distance) {
        d = a.distance->exact ? std::to_string(a.distance->upper)
                              : std::to_string(a.distance->lower) + ".." + std::to_string(a.distance->upper);
    }
    return "[" + std::to_string(a.n) + "," + std::to_string(a.k) + "," + d + "]";
}

FpMatrix identity_matrix(std::size_t m) { return identity(m); }

json matrix_json(const FpMatrix& a) {
    json out = json::array();
    for (const auto& row : a) out.push_back(row);
    return out;
}

json ring_elem_json(const RingElem& e) { return e.coeffs; }

std::int64_t get_int(const json& j, const char* key) {
    if (!j.contains(key)) invalid(std::string("missing field '") + key + "'");
    if (!j.at(key).is_number_integer()) invalid(std::string("field '") + key + "' must be an integer");
    return j.at(key).get<std::int64_t>();
}

}  // namespace

// ---------------------------------------------------------------- presets and parsing

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& [name, m] : presets()) out.push_back(name);
    return out;
}

const IntMatrix& preset_integer_matrix(const std::string& name) {
    auto it = presets().find(name);
    if (it == presets().end()) invalid("unknown V preset '" + name + "'");
    return it->second;
}

FpMatrix preset_matrix(const std::string& name, std::uint32_t p) {
    const auto f = make_field(p);
    FpMatrix out;
    for (const auto& row : preset_integer_matrix(name)) {
        FpRow r;
        for (auto x : row) r.push_back(f.reduce(x));
        out.push_back(std::move(r));
    }
    return out;
}

IdempotentKind parse_kind(const std::string& s) {
    if (s == "Q") return IdempotentKind::D;
    if (s == "Q'") return IdempotentKind::DPrime;
    if (s == "S") return IdempotentKind::E;
    if (s == "S'") return IdempotentKind::EPrime;
    invalid("kind must be Q, Q', S or S', got '" + s + "'");
}

ExtensionVariant parse_variant(const std::string& s) {
    for (auto v : {ExtensionVariant::Q3, ExtensionVariant::Q1Plain, ExtensionVariant::Q1Primed})
        if (to_string(v) == s) return v;
    invalid("extension variant must be q3, q1-plain or q1-primed, got '" + s + "'");
}

FpMatrix matrix_from_json(const json& j, std::uint32_t p) {
    if (!j.is_array() || j.empty()) invalid("matrix must be a nonempty array of rows");
    FpMatrix out;
    for (const auto& row : j) {
        if (!row.is_array()) invalid("matrix rows must be arrays");
        FpRow r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) invalid("matrix entries must be integers");
            const auto v = x.get<std::int64_t>();
            if (v < 0 || v >= static_cast<std::int64_t>(p))
                invalid("matrix entry " + std::to_string(v) + " outside [0, " + std::to_string(p) + ")");
            r.push_back(static_cast<FieldElem>(v));
        }
        if (!out.empty() && r.size() != out.front().size()) invalid("matrix rows have different lengths");
        out.push_back(std::move(r));
    }
    return out;
}

CodeRequest request_from_json(const json& j) {
    if (!j.is_object()) invalid("request must be a JSON object");
    static const std::vector<std::string> known{"p", "q", "m", "subset", "kind", "extended", "extension_variant",
                                                "V", "analyses", "budget", "infinity_last"};
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) invalid("unknown request field '" + key + "'");

    CodeRequest r;
    r.p = get_int(j, "p");
    r.q = get_int(j, "q");
    r.m = get_int(j, "m");
    if (!j.contains("subset") || !j.at("subset").is_array()) invalid("field 'subset' must be an array of indices");
    for (const auto& x : j.at("subset")) {
        if (!x.is_number_integer()) invalid("subset entries must be integers");
        r.subset.push_back(x.get<int>());
    }
    if (j.contains("kind")) r.kind = parse_kind(j.at("kind").get<std::string>());
    if (j.contains("extended")) r.extended = j.at("extended").get<bool>();
    if (j.contains("extension_variant") && !j.at("extension_variant").is_null())
        r.extension_variant = parse_variant(j.at("extension_variant").get<std::string>());
    if (j.contains("V") && !j.at("V").is_null()) {
        const auto& v = j.at("V");
        if (v.is_string()) {
            r.v_preset = v.get<std::string>();
        } else if (v.is_array()) {
            IntMatrix mat;
            for (const auto& row : v) {
                if (!row.is_array()) invalid("V rows must be arrays");
                std::vector<std::int64_t> rr;
                for (const auto& x : row) {
                    if (!x.is_number_integer()) invalid("V entries must be integers");
                    rr.push_back(x.get<std::int64_t>());
                }
                mat.push_back(std::move(rr));
            }
            r.v_matrix = std::move(mat);
        } else {
            invalid("V must be a preset name or a matrix");
        }
    }
    if (j.contains("analyses")) {
        const auto& a = j.at("analyses");
        r.analyses.min_distance = a.value("min_distance", r.analyses.min_distance);
        r.analyses.duality = a.value("duality", r.analyses.duality);
        r.analyses.weight_enumerator = a.value("weight_enumerator", r.analyses.weight_enumerator);
    }
    if (j.contains("budget")) {
        const auto& b = j.at("budget");
        r.budget.seconds = b.value("seconds", r.budget.seconds);
        r.budget.exhaustive_threshold = b.value("exhaustive_threshold", r.budget.exhaustive_threshold);
        r.budget.seed = b.value("seed", r.budget.seed);
    }
    if (j.contains("infinity_last")) r.infinity_last = j.at("infinity_last").get<bool>();
    return r;
}

json request_to_json(const CodeRequest& r) {
    json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["m"] = r.m;
    j["subset"] = r.subset;
    j["kind"] = to_string(r.kind);
    j["extended"] = r.extended;
    j["extension_variant"] = r.extension_variant ? json(to_string(*r.extension_variant)) : json(nullptr);
    if (r.v_matrix) j["V"] = *r.v_matrix;
    else if (!r.v_preset.empty()) j["V"] = r.v_preset;
    else j["V"] = nullptr;
    j["analyses"] = {{"min_distance", r.analyses.min_distance},
                     {"duality", r.analyses.duality},
                     {"weight_enumerator", r.analyses.weight_enumerator}};
    j["budget"] = {{"seconds", r.budget.seconds},
                   {"exhaustive_threshold", r.budget.exhaustive_threshold},
                   {"seed", r.budget.seed}};
    j["infinity_last"] = r.infinity_last;
    return j;
}

// ---------------------------------------------------------------- analysis and reports

CodeAnalysis analyze_code(const LinearCode& c, const Analyses& analyses, const Budget& budget) {
    CodeAnalysis a;
    a.n = c.n();
    a.k = c.k();
    if (analyses.min_distance && c.k() > 0) {
        a.distance = min_distance(c, budget);
        if (hamming_weight(a.distance->witness) != a.distance->upper)
            throw Error(ErrorKind::InternalInvariant, "witness weight differs from the reported upper bound");
    }
    if (analyses.duality) a.duality = classify_duality(c, budget.exhaustive_threshold, budget.threads);
    if (analyses.weight_enumerator) {
        if (!code_size_capped(c, budget.exhaustive_threshold))
            throw Error(ErrorKind::TooLarge, "weight enumerator needs p^k <= " + std::to_string(budget.exhaustive_threshold));
        a.weights = weight_enumerator(c, budget.exhaustive_threshold, budget.threads);
    }
    return a;
}

json to_json(const CodeAnalysis& a) {
    json j;
    json params{{"n", a.n}, {"k", a.k}};
    if (a.distance) {
        params["d"] = {{"lower", a.distance->lower},
                       {"upper", a.distance->upper},
                       {"exact", a.distance->exact},
                       {"method", to_string(a.distance->method)}};
        if (a.distance->method == DistanceMethod::InfoSet) params["d"]["information_sets"] = a.distance->info_sets;
        params["d"]["witness"] = a.distance->witness;
    } else {
        params["d"] = nullptr;
    }
    j["parameters"] = params;
    if (a.duality) {
        j["duality"] = {{"class", a.duality->label()},
                        {"self_orthogonal", a.duality->self_orthogonal},
                        {"self_dual", a.duality->self_dual},
                        {"dual_containing", a.duality->dual_containing},
                        {"formally_self_dual", a.duality->formal_status()}};
    }
    if (a.weights) j["weight_enumerator"] = *a.weights;
    return j;
}

json to_json(const CodeReport& r) {
    json j = to_json(r.analysis);
    j["description"] = r.description;
    j["code"] = {{"subset", r.subset},
                 {"kind", to_string(r.kind)},
                 {"extended", r.extension_variant.has_value()},
                 {"extension_variant", r.extension_variant ? json(to_string(*r.extension_variant)) : json(nullptr)},
                 {"infinity_column", r.infinity_column ? json(*r.infinity_column) : json(nullptr)}};
    json gens = json::array();
    for (const auto& g : r.component_generators) gens.push_back(g.coeffs());
    j["ring"] = {{"log_p_size", r.ring_log_size}, {"component_generators", gens}};
    json ring_rows = json::array();
    for (const auto& row : r.ring_generator_matrix) {
        json jr = json::array();
        for (const auto& e : row) jr.push_back(ring_elem_json(e));
        ring_rows.push_back(jr);
    }
    j["ring_generator_matrix"] = ring_rows;
    j["gray_generator_matrix"] = matrix_json(r.gray.G());
    const auto& pv = r.provenance;
    j["provenance"] = {{"p", pv.p},
                       {"q", pv.q},
                       {"m", pv.m},
                       {"alpha", pv.alpha},
                       {"xi", pv.xi},
                       {"theta", pv.theta},
                       {"r", pv.r ? json(*pv.r) : json(nullptr)},
                       {"V", matrix_json(pv.V)},
                       {"lambda", pv.lambda ? json(*pv.lambda) : json(nullptr)}};
    return j;
}

CodeReport cmd_build(const CodeRequest& request) {
    const ResidueRing ring = make_ring(request.p, request.m);
    const QRContext qr = make_qr_context(request.p, request.q);
    const Subset subset = canonical_subset(request.subset, ring.m());
    const auto& f = ring.field();

    FpMatrix V;
    if (request.v_matrix) {
        json jm = *request.v_matrix;
        V = matrix_from_json(jm, f.p());
    } else if (!request.v_preset.empty()) {
        V = preset_matrix(request.v_preset, f.p());
    } else {
        V = identity_matrix(static_cast<std::size_t>(ring.m()));
    }
    const GrayMap gray = build_gray(ring, V);

    CodeReport report;
    report.subset = subset;
    report.kind = request.kind;
    report.provenance = {f.p(), qr.q, static_cast<std::uint32_t>(ring.m()), f.alpha(), ring.xi(), qr.theta, std::nullopt,
                         gray.V(), gray.lambda()};

    RingMatrix rows;
    if (request.extended) {
        if (request.kind != IdempotentKind::D && request.kind != IdempotentKind::DPrime)
            invalid("extended codes are built from kind Q or Q'");
        ExtensionVariant variant = request.extension_variant.value_or(
            request.kind == IdempotentKind::DPrime ? ExtensionVariant::Q1Primed : default_extension(qr));
        if (request.kind == IdempotentKind::DPrime && variant != ExtensionVariant::Q1Primed)
            invalid("kind Q' extends only with variant q1-primed");
        if (request.kind == IdempotentKind::D && variant == ExtensionVariant::Q1Primed)
            invalid("variant q1-primed extends kind Q'");
        const ExtendedCode ext = extended_qr_code(ring, qr, subset, variant, request.infinity_last);
        report.extension_variant = variant;
        report.infinity_column = ext.infinity_column;
        report.provenance.r = ext.scalar;
        report.ring_log_size = ring_span_log_size(ring, ext.generator_rows);
        report.component_generators = ext.base.component_generators;
        rows = ext.generator_rows;
        report.description = "extended " + to_string(request.kind) + "_" + subset_text(subset) + " (" + to_string(variant) + ")";
    } else {
        const RingCyclicCode code = qr_code(ring, qr, subset, request.kind);
        report.ring_log_size = code.log_size();
        report.component_generators = code.component_generators;
        rows = code.generator_rows;
        report.description = to_string(request.kind) + "_" + subset_text(subset);
    }
    report.description += " over F_" + std::to_string(f.p()) + ", q=" + std::to_string(qr.q) + ", m=" + std::to_string(ring.m());
    report.ring_generator_matrix = rows;
    report.gray = gray_image(gray, rows);
    if (report.gray.k() != report.ring_log_size)
        throw Error(ErrorKind::InternalInvariant, "Gray image dimension differs from log_p of the ring code size");
    report.analysis = analyze_code(report.gray, request.analyses, request.budget);
    return report;
}

json cmd_analyze(const json& input, const Analyses& analyses, const Budget& budget) {
    if (!input.is_object()) invalid("analyze input must be an object with 'p' and 'matrix'");
    const auto p = get_int(input, "p");
    const auto f = make_field(p);
    if (!input.contains("matrix")) invalid("missing field 'matrix'");
    const LinearCode c = from_rows(matrix_from_json(input.at("matrix"), f.p()), f);
    json j = to_json(analyze_code(c, analyses, budget));
    j["p"] = f.p();
    j["generator_matrix"] = matrix_json(c.G());
    return j;
}

// ---------------------------------------------------------------- worked examples

bool ExampleOutcome::all_passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

namespace {

struct ExampleRun {
    ExampleOutcome& out;
    const RunOptions& options;
    std::ostream& log;

    void claim(const std::string& name, bool passed, const std::string& detail = "") {
        out.claims.push_back({name, passed, detail});
        log << (passed ? "PASS" : "FAIL") << ": " << name;
        if (!detail.empty()) log << " (" << detail << ")";
        log << '\n';
    }

    const CodeReport& build(std::int64_t p, std::int64_t q, std::int64_t m, IdempotentKind kind, bool extended,
                            const std::string& preset) {
        CodeRequest r;
        r.p = p;
        r.q = q;
        r.m = m;
        r.subset = {1};
        r.kind = kind;
        r.extended = extended;
        r.v_preset = preset;
        r.budget = options.budget;
        r.infinity_last = options.infinity_last;
        out.reports.push_back(cmd_build(r));
        return out.reports.back();
    }

    /// Exact [n, k, d].
    void exact_params(const std::string& what, const CodeAnalysis& a, std::size_t n, std::size_t k, std::size_t d) {
        const bool ok = a.n == n && a.k == k && a.distance && a.distance->exact && a.distance->upper == d;
        claim(what + " is [" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]", ok,
              "got " + params_text(a) + (a.distance ? " by " + to_string(a.distance->method) : ""));
    }

    void distance_bounds(const std::string& what, const CodeAnalysis& a, std::size_t upper, std::size_t min_lower) {
        const bool ok = a.distance && a.distance->upper == upper && a.distance->lower >= min_lower;
        std::string detail = "no distance";
        if (a.distance)
            detail = "lower " + std::to_string(a.distance->lower) + ", upper " + std::to_string(a.distance->upper) +
                     (a.distance->exact ? ", exact" : ", not exact");
        claim(what + " has a weight-" + std::to_string(upper) + " witness and lower bound >= " + std::to_string(min_lower),
              ok, detail);
    }

    void duality(const std::string& what, const CodeReport& r, const std::string& expected) {
        const bool ok = r.analysis.duality && (expected == "self-dual" ? r.analysis.duality->self_dual
                                                                       : r.analysis.duality->self_orthogonal);
        claim(what + " is " + expected, ok, r.analysis.duality ? r.analysis.duality->label() : "not computed");
    }

    void lambda(const CodeReport& r, FieldElem expected) {
        const auto& l = r.provenance.lambda;
        claim("V V^T = " + std::to_string(expected) + " I", l && *l == expected, l ? "lambda " + std::to_string(*l) : "not orthogonal");
    }

    void idempotents(std::int64_t p, std::int64_t q, const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
        const QRContext qr = make_qr_context(p, q);
        const auto& x = qr.e1.coeffs();
        const auto& y = qr.e2.coeffs();
        const bool ok = (x == a && y == b) || (x == b && y == a);
        claim("even-like idempotents over F_" + std::to_string(p) + " of length " + std::to_string(q) + " match", ok);
    }
};

}  // namespace

ExampleOutcome cmd_example(int n, const RunOptions& options, std::ostream& log) {
    if (n < 1 || n > 5) invalid("example number must be 1..5");
    ExampleOutcome out;
    out.number = n;
    ExampleRun run{out, options, log};
    log << "Example " << n << '\n';

    switch (n) {
        case 1: {
            run.idempotents(7, 3, {5, 3, 6}, {5, 6, 3});
            const auto& s = run.build(7, 3, 3, IdempotentKind::E, false, "example1");
            run.lambda(s, 2);
            run.exact_params("Phi(S_{1})", s.analysis, 9, 3, 6);
            run.duality("Phi(S_{1})", s, "self-orthogonal");
            const CodeAnalysis d = analyze_code(dual(s.gray), {true, false, false}, options.budget);
            run.exact_params("dual of Phi(S_{1})", d, 9, 6, 3);
            const bool nearly_mds = d.distance && s.analysis.distance && s.analysis.distance->upper == s.analysis.n - s.analysis.k &&
                                    d.distance->upper == d.n - d.k;
            run.claim("Phi(S_{1}) is nearly MDS (code and dual both have d = n - k)", nearly_mds);
            // The printed matrix uses the opposite e1/e2 labeling, i.e. S'_{1} in ours.
            const auto f = make_field(7);
            const LinearCode printed = from_rows(FpMatrix{{1, 0, 0, 0, 4, 5, 6, 3, 2},
                                                          {0, 1, 0, 4, 0, 2, 3, 6, 5},
                                                          {0, 0, 1, 5, 2, 3, 2, 5, 3}},
                                                 f);
            const auto ring = make_ring(7, 3);
            const auto swapped = gray_image(build_gray(ring, preset_matrix("example1", 7)),
                                            qr_code(ring, make_qr_context(7, 3), {1}, IdempotentKind::EPrime).generator_rows);
            run.claim("printed generator matrix equals Phi(S_{1}) under the swapped e1/e2 labeling", printed == swapped);
            const auto& e = run.build(7, 3, 3, IdempotentKind::D, true, "example1");
            run.exact_params("Phi(extended Q_{1})", e.analysis, 12, 6, 4);
            run.duality("Phi(extended Q_{1})", e, "self-dual");
            break;
        }
        case 2: {
            run.idempotents(5, 11, {0, 1, 3, 1, 1, 1, 3, 3, 3, 1, 3}, {0, 3, 1, 3, 3, 3, 1, 1, 1, 3, 1});
            const auto& e = run.build(5, 11, 3, IdempotentKind::D, true, "example2");
            run.lambda(e, 4);
            run.claim("Phi(extended Q_{1}) has n = 36, k = 18", e.analysis.n == 36 && e.analysis.k == 18, params_text(e.analysis));
            run.duality("Phi(extended Q_{1})", e, "self-dual");
            run.distance_bounds("Phi(extended Q_{1})", e.analysis, 9, 7);
            const auto& s = run.build(5, 11, 3, IdempotentKind::E, false, "example2");
            run.claim("Phi(S_{1}) has n = 33, k = 15", s.analysis.n == 33 && s.analysis.k == 15, params_text(s.analysis));
            run.duality("Phi(S_{1})", s, "self-orthogonal");
            run.distance_bounds("Phi(S_{1})", s.analysis, 10, 8);
            break;
        }
        case 3: {
            run.idempotents(7, 3, {5, 3, 6}, {5, 6, 3});
            const auto& e = run.build(7, 3, 4, IdempotentKind::D, true, "example3");
            run.lambda(e, 3);
            run.exact_params("Phi(extended Q_{1})", e.analysis, 16, 8, 4);
            run.duality("Phi(extended Q_{1})", e, "self-dual");
            const auto& s = run.build(7, 3, 4, IdempotentKind::E, false, "example3");
            run.exact_params("Phi(S_{1})", s.analysis, 12, 4, 6);
            run.duality("Phi(S_{1})", s, "self-orthogonal");
            break;
        }
        case 4: {
            run.idempotents(13, 3, {9, 1, 3}, {9, 3, 1});
            const auto& s = run.build(13, 3, 5, IdempotentKind::E, false, "example4");
            run.lambda(s, 1);
            run.exact_params("Phi(S_{1})", s.analysis, 15, 5, 6);
            run.duality("Phi(S_{1})", s, "self-orthogonal");
            const auto& e = run.build(13, 3, 5, IdempotentKind::D, true, "example4");
            run.claim("Phi(extended Q_{1}) has n = 20, k = 10", e.analysis.n == 20 && e.analysis.k == 10, params_text(e.analysis));
            run.duality("Phi(extended Q_{1})", e, "self-dual");
            run.distance_bounds("Phi(extended Q_{1})", e.analysis, 4, 4);
            break;
        }
        case 5: {
            run.idempotents(11, 5, {7, 5, 8, 8, 5}, {7, 8, 5, 5, 8});
            const auto& e = run.build(11, 5, 6, IdempotentKind::D, true, "example5");
            run.lambda(e, 6);
            run.claim("Phi(extended Q_{1}) has n = 36, k = 18", e.analysis.n == 36 && e.analysis.k == 18, params_text(e.analysis));
            const bool witness = e.analysis.distance && e.analysis.distance->upper <= 6;
            run.claim("Phi(extended Q_{1}) has a codeword of weight <= 6", witness,
                      e.analysis.distance ? "lower " + std::to_string(e.analysis.distance->lower) + ", upper " +
                                                std::to_string(e.analysis.distance->upper)
                                          : "no distance");
            const std::string formal = e.analysis.duality ? e.analysis.duality->formal_status() : "not computed";
            run.claim("formal self-duality of Phi(extended Q_{1}) reported as unknown (budget)", formal == "unknown (budget)", formal);
            const auto& s = run.build(11, 5, 6, IdempotentKind::E, false, "example5");
            run.exact_params("Phi(S_{1})", s.analysis, 30, 12, 8);
            break;
        }
    }
    return out;
}

json to_json(const ExampleOutcome& o) {
    json claims = json::array();
    for (const auto& c : o.claims) claims.push_back({{"claim", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json reports = json::array();
    for (const auto& r : o.reports) reports.push_back(to_json(r));
    return {{"example", o.number}, {"passed", o.all_passed()}, {"claims", claims}, {"reports", reports}};
}

// ---------------------------------------------------------------- property suites over a grid

bool TheoremOutcome::all_passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.passed; });
}

std::vector<std::array<std::int64_t, 3>> grid_triples(const TheoremGrid& grid) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t p = 3; p <= grid.max_p; p += 2) {
        if (!is_prime(p)) continue;
        for (std::int64_t q = 3; q <= grid.max_q; q += 2) {
            if (!is_prime(q) || p == q || legendre(p, static_cast<std::uint32_t>(q)) != 1) continue;
            for (int m : grid.m_values)
                if (m >= 2 && (p - 1) % (m - 1) == 0) out.push_back({p, q, m});
        }
    }
    return out;
}

namespace {

std::vector<Subset> nonempty_subsets(int m) {
    std::vector<Subset> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        Subset s;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TheoremOutcome cmd_theorems(const TheoremGrid& grid, std::ostream& log) {
    TheoremOutcome out;
    auto record = [&](const std::string& suite, const std::string& instance, bool passed) {
        out.rows.push_back({suite, instance, passed});
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> pairs_done;
    for (const auto& [p, q, m] : grid_triples(grid)) {
        const QRContext qr = make_qr_context(p, q);
        const std::string pq = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        if (std::find(pairs_done.begin(), pairs_done.end(), std::make_pair(p, q)) == pairs_done.end()) {
            pairs_done.emplace_back(p, q);
            const bool idem = is_idempotent(qr.d1) && is_idempotent(qr.d2) && is_idempotent(qr.e1) && is_idempotent(qr.e2);
            record("qr-identities", pq, idem && qr_identities_hold(qr));
        }

        const ResidueRing ring = make_ring(p, m);
        const std::string pqm = pq + " m=" + std::to_string(m);
        const auto um = static_cast<std::size_t>(m);
        const auto uq = static_cast<std::size_t>(q);
        const RingPoly d_sum = ring.lift(qr.d1 + qr.d2);
        const RingPoly e_prod = ring.lift(qr.e1 * qr.e2);

        std::vector<GrayMap> grays;
        for (const auto& name : preset_names()) {
            const auto& raw = preset_integer_matrix(name);
            if (raw.size() != um) continue;
            const FpMatrix V = preset_matrix(name, static_cast<std::uint32_t>(p));
            if (!orthogonality_scalar(ring.field(), V) || determinant(ring.field(), V) == 0) continue;
            if (std::any_of(grays.begin(), grays.end(), [&](const GrayMap& g) { return g.V() == V; })) continue;
            grays.push_back(build_gray(ring, V));
        }

        for (const auto& s : nonempty_subsets(m)) {
            const std::string inst = pqm + " S=" + subset_text(s);
            const auto D = build_idempotent(ring, qr, s, IdempotentKind::D);
            const auto Dp = build_idempotent(ring, qr, s, IdempotentKind::DPrime);
            const auto E = build_idempotent(ring, qr, s, IdempotentKind::E);
            const auto Ep = build_idempotent(ring, qr, s, IdempotentKind::EPrime);

            if (2 * s.size() <= um) {
                record("subset-identities", inst, subset_identity_suite(ring, qr, s).all_passed());
                record("lifted-sums", inst,
                       ring.poly_add(D.poly, Dp.poly) == d_sum && ring.poly_mul(E.poly, Ep.poly) == e_prod);
            }

            const auto Q = code_from_idempotent(D);
            const auto S = code_from_idempotent(E);
            const bool sizes = Q.log_size() == um * (uq + 1) / 2 && S.log_size() == um * (uq - 1) / 2 &&
                               ring_span_log_size(ring, Q.generator_rows) == Q.log_size() &&
                               ring_span_log_size(ring, S.generator_rows) == S.log_size();
            record("code-sizes", inst, sizes);

            bool mult = true;
            for (auto nr : qr.nonresidues) mult = mult && ring_multiplier(D.poly, nr) == Dp.poly;
            record("multiplier", inst, mult);

            record(qr.q_is_3_mod_4() ? "duality-q3" : "duality-q1", inst, duality_checks(ring, qr, s).all_passed());

            if (qr.q_is_3_mod_4()) {
                const ExtendedCode ext = extend_code(S, ExtensionVariant::Q3);
                for (const auto& g : grays) {
                    const auto image = classify_duality(gray_image(g, ext.generator_rows), 0);
                    const auto even = classify_duality(gray_image(g, S.generator_rows), 0);
                    record("gray-self-duality", inst + " lambda=" + std::to_string(*g.lambda()),
                           image.self_dual && even.self_orthogonal);
                }
            }
        }
    }

    std::vector<int> ms = grid.m_values;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (int m : ms) {
        if (m < 2) continue;
        const auto classes = equivalence_classes(m);
        record("class-count", "m=" + std::to_string(m) + " count=" + std::to_string(classes.count),
               classes.count == (std::size_t{1} << (m - 1)) - 1);
    }

    std::vector<std::string> order;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (const auto& r : out.rows) {
        if (!tally.count(r.suite)) order.push_back(r.suite);
        auto& t = tally[r.suite];
        ++t.first;
        t.second += r.passed;
    }
    log << std::left << std::setw(22) << "suite" << std::right << std::setw(8) << "checks" << std::setw(8) << "passed" << '\n';
    for (const auto& name : order)
        log << std::left << std::setw(22) << name << std::right << std::setw(8) << tally[name].first << std::setw(8)
            << tally[name].second << '\n';
    for (const auto& r : out.rows)
        if (!r.passed) log << "FAIL: " << r.suite << " " << r.instance << '\n';
    log << (out.all_passed() ? "all suites passed" : "some suites FAILED") << '\n';
    return out;
}

json to_json(const TheoremOutcome& o) {
    json rows = json::array();
    for (const auto& r : o.rows) rows.push_back({{"suite", r.suite}, {"instance", r.instance}, {"passed", r.passed}});
    return {{"passed", o.all_passed()}, {"rows", rows}};
}

}  // namespace qrring

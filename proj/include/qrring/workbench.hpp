#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrring/linear_code.hpp"
#include "qrring/qr_ring.hpp"

namespace qrring {

using json = nlohmann::json;

/// Names accepted for V: "example1".."example5".
std::vector<std::string> preset_names();
/// Integer matrix as printed, before reduction mod p. Throws InvalidParameter for unknown names.
const std::vector<std::vector<std::int64_t>>& preset_integer_matrix(const std::string& name);
/// Preset reduced mod p.
FpMatrix preset_matrix(const std::string& name, std::uint32_t p);

/// "Q", "Q'", "S", "S'". Throws InvalidParameter.
IdempotentKind parse_kind(const std::string& s);
/// "q3", "q1-plain", "q1-primed". Throws InvalidParameter.
ExtensionVariant parse_variant(const std::string& s);

struct Analyses {
    bool min_distance = true;
    bool duality = true;
    bool weight_enumerator = false;
};

struct CodeRequest {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t m = 0;
    Subset subset;
    IdempotentKind kind = IdempotentKind::D;
    bool extended = false;
    std::optional<ExtensionVariant> extension_variant;
    /// Preset name; ignored when v_matrix is set. Empty with no matrix means V = I.
    std::string v_preset;
    std::optional<std::vector<std::vector<std::int64_t>>> v_matrix;
    Analyses analyses;
    Budget budget;
    bool infinity_last = false;
};

/// Reads the JSON request format; unknown fields are rejected. Throws InvalidParameter.
CodeRequest request_from_json(const json& j);
json request_to_json(const CodeRequest& r);

/// Analysis of a linear code over F_p.
struct CodeAnalysis {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<MinDistanceResult> distance;
    std::optional<DualityReport> duality;
    std::optional<std::vector<std::uint64_t>> weights;
};

CodeAnalysis analyze_code(const LinearCode& c, const Analyses& analyses, const Budget& budget);

struct Provenance {
    std::uint32_t p = 0, q = 0, m = 0;
    FieldElem alpha = 0, xi = 0, theta = 0;
    /// Bottom-row scalar of an extended code.
    std::optional<FieldElem> r;
    FpMatrix V;
    std::optional<FieldElem> lambda;
};

struct CodeReport {
    std::string description;
    Subset subset;
    IdempotentKind kind = IdempotentKind::D;
    std::optional<ExtensionVariant> extension_variant;
    std::optional<std::size_t> infinity_column;
    CodeAnalysis analysis;
    std::size_t ring_log_size = 0;
    std::vector<Poly> component_generators;
    RingMatrix ring_generator_matrix;
    LinearCode gray;
    Provenance provenance;
};

json to_json(const CodeReport& r);
json to_json(const CodeAnalysis& a);

/// make_ring -> make_qr_context -> idempotent -> code -> optional extension -> Gray image -> analyses.
/// Validation failures surface as qrring::Error.
CodeReport cmd_build(const CodeRequest& request);

struct RunOptions {
    Budget budget;
    bool infinity_last = false;
};

struct Claim {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ExampleOutcome {
    int number = 0;
    std::vector<Claim> claims;
    std::vector<CodeReport> reports;
    bool all_passed() const;
};

/// Rebuilds one of the five worked examples and checks its published claims.
/// Prints one PASS/FAIL line per claim to `log`. Throws InvalidParameter for n outside 1..5.
ExampleOutcome cmd_example(int n, const RunOptions& options, std::ostream& log);
json to_json(const ExampleOutcome& o);

struct TheoremGrid {
    std::int64_t max_p = 31;
    std::int64_t max_q = 31;
    std::vector<int> m_values{2, 3, 4, 5};
};

struct TheoremRow {
    std::string suite;
    std::string instance;
    bool passed = false;
};

struct TheoremOutcome {
    std::vector<TheoremRow> rows;
    bool all_passed() const;
};

/// Valid (p, q, m): odd primes p != q up to the bounds, p a square mod q, p = 1 mod (m - 1).
std::vector<std::array<std::int64_t, 3>> grid_triples(const TheoremGrid& grid);

/// Identity, size, multiplier, duality, class-count and Gray self-duality suites over the grid.
/// Prints a per-suite summary table and every failing row to `log`.
TheoremOutcome cmd_theorems(const TheoremGrid& grid, std::ostream& log);
json to_json(const TheoremOutcome& o);

/// Input {"p": p, "matrix": [[...]]}, entries in [0, p). Output n, k, d, duality,
/// optional weight enumerator and the RREF generator matrix.
json cmd_analyze(const json& input, const Analyses& analyses, const Budget& budget);

/// Matrix of integers in [0, p). Throws InvalidParameter otherwise.
FpMatrix matrix_from_json(const json& j, std::uint32_t p);

}  // namespace qrring

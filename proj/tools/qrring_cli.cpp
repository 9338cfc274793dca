// Command-line front end: build | example | theorems | analyze.
//
// Exit codes: 0 success, 1 a published claim or property check failed, 2 invalid parameters.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qrring/error.hpp"
#include "qrring/workbench.hpp"

namespace {

using qrring::json;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw qrring::Error(qrring::ErrorKind::InvalidParameter, "cannot write " + out_path);
    f << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw qrring::Error(qrring::ErrorKind::InvalidParameter, "cannot read " + path);
    return json::parse(f);
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw qrring::Error(qrring::ErrorKind::InvalidParameter, "bad index '" + item + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic residue codes over F_p[u]/(u^m - u) and their Gray images"};
    app.require_subcommand(1);

    std::string out_path;
    qrring::Budget budget;
    bool infinity_last = false;
    app.add_option("--out", out_path, "Write JSON output to this file");
    app.add_option("--seed", budget.seed, "Seed for information-set selection");
    app.add_option("--budget-seconds", budget.seconds, "Time limit for information-set search");
    app.add_option("--exhaustive-threshold", budget.exhaustive_threshold,
                   "Enumerate all codewords (and weight enumerators) when p^k is at most this");
    app.add_flag("--infty-last", infinity_last, "Put the infinity coordinate of extended codes last");

    auto* build = app.add_subcommand("build", "Construct one code and analyze its Gray image");
    std::string request_path, subset_text = "1", kind_text = "Q", variant_text, v_text, v_file;
    std::int64_t p = 0, q = 0, m = 0;
    bool extended = false, weights = false, no_distance = false;
    build->add_option("--request", request_path, "JSON request file ('-' for stdin); other build options are ignored");
    build->add_option("-p", p, "Field characteristic");
    build->add_option("-q", q, "Code length (prime)");
    build->add_option("-m", m, "Ring parameter, u^m = u");
    build->add_option("--subset", subset_text, "Comma-separated indices in 1..m")->capture_default_str();
    build->add_option("--kind", kind_text, "Q, Q', S or S'")->capture_default_str();
    build->add_flag("--extended", extended, "Extend by the infinity coordinate");
    build->add_option("--variant", variant_text, "q3, q1-plain or q1-primed");
    build->add_option("--V", v_text, "Preset name example1..example5");
    build->add_option("--V-file", v_file, "JSON file holding an m x m matrix with entries in [0, p)");
    build->add_flag("--weight-enumerator", weights, "Also compute the weight enumerator");
    build->add_flag("--no-distance", no_distance, "Skip the minimum distance");

    auto* example = app.add_subcommand("example", "Reproduce a worked example and check its claims");
    int example_number = 0;
    example->add_option("number", example_number, "1..5")->required();

    auto* theorems = app.add_subcommand("theorems", "Run the identity and duality property suites over a grid");
    qrring::TheoremGrid grid;
    std::string m_list = "2,3,4,5";
    theorems->add_option("--max-p", grid.max_p)->capture_default_str();
    theorems->add_option("--max-q", grid.max_q)->capture_default_str();
    theorems->add_option("--m", m_list, "Comma-separated m values")->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "Analyze a generator matrix {\"p\": p, \"matrix\": [[...]]}");
    std::string matrix_path;
    bool analyze_weights = false;
    analyze->add_option("file", matrix_path, "JSON file ('-' for stdin)")->required();
    analyze->add_flag("--weight-enumerator", analyze_weights, "Also compute the weight enumerator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            qrring::CodeRequest r;
            if (!request_path.empty()) {
                r = qrring::request_from_json(read_json(request_path));
            } else {
                r.p = p;
                r.q = q;
                r.m = m;
                r.subset = parse_index_list(subset_text);
                r.kind = qrring::parse_kind(kind_text);
                r.extended = extended;
                if (!variant_text.empty()) r.extension_variant = qrring::parse_variant(variant_text);
                r.v_preset = v_text;
                if (!v_file.empty()) {
                    const json jm = read_json(v_file);
                    std::vector<std::vector<std::int64_t>> mat;
                    for (const auto& row : jm) mat.push_back(row.get<std::vector<std::int64_t>>());
                    r.v_matrix = mat;
                }
                r.analyses.weight_enumerator = weights;
                r.analyses.min_distance = !no_distance;
                r.budget = budget;
                r.infinity_last = infinity_last;
            }
            emit(qrring::to_json(qrring::cmd_build(r)), out_path);
            return 0;
        }
        if (*example) {
            const auto outcome = qrring::cmd_example(example_number, {budget, infinity_last}, std::cout);
            if (!out_path.empty()) emit(qrring::to_json(outcome), out_path);
            return outcome.all_passed() ? 0 : 1;
        }
        if (*theorems) {
            grid.m_values = parse_index_list(m_list);
            const auto outcome = qrring::cmd_theorems(grid, std::cout);
            if (!out_path.empty()) emit(qrring::to_json(outcome), out_path);
            return outcome.all_passed() ? 0 : 1;
        }
        if (*analyze) {
            qrring::Analyses a;
            a.weight_enumerator = analyze_weights;
            emit(qrring::cmd_analyze(read_json(matrix_path), a, budget), out_path);
            return 0;
        }
    } catch (const qrring::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == qrring::ErrorKind::InternalInvariant ? 1 : 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

// Command-line surface: single-germ analysis, family tables, configuration
// smoothability checks, and the oracle cross-check suite.
//
// Exit codes are a contract: 0 success, 1 criterion failure or oracle
// mismatch, 2 domain error (not isolated, guard exceeded, ...), 3 input
// error (bad polynomial text, bad configuration file).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "liminal/report.hpp"
#include "liminal/smoothing.hpp"
#include "liminal/verification.hpp"

namespace {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const liminal::ParseError*>(&e)) return 3;
    if (dynamic_cast<const liminal::SchemaError*>(&e)) return 3;
    return 2;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw liminal::DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GuardFlags {
    std::int64_t guard_degree = 200;
    std::int64_t guard_basis = 50000;

    liminal::AnalysisOptions options() const {
        liminal::AnalysisOptions opt;
        opt.limits.max_total_degree = guard_degree;
        opt.limits.max_basis = static_cast<std::size_t>(guard_basis);
        return opt;
    }
};

void add_guard_flags(CLI::App* cmd, GuardFlags& g) {
    cmd->add_option("--guard-degree", g.guard_degree, "abort basis computations beyond this degree");
    cmd->add_option("--guard-basis", g.guard_basis, "abort beyond this many basis polynomials");
}

// Re-embed f into an ambient ring with `vars` variables, appending fresh
// names for the unused coordinates.
liminal::Polynomial pad_variables(const liminal::Polynomial& f, std::size_t vars) {
    if (vars < f.nvars())
        throw liminal::DomainError("--vars is smaller than the number of variables used");
    if (vars == f.nvars()) return f;
    std::vector<std::string> names = f.var_names();
    std::size_t counter = 1;
    while (names.size() < vars) {
        std::string candidate = "z" + std::to_string(counter++);
        bool taken = false;
        for (const auto& n : names)
            if (n == candidate) taken = true;
        if (!taken) names.push_back(candidate);
    }
    std::vector<liminal::Term> terms;
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e = t.mon.exponents();
        e.resize(vars, 0);
        terms.push_back({liminal::Monomial(std::move(e)), t.coeff});
    }
    return liminal::Polynomial::from_terms(vars, std::move(terms), std::move(names));
}

int run_analyze(const std::string& poly_text, const std::string& format, std::size_t vars,
                const GuardFlags& g) {
    liminal::Polynomial f = liminal::parse_polynomial(poly_text);
    if (vars > 0) f = pad_variables(f, vars);
    if (f.is_zero()) {
        std::cerr << "error: the zero polynomial defines no germ\n";
        return 2;
    }
    liminal::AnalysisDocument doc = liminal::analyze_document(f, g.options());
    if (format == "text") std::cout << liminal::analysis_to_text(doc);
    else std::cout << liminal::analysis_to_json(doc).dump(2) << "\n";
    return 0;
}

int run_table(const liminal::TableRequest& req, const std::string& format, const GuardFlags& g) {
    auto rows = liminal::analyze_table(req, g.options());
    if (format == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json rj;
            rj["member"] = row.param;
            rj["report"] = liminal::analysis_to_json(row.doc);
            out.push_back(std::move(rj));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << liminal::table_to_csv(rows);
    }
    return 0;
}

int run_smooth_check(const std::string& path, const std::string& format, const GuardFlags& g) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw liminal::SchemaError(std::string("invalid JSON: ") + e.what(), "/");
    }
    liminal::Configuration config = liminal::parse_configuration(j, g.options());
    liminal::SmoothabilityVerdict verdict = liminal::check_smoothability(config);
    if (format == "text") {
        std::cout << "decision: " << liminal::decision_name(verdict.decision) << "\n";
        if (verdict.witness) {
            std::cout << "witness:";
            for (const auto& q : *verdict.witness) std::cout << " " << q.str();
            std::cout << "\n";
        }
        for (const auto& c : verdict.citations) std::cout << "cites: " << c << "\n";
        for (const auto& a : verdict.consumed_assertions)
            std::cout << "consumed: " << a << "\n";
        if (!verdict.reason.empty()) std::cout << "reason: " << verdict.reason << "\n";
    } else {
        std::cout << liminal::verdict_to_json(config, verdict).dump(2) << "\n";
    }
    switch (verdict.decision) {
        case liminal::Decision::Smoothable:
        case liminal::Decision::FirstOrderSmoothable: return 0;
        default: return 1;
    }
}

int run_oracle_verify(const liminal::OracleRunOptions& opt, bool verbose) {
    liminal::OracleRunResult result = liminal::run_oracle_verification(opt);
    std::size_t failed = result.failures();
    for (const auto& check : result.checks) {
        if (!check.pass)
            std::cout << "FAIL " << check.name << ": " << check.detail << "\n";
        else if (verbose)
            std::cout << "ok   " << check.name << "\n";
    }
    std::cout << (result.checks.size() - failed) << "/" << result.checks.size()
              << " oracle cross-checks passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of isolated hypersurface singularities "
                 "and first-order smoothability of global configurations"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "classify a single germ");
    std::string poly_text, poly_file, analyze_format = "json";
    std::size_t analyze_vars = 0;
    GuardFlags analyze_guards;
    analyze->add_option("--poly", poly_text, "polynomial text, e.g. \"x^2+y^3\"");
    analyze->add_option("--file", poly_file, "file containing the polynomial text");
    analyze->add_option("--vars", analyze_vars,
                        "ambient variable count (pads unused coordinates)");
    analyze->add_option("--format", analyze_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    add_guard_flags(analyze, analyze_guards);

    // table
    auto* table = app.add_subcommand("table", "analyze a built-in family");
    std::string family_name, table_format = "csv", b_pattern;
    liminal::TableRequest req;
    GuardFlags table_guards;
    table->add_option("--family", family_name, "fermat_cone, brieskorn, or example_2_10")
        ->required()
        ->check(CLI::IsMember({"fermat_cone", "brieskorn", "example_2_10"}));
    table->add_option("--n-min", req.n_min);
    table->add_option("--n-max", req.n_max);
    table->add_option("--d-min", req.d_min);
    table->add_option("--d-max", req.d_max);
    table->add_option("--k-min", req.k_min);
    table->add_option("--k-max", req.k_max);
    table->add_option("--b", b_pattern,
                      "brieskorn exponents, e.g. 2,2,3 or 2,2,2,2n (n swept over --n-min..--n-max)");
    table->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_guard_flags(table, table_guards);

    // smooth-check
    auto* smooth = app.add_subcommand("smooth-check", "decide smoothability of a configuration");
    std::string config_path, smooth_format = "json";
    GuardFlags smooth_guards;
    smooth->add_option("--file", config_path, "configuration JSON file")->required();
    smooth->add_option("--format", smooth_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    add_guard_flags(smooth, smooth_guards);

    // oracle-verify
    auto* oracle = app.add_subcommand("oracle-verify", "run the oracle cross-check suite");
    liminal::OracleRunOptions oracle_opt;
    bool oracle_verbose = false;
    oracle->add_option("--bound", oracle_opt.kernel_bound, "box bound for the kernel search");
    oracle->add_option("--seed", oracle_opt.seed, "seed for the random matrix sweep");
    oracle->add_option("--trials", oracle_opt.kernel_trials, "number of random matrices");
    oracle->add_option("--max-exponent", oracle_opt.max_exponent, "largest Brieskorn exponent");
    oracle->add_option("--max-vars", oracle_opt.max_vars, "largest Brieskorn variable count");
    oracle->add_option("--inject-fault", oracle_opt.inject_fault,
                       "corrupt the expected mu of one member (for testing the gate)");
    oracle->add_flag("--verbose", oracle_verbose, "also print passing checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (poly_text.empty() && poly_file.empty()) {
                std::cerr << "error: analyze needs --poly or --file\n";
                return 3;
            }
            std::string text = poly_text.empty() ? read_file(poly_file) : poly_text;
            return run_analyze(text, analyze_format, analyze_vars, analyze_guards);
        }
        if (table->parsed()) {
            if (family_name == "fermat_cone") req.family = liminal::Family::FermatCone;
            else if (family_name == "brieskorn") req.family = liminal::Family::Brieskorn;
            else req.family = liminal::Family::ExampleTwoTen;
            if (!b_pattern.empty()) {
                std::stringstream ss(b_pattern);
                std::string tok;
                while (std::getline(ss, tok, ',')) req.b_pattern.push_back(tok);
            }
            return run_table(req, table_format, table_guards);
        }
        if (smooth->parsed()) return run_smooth_check(config_path, smooth_format, smooth_guards);
        if (oracle->parsed()) return run_oracle_verify(oracle_opt, oracle_verbose);
    } catch (const liminal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include "cotangent/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace cotangent;
    CLI::App app{"Cotangent cohomology dimensions of rational surface singularities"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the structured JSON report");

    std::string path;
    std::size_t max_i = default_max_index;
    auto* analyze = app.add_subcommand("analyze", "Analyze a resolution graph file");
    analyze->add_option("path", path, "Graph file (JSON)")->required();
    analyze->add_option("--max-i", max_i, "Largest i for the T^i table")->check(CLI::NonNegativeNumber);
    analyze->add_flag("--json", as_json, "Emit the structured JSON report");

    long long d = 0;
    std::size_t order = 6;
    auto* series = app.add_subcommand("series", "Print c_{d-1,k}, Q_d and P_d coefficients");
    series->add_option("--d", d, "Multiplicity d >= 3")->required();
    series->add_option("--order", order, "Truncation order");
    series->add_flag("--json", as_json, "Emit the structured JSON report");

    std::size_t m = 0, k = 0, budget = default_tensor_budget;
    std::string coeffs = "trivial";
    bool hochschild = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force cohomology of the fat point Z_m");
    oracle->add_option("--m", m, "Fat point Z_m")->required();
    oracle->add_option("--k", k, "Cochain degree")->required();
    oracle->add_option("--coeffs", coeffs, "Coefficients")->check(CLI::IsMember({"trivial", "regular"}));
    oracle->add_flag("--hochschild", hochschild, "Full Hochschild complex instead of Harrison");
    oracle->add_option("--budget", budget, "Cap on n^k");
    oracle->add_flag("--json", as_json, "Emit the structured JSON report");

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
    selftest->add_flag("--json", as_json, "Emit the structured JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::exit_code(cli::Status::invalid_input);
    }

    cli::CommandResult result;
    if (*analyze) {
        result = cli::cmd_analyze(path, max_i);
    } else if (*series) {
        result = cli::cmd_series(d, order);
    } else if (*oracle) {
        result = cli::cmd_oracle(m, k, coeffs == "regular" ? cli::Coefficients::regular : cli::Coefficients::trivial,
                                 hochschild, budget);
    } else {
        result = cli::cmd_selftest();
    }
    std::cout << (as_json ? result.json_text() + "\n" : result.text());
    return result.exit_code();
}

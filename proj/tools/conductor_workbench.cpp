#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "conductor/cli/commands.hpp"

using conductor::cli::CommandResult;
using conductor::cli::Json;

namespace {

std::optional<Json> read_input(const std::string& path, CommandResult& error) {
    std::ifstream in(path);
    if (!in) {
        error = {Json{{"error", "cannot read input"}, {"path", path}}, conductor::cli::kMismatch};
        return std::nullopt;
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        error = {Json{{"error", "malformed JSON"}, {"path", path}, {"message", e.what()}}, conductor::cli::kMismatch};
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Base change conductors of tori and Euler characteristics of lattice complexes"};
    app.require_subcommand(1);
    app.fallthrough();  // --precision may follow the subcommand
    std::optional<int> precision;
    app.add_option("--precision", precision, "Number of stored pi-adic digits (overrides the input)")
        ->check(CLI::Range(1, 4096));

    std::string example;
    auto* examples = app.add_subcommand("examples", "Run a built-in worked example");
    examples->add_option("name", example, "lemma-4.3 | lemma-4.4 | corollary-4.5 | artin-crosscheck | gamma-chi")
        ->required();

    std::string file, torus, method = "discriminant";
    auto* conductor = app.add_subcommand("conductor", "Base change conductor of a torus");
    conductor->add_option("file", file, "Input JSON")->required();
    conductor->add_option("--torus", torus, "Torus name")->required();
    conductor->add_option("--method", method, "discriminant | lie-coker | artin-formula | resolution | all")
        ->check(CLI::IsMember({"discriminant", "lie-coker", "artin-formula", "resolution", "all"}));

    std::string complex_name;
    auto* complex = app.add_subcommand("complex", "Cohomology lengths, chi and gamma of a complex");
    complex->add_option("file", file, "Input JSON")->required();
    complex->add_option("--name", complex_name, "Complex name")->required();

    std::string lattice, filtration;
    auto* artin = app.add_subcommand("artin", "Artin conductor of a Galois lattice");
    artin->add_option("file", file, "Input JSON")->required();
    artin->add_option("--lattice", lattice, "Lattice name")->required();
    artin->add_option("--filtration", filtration, "Filtration name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage errors share the validation exit code.
        return app.exit(e) == 0 ? 0 : conductor::cli::kMismatch;
    }

    CommandResult result;
    if (examples->parsed()) {
        result = conductor::cli::run_examples(example, precision);
    } else if (auto doc = read_input(file, result)) {
        if (conductor->parsed()) result = conductor::cli::run_conductor(*doc, torus, method, precision);
        else if (complex->parsed()) result = conductor::cli::run_complex(*doc, complex_name, precision);
        else result = conductor::cli::run_artin(*doc, lattice, filtration, precision);
    }
    std::cout << result.output.dump(2) << "\n";
    return result.exit_code;
}

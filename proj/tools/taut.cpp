// Command-line front end: truth tables, tautology checks, proof synthesis
// and proof verification over the !/| formula language.

#include "taut/taut.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitSuccess = 0;   // tautology, valid proof, table printed
constexpr int kExitNegative = 1;  // counterexample found, proof invalid
constexpr int kExitError = 2;     // usage, syntax or input problem

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Formula arguments: the text itself, or "-" for standard input.
std::string formula_text(const std::string& arg) {
    if (arg == "-") return read_stream(std::cin);
    return arg;
}

std::string read_file_or_stdin(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw taut::Error("cannot open " + path);
    return read_stream(in);
}

std::string rtrimmed(std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
}

std::string centered(char c, std::size_t width) {
    std::size_t left = (width - 1) / 2;
    return std::string(left, ' ') + c + std::string(width - 1 - left, ' ');
}

int run_table(const std::string& text, taut::ConnectiveStyle style) {
    taut::Formula f = taut::parse(text);
    taut::TruthTable table = taut::truth_table(f);

    std::vector<std::string> headers;
    for (const taut::Letter& letter : table.letters()) headers.push_back(letter.name());
    headers.push_back(taut::render(f, style));

    std::vector<std::size_t> widths;
    for (const std::string& h : headers) widths.push_back(h.size());

    std::string header, separator;
    for (std::size_t c = 0; c < headers.size(); ++c) {
        if (c > 0) {
            header += " | ";
            separator += "-+-";
        }
        header += headers[c] + std::string(widths[c] - headers[c].size(), ' ');
        separator += std::string(widths[c], '-');
    }
    std::cout << rtrimmed(header) << "\n" << separator << "\n";

    for (std::size_t row = 0; row < table.rows(); ++row) {
        taut::Assignment a = table.assignment(row);
        std::string line;
        for (std::size_t c = 0; c < table.letters().size(); ++c) {
            if (c > 0) line += " | ";
            line += centered(taut::to_char(a.value_of(table.letters()[c])), widths[c]);
        }
        line += " | " + centered(taut::to_char(table.value(row)), widths.back());
        std::cout << rtrimmed(line) << "\n";
    }
    return kExitSuccess;
}

int run_check(const std::string& text) {
    taut::Verdict verdict = taut::is_true(taut::parse(text));
    if (verdict.is_tautology()) {
        std::cout << "tautology\n";
        return kExitSuccess;
    }
    std::cout << "counterexample: " << verdict.witness() << "\n";
    return kExitNegative;
}

int run_prove(const std::string& text, const std::string& out_path, bool self_check) {
    taut::Formula f = taut::parse(text);
    taut::SynthesisResult result = taut::prove(f);
    if (!result.is_proved()) {
        std::cout << "counterexample: " << result.witness() << "\n";
        return kExitNegative;
    }
    const taut::Proof& proof = result.proof();

    if (self_check) {
        taut::VerificationResult check = taut::verify(proof);
        if (!check.ok() || !(check.verified->proved_formula() == f)) {
            std::cerr << "error: self-check failed, the synthesized proof does not verify\n";
            return kExitError;
        }
    }

    std::string json = taut::proof_to_json_text(proof);
    if (out_path.empty() || out_path == "-") {
        std::cout << json;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw taut::Error("cannot write " + out_path);
        out << json;
    }
    std::cerr << "proof: " << proof.steps.size() << " steps\n";
    return kExitSuccess;
}

int run_verify(const std::string& path, taut::ConnectiveStyle style) {
    taut::Proof proof = taut::proof_from_json_text(read_file_or_stdin(path));
    taut::VerificationResult result = taut::verify(proof);
    if (result.ok()) {
        std::cout << "valid: proves "
                  << taut::render(result.verified->proved_formula(), style) << "\n";
        return kExitSuccess;
    }
    for (const taut::StepError& e : result.errors) std::cout << taut::to_string(e) << "\n";
    return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"propositional toolkit for the !/| fragment: every tautology "
                 "has a five-rule derivation, and this tool builds and checks them"};
    app.require_subcommand(1);

    bool unicode = false;
    std::string formula_arg;
    std::string proof_arg;
    std::string out_path;
    bool self_check = false;

    CLI::App* table = app.add_subcommand("table", "print the full truth table of a formula");
    table->add_option("formula", formula_arg, "formula text, or - for standard input")
        ->required();
    table->add_flag("--unicode", unicode, "render connectives as \xC2\xAC and \xE2\x88\xA8");

    CLI::App* check = app.add_subcommand(
        "check", "decide whether a formula is a tautology");
    check->add_option("formula", formula_arg, "formula text, or - for standard input")
        ->required();
    check->add_flag("--unicode", unicode, "render connectives as \xC2\xAC and \xE2\x88\xA8");

    CLI::App* prove = app.add_subcommand(
        "prove", "synthesize a derivation of a tautology as JSON");
    prove->add_option("formula", formula_arg, "formula text, or - for standard input")
        ->required();
    prove->add_option("-o,--output", out_path, "write the proof here instead of standard output");
    prove->add_flag("--self-check", self_check, "verify the synthesized proof before emitting it");
    prove->add_flag("--unicode", unicode, "render connectives as \xC2\xAC and \xE2\x88\xA8");

    CLI::App* verify = app.add_subcommand(
        "verify", "check a JSON proof file and report what it proves");
    verify->add_option("proof", proof_arg, "proof file, or - for standard input")->required();
    verify->add_flag("--unicode", unicode, "render connectives as \xC2\xAC and \xE2\x88\xA8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    const taut::ConnectiveStyle style =
        unicode ? taut::ConnectiveStyle::Unicode : taut::ConnectiveStyle::Ascii;

    try {
        if (app.got_subcommand(table)) return run_table(formula_text(formula_arg), style);
        if (app.got_subcommand(check)) return run_check(formula_text(formula_arg));
        if (app.got_subcommand(prove))
            return run_prove(formula_text(formula_arg), out_path, self_check);
        return run_verify(proof_arg, style);
    } catch (const taut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

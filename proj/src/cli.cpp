#include "effectkit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "effectkit/constructors.hpp"
#include "effectkit/enumeration.hpp"
#include "effectkit/report.hpp"
#include "effectkit/serialize.hpp"
#include "effectkit/structure.hpp"

namespace effectkit::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw InputError("cannot write " + out_path);
    file << text;
}

struct Options {
    std::string input;
    std::string format = "text";
    std::string out_path;
    int max_size = 0;
    int parallel = 1;
    bool no_pruning = false;
};

int cmd_validate(const Options& o, std::ostream& out)
{
    (void)load_input(o.input);
    out << "valid\n";
    return kSuccess;
}

int cmd_analyze(const Options& o, std::ostream& out)
{
    const auto report = analyze(load_input(o.input));
    emit(o.format == "json" ? to_json(report) : to_text(report), o.out_path, out);
    return kSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out)
{
    const auto d = decompose(load_input(o.input));
    emit(o.format == "json" ? to_json(d) : render(d), o.out_path, out);
    return kSuccess;
}

int cmd_lemmas(const Options& o, std::ostream& out)
{
    const auto reports = lemma_suite(load_input(o.input));
    std::string text;
    if (o.format == "json") {
        text = to_json(reports);
    } else {
        for (const auto& r : reports)
            text += render(r) + '\n';
    }
    emit(text, o.out_path, out);
    bool failed = false;
    for (const auto& r : reports)
        failed = failed || r.verdict == Verdict::Fail;
    return failed ? kDomainError : kSuccess;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    EnumerationOptions options;
    options.parallelism = o.parallel;
    options.symmetry_pruning = !o.no_pruning;
    const int max_n = o.max_size > 0 ? o.max_size : options.max_size;
    const auto result = run_survey(max_n, options);
    if (!o.out_path.empty())
        write_survey(result, o.out_path);
    out << survey_tsv(result.rows);
    int counterexamples = 0;
    for (const auto& row : result.rows)
        counterexamples += row.counterexamples;
    return counterexamples == 0 ? kSuccess : kDomainError;
}

int cmd_generate(const Options& o, std::ostream& out)
{
    emit(serialize_table(load_input(o.input).table()), o.out_path, out);
    return kSuccess;
}

int cmd_hasse(const Options& o, std::ostream& out)
{
    emit(hasse_dot(load_input(o.input)), o.out_path, out);
    return kSuccess;
}

}  // namespace

CheckedEffectAlgebra load_input(const std::string& argument)
{
    std::string_view arg = argument;
    if (arg.starts_with("spec:"))
        return from_spec(arg.substr(5));
    if (looks_like_spec(arg) && !std::filesystem::exists(argument))
        return from_spec(arg);
    return validate(parse_table(read_file(argument)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite effect algebra workbench"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("input", o.input, what)->required();
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write output to PATH"); };
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
    };
    const std::string input_help = "JSON table file or constructor spec (chain:N, hsum:L1,L2,..., prod:A,B, diamond)";

    auto* validate_cmd = app.add_subcommand("validate", "Check the effect algebra axioms");
    add_input(validate_cmd, input_help);

    auto* analyze_cmd = app.add_subcommand("analyze", "Atoms, sharp elements, homogeneity, lattice, isotropy");
    add_input(analyze_cmd, input_help);
    add_format(analyze_cmd, {"text", "json"});
    add_out(analyze_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "Split into a horizontal sum of chains");
    add_input(decompose_cmd, input_help);
    add_format(decompose_cmd, {"text", "json"});
    add_out(decompose_cmd);

    auto* lemmas_cmd = app.add_subcommand("lemmas", "Check every lemma against the algebra");
    add_input(lemmas_cmd, input_help);
    add_format(lemmas_cmd, {"text", "json"});
    add_out(lemmas_cmd);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate all algebras up to isomorphism and survey them");
    enumerate_cmd->add_option("--max-size", o.max_size, "Largest carrier size")->check(CLI::Range(2, kSearchCapacity));
    enumerate_cmd->add_option("--parallel", o.parallel, "Worker threads")->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--no-pruning", o.no_pruning, "Disable symmetry pruning (brute-force baseline)");
    add_format(enumerate_cmd, {"tsv"});
    add_out(enumerate_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "Write the canonical JSON table of a constructor spec");
    add_input(generate_cmd, input_help);
    add_out(generate_cmd);

    auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram as DOT");
    add_input(hasse_cmd, input_help);
    add_format(hasse_cmd, {"dot"});
    add_out(hasse_cmd);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(o, out);
        if (*analyze_cmd)
            return cmd_analyze(o, out);
        if (*decompose_cmd)
            return cmd_decompose(o, out);
        if (*lemmas_cmd)
            return cmd_lemmas(o, out);
        if (*enumerate_cmd)
            return cmd_enumerate(o, out);
        if (*generate_cmd)
            return cmd_generate(o, out);
        if (*hasse_cmd)
            return cmd_hasse(o, out);
    } catch (const ValidationError& e) {
        err << "invalid: " << e.what() << '\n';
        return kDomainError;
    } catch (const DecomposeError& e) {
        err << "decompose: " << e.what() << '\n';
        return kDomainError;
    } catch (const SizeTooLarge& e) {
        err << e.what() << '\n';
        return kDomainError;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kInputError;
    } catch (const ConstructorError& e) {
        err << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        err << e.what() << '\n';
        return kInputError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace effectkit::cli

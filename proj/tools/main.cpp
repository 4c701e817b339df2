// Command-line front end: check / build / decompose / roundtrip on JSON
// structure-constant documents. Exit codes: 0 pass, 1 fail, 2 error.
#include "superlie/document.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace superlie;

namespace {

int emit(const CliReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        bool verbose = std::getenv("SUPERLIE_VERBOSE") != nullptr;
        std::cout << rep.to_text(verbose);
    }
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with short sl2 Lie superalgebras and J-ternary data"};
    app.set_help_flag("--help", "print help");  // keep -h free for the sl2 element flag
    app.require_subcommand(1);
    app.fallthrough();  // --report may follow the subcommand

    std::string format = "text";
    app.add_option("--report", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string path, kind = "lie", target, out_path;
    std::string e_name, f_name, h_name;

    auto* check = app.add_subcommand("check", "verify the axioms of a structure-constant table");
    check->add_option("file", path, "input document")->required();
    check->add_option("--kind", kind, "lie | jordan | module | ternary")
        ->check(CLI::IsMember({"lie", "jordan", "module", "ternary"}));

    auto* build = app.add_subcommand("build", "construct tkk/tag/bs/innder from a ternary seed");
    build->add_option("file", path, "input document")->required();
    build->add_option("--target", target, "tkk | tag | bs | innder")
        ->required()
        ->check(CLI::IsMember({"tkk", "tag", "bs", "innder"}));
    build->add_option("-o,--out", out_path, "write the constructed algebra here");

    auto* dec = app.add_subcommand("decompose", "short decomposition and ternary extraction");
    dec->add_option("file", path, "input document")->required();
    dec->add_option("--e", e_name, "basis element acting as e");
    dec->add_option("--f", f_name, "basis element acting as f");
    dec->add_option("--h", h_name, "basis element acting as h");

    auto* rt = app.add_subcommand("roundtrip", "tag + re-extraction, or phi onto a Lie input");
    rt->add_option("file", path, "input document")->required();

    CLI11_PARSE(app, argc, argv);

    auto opt = [](const std::string& s) {
        return s.empty() ? std::optional<std::string>{} : std::optional<std::string>{s};
    };
    if (check->parsed()) return emit(cmd_check(path, kind), format);
    if (build->parsed()) return emit(cmd_build(path, target, out_path), format);
    if (dec->parsed())
        return emit(cmd_decompose(path, opt(e_name), opt(f_name), opt(h_name)), format);
    return emit(cmd_roundtrip(path), format);
}

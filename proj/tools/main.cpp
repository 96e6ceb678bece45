#include <iostream>

#include <CLI11.hpp>

#include "qgroupoid/commands.hpp"
#include "qgroupoid/errors.hpp"

using namespace qgroupoid;

namespace {

std::optional<json> json_option(const std::string& text, const char* flag) {
    if (text.empty()) return std::nullopt;
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum groupoids from relative matched pairs of finite groups"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string reps_i, reps_j, normal;

    auto common = [&](CLI::App* sub, bool needs_pair) {
        sub->add_option("--input", cfg.input, needs_pair ? "pair descriptor JSON" : "group JSON")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--max-order", cfg.max_order, "largest group order accepted");
        if (needs_pair) {
            sub->add_option("--reps-I", reps_i, "JSON list of K/S coset representatives");
            sub->add_option("--reps-J", reps_j, "JSON list of H/S coset representatives");
        }
    };

    auto* enumerate = app.add_subcommand("enumerate", "list the relative matched pairs of a group");
    common(enumerate, false);
    enumerate->add_flag("--all", cfg.all, "one line per pair instead of per signature");
    enumerate->add_option("--out", cfg.out, "write the full listing as JSON");

    auto* build = app.add_subcommand("build", "write CT, CT', the presented algebras and the pairing");
    common(build, true);
    build->add_option("--out", cfg.out, "output directory")->required();

    auto* verify = app.add_subcommand("verify", "run every verifier on a pair or an exported algebra");
    common(verify, true);
    verify->add_option("--json-report", cfg.json_report, "also write the report as JSON");
    verify->add_option("--crossed-product-guard", cfg.suite.crossed_product_guard);
    verify->add_option("--action-guard", cfg.suite.action_guard);

    auto* frattini = app.add_subcommand("frattini", "pair (N, N_G(P)) for a normal N and a Sylow P of N");
    common(frattini, false);
    frattini->add_option("--normal", normal, "JSON list of generators of N")->required();
    frattini->add_option("--p", cfg.p, "prime dividing |N|")->required();
    frattini->add_option("--out", cfg.out, "pair descriptor file");

    auto* exporter = app.add_subcommand("export", "write one structure as JSON");
    common(exporter, true);
    exporter->add_option("--what", cfg.what, "CT, CT_prime, presented_HK, presented_KH, pairing, crossed_product, pair")
        ->required()
        ->check(CLI::IsMember({"CT", "CT_prime", "presented_HK", "presented_KH", "pairing", "crossed_product", "pair"}));
    exporter->add_option("--out", cfg.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        cfg.reps_i = json_option(reps_i, "--reps-I");
        cfg.reps_j = json_option(reps_j, "--reps-J");
        if (!normal.empty()) cfg.normal_gens = *json_option(normal, "--normal");
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }

    auto command = enumerate->parsed() ? cmd_enumerate
                   : build->parsed()   ? cmd_build
                   : verify->parsed()  ? cmd_verify
                   : frattini->parsed() ? cmd_frattini
                                        : cmd_export;
    return run_command(command, cfg, std::cout, std::cerr);
}

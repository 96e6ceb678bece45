#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qgroupoid/io.hpp"
#include "qgroupoid/suite.hpp"

namespace qgroupoid {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitInput = 2 };

struct RunConfig {
    std::string input;
    std::string out;  // file or directory; empty means stdout where that makes sense
    std::optional<json> reps_i, reps_j;
    std::size_t max_order = kDefaultMaxOrder;
    std::string json_report;
    bool all = false;     // enumerate: list every pair instead of one per signature
    bool verbose = false;
    std::string what;     // export target
    json normal_gens;     // frattini
    int p = 0;
    SuiteOptions suite;
};

int cmd_enumerate(const RunConfig& cfg, std::ostream& out);
// Writes CT.json, CT_prime.json, presented_HK.json, presented_KH.json and pairing.json into cfg.out.
int cmd_build(const RunConfig& cfg, std::ostream& out);
// A pair descriptor runs verify_pair; an exported algebra file runs the matching verifier.
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_frattini(const RunConfig& cfg, std::ostream& out);
// what: CT, CT_prime, presented_HK, presented_KH, pairing, crossed_product or pair.
int cmd_export(const RunConfig& cfg, std::ostream& out);

// Runs a command, mapping input errors to exit code 2 with a message on err.
int run_command(int (*command)(const RunConfig&, std::ostream&), const RunConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace qgroupoid

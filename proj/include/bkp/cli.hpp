#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "bkp/npoint_formulas.hpp"

namespace bkp {

enum ExitCode : int {
    kExitPass = 0,
    kExitDisagree = 1,
    kExitInputError = 2,
};

struct RunConfig {
    std::string command;  // npoint | verify | convert
    std::string coords_path;
    int n = 1;
    std::optional<int> max_weight;
    std::string formula = "all";  // wangyang | embedded | oracle | all
    int window_cap = 0;           // 0: automatic
    std::uint64_t seed = 7;
    int instances = 1;
    std::string format = "json";  // json | csv
    std::string out_path;         // empty: the output stream
    std::string check;            // a single verify check
    std::string suite;            // "full"
    int k = 3;

    // Lets tests tamper with a route's table before routes are compared.
    std::function<void(const std::string& route, NPointTable&)> table_hook;
};

// Names accepted by --check.
const std::vector<std::string>& verify_check_names();

// Runs a command; reports go to `out` (or the file named in out_path),
// diagnostics to `err`.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_npoint(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_convert(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bkp

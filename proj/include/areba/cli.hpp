#ifndef AREBA_CLI_HPP
#define AREBA_CLI_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "areba/bench.hpp"

namespace areba {

/// Malformed command line; the message describes the usage error.
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when --help is requested; carries the rendered help text.
struct CliHelp {
    std::string text;
};

/// Parses benchmark flags (without the program name) into an experiment
/// configuration. Throws CliError on unknown flags, bad enum values,
/// non-numeric parameters, a missing --dataset, --drift without
/// --drift-step, or csv without --csv-path/--label-col.
ExperimentConfig parse_cli(const std::vector<std::string>& args);

/// The benchmark tool's usage text.
std::string cli_help();

}  // namespace areba

#endif

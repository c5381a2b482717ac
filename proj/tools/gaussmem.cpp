// Copyright 2026 The gaussmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gaussmem: compare storing squeezing against storing entanglement in two
// noisy quantum memories, sweep parameter grids, and run the property suites.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "gaussmem/cli/commands.hpp"
#include "gaussmem/cli/config.hpp"
#include "gaussmem/cli/verify.hpp"

namespace {

using namespace gaussmem;
using namespace gaussmem::cli;

struct Overrides {
    std::string config;
    std::string out;
    std::string format;
    std::string convention;
    std::string grid;
    std::optional<std::uint64_t> seed;
};

// Loads the config file and applies command-line flags on top of it.
RunConfig resolve(const Overrides &o) {
    RunConfig config = load_config(o.config);
    if (!o.out.empty()) config.output_path = o.out;
    if (o.format == "csv") config.format = OutputFormat::Csv;
    if (o.format == "json") config.format = OutputFormat::Json;
    if (!o.convention.empty()) config.convention = *parse_convention(o.convention);
    if (o.seed) config.seed = *o.seed;
    if (!o.grid.empty()) {
        const std::vector<int> steps = parse_grid(o.grid);
        if (steps.size() != config.axes.size()) {
            throw ConfigError("--grid gives " + std::to_string(steps.size()) + " sizes but the config has " +
                              std::to_string(config.axes.size()) + " sweep axes");
        }
        for (std::size_t i = 0; i < steps.size(); ++i) config.axes[i].steps = steps[i];
    }
    config.validate();
    return config;
}

void add_run_flags(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config, "configuration file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "output file (sweep data, or the compare report)");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--convention", o.convention, "loss-noise term for cell parameters")
        ->check(CLI::IsMember({"literal", "attenuation", "loss"}));
    cmd->add_option("--seed", o.seed, "seed recorded in JSON sweep output");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-mode Gaussian model of squeezing versus entanglement storage in noisy memories"};
    app.require_subcommand(1);

    Overrides compare_opts;
    CLI::App *compare = app.add_subcommand("compare", "evaluate both storage scenarios for one configuration");
    add_run_flags(compare, compare_opts);

    Overrides sweep_opts;
    CLI::App *sweep = app.add_subcommand("sweep", "evaluate a one- or two-axis parameter grid");
    add_run_flags(sweep, sweep_opts);
    sweep->add_option("--grid", sweep_opts.grid, "grid sizes, e.g. 25x25");

    std::string suite_name = "all";
    std::uint64_t verify_seed = 20260101;
    CLI::App *verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", suite_name, "core, criteria, appendix, heuristics or all")
        ->check(CLI::IsMember({"core", "criteria", "appendix", "heuristics", "all"}));
    verify->add_option("--seed", verify_seed, "seed for the random configurations");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compare) return cmd_compare(resolve(compare_opts), std::cout, std::cerr);
        if (*sweep) return cmd_sweep(resolve(sweep_opts), std::cout, std::cerr);
        return cmd_verify(*parse_suite(suite_name), verify_seed, std::cout);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

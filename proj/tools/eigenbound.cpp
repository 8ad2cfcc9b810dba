// SPDX-License-Identifier: Apache-2.0
//
// eigenbound <experiment> --config file.json [--out dir] [--eps ...] [--q ...] [--seed n]
// eigenbound list

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigenbound/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for eigenvalue bounds of Schrodinger operators "
                 "with complex potentials"};
    app.require_subcommand(0, 1);

    std::string experiment;
    std::string config_path;
    std::string out_dir;
    std::vector<double> eps;
    double q = 0.0;
    int d = 0;
    int grid_points = 0;
    std::int64_t seed = -1;

    app.add_option("experiment", experiment, "experiment name (see `eigenbound list`)");
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--eps", eps, "sweep values, descending, in (0, 0.5]");
    app.add_option("--q", q, "Lebesgue exponent");
    app.add_option("--d", d, "dimension");
    app.add_option("--grid", grid_points, "grid points per axis override");
    app.add_option("--seed", seed, "random seed");

    CLI::App* list_cmd = app.add_subcommand("list", "list available experiments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    if (list_cmd->parsed() || experiment == "list") {
        std::cout << eigenbound::list_experiments();
        return 0;
    }
    if (experiment.empty()) {
        std::cerr << "error: no experiment given; try `eigenbound list`\n";
        return 1;
    }

    try {
        eigenbound::ExperimentConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot open config file '" << config_path << "'\n";
                return 1;
            }
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::parse_error& ex) {
                std::cerr << "error: config parse failure: " << ex.what() << '\n';
                return 1;
            }
            cfg = eigenbound::config_from_json(j);
        }
        cfg.experiment = experiment;
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!eps.empty()) cfg.eps_list = eps;
        if (q > 0.0) cfg.q = q;
        if (d > 0) cfg.d = d;
        if (grid_points > 0) cfg.grid_points = grid_points;
        if (seed >= 0) cfg.seed = std::uint64_t(seed);
        const int code = eigenbound::run(cfg);
        if (code == 2)
            std::cerr << "certificate violation under fixed constants (exit 2)\n";
        return code;
    } catch (const eigenbound::ConfigError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}

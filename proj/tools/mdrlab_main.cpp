// mdrlab: sweeps and randomized campaigns for correlation-function forms of
// uncertainty and measurement-disturbance relations.
//
// Exit codes: 0 pass, 1 hard violation, 2 configuration or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mdrlab/harness.hpp"

namespace {

constexpr int kExitConfig = 2;

void print_summary(const mdrlab::CampaignReport &r) {
    std::cout << "mode=" << mdrlab::to_string(r.mode) << " seed=" << r.seed << " trials=" << r.trials
              << " worst_margin=" << mdrlab::format_number(r.worst_margin) << " hard=" << r.hard_count()
              << " findings=" << r.finding_count() << " pass=" << (r.pass ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"mdrlab: correlation-function tests of measurement-disturbance relations"};
    app.set_help_flag("-h,--help", "Print this help message and exit");

    std::string mode_name;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials, grid;
    std::optional<double> tol_identity, tol_ineq;
    std::optional<std::string> out_csv, out_json;
    std::string config_path;

    app.add_option("mode", mode_name, "fig2 | chsh | fuzz-eq15 | fuzz-thm1 | fuzz-rs | fuzz-thm2 | vertex");
    app.add_option("--seed", seed, "Campaign seed");
    app.add_option("--trials", trials, "Random trials for fuzz modes");
    app.add_option("--grid", grid, "Sweep resolution (grid points per axis)");
    app.add_option("--tol-identity", tol_identity, "Tolerance for identities");
    app.add_option("--tol-ineq", tol_ineq, "Tolerance for inequalities");
    app.add_option("--out-csv", out_csv, "Write the sweep table here");
    app.add_option("--out-json", out_json, "Write the campaign report here");
    app.add_option("--config", config_path, "JSON configuration; flags override its fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        mdrlab::RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                throw mdrlab::ConfigError("cannot read config file " + config_path);
            }
            mdrlab::Json j;
            try {
                j = mdrlab::Json::parse(in);
            } catch (const nlohmann::json::exception &e) {
                throw mdrlab::ConfigError(std::string("config is not valid JSON: ") + e.what());
            }
            cfg = mdrlab::RunConfig::from_json(j, cfg);
        } else if (mode_name.empty()) {
            throw mdrlab::ConfigError("a mode is required");
        }
        if (!mode_name.empty()) {
            auto mode = mdrlab::parse_mode(mode_name);
            if (!mode) {
                throw mdrlab::ConfigError("unknown mode '" + mode_name + "'");
            }
            cfg.mode = *mode;
        }
        if (seed) cfg.seed = *seed;
        if (trials) cfg.trials = *trials;
        if (grid) cfg.grid_points = *grid;
        if (tol_identity) cfg.tol_identity = *tol_identity;
        if (tol_ineq) cfg.tol_inequality = *tol_ineq;
        if (out_csv) cfg.out_csv = *out_csv;
        if (out_json) cfg.out_json = *out_json;

        mdrlab::RunOutcome outcome = mdrlab::run(cfg);
        print_summary(outcome.report);
        return outcome.exit_code;
    } catch (const mdrlab::ConfigError &e) {
        std::cerr << "mdrlab: " << e.what() << "\n";
        return kExitConfig;
    } catch (const mdrlab::IoError &e) {
        std::cerr << "mdrlab: " << e.what() << "\n";
        return kExitConfig;
    }
}

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "minnaert/cli.hpp"
#include "minnaert/parallel.hpp"

int main(int argc, char** argv) {
    using namespace minnaert;
    CLI::App app{"Minnaert bubble spectra, resonances and scattered fields"};
    app.require_subcommand(1);
    std::string config_path;
    cli::Options opts;
    double tol = 0.0;
    app.add_option("--config", config_path, "INI config file with [medium], [scene], [sweep], [output]");
    app.add_option("--out", opts.out_dir, "output directory (overrides [output] dir)");
    auto* tol_opt = app.add_option("--tol", tol, "tolerance override for the oracle families")->check(CLI::PositiveNumber);
    app.add_flag("--strict", opts.strict, "treat precondition warnings as errors");
    const std::pair<const char*, const char*> commands[] = {
        {"spectra", "Helmholtz and elastic spectra over the (n, k) grid"},
        {"resonance", "first-order Minnaert resonance and |lambda_n(omega)| sweep"},
        {"oracle", "compare spectra with surface quadrature; exit 1 outside tolerance"},
        {"field", "scattered and incident field on the grid at field_omega"},
        {"timedomain", "band-limited time traces and residue approximation per observer"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();
    CLI11_PARSE(app, argc, argv);

    if (*tol_opt) opts.tol = tol;
    opts.threads = worker_count_from_env();
    RunConfig config;
    try {
        if (!config_path.empty()) config = load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kInvalidInput;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "spectra") return cli::cmd_spectra(config, opts, std::cerr);
    if (cmd == "resonance") return cli::cmd_resonance(config, opts, std::cerr);
    if (cmd == "oracle") return cli::cmd_oracle(config, opts, std::cerr);
    if (cmd == "field") return cli::cmd_field(config, opts, std::cerr);
    return cli::cmd_timedomain(config, opts, std::cerr);
}

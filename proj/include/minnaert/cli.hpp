#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "minnaert/config.hpp"

namespace minnaert::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kRuntimeError = 3 };

struct Options {
    std::string out_dir;        // overrides [output] dir when non-empty
    std::optional<double> tol;  // overrides every oracle tolerance
    bool strict = false;        // escalates precondition warnings to errors
    unsigned threads = 1;
};

// Each command validates the config, writes its files under the output directory and
// returns an ExitCode. Diagnostics go to `log`.
int cmd_spectra(const RunConfig& config, const Options& opts, std::ostream& log);
int cmd_resonance(const RunConfig& config, const Options& opts, std::ostream& log);
int cmd_oracle(const RunConfig& config, const Options& opts, std::ostream& log);
int cmd_field(const RunConfig& config, const Options& opts, std::ostream& log);
int cmd_timedomain(const RunConfig& config, const Options& opts, std::ostream& log);

// Fixed-width scientific notation with 17 significant digits.
std::string csv_number(double v);

}  // namespace minnaert::cli

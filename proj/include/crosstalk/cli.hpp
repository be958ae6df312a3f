#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "crosstalk/io.hpp"
#include "crosstalk/spectra.hpp"

namespace crosstalk {

// Exit codes reported by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitEngine = 3;
inline constexpr int kExitIo = 4;

struct RunConfig {
    enum class Command { fig2, fig3a, fig3b, fig4, fig5, scan, point, verify };
    enum class Format { csv, json };

    Command command = Command::point;
    SystemParams params;  // defaults are the standard figure parameter set
    ScanAxis axis = ScanAxis::probe_detuning;
    double lo = -10.0;
    double hi = 20.0;
    int count = 601;
    Engine engine = Engine::analytic;
    std::string output = "-";  // "-" writes to the provided stream
    Format format = Format::csv;
    std::optional<double> scale_A_MHz;
    std::optional<IntegrationConfig> integration;  // defaults_for(params) if unset
};

// Executes one command; scan-style output goes to `output` (or `out` when
// output == "-"), human-readable point/verify results go to `out`,
// diagnostics to `err`. Returns an exit code from the table above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace crosstalk

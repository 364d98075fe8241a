#pragma once

// Command implementations behind the `neile` executable. Each returns a
// machine record {command, inputs, outputs, tolerances, version}, a human
// summary and an exit code; errors surface as exceptions (ParseError,
// DomainError, InfeasibleError) and are mapped to exit codes by the driver.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "neile/neile_geometry.hpp"

namespace neile {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitDomain = 3 };

struct GlobalOptions {
    bool json = false;
    std::uint64_t seed = 42;
    std::optional<double> tol;
};

struct CommandOutput {
    nlohmann::json record;
    std::string text;
    int exit_code = kExitOk;

    /// The JSON record (dumped with 2-space indent) or the human text.
    std::string render(bool json) const;
};

/// A variety point from one token (lambda) or two tokens (z w).
NeilePoint parse_point(const std::vector<std::string>& tokens);

/// "blaschke" text "mu;a1;a2;..." (zeros a_i), "series" text "c0;c1;...",
/// presets "lower-bound" and "zero".
FlatOriginFunction parse_function(const std::string& kind, const std::string& text);

/// One point per non-empty line: "lambda" or "z w". '#' starts a comment.
std::vector<NeilePoint> read_points(const std::string& path);

CommandOutput cmd_distance(const std::string& kind, const std::vector<std::string>& points,
                           const GlobalOptions& g);
CommandOutput cmd_metric(const std::vector<std::string>& args, const GlobalOptions& g);
CommandOutput cmd_interpolate(const std::vector<std::string>& args, bool solve, const GlobalOptions& g);

struct ExtendOptions {
    FlatOriginFunction function = FlatOriginFunction::series({0.0});
    std::string function_text = "zero";
    std::vector<NeilePoint> points;  ///< empty: eight seeded points
    bool general = false;
    int samples = 10000;
};
CommandOutput cmd_extend(const ExtendOptions& options, const GlobalOptions& g);

/// Writes the CSV to `out` ("-" for none) and summarizes it.
CommandOutput cmd_grid(const std::string& lambda, const std::string& delta, int radii, int angles,
                       const std::string& out, const GlobalOptions& g);
std::string grid_csv(Complex lambda, Complex delta, int radii, int angles);

CommandOutput cmd_verify(const std::string& profile, std::uint64_t seed, bool inject_fault,
                         const std::optional<std::string>& json_out, const GlobalOptions& g);

}  // namespace neile

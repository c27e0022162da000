#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lyap/spectrum.hpp"
#include "lyap/systems.hpp"

namespace lyap::cli {

enum class MethodChoice { continuous, standard, both };

MethodChoice parse_method(std::string_view s);

/// Exit statuses of the runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIntegration = 3;

struct RunConfig {
    std::string system;
    MethodChoice method = MethodChoice::both;
    double h = 0.01;
    double t_end = 1000.0;
    std::optional<Vector> x0;
    int record_every = 25;
    std::filesystem::path out_dir = ".";
    /// Per-exponent offsets applied only in the generated gnuplot script.
    std::vector<double> shift;
    std::optional<std::uint64_t> seed; // reserved; all systems are deterministic
};

/// Default output directory: $LYAP_OUT if set, else the working directory.
std::filesystem::path default_out_dir();

/// `t,inv_t,lambda_1,...,lambda_n`, 17 significant digits, no timestamps.
std::string format_csv(const SpectrumSeries& series);

/// Final-state record of one run.
struct Summary {
    std::string system;
    Method method = Method::continuous;
    double h = 0.0;
    double t_end = 0.0;
    double t_final = 0.0;
    std::vector<double> final_exponents;
    double sum_rule_residual = 0.0;
    double wall_seconds = 0.0;
    /// max |λ| at the final row and at the row closest to t_final/10.
    double max_abs_final = 0.0;
    double max_abs_decade_ago = 0.0;
    std::optional<double> max_deviation_from_known;
    std::string status = "ok";
    std::string error;
};

Summary summarize(const SystemSpec& system, const RunResult& run, double h, double t_end);

/// One `key=value` per line.
std::string format_summary(const Summary& s);

/// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::filesystem::path& path, std::string_view content);

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_list(std::ostream& out);

} // namespace lyap::cli

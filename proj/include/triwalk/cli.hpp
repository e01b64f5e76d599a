#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "triwalk/types.hpp"
#include "triwalk/walk.hpp"

namespace triwalk::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kInvalidPhysicalInput = 3,
};

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------
// Qubit syntax: three comma-separated complex numbers, each `a`, `bi`,
// `a+bi` or `a-bi` with decimal literals (`i` alone means 1i).

[[nodiscard]] std::optional<Complex> parse_complex(std::string_view text);
[[nodiscard]] std::optional<std::array<Complex, 3>> parse_qubit_amplitudes(std::string_view text);

// Largest accepted | ||q||^2 - 1 | for a qubit typed on the command line;
// accepted input is rescaled onto the unit sphere.
inline constexpr double kCliNormTolerance = 1e-6;

// ---------------------------------------------------------------------------
// CSV

// 17 significant digits; parses back to the identical double.
[[nodiscard]] std::string format_double(double v);

// Header n,p_total,p_L,p_0,p_R.
void write_distribution_csv(std::ostream& os, std::span<const SiteProbability> rows);
[[nodiscard]] std::vector<SiteProbability> read_distribution_csv(std::istream& is);

// Header t,p0.
void write_trace_csv(std::ostream& os, std::span<const double> p0);

// Generic writer: header row then rows of doubles.
void write_table_csv(std::ostream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

// ---------------------------------------------------------------------------
// Run manifest written next to every set of output files.

struct RunManifest {
    std::string command;
    std::string version = kVersion;
    // Command-line flags (without the leading dashes) needed to rerun.
    std::map<std::string, std::string> arguments;
    // Informational settings: tolerances, grid size.
    nlohmann::json settings = nlohmann::json::object();
    // Output file name -> SHA-256 of its bytes.
    std::map<std::string, std::string> outputs;

    friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

[[nodiscard]] nlohmann::json to_json(const RunManifest& m);
[[nodiscard]] RunManifest manifest_from_json(const nlohmann::json& j);

[[nodiscard]] std::string sha256_hex(std::string_view bytes);
[[nodiscard]] std::string sha256_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Minimal SVG output.

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<std::pair<double, double>> points;
    std::optional<double> reference_y;  // dashed horizontal line
    bool log_y = false;
    bool markers = false;
};

[[nodiscard]] std::string render_line_plot(const LinePlot& plot);

// Row-major values (rows = time, columns = site). Darker means larger.
struct Heatmap {
    std::string title;
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::vector<double> values;
    double x_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;
};

[[nodiscard]] std::string render_heatmap(const Heatmap& map);

}  // namespace triwalk::cli

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "triwalk/cli.hpp"
#include "triwalk/spectral.hpp"
#include "triwalk/stationary.hpp"
#include "triwalk/timeavg.hpp"
#include "triwalk/verify.hpp"
#include "triwalk/weaklimit.hpp"

namespace triwalk::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kHeatmapMaxCells = 300;
constexpr const char* kManifestName = "manifest.json";

// Distinguishes the exit paths that are not plain usage errors.
struct PhysicalInputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

QubitState parse_qubit(const std::string& text) {
    const auto amps = parse_qubit_amplitudes(text);
    if (!amps) throw CLI::ValidationError("--qubit", "cannot parse '" + text + "'");
    const double norm_sq = std::norm((*amps)[0]) + std::norm((*amps)[1]) + std::norm((*amps)[2]);
    if (std::abs(norm_sq - 1.0) > kCliNormTolerance) {
        std::ostringstream os;
        os.precision(10);
        os << "qubit is not normalized: |q|^2 = " << norm_sq;
        throw PhysicalInputFailure(os.str());
    }
    return QubitState::normalized((*amps)[0], (*amps)[1], (*amps)[2]);
}

std::size_t grid_size_from_env() {
    const char* raw = std::getenv("TRIWALK_GRID");
    if (raw == nullptr || *raw == '\0') return QuadratureGrid::kDefaultSize;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v < QuadratureGrid::kMinimumSize) {
        throw CLI::ValidationError("TRIWALK_GRID", std::string("expected an integer >= ") +
                                                       std::to_string(QuadratureGrid::kMinimumSize) +
                                                       ", got '" + raw + "'");
    }
    return static_cast<std::size_t>(v);
}

class OutputSet {
public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw std::runtime_error("cannot create " + dir_.string() + ": " + ec.message());
    }

    void add(const std::string& name, const std::string& bytes) {
        write_bytes(dir_ / name, bytes);
        manifest_.outputs[name] = sha256_hex(bytes);
    }

    RunManifest& manifest() { return manifest_; }
    const fs::path& dir() const { return dir_; }

    fs::path finish() {
        const fs::path path = dir_ / kManifestName;
        write_bytes(path, to_json(manifest_).dump(2) + "\n");
        return path;
    }

    static void write_bytes(const fs::path& path, const std::string& bytes) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f || !f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
            throw std::runtime_error("cannot write " + path.string());
        }
    }

private:
    fs::path dir_;
    RunManifest manifest_;
};

// Average-pools a (rows x cols) grid down to at most kHeatmapMaxCells per side.
Heatmap pooled_heatmap(const std::vector<std::vector<double>>& rows, Site x_min, Site x_max) {
    Heatmap map;
    const std::size_t in_rows = rows.size();
    const std::size_t in_cols = in_rows ? rows.front().size() : 0;
    const std::size_t ry = (in_rows + kHeatmapMaxCells - 1) / kHeatmapMaxCells;
    const std::size_t rx = (in_cols + kHeatmapMaxCells - 1) / kHeatmapMaxCells;
    map.rows = ry ? (in_rows + ry - 1) / ry : 0;
    map.columns = rx ? (in_cols + rx - 1) / rx : 0;
    map.values.assign(map.rows * map.columns, 0.0);
    for (std::size_t r = 0; r < in_rows; ++r) {
        for (std::size_t c = 0; c < in_cols; ++c) {
            map.values[(r / ry) * map.columns + c / rx] += rows[r][c] / static_cast<double>(rx * ry);
        }
    }
    map.x_min = static_cast<double>(x_min);
    map.x_max = static_cast<double>(x_max);
    map.y_max = static_cast<double>(in_rows ? in_rows - 1 : 0);
    return map;
}

std::string distribution_bytes(const Distribution& d) {
    std::ostringstream os;
    write_distribution_csv(os, d.entries());
    return os.str();
}

struct EvolveArgs {
    std::string qubit;
    std::int64_t steps = -1;
    std::optional<std::int64_t> cycle;
    std::string out = ".";
    std::string svg;
    std::string heatmap;
};

int cmd_evolve(const EvolveArgs& a, std::ostream& out) {
    const QubitState q = parse_qubit(a.qubit);
    if (a.steps < 0) throw CLI::ValidationError("--steps", "must be >= 0");
    const auto steps = static_cast<std::uint64_t>(a.steps);
    if (a.cycle && (*a.cycle < 3 || *a.cycle % 2 == 0)) {
        throw PhysicalInputFailure("cycle length must be odd and >= 3");
    }

    std::vector<double> p0;
    p0.reserve(steps + 1);
    std::vector<std::vector<double>> space_time;
    const bool want_heatmap = !a.heatmap.empty();
    Distribution final_dist;
    Site x_min = 0;
    Site x_max = 0;

    if (a.cycle) {
        const auto n_sites = static_cast<std::size_t>(*a.cycle);
        CycleState s = initial_cycle_state(q, n_sites);
        x_max = static_cast<Site>(n_sites) - 1;
        for (std::uint64_t t = 0;; ++t) {
            p0.push_back(site_probability(0, s.amplitude(0)).total);
            if (want_heatmap) {
                std::vector<double> row;
                for (const auto& e : distribution(s).entries()) row.push_back(e.total);
                space_time.push_back(std::move(row));
            }
            if (t == steps) break;
            s = step_cycle(s);
        }
        final_dist = distribution(s);
    } else {
        LineState s = initial_line_state(q);
        const auto width = static_cast<Site>(steps);
        x_min = -width;
        x_max = width;
        for (std::uint64_t t = 0;; ++t) {
            p0.push_back(site_probability(0, s.amplitude(0)).total);
            if (want_heatmap) {
                std::vector<double> row;
                row.reserve(static_cast<std::size_t>(2 * width + 1));
                for (Site n = -width; n <= width; ++n) {
                    row.push_back(site_probability(n, s.amplitude(n)).total);
                }
                space_time.push_back(std::move(row));
            }
            if (t == steps) break;
            s = step_line(s);
        }
        final_dist = distribution(s);
    }

    OutputSet files(a.out);
    auto& m = files.manifest();
    m.command = "evolve";
    m.arguments = {{"qubit", a.qubit}, {"steps", std::to_string(a.steps)}};
    if (a.cycle) m.arguments["cycle"] = std::to_string(*a.cycle);
    m.settings = {{"qubit_norm_tolerance", kCliNormTolerance},
                  {"qubit", q.to_string()},
                  {"reference_p0", 2.0 * (5.0 - 2.0 * std::sqrt(6.0))}};

    files.add("distribution.csv", distribution_bytes(final_dist));
    std::ostringstream trace;
    write_trace_csv(trace, p0);
    files.add("trace.csv", trace.str());

    if (!a.svg.empty()) {
        LinePlot plot;
        plot.title = "P(0, t)";
        plot.x_label = "t";
        plot.y_label = "P(0, t)";
        for (std::size_t t = 0; t < p0.size(); ++t) plot.points.emplace_back(static_cast<double>(t), p0[t]);
        if (!a.cycle) plot.reference_y = 2.0 * (5.0 - 2.0 * std::sqrt(6.0));
        OutputSet::write_bytes(a.svg, render_line_plot(plot));
        m.settings["svg"] = a.svg;
    }
    if (want_heatmap) {
        Heatmap map = pooled_heatmap(space_time, x_min, x_max);
        map.title = "P(n, t)";
        OutputSet::write_bytes(a.heatmap, render_heatmap(map));
        m.settings["heatmap"] = a.heatmap;
    }
    const fs::path manifest = files.finish();

    out << "P(0, " << steps << ") = " << format_double(p0.back()) << '\n'
        << "total probability = " << format_double(final_dist.total()) << '\n'
        << "wrote " << (files.dir() / "distribution.csv").string() << ", "
        << (files.dir() / "trace.csv").string() << ", " << manifest.string() << '\n';
    return kSuccess;
}

struct StationaryArgs {
    std::string qubit;
    std::int64_t window = 20;
    std::string out = ".";
    std::string svg;
};

int cmd_stationary(const StationaryArgs& a, std::ostream& out) {
    const QubitState q = parse_qubit(a.qubit);
    if (a.window < 1) throw CLI::ValidationError("--window", "must be >= 1");
    const stationary::StationaryProfile prof = stationary::profile(q, a.window);

    OutputSet files(a.out);
    auto& m = files.manifest();
    m.command = "stationary";
    m.arguments = {{"qubit", a.qubit}, {"window", std::to_string(a.window)}};
    m.settings = {{"qubit_norm_tolerance", kCliNormTolerance}, {"qubit", q.to_string()}};

    files.add("stationary.csv", distribution_bytes(prof.sites));
    std::ostringstream summary;
    summary << "quantity,value\n"
            << "total_mass," << format_double(prof.total_mass) << '\n'
            << "window_mass," << format_double(prof.sites.total()) << '\n'
            << "decay_constant," << format_double(stationary::decay_constant()) << '\n';
    files.add("summary.csv", summary.str());

    if (!a.svg.empty()) {
        LinePlot plot;
        plot.title = "P*(n)";
        plot.x_label = "n";
        plot.y_label = "P*(n)";
        plot.log_y = true;
        plot.markers = true;
        for (const auto& e : prof.sites.entries()) plot.points.emplace_back(static_cast<double>(e.n), e.total);
        OutputSet::write_bytes(a.svg, render_line_plot(plot));
        m.settings["svg"] = a.svg;
    }
    const fs::path manifest = files.finish();

    out << "P*(0) = " << format_double(prof.sites.at(0).total) << '\n'
        << "total localized mass = " << format_double(prof.total_mass) << '\n'
        << "wrote " << (files.dir() / "stationary.csv").string() << ", "
        << (files.dir() / "summary.csv").string() << ", " << manifest.string() << '\n';
    return kSuccess;
}

struct TimeavgArgs {
    std::string qubit;
    std::int64_t sites = 0;
    std::string out = ".";
};

int cmd_timeavg(const TimeavgArgs& a, std::ostream& out) {
    const QubitState q = parse_qubit(a.qubit);
    if (a.sites < 3 || a.sites % 2 == 0) throw PhysicalInputFailure("--sites must be odd and >= 3");
    const auto n_sites = static_cast<std::size_t>(a.sites);

    const auto finite = timeavg::cycle_time_average_components(n_sites, q, 0);
    std::array<double, 3> infinite{};
    for (const Chirality c : kChiralities) {
        infinite[static_cast<std::size_t>(c)] = timeavg::infinite_time_average_component(c, q);
    }
    const double finite_total = timeavg::cycle_time_average(n_sites, q, 0);
    const double infinite_total = timeavg::infinite_time_average_total(q);

    OutputSet files(a.out);
    auto& m = files.manifest();
    m.command = "timeavg";
    m.arguments = {{"qubit", a.qubit}, {"sites", std::to_string(a.sites)}};
    m.settings = {{"qubit_norm_tolerance", kCliNormTolerance},
                  {"qubit", q.to_string()},
                  {"phase_tolerance", timeavg::kPhaseTolerance}};

    std::ostringstream table;
    table << "component,p_bar_N,p_bar_inf\n";
    const char* labels[] = {"L", "0", "R"};
    for (std::size_t i = 0; i < 3; ++i) {
        table << labels[i] << ',' << format_double(finite[i]) << ',' << format_double(infinite[i]) << '\n';
    }
    table << "total," << format_double(finite_total) << ',' << format_double(infinite_total) << '\n';
    files.add("timeavg.csv", table.str());
    const fs::path manifest = files.finish();

    out << "P_bar_" << n_sites << "(0) = " << format_double(finite_total) << '\n'
        << "P_bar_inf(0) = " << format_double(infinite_total) << '\n'
        << "wrote " << (files.dir() / "timeavg.csv").string() << ", " << manifest.string() << '\n';
    return kSuccess;
}

struct WeaklimitArgs {
    std::int64_t steps = 500;
    std::string out = ".";
    std::string svg;
};

int cmd_weaklimit(const WeaklimitArgs& a, std::ostream& out) {
    if (a.steps < 100) throw CLI::ValidationError("--steps", "must be >= 100");
    const auto e = weaklimit::empirical_rescaled(static_cast<std::uint64_t>(a.steps));
    const double distance = weaklimit::cdf_distance(e);
    const auto rows = weaklimit::cdf_table(e);

    OutputSet files(a.out);
    auto& m = files.manifest();
    m.command = "weaklimit";
    m.arguments = {{"steps", std::to_string(a.steps)}};

    std::vector<std::vector<double>> table;
    table.reserve(rows.size());
    for (const auto& r : rows) table.push_back({r.x, r.empirical, r.limit});
    std::ostringstream cdf;
    write_table_csv(cdf, {"x", "F_empirical", "F_limit"}, table);
    files.add("cdf.csv", cdf.str());

    std::ostringstream summary;
    summary << "quantity,value\n"
            << "kolmogorov_distance," << format_double(distance) << '\n'
            << "point_mass," << format_double(weaklimit::localization_mass()) << '\n'
            << "continuous_mass," << format_double(weaklimit::continuous_mass()) << '\n'
            << "empirical_mass," << format_double(e.total_mass()) << '\n';
    files.add("summary.csv", summary.str());

    if (!a.svg.empty()) {
        LinePlot plot;
        plot.title = "F(x) at t = " + std::to_string(a.steps);
        plot.x_label = "x = n / t";
        plot.y_label = "F(x)";
        for (const auto& r : rows) plot.points.emplace_back(r.x, r.empirical);
        OutputSet::write_bytes(a.svg, render_line_plot(plot));
        m.settings["svg"] = a.svg;
    }
    const fs::path manifest = files.finish();

    out << "Kolmogorov distance at t = " << a.steps << ": " << format_double(distance) << '\n'
        << "wrote " << (files.dir() / "cdf.csv").string() << ", "
        << (files.dir() / "summary.csv").string() << ", " << manifest.string() << '\n';
    return kSuccess;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
    verify::Options opts;
    opts.grid_size = grid_size_from_env();
    bool all_passed = true;
    for (const int id : verify::suite_criteria(suite)) {
        const auto r = verify::run_criterion(id, opts);
        out << verify::format(r);
        out.flush();
        all_passed = all_passed && r.passed();
    }
    out << (all_passed ? "suite " + suite + ": PASS\n" : "suite " + suite + ": FAIL\n");
    return all_passed ? kSuccess : kVerificationFailed;
}

int cmd_replay(const std::string& manifest_path, const std::string& out_dir, std::ostream& out,
               std::ostream& err) {
    std::ifstream in(manifest_path);
    if (!in) throw CLI::ValidationError("--manifest", "cannot read " + manifest_path);
    RunManifest original;
    try {
        original = manifest_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--manifest", e.what());
    }
    if (original.command == "replay" || original.command == "verify") {
        throw CLI::ValidationError("--manifest", "command '" + original.command + "' is not replayable");
    }
    if (original.version != kVersion) {
        err << "warning: manifest written by version " << original.version << ", replaying with "
            << kVersion << '\n';
    }

    std::vector<std::string> args{original.command};
    for (const auto& [key, value] : original.arguments) {
        args.push_back("--" + key);
        args.push_back(value);
    }
    args.push_back("--out");
    args.push_back(out_dir);
    std::ostringstream sink;
    const int code = run(args, sink, err);
    if (code != kSuccess) return code;

    bool identical = true;
    for (const auto& [name, digest] : original.outputs) {
        const fs::path path = fs::path(out_dir) / name;
        const std::string actual = fs::exists(path) ? sha256_file(path) : std::string("missing");
        const bool same = actual == digest;
        identical = identical && same;
        out << (same ? "match    " : "MISMATCH ") << name << '\n';
    }
    out << (identical ? "replay identical\n" : "replay differs\n");
    return identical ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-state quantum walk toolkit", "triwalk"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    EvolveArgs evolve_args;
    auto* evolve = app.add_subcommand("evolve", "Evolve a walk from the origin; write P(n, t) and the P(0, t) trace");
    evolve->add_option("--qubit", evolve_args.qubit, "Initial coin state: three complex numbers a,b,c")->required();
    evolve->add_option("--steps", evolve_args.steps, "Number of steps (>= 0)")->required();
    evolve->add_option("--cycle", evolve_args.cycle, "Run on a cycle of N sites (odd N >= 3)");
    evolve->add_option("--out", evolve_args.out, "Output directory")->capture_default_str();
    evolve->add_option("--svg", evolve_args.svg, "Write an SVG plot of P(0, t) to this path");
    evolve->add_option("--heatmap", evolve_args.heatmap, "Write an SVG space-time heatmap to this path");

    StationaryArgs stationary_args;
    auto* stat = app.add_subcommand("stationary", "Closed-form localized limit P*(n) and its total mass");
    stat->add_option("--qubit", stationary_args.qubit, "Initial coin state")->required();
    stat->add_option("--window", stationary_args.window, "Tabulate |n| <= window (>= 1)")->capture_default_str();
    stat->add_option("--out", stationary_args.out, "Output directory")->capture_default_str();
    stat->add_option("--svg", stationary_args.svg, "Write a semi-log SVG plot of P*(n) to this path");

    TimeavgArgs timeavg_args;
    auto* tavg = app.add_subcommand("timeavg", "Time-averaged return probability on a cycle and on the line");
    tavg->add_option("--qubit", timeavg_args.qubit, "Initial coin state")->required();
    tavg->add_option("--sites", timeavg_args.sites, "Cycle length N (odd, >= 3)")->required();
    tavg->add_option("--out", timeavg_args.out, "Output directory")->capture_default_str();

    WeaklimitArgs weak_args;
    auto* weak = app.add_subcommand("weaklimit", "Compare the rescaled mixture CDF to the limit law");
    weak->add_option("--steps", weak_args.steps, "Time t (>= 100)")->capture_default_str();
    weak->add_option("--out", weak_args.out, "Output directory")->capture_default_str();
    weak->add_option("--svg", weak_args.svg, "Write an SVG plot of the empirical CDF to this path");

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "Run an acceptance suite; exit 1 if any check fails");
    ver->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember(verify::suite_names()))
        ->capture_default_str();

    std::string manifest_path;
    std::string replay_out;
    auto* replay = app.add_subcommand("replay", "Rerun a manifest and compare output checksums");
    replay->add_option("--manifest", manifest_path, "Path to manifest.json")->required();
    replay->add_option("--out", replay_out, "Directory for the rerun outputs")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (!app.get_subcommands().empty()) err << "run with --help for usage\n";
        return kUsageError;
    }

    try {
        if (*evolve) return cmd_evolve(evolve_args, out);
        if (*stat) return cmd_stationary(stationary_args, out);
        if (*tavg) return cmd_timeavg(timeavg_args, out);
        if (*weak) return cmd_weaklimit(weak_args, out);
        if (*ver) return cmd_verify(suite, out);
        if (*replay) return cmd_replay(manifest_path, replay_out, out, err);
    } catch (const PhysicalInputFailure& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidPhysicalInput;
    } catch (const PhysicalInputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidPhysicalInput;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace triwalk::cli

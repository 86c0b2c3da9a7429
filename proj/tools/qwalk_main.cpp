// Command line front end: run one experiment, sweep a parameter grid,
// replay a shipped preset, or run the self-check battery.
//
// Exit codes: 0 success, 2 invalid configuration or usage, 3 numerical
// integrity failure, 4 I/O failure, 1 unexpected internal error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qwalk/qwalk.hpp>

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw qwalk::io_error("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    if (f.bad()) throw qwalk::io_error("failed reading '" + path.string() + "'");
    return buf.str();
}

fs::path exe_directory(const char* argv0) {
    std::error_code ec;
    fs::path p = fs::read_symlink("/proc/self/exe", ec);
    if (ec) p = fs::absolute(argv0 ? argv0 : ".");
    return p.parent_path();
}

// Preset configs are plain config files shipped with the project. The
// QWALK_PRESETS environment variable overrides the search path.
std::vector<fs::path> preset_candidates(const fs::path& exe_dir) {
    std::vector<fs::path> dirs;
    if (const char* env = std::getenv("QWALK_PRESETS")) dirs.emplace_back(env);
    dirs.emplace_back("presets");
    dirs.push_back(exe_dir / "presets");
    dirs.push_back(exe_dir / ".." / "presets");
    dirs.push_back(exe_dir / ".." / ".." / "presets");
    return dirs;
}

std::vector<fs::path> find_preset_configs(const std::string& name, const fs::path& exe_dir) {
    for (const auto& dir : preset_candidates(exe_dir)) {
        std::error_code ec;
        if (!fs::is_directory(dir, ec)) continue;
        std::vector<fs::path> found;
        for (const auto& entry : fs::directory_iterator(dir, ec)) {
            if (!entry.is_regular_file()) continue;
            const fs::path& p = entry.path();
            if (p.extension() != ".cfg") continue;
            std::string stem = p.stem().string();
            if (stem == name || stem.rfind(name + "_", 0) == 0) found.push_back(p);
        }
        if (!found.empty()) {
            std::sort(found.begin(), found.end());
            return found;
        }
    }
    throw qwalk::validation_error("no preset configs named '" + name +
                                  "' found; set QWALK_PRESETS or run from the project root");
}

struct cli_options {
    std::string config;
    std::string preset;
    qwalk::experiment_options opts;
    double record_every = 0;  // 0 = not given
    std::size_t coherence_bins = 0;
    std::string output_dir = ".";

    qwalk::experiment_options resolved() const {
        qwalk::experiment_options r = opts;
        r.output_dir = output_dir;
        if (record_every > 0) r.record_every = record_every;
        if (coherence_bins > 0) r.coherence_bins = coherence_bins;
        return r;
    }
};

void add_common_flags(CLI::App* cmd, cli_options& o) {
    cmd->add_option("--output-dir", o.output_dir, "Directory for output CSV files");
    cmd->add_option("--jobs", o.opts.jobs, "Worker threads for sweeps (0 = all cores)");
    cmd->add_option("--record-every", o.record_every,
                    "Recording stride, in turns when the run uses turns, else in steps");
    cmd->add_option("--coherence-bins", o.coherence_bins,
                    "Number of coherence distance bins (overrides coherence.M)");
}

void do_run(const cli_options& o) {
    auto cfg = qwalk::validate_config(read_file(o.config));
    auto opts = o.resolved();
    qwalk::run_experiment(cfg, opts);
    std::cout << "wrote " << (opts.output_dir / "distributions.csv").string() << "\n"
              << "wrote " << (opts.output_dir / "metrics.csv").string() << "\n";
}

void do_sweep(const cli_options& o) {
    auto cfg = qwalk::validate_config(read_file(o.config));
    auto opts = o.resolved();
    qwalk::run_sweep(cfg, opts);
    std::cout << "wrote " << (opts.output_dir / "sweep.csv").string() << "\n";
}

void do_preset(const cli_options& o, const fs::path& exe_dir) {
    auto configs = find_preset_configs(o.preset, exe_dir);
    for (const auto& path : configs) {
        auto cfg = qwalk::validate_config(read_file(path));
        auto opts = o.resolved();
        opts.output_dir = fs::path(o.output_dir) / path.stem();
        if (cfg.axes.empty()) {
            qwalk::run_experiment(cfg, opts);
            std::cout << "wrote " << (opts.output_dir / "distributions.csv").string() << "\n"
                      << "wrote " << (opts.output_dir / "metrics.csv").string() << "\n";
        } else {
            qwalk::run_sweep(cfg, opts);
            std::cout << "wrote " << (opts.output_dir / "sweep.csv").string() << "\n";
        }
    }
}

int do_verify() {
    auto results = qwalk::run_selfchecks();
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
        if (!r.pass) ++failures;
    }
    if (failures) {
        std::cout << failures << " of " << results.size() << " checks failed\n";
        return 3;
    }
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coined quantum walk simulator"};
    app.require_subcommand(1);

    cli_options o;

    auto* run = app.add_subcommand("run", "Run one experiment from a config file");
    run->add_option("config", o.config, "Config file (key=value lines)")->required();
    add_common_flags(run, o);

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a config file");
    sweep->add_option("config", o.config, "Config file with sweep.<key> axes")->required();
    add_common_flags(sweep, o);

    auto* preset = app.add_subcommand("preset", "Run the shipped preset configs for a figure");
    preset->add_option("name", o.preset, "Preset family, e.g. fig1, fig2, fig3, fig4")
        ->required();
    add_common_flags(preset, o);

    auto* verify = app.add_subcommand("verify", "Run the built-in self checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) do_run(o);
        else if (sweep->parsed()) do_sweep(o);
        else if (preset->parsed()) do_preset(o, exe_directory(argv[0]));
        else if (verify->parsed()) return do_verify();
        return 0;
    } catch (const qwalk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

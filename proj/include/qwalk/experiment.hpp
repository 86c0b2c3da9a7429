#pragma once

#include <atomic>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <thread>
#include <vector>

#include "config.hpp"

namespace qwalk {

struct experiment_options {
    std::filesystem::path output_dir = ".";
    std::size_t jobs = 0;                       // sweep workers; 0 = hardware default
    std::optional<double> record_every;         // native unit: turns if the run uses turns, else steps
    std::optional<std::size_t> coherence_bins;  // overrides the config's coherence.M
};

// One metrics.csv row. tau is present only on odd cycles; d0/D/c are present
// only when a reference run was requested and the denominator is nonzero.
struct metric_row {
    std::optional<double> tau;
    std::size_t t = 0;
    double d = 0;
    std::optional<double> d0;
    std::optional<double> D;
    double C = 0;
    std::vector<double> C_bins;
    std::vector<std::optional<double>> c_bins;
};

namespace detail {

inline std::string format_real(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string format_opt(const std::optional<double>& v) {
    return v ? format_real(*v) : std::string();
}

inline std::size_t resolve_stride(const run_params& p, const std::optional<double>& every) {
    auto s = turn_steps(p);
    bool by_turns = p.turns.has_value();
    if (by_turns && !s) throw validation_error("turns require an odd cycle");
    if (!every) return by_turns ? *s : 1;
    double v = *every;
    if (!(v > 0)) throw validation_error("record-every must be > 0");
    std::size_t stride;
    if (by_turns) {
        stride = std::size_t(std::nearbyint(v * double(*s)));
    } else {
        if (v != std::floor(v))
            throw validation_error("record-every must be a whole number of steps");
        stride = std::size_t(v);
    }
    return stride < 1 ? 1 : stride;
}

}  // namespace detail

struct run_output {
    std::vector<metric_row> metrics;
    evolution_record<double> no_gate;
    evolution_record<double> with_gate;
};

// Runs the configured walk as a gate/no-gate pair, plus the noiseless twin
// when a reference is requested, and assembles per-recorded-step metrics.
// Coherence is measured on the gate-augmented run; the reference twin
// supplies d0 and the C0(m) denominators.
inline run_output compute_run(const experiment_config& cfg, const experiment_options& opts) {
    const run_params& p = cfg.run;
    record_options rec;
    rec.stride = detail::resolve_stride(p, opts.record_every);
    rec.with_coherence = true;
    rec.coherence_bins = opts.coherence_bins.value_or(cfg.coherence_bins);

    paired_records<double> main = paired_run<double>(p, rec);
    std::optional<paired_records<double>> ref;
    if (cfg.reference_run) {
        run_params q = p;
        q.noise_type = noise_kind::none;
        q.noise = gad_params{};
        ref = paired_run<double>(q, rec);
    }

    auto s = turn_steps(p);
    run_output out{{}, std::move(main.without_gate), std::move(main.with_gate)};
    for (std::size_t i = 0; i < out.with_gate.steps.size(); ++i) {
        const auto& lhs = out.no_gate.steps[i];
        const auto& rhs = out.with_gate.steps[i];
        metric_row row;
        row.t = rhs.t;
        if (s) row.tau = double(rhs.t) / double(*s);
        row.d = kolmogorov_distance(lhs.dist, rhs.dist);
        row.C = rhs.coherence->total;
        row.C_bins = rhs.coherence->bins;
        if (ref) {
            const auto& r0 = ref->without_gate.steps[i];
            const auto& r1 = ref->with_gate.steps[i];
            double d0 = kolmogorov_distance(r0.dist, r1.dist);
            auto sym = normalized_metrics(row.d, *rhs.coherence, d0, *r1.coherence);
            row.d0 = d0;
            row.D = sym.D;
            row.c_bins = sym.c;
        } else {
            row.c_bins.assign(row.C_bins.size(), std::nullopt);
        }
        out.metrics.push_back(std::move(row));
    }
    return out;
}

namespace detail {

inline std::string metrics_header(std::size_t M) {
    std::string h = "tau,t,d,d0,D,C";
    for (std::size_t m = 1; m <= M; ++m) h += ",C_" + std::to_string(m);
    for (std::size_t m = 1; m <= M; ++m) h += ",c_" + std::to_string(m);
    return h;
}

inline void append_metric_row(std::string& out, const metric_row& row) {
    out += format_opt(row.tau);
    out += ',';
    out += std::to_string(row.t);
    out += ',';
    out += format_real(row.d);
    out += ',';
    out += format_opt(row.d0);
    out += ',';
    out += format_opt(row.D);
    out += ',';
    out += format_real(row.C);
    for (double b : row.C_bins) {
        out += ',';
        out += format_real(b);
    }
    for (const auto& c : row.c_bins) {
        out += ',';
        out += format_opt(c);
    }
    out += '\n';
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw io_error("cannot open '" + path.string() + "' for writing");
    f << content;
    f.flush();
    if (!f) throw io_error("failed writing '" + path.string() + "'");
}

inline void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory '" + dir.string() + "': " + ec.message());
    if (!std::filesystem::is_directory(dir))
        throw io_error("output path '" + dir.string() + "' is not a directory");
}

}  // namespace detail

// Writes distributions.csv (per recorded step, per site: both paired
// probabilities) and metrics.csv into output_dir.
inline void run_experiment(const experiment_config& cfg, const experiment_options& opts) {
    if (!cfg.axes.empty())
        throw validation_error("config declares sweep axes; use the sweep command");
    run_output out = compute_run(cfg, opts);

    std::string dist = "t,x,p_noG,p_withG\n";
    const topology& topo = out.with_gate.topo;
    for (std::size_t i = 0; i < out.with_gate.steps.size(); ++i) {
        const auto& lhs = out.no_gate.steps[i];
        const auto& rhs = out.with_gate.steps[i];
        for (std::size_t site = 0; site < rhs.dist.size(); ++site) {
            dist += std::to_string(rhs.t);
            dist += ',';
            dist += std::to_string(topo.label_of(site));
            dist += ',';
            dist += detail::format_real(lhs.dist[site]);
            dist += ',';
            dist += detail::format_real(rhs.dist[site]);
            dist += '\n';
        }
    }

    std::size_t M = opts.coherence_bins.value_or(cfg.coherence_bins);
    std::string metrics = detail::metrics_header(M) + "\n";
    for (const auto& row : out.metrics) detail::append_metric_row(metrics, row);

    detail::ensure_dir(opts.output_dir);
    detail::write_file(opts.output_dir / "distributions.csv", dist);
    detail::write_file(opts.output_dir / "metrics.csv", metrics);
}

// Expands the axes into their cartesian product (file order, last axis
// fastest), runs every grid point, and writes a single sweep.csv whose rows
// are each point's metrics rows with the axis values prepended. Points run
// on a worker pool; output order and bytes are independent of scheduling.
inline void run_sweep(const experiment_config& cfg, const experiment_options& opts) {
    std::size_t points = 1;
    for (const auto& ax : cfg.axes) {
        if (points > cfg.sweep_cap / ax.values.size())
            throw capacity_error("sweep grid exceeds cap of " + std::to_string(cfg.sweep_cap) +
                                 " points");
        points *= ax.values.size();
    }
    if (points > cfg.sweep_cap)
        throw capacity_error("sweep grid exceeds cap of " + std::to_string(cfg.sweep_cap) +
                             " points");

    std::vector<std::vector<double>> grid(points);
    std::vector<std::vector<metric_row>> results(points);
    std::vector<std::exception_ptr> failures(points);

    for (std::size_t i = 0; i < points; ++i) {
        std::vector<double> values(cfg.axes.size());
        std::size_t rem = i;
        for (std::size_t a = cfg.axes.size(); a-- > 0;) {
            values[a] = cfg.axes[a].values[rem % cfg.axes[a].values.size()];
            rem /= cfg.axes[a].values.size();
        }
        grid[i] = std::move(values);
    }

    auto run_point = [&](std::size_t i) {
        try {
            experiment_config point = cfg;
            point.axes.clear();
            for (std::size_t a = 0; a < cfg.axes.size(); ++a)
                apply_axis_value(point.run, cfg.axes[a].key, grid[i][a]);
            results[i] = compute_run(point, opts).metrics;
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };

    std::size_t jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
    if (jobs > points) jobs = points;
    if (jobs <= 1) {
        for (std::size_t i = 0; i < points; ++i) run_point(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < points; i = next.fetch_add(1))
                    run_point(i);
            });
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < points; ++i)
        if (failures[i]) std::rethrow_exception(failures[i]);

    std::size_t M = opts.coherence_bins.value_or(cfg.coherence_bins);
    std::string csv;
    for (const auto& ax : cfg.axes) {
        csv += ax.key;
        csv += ',';
    }
    csv += detail::metrics_header(M) + "\n";
    for (std::size_t i = 0; i < points; ++i) {
        std::string prefix;
        for (double v : grid[i]) {
            prefix += detail::format_real(v);
            prefix += ',';
        }
        for (const auto& row : results[i]) {
            csv += prefix;
            detail::append_metric_row(csv, row);
        }
    }

    detail::ensure_dir(opts.output_dir);
    detail::write_file(opts.output_dir / "sweep.csv", csv);
}

}  // namespace qwalk

#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evolution.hpp"

namespace qwalk {

// Flat key=value experiment configs: one pair per line, '#' starts a
// comment, whitespace is insignificant, keys are dotted, unknown keys are
// rejected. `sweep.<key> = v1, v2, ...` declares a sweep axis over any
// sweepable scalar key; the grid is the cartesian product of the axes in
// file order, last axis fastest, capped by sweep.cap.
struct sweep_axis {
    std::string key;
    std::vector<double> values;
};

struct experiment_config {
    run_params run;
    bool reference_run = false;
    std::size_t coherence_bins = 5;
    std::vector<sweep_axis> axes;
    std::size_t sweep_cap = 10000;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline double parse_real(const std::string& key, const std::string& value) {
    if (value.empty()) throw validation_error("key '" + key + "': empty value");
    const char* begin = value.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + value.size())
        throw validation_error("key '" + key + "': '" + value + "' is not a number");
    if (!std::isfinite(v))
        throw validation_error("key '" + key + "': value must be finite");
    return v;
}

inline std::size_t parse_count(const std::string& key, const std::string& value) {
    double v = parse_real(key, value);
    if (v < 0 || v != std::floor(v) || v > 1e15)
        throw validation_error("key '" + key + "': '" + value + "' is not a whole number");
    return std::size_t(v);
}

inline bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw validation_error("key '" + key + "': expected true or false");
}

inline std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        std::size_t comma = value.find(',', pos);
        std::string item = trim(std::string_view(value).substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        out.push_back(parse_real(key, item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw validation_error("key '" + key + "': empty list");
    return out;
}

inline bool is_sweepable(const std::string& key) {
    static const char* keys[] = {"n", "steps", "turns", "coin.xi", "coin.theta",
                                 "coin.zeta", "gate.alpha", "gate.beta",
                                 "initial.theta0", "initial.phi0", "noise.gamma0",
                                 "noise.T", "noise.Delta", "noise.omega"};
    for (const char* k : keys)
        if (key == k) return true;
    return false;
}

}  // namespace detail

// Overrides one scalar in a run description; used per sweep grid point.
inline void apply_axis_value(run_params& run, const std::string& key, double v) {
    auto whole = [&](double lo) -> std::size_t {
        if (v < lo || v != std::floor(v))
            throw validation_error("sweep axis '" + key + "': value " + std::to_string(v) +
                                   " is not a valid whole number");
        return std::size_t(v);
    };
    if (key == "n") {
        run.n = whole(2);
    } else if (key == "steps") {
        run.steps = whole(0);
        run.turns.reset();
    } else if (key == "turns") {
        if (v < 0) throw validation_error("sweep axis 'turns': value must be >= 0");
        run.turns = v;
        run.steps.reset();
    } else if (key == "coin.xi") {
        run.coin.xi_deg = v;
    } else if (key == "coin.theta") {
        run.coin.theta_deg = v;
    } else if (key == "coin.zeta") {
        run.coin.zeta_deg = v;
    } else if (key == "gate.alpha") {
        if (!run.gate) run.gate.emplace();
        run.gate->alpha_deg = v;
    } else if (key == "gate.beta") {
        if (!run.gate) run.gate.emplace();
        run.gate->beta_deg = v;
    } else if (key == "initial.theta0") {
        run.initial.theta0_deg = v;
    } else if (key == "initial.phi0") {
        run.initial.phi0_deg = v;
    } else if (key == "noise.gamma0") {
        if (v < 0) throw validation_error("sweep axis 'noise.gamma0': value must be >= 0");
        run.noise.gamma0 = v;
    } else if (key == "noise.T") {
        if (v < 0) throw validation_error("sweep axis 'noise.T': value must be >= 0");
        run.noise.T = v;
    } else if (key == "noise.Delta") {
        if (v < 0) throw validation_error("sweep axis 'noise.Delta': value must be >= 0");
        run.noise.Delta = v;
    } else if (key == "noise.omega") {
        if (v <= 0) throw validation_error("sweep axis 'noise.omega': value must be > 0");
        run.noise.omega = v;
    } else {
        throw validation_error("'" + key + "' is not a sweepable key");
    }
}

// Parses and validates config text. Defaults: initial.theta0=90,
// initial.phi0=0, gate identity (alpha=beta=0), noise.type=none,
// noise.omega=1, coherence.M=5, reference_run=false, sweep.cap=10000.
inline experiment_config validate_config(std::string_view text) {
    experiment_config cfg;
    std::vector<std::pair<std::string, std::string>> entries;

    std::size_t lineno = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++lineno;
        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string line = detail::trim(raw);
        if (!line.empty()) {
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw validation_error("line " + std::to_string(lineno) + ": expected key=value");
            std::string key = detail::trim(std::string_view(line).substr(0, eq));
            std::string value = detail::trim(std::string_view(line).substr(eq + 1));
            if (key.empty())
                throw validation_error("line " + std::to_string(lineno) + ": empty key");
            for (const auto& [k, v] : entries)
                if (k == key)
                    throw validation_error("key '" + key + "' appears more than once");
            entries.emplace_back(std::move(key), std::move(value));
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    bool have_topology = false, have_n = false;
    bool have_coin_xi = false, have_coin_theta = false, have_coin_zeta = false;
    bool have_alpha = false, have_beta = false;
    bool have_gamma0 = false, have_T = false, have_Delta = false;
    std::vector<std::string> noise_value_keys;
    double alpha = 0, beta = 0;

    for (const auto& [key, value] : entries) {
        if (key == "topology") {
            if (value == "line")
                cfg.run.kind = topology_kind::line;
            else if (value == "cycle")
                cfg.run.kind = topology_kind::cycle;
            else
                throw validation_error("key 'topology': expected line or cycle");
            have_topology = true;
        } else if (key == "n") {
            cfg.run.n = detail::parse_count(key, value);
            if (cfg.run.n < 2) throw validation_error("key 'n': cycle needs at least 2 sites");
            have_n = true;
        } else if (key == "steps") {
            cfg.run.steps = detail::parse_count(key, value);
        } else if (key == "turns") {
            double v = detail::parse_real(key, value);
            if (v < 0) throw validation_error("key 'turns': must be >= 0");
            cfg.run.turns = v;
        } else if (key == "coin.xi") {
            cfg.run.coin.xi_deg = detail::parse_real(key, value);
            have_coin_xi = true;
        } else if (key == "coin.theta") {
            cfg.run.coin.theta_deg = detail::parse_real(key, value);
            have_coin_theta = true;
        } else if (key == "coin.zeta") {
            cfg.run.coin.zeta_deg = detail::parse_real(key, value);
            have_coin_zeta = true;
        } else if (key == "gate.alpha") {
            alpha = detail::parse_real(key, value);
            have_alpha = true;
        } else if (key == "gate.beta") {
            beta = detail::parse_real(key, value);
            have_beta = true;
        } else if (key == "initial.theta0") {
            cfg.run.initial.theta0_deg = detail::parse_real(key, value);
        } else if (key == "initial.phi0") {
            cfg.run.initial.phi0_deg = detail::parse_real(key, value);
        } else if (key == "noise.type") {
            if (value == "none")
                cfg.run.noise_type = noise_kind::none;
            else if (value == "gad")
                cfg.run.noise_type = noise_kind::gad;
            else if (value == "phase_damping")
                cfg.run.noise_type = noise_kind::phase_damping;
            else
                throw validation_error("key 'noise.type': expected none, gad or phase_damping");
        } else if (key == "noise.gamma0") {
            double v = detail::parse_real(key, value);
            if (v < 0) throw validation_error("key 'noise.gamma0': must be >= 0");
            cfg.run.noise.gamma0 = v;
            have_gamma0 = true;
            noise_value_keys.push_back(key);
        } else if (key == "noise.T") {
            double v = detail::parse_real(key, value);
            if (v < 0) throw validation_error("key 'noise.T': must be >= 0");
            cfg.run.noise.T = v;
            have_T = true;
            noise_value_keys.push_back(key);
        } else if (key == "noise.Delta") {
            double v = detail::parse_real(key, value);
            if (v < 0) throw validation_error("key 'noise.Delta': must be >= 0");
            cfg.run.noise.Delta = v;
            have_Delta = true;
            noise_value_keys.push_back(key);
        } else if (key == "noise.omega") {
            double v = detail::parse_real(key, value);
            if (v <= 0) throw validation_error("key 'noise.omega': must be > 0");
            cfg.run.noise.omega = v;
            noise_value_keys.push_back(key);
        } else if (key == "coherence.M") {
            cfg.coherence_bins = detail::parse_count(key, value);
            if (cfg.coherence_bins < 1)
                throw validation_error("key 'coherence.M': must be >= 1");
        } else if (key == "reference_run") {
            cfg.reference_run = detail::parse_bool(key, value);
        } else if (key == "sweep.cap") {
            cfg.sweep_cap = detail::parse_count(key, value);
            if (cfg.sweep_cap < 1) throw validation_error("key 'sweep.cap': must be >= 1");
        } else if (key.starts_with("sweep.")) {
            std::string axis_key = key.substr(6);
            if (!detail::is_sweepable(axis_key))
                throw validation_error("key '" + key + "': '" + axis_key +
                                       "' is not a sweepable key");
            cfg.axes.push_back({axis_key, detail::parse_list(key, value)});
        } else {
            throw validation_error("unknown key '" + key + "'");
        }
    }

    if (!have_topology) throw validation_error("missing required key 'topology'");
    if (cfg.run.kind == topology_kind::cycle && !have_n)
        throw validation_error("missing required key 'n' (cycle size)");
    if (cfg.run.kind == topology_kind::line && have_n)
        throw validation_error("key 'n' is only valid for topology=cycle");
    if (!have_coin_xi) throw validation_error("missing required key 'coin.xi'");
    if (!have_coin_theta) throw validation_error("missing required key 'coin.theta'");
    if (!have_coin_zeta) throw validation_error("missing required key 'coin.zeta'");
    if (have_alpha != have_beta)
        throw validation_error("gate.alpha and gate.beta must be given together");
    cfg.run.gate = phase_gate_params{alpha, beta};

    if (cfg.run.noise_type == noise_kind::none) {
        if (!noise_value_keys.empty())
            throw validation_error("key '" + noise_value_keys.front() +
                                   "' requires noise.type gad or phase_damping");
        for (const auto& ax : cfg.axes)
            if (ax.key.starts_with("noise."))
                throw validation_error("sweep axis '" + ax.key +
                                       "' requires noise.type gad or phase_damping");
    } else {
        if (!have_gamma0) throw validation_error("missing required key 'noise.gamma0'");
        if (!have_T) throw validation_error("missing required key 'noise.T'");
        if (!have_Delta) throw validation_error("missing required key 'noise.Delta'");
    }
    if (cfg.run.kind == topology_kind::line)
        for (const auto& ax : cfg.axes)
            if (ax.key == "n" || ax.key == "turns")
                throw validation_error("sweep axis '" + ax.key + "' requires cycle topology");

    resolve_steps(cfg.run);  // surfaces steps/turns problems early
    return cfg;
}

}  // namespace qwalk

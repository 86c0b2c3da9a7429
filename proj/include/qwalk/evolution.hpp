#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "metrics.hpp"
#include "noise.hpp"

namespace qwalk {

enum class noise_kind { none, gad, phase_damping };

// One complete walk description. Duration is given either as a step count
// or, on an odd cycle n = 2s+1, as turns tau with t = round(tau * s),
// ties to even. The phase gate is optional; noise parameters are shared by
// both channel families (phase damping reuses the lambda(Delta) law).
struct run_params {
    topology_kind kind = topology_kind::cycle;
    std::size_t n = 0;
    std::optional<std::size_t> steps;
    std::optional<double> turns;
    coin_params coin;
    std::optional<phase_gate_params> gate;
    initial_params initial;
    noise_kind noise_type = noise_kind::none;
    gad_params noise;
};

// Steps per turn, defined only on an odd cycle.
inline std::optional<std::size_t> turn_steps(const run_params& p) {
    if (p.kind != topology_kind::cycle || p.n % 2 == 0) return std::nullopt;
    return (p.n - 1) / 2;
}

inline std::size_t resolve_steps(const run_params& p) {
    if (p.steps && p.turns)
        throw validation_error("give steps or turns, not both");
    if (p.steps) return *p.steps;
    if (!p.turns) throw validation_error("a run needs steps or turns");
    if (p.kind != topology_kind::cycle)
        throw validation_error("turns require cycle topology");
    auto s = turn_steps(p);
    if (!s) throw validation_error("turns require odd n");
    double tau = *p.turns;
    if (!std::isfinite(tau) || tau < 0)
        throw validation_error("turns must be finite and >= 0");
    return std::size_t(std::nearbyint(tau * double(*s)));
}

struct record_options {
    std::size_t stride = 1;  // record every this many steps; final step always kept
    bool with_coherence = false;
    std::size_t coherence_bins = 5;
};

template <class Real = double>
struct step_record {
    std::size_t t = 0;
    std::vector<Real> dist;
    std::optional<coherence_profile<Real>> coherence;
};

template <class Real = double>
struct evolution_record {
    topology topo;
    std::vector<step_record<Real>> steps;
};

// Trace drift that aborts a noisy run.
inline constexpr double trace_drift_tolerance = 1e-6;

namespace detail {

inline bool should_record(std::size_t t, std::size_t total, std::size_t stride) {
    return t % stride == 0 || t == total;
}

template <class Real>
void check_recorded(const std::vector<Real>& dist) {
    Real s = 0;
    for (Real p : dist) s += p;
    if (std::abs(s - Real(1)) > Real(1e-9))
        throw integrity_error("recorded distribution sums to " + std::to_string(double(s)));
}

template <class Real>
void record_step(evolution_record<Real>& rec, std::size_t t, const pure_state<Real>& psi,
                 const record_options& opts) {
    step_record<Real> r;
    r.t = t;
    r.dist = position_distribution(psi);
    check_recorded(r.dist);
    if (opts.with_coherence)
        r.coherence = coherence_function(pure_to_density(psi), opts.coherence_bins,
                                         psi.topo.half_size());
    rec.steps.push_back(std::move(r));
}

template <class Real>
void record_step(evolution_record<Real>& rec, std::size_t t, const density_matrix<Real>& rho,
                 const record_options& opts) {
    step_record<Real> r;
    r.t = t;
    r.dist = position_distribution(rho);
    check_recorded(r.dist);
    if (opts.with_coherence)
        r.coherence = coherence_function(rho, opts.coherence_bins, rho.topo.half_size());
    rec.steps.push_back(std::move(r));
}

template <class Real>
std::optional<kraus_set<Real>> make_channel(const run_params& p) {
    switch (p.noise_type) {
        case noise_kind::none: return std::nullopt;
        case noise_kind::gad: return gad_kraus<Real>(p.noise);
        case noise_kind::phase_damping:
            validate(p.noise);
            return phase_damping_kraus<Real>(gad_lambda(p.noise));
    }
    return std::nullopt;
}

}  // namespace detail

template <class Real = double>
struct pure_result {
    pure_state<Real> final_state;
    evolution_record<Real> record;
};

template <class Real = double>
struct noisy_result {
    density_matrix<Real> final_state;
    evolution_record<Real> record;
};

template <class Real = double>
pure_result<Real> evolve_pure(const run_params& p, const record_options& opts = {}) {
    if (p.noise_type != noise_kind::none)
        throw validation_error("pure evolution cannot carry noise; use the noisy engine");
    if (opts.stride < 1) throw parameter_error("record stride must be >= 1");
    std::size_t total = resolve_steps(p);
    topology topo = walk_topology(p.kind, p.n, total, p.initial.start);
    pure_state<Real> psi = make_initial_pure<Real>(p.initial, topo);
    auto coin = build_coin<Real>(p.coin);
    std::optional<coin_matrix<Real>> gate;
    if (p.gate) gate = build_phase_gate<Real>(*p.gate);

    evolution_record<Real> rec{topo, {}};
    detail::record_step(rec, 0, psi, opts);
    for (std::size_t t = 1; t <= total; ++t) {
        walk_step(psi, coin, gate);
        if (detail::should_record(t, total, opts.stride)) detail::record_step(rec, t, psi, opts);
    }
    return {std::move(psi), std::move(rec)};
}

template <class Real = double>
noisy_result<Real> evolve_noisy(const run_params& p, const record_options& opts = {}) {
    if (opts.stride < 1) throw parameter_error("record stride must be >= 1");
    std::size_t total = resolve_steps(p);
    topology topo = walk_topology(p.kind, p.n, total, p.initial.start);
    density_matrix<Real> rho = pure_to_density(make_initial_pure<Real>(p.initial, topo));
    auto coin = build_coin<Real>(p.coin);
    std::optional<coin_matrix<Real>> gate;
    if (p.gate) gate = build_phase_gate<Real>(*p.gate);
    auto channel = detail::make_channel<Real>(p);

    evolution_record<Real> rec{topo, {}};
    detail::record_step(rec, 0, rho, opts);
    for (std::size_t t = 1; t <= total; ++t) {
        walk_step(rho, coin, gate);
        if (channel) apply_channel(rho, *channel);
        Real tr = trace_real(rho);
        if (std::abs(tr - Real(1)) > Real(trace_drift_tolerance))
            throw integrity_error("trace drifted to " + std::to_string(double(tr)) +
                                  " at step " + std::to_string(t));
        if (detail::should_record(t, total, opts.stride)) detail::record_step(rec, t, rho, opts);
    }
    return {std::move(rho), std::move(rec)};
}

template <class Real = double>
struct paired_records {
    evolution_record<Real> without_gate;
    evolution_record<Real> with_gate;
};

namespace detail {

template <class Real>
evolution_record<Real> run_record(run_params p, const record_options& opts, bool use_gate) {
    if (!use_gate) p.gate.reset();
    if (p.noise_type == noise_kind::none) return evolve_pure<Real>(p, opts).record;
    return evolve_noisy<Real>(p, opts).record;
}

}  // namespace detail

// The same walk twice, once without and once with the phase gate; the
// distribution pair (p, q) behind the Kolmogorov distance.
template <class Real = double>
paired_records<Real> paired_run(const run_params& p, const record_options& opts = {}) {
    if (!p.gate) throw validation_error("paired run requires a phase gate");
    return {detail::run_record<Real>(p, opts, false), detail::run_record<Real>(p, opts, true)};
}

}  // namespace qwalk

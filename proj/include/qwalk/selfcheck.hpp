#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "evolution.hpp"
#include "path_sum.hpp"

namespace qwalk {

struct check_result {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

// xorshift64*; self-contained so verify output is identical on every
// platform and standard library.
struct selfcheck_rng {
    std::uint64_t state;

    explicit selfcheck_rng(std::uint64_t seed) : state(seed ? seed : 1) {}

    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }

    double u01() { return double(next() >> 11) * 0x1.0p-53; }
    double angle() { return u01() * 360.0 - 180.0; }
};

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

inline double max_amp_deviation(const pure_state<>& a, const pure_state<>& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
    return worst;
}

}  // namespace detail

// Fast invariant battery behind the CLI verify subcommand: step-engine vs
// path-enumeration agreement, the line-symmetry identity, channel
// completeness, the full-dephasing classical limit, trace stability, and
// the per-position phase census.
inline std::vector<check_result> run_selfchecks() {
    std::vector<check_result> out;
    detail::selfcheck_rng rng(0x9E3779B97F4A7C15ULL);

    {
        double worst = 0;
        for (int i = 0; i < 500; ++i) {
            auto b = build_coin({rng.angle(), rng.angle(), rng.angle()});
            worst = std::max(worst, unitarity_defect(b));
            auto det = b[0] * b[3] - b[1] * b[2];
            worst = std::max(worst, std::abs(det + 1.0));
        }
        out.push_back({"coin unitarity and determinant (500 draws)", worst <= 1e-12,
                       "max defect " + detail::str(worst)});
    }

    {
        double worst = 0;
        struct { topology_kind kind; std::size_t n; } topos[] = {
            {topology_kind::line, 0}, {topology_kind::cycle, 5}, {topology_kind::cycle, 7}};
        for (const auto& tp : topos)
            for (int draw = 0; draw < 5; ++draw) {
                coin_params coin{rng.angle(), rng.angle(), rng.angle()};
                phase_gate_params gate{rng.angle(), rng.angle()};
                initial_params init{rng.u01() * 180.0, rng.angle(), 0};
                for (std::size_t t = 1; t <= 10; ++t) {
                    run_params p;
                    p.kind = tp.kind;
                    p.n = tp.n;
                    p.steps = t;
                    p.coin = coin;
                    p.gate = gate;
                    p.initial = init;
                    auto engine = evolve_pure(p);
                    auto oracle = path_sum_state(t, coin, gate, init, tp.kind, tp.n);
                    worst = std::max(worst,
                                     detail::max_amp_deviation(engine.final_state, oracle));
                }
            }
        out.push_back({"step engine matches path enumeration (t <= 10)", worst <= 1e-10,
                       "max amplitude deviation " + detail::str(worst)});
    }

    {
        double worst = 0;
        for (int draw = 0; draw < 20; ++draw) {
            run_params p;
            p.kind = topology_kind::line;
            p.steps = 60;
            p.coin = {0, 45, 0};
            p.gate = phase_gate_params{rng.angle(), rng.angle()};
            p.initial = {90, 0, 0};
            auto pair = paired_run(p);
            for (std::size_t i = 0; i < pair.with_gate.steps.size(); ++i)
                worst = std::max(worst,
                                 kolmogorov_distance(pair.without_gate.steps[i].dist,
                                                     pair.with_gate.steps[i].dist));
        }
        out.push_back({"line distribution is gate-invariant (20 draws, t = 60)",
                       worst <= 1e-12, "max distance " + detail::str(worst)});
    }

    {
        double worst = 0;
        for (double g0 : {0.0, 0.01, 0.025, 0.1, 1.0})
            for (double T : {0.0, 3.5, 6.0, 100.0})
                for (double D : {0.1, 1.0})
                    worst = std::max(worst,
                                     gad_kraus({g0, T, D, 1.0}).completeness_defect());
        out.push_back({"damping Kraus sets complete over parameter grid", worst <= 1e-12,
                       "max defect " + detail::str(worst)});
    }

    {
        run_params p;
        p.kind = topology_kind::line;
        p.steps = 4;
        p.coin = {0, 45, 0};
        p.initial = {0, 0, 0};
        p.noise_type = noise_kind::phase_damping;
        p.noise = {1e9, 0, 1, 1};  // lambda = 1: full dephasing each step
        auto res = evolve_noisy(p);
        std::vector<double> classical(res.final_state.sites(), 0.0);
        classical[res.final_state.topo.index_of(0)] = 1.0;
        for (int step = 0; step < 4; ++step) {
            std::vector<double> nxt(classical.size(), 0.0);
            for (std::size_t i = 0; i + 1 < classical.size(); ++i) {
                nxt[i] += classical[i + 1] / 2;
                nxt[i + 1] += classical[i] / 2;
            }
            classical = std::move(nxt);
        }
        auto dist = position_distribution(res.final_state);
        double worst = 0;
        for (std::size_t i = 0; i < dist.size(); ++i)
            worst = std::max(worst, std::abs(dist[i] - classical[i]));
        out.push_back({"full dephasing reproduces the classical walk (t = 4)",
                       worst <= 1e-12, "max probability deviation " + detail::str(worst)});
    }

    {
        run_params p;
        p.kind = topology_kind::cycle;
        p.n = 7;
        p.steps = 33;
        p.coin = {0, 45, 0};
        p.gate = phase_gate_params{30, 50};
        p.initial = {90, 0, 0};
        p.noise_type = noise_kind::gad;
        p.noise = {0.1, 6.0, 0.1, 1.0};
        auto res = evolve_noisy(p);
        double drift = std::abs(trace_real(res.final_state) - 1.0);
        double herm = hermiticity_defect(res.final_state);
        out.push_back({"noisy evolution keeps trace and hermiticity (n = 7, t = 33)",
                       drift <= 1e-9 && herm <= 1e-9,
                       "trace drift " + detail::str(drift) + ", hermiticity defect " +
                           detail::str(herm)});
    }

    {
        bool line_ok = true;
        for (std::size_t t = 1; t <= 10 && line_ok; ++t)
            for (const auto& e : phase_factor_audit(t, phase_gate_params{30, 50},
                                                    topology_kind::line))
                line_ok = line_ok && e.J_values.size() == 1 && e.phases.size() == 1;
        bool cycle_split = false;
        for (const auto& e : phase_factor_audit(6, phase_gate_params{30, 50},
                                                topology_kind::cycle, 5))
            cycle_split = cycle_split || e.J_values.size() >= 2;
        bool equal_angles = true;
        for (const auto& e : phase_factor_audit(6, phase_gate_params{40, 40},
                                                topology_kind::cycle, 5))
            equal_angles = equal_angles && e.phases.size() == 1;
        out.push_back({"phase census: line pins one J per site; cycle wraps split",
                       line_ok && cycle_split && equal_angles,
                       std::string("line single-J ") + (line_ok ? "yes" : "no") +
                           ", cycle multiplicity " + (cycle_split ? "yes" : "no") +
                           ", equal-angle collapse " + (equal_angles ? "yes" : "no")});
    }

    return out;
}

}  // namespace qwalk

#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>

#include "operators.hpp"

namespace qwalk {

// Brute-force evolution by summing all 2^t coin histories; the independent
// cross-check for the step-operator engine. A history (j_1 .. j_t) with
// J = sum j_i contributes
//   e^{i((t-J) alpha + J beta)} B_{j_t j_{t-1}} ... B_{j_2 j_1}
//     (B_{j_1 0} a + B_{j_1 1} b)
// to the ket |j_t>|2J - t>, positions reduced mod n on a cycle.
inline constexpr std::size_t path_sum_max_steps = 20;

template <class Real = double>
pure_state<Real> path_sum_state(std::size_t t, const coin_params& coin,
                                const std::optional<phase_gate_params>& gate,
                                const initial_params& initial,
                                topology_kind kind, std::size_t n = 0) {
    if (t > path_sum_max_steps)
        throw capacity_error("path enumeration supports at most " +
                             std::to_string(path_sum_max_steps) + " steps, got " +
                             std::to_string(t));
    topology topo = walk_topology(kind, n, t, initial.start);
    pure_state<Real> psi = make_initial_pure<Real>(initial, topo);
    if (t == 0) return psi;

    auto b = build_coin<Real>(coin);
    auto at = [&](std::size_t row, std::size_t col) { return b[2 * row + col]; };
    std::complex<Real> a0 = psi.at(0, topo.index_of(initial.start));
    std::complex<Real> a1 = psi.at(1, topo.index_of(initial.start));
    Real alpha = gate ? radians<Real>(Real(gate->alpha_deg)) : Real(0);
    Real beta = gate ? radians<Real>(Real(gate->beta_deg)) : Real(0);

    pure_state<Real> out(topo);
    for (std::uint64_t h = 0; h < (std::uint64_t(1) << t); ++h) {
        std::size_t j1 = h & 1;
        std::complex<Real> amp = at(j1, 0) * a0 + at(j1, 1) * a1;
        std::size_t prev = j1;
        for (std::size_t i = 1; i < t; ++i) {
            std::size_t ji = (h >> i) & 1;
            amp *= at(ji, prev);
            prev = ji;
        }
        std::size_t J = std::size_t(std::popcount(h));
        amp *= std::polar(Real(1), Real(t - J) * alpha + Real(J) * beta);
        long x = 2 * long(J) - long(t);
        out.at(prev, topo.index_of(x + initial.start)) += amp;
    }
    return out;
}

// Per final position: the distinct J values over all histories and the
// distinct accumulated gate phases they produce. On a line each reachable x
// pins a single J = (x + t)/2; on a cycle J is fixed only mod n, so once
// t >= n a position collects several J values and, for generic (alpha, beta),
// several phases.
template <class Real = double>
struct phase_audit_entry {
    long x = 0;
    std::vector<std::size_t> J_values;
    std::vector<std::complex<Real>> phases;
};

template <class Real = double>
std::vector<phase_audit_entry<Real>> phase_factor_audit(
    std::size_t t, const std::optional<phase_gate_params>& gate,
    topology_kind kind, std::size_t n = 0) {
    if (t > path_sum_max_steps)
        throw capacity_error("path enumeration supports at most " +
                             std::to_string(path_sum_max_steps) + " steps, got " +
                             std::to_string(t));
    topology topo = walk_topology(kind, n, t);
    Real alpha = gate ? radians<Real>(Real(gate->alpha_deg)) : Real(0);
    Real beta = gate ? radians<Real>(Real(gate->beta_deg)) : Real(0);

    std::map<long, std::vector<std::size_t>> by_x;
    for (std::uint64_t h = 0; h < (std::uint64_t(1) << t); ++h) {
        std::size_t J = std::size_t(std::popcount(h));
        long x = topo.label_of(topo.index_of(2 * long(J) - long(t)));
        auto& js = by_x[x];
        bool seen = false;
        for (auto v : js) seen = seen || v == J;
        if (!seen) js.push_back(J);
    }

    std::vector<phase_audit_entry<Real>> report;
    for (auto& [x, js] : by_x) {
        phase_audit_entry<Real> e;
        e.x = x;
        e.J_values = js;
        for (auto J : js) {
            auto ph = std::polar(Real(1), Real(t - J) * alpha + Real(J) * beta);
            bool seen = false;
            for (const auto& q : e.phases) seen = seen || std::abs(q - ph) <= Real(1e-12);
            if (!seen) e.phases.push_back(ph);
        }
        report.push_back(std::move(e));
    }
    return report;
}

}  // namespace qwalk

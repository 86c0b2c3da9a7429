#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "state.hpp"

namespace qwalk {

struct coin_params {
    double xi_deg = 0.0;
    double theta_deg = 0.0;
    double zeta_deg = 0.0;
};

struct phase_gate_params {
    double alpha_deg = 0.0;
    double beta_deg = 0.0;
};

// Row-major 2x2 coin-space matrix: {m00, m01, m10, m11}.
template <class Real = double>
using coin_matrix = std::array<std::complex<Real>, 4>;

// The walked coin uses theta directly (no half angle):
//   [ e^{i xi} cos(theta)    e^{i zeta} sin(theta) ]
//   [ e^{-i zeta} sin(theta)  -e^{-i xi} cos(theta) ]
// Unitary with determinant -1 for every parameter choice.
template <class Real = double>
coin_matrix<Real> build_coin(const coin_params& p) {
    Real xi = radians<Real>(Real(p.xi_deg));
    Real th = radians<Real>(Real(p.theta_deg));
    Real ze = radians<Real>(Real(p.zeta_deg));
    Real c = std::cos(th), s = std::sin(th);
    return {std::polar(c, xi), std::polar(s, ze),
            std::polar(s, -ze), -std::polar(c, -xi)};
}

// diag(e^{i alpha}, e^{i beta}): coin state |j> picks up e^{i alpha} when
// j = 0 and e^{i beta} when j = 1; over t steps a history with J ones
// accumulates e^{i((t-J) alpha + J beta)}.
template <class Real = double>
coin_matrix<Real> build_phase_gate(const phase_gate_params& p) {
    return {std::polar(Real(1), radians<Real>(Real(p.alpha_deg))), Real(0),
            Real(0), std::polar(Real(1), radians<Real>(Real(p.beta_deg)))};
}

// Largest entrywise deviation of m^dagger m from the identity.
template <class Real>
Real unitarity_defect(const coin_matrix<Real>& m) {
    std::complex<Real> g00 = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
    std::complex<Real> g01 = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
    std::complex<Real> g11 = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
    return std::max({std::abs(g00 - Real(1)), std::abs(g01), std::abs(g11 - Real(1))});
}

// psi <- (m (x) I) psi. Works for any 2x2 m, not only unitaries.
template <class Real>
void apply_coin(pure_state<Real>& psi, const coin_matrix<Real>& m) {
    std::size_t n = psi.sites();
    for (std::size_t i = 0; i < n; ++i) {
        auto u = psi.amp[i], v = psi.amp[n + i];
        psi.amp[i] = m[0] * u + m[1] * v;
        psi.amp[n + i] = m[2] * u + m[3] * v;
    }
}

// rho <- (m (x) I) rho (m^dagger (x) I), as two in-place block passes.
template <class Real>
void apply_coin(density_matrix<Real>& rho, const coin_matrix<Real>& m) {
    std::size_t n = rho.sites(), d = rho.dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t v = 0; v < d; ++v) {
            auto r0 = rho.a[j * d + v], r1 = rho.a[(n + j) * d + v];
            rho.a[j * d + v] = m[0] * r0 + m[1] * r1;
            rho.a[(n + j) * d + v] = m[2] * r0 + m[3] * r1;
        }
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t k = 0; k < n; ++k) {
            auto c0 = rho.a[u * d + k], c1 = rho.a[u * d + n + k];
            rho.a[u * d + k] = std::conj(m[0]) * c0 + std::conj(m[1]) * c1;
            rho.a[u * d + n + k] = std::conj(m[2]) * c0 + std::conj(m[3]) * c1;
        }
}

// Amplitude magnitude above which leaving the line lattice is an error.
inline constexpr double boundary_tolerance = 1e-12;

namespace detail {

template <class Real>
void shift_pure_line(pure_state<Real>& psi) {
    std::size_t n = psi.sites();
    if (std::abs(psi.amp[0]) > boundary_tolerance ||
        std::abs(psi.amp[2 * n - 1]) > boundary_tolerance)
        throw boundary_error("shift would move amplitude off the line lattice edge");
    for (std::size_t i = 0; i + 1 < n; ++i) psi.amp[i] = psi.amp[i + 1];
    psi.amp[n - 1] = 0;
    for (std::size_t i = n - 1; i > 0; --i) psi.amp[n + i] = psi.amp[n + i - 1];
    psi.amp[n] = 0;
}

template <class Real>
void shift_pure_cycle(pure_state<Real>& psi) {
    std::size_t n = psi.sites();
    auto b = psi.amp.begin();
    std::rotate(b, b + 1, b + n);
    std::rotate(b + n, b + (2 * n - 1), b + 2 * n);
}

template <class Real>
void shift_density_line(density_matrix<Real>& rho) {
    std::size_t n = rho.sites(), d = rho.dim();
    // Positivity bounds every entry in a row by the diagonal, so guarding
    // the two diagonal edge probabilities covers the whole edge row/column.
    if (rho.a[0].real() > boundary_tolerance * boundary_tolerance ||
        rho.a[(d - 1) * d + (d - 1)].real() > boundary_tolerance * boundary_tolerance)
        throw boundary_error("shift would move probability off the line lattice edge");
    auto* p = rho.a.data();
    for (std::size_t r = 0; r + 1 < n; ++r)
        std::copy(p + (r + 1) * d, p + (r + 2) * d, p + r * d);
    std::fill(p + (n - 1) * d, p + n * d, std::complex<Real>(0));
    for (std::size_t r = n - 1; r > 0; --r)
        std::copy(p + (n + r - 1) * d, p + (n + r) * d, p + (n + r) * d);
    std::fill(p + n * d, p + (n + 1) * d, std::complex<Real>(0));
    for (std::size_t u = 0; u < d; ++u) {
        auto* row = p + u * d;
        for (std::size_t c = 0; c + 1 < n; ++c) row[c] = row[c + 1];
        row[n - 1] = 0;
        for (std::size_t c = n - 1; c > 0; --c) row[n + c] = row[n + c - 1];
        row[n] = 0;
    }
}

template <class Real>
void shift_density_cycle(density_matrix<Real>& rho) {
    std::size_t n = rho.sites(), d = rho.dim();
    auto b = rho.a.begin();
    std::rotate(b, b + d, b + n * d);
    std::rotate(b + n * d, b + (2 * n - 1) * d, b + 2 * n * d);
    for (std::size_t u = 0; u < d; ++u) {
        auto r = b + u * d;
        std::rotate(r, r + 1, r + n);
        std::rotate(r + n, r + (2 * n - 1), r + 2 * n);
    }
}

}  // namespace detail

// Conditional shift: coin 0 moves the walker one site toward smaller labels,
// coin 1 toward larger, modulo n on a cycle. A pure permutation of
// amplitudes; never materialized as a matrix.
template <class Real>
void apply_shift(pure_state<Real>& psi) {
    if (psi.topo.kind() == topology_kind::line)
        detail::shift_pure_line(psi);
    else
        detail::shift_pure_cycle(psi);
}

template <class Real>
void apply_shift(density_matrix<Real>& rho) {
    if (rho.topo.kind() == topology_kind::line)
        detail::shift_density_line(rho);
    else
        detail::shift_density_cycle(rho);
}

// One walk step: coin toss, then shift, then the optional phase gate.
template <class State, class Real>
void walk_step(State& state, const coin_matrix<Real>& coin,
               const std::optional<coin_matrix<Real>>& gate) {
    apply_coin(state, coin);
    apply_shift(state);
    if (gate) apply_coin(state, *gate);
}

}  // namespace qwalk

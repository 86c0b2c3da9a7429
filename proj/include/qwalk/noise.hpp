#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "operators.hpp"

namespace qwalk {

// Bath coupling for the coin qubit, in units hbar = k_B = 1.
// Derived quantities:
//   N_th   = 1/(e^{omega/T} - 1), 0 at T = 0
//   kappa  = (N_th + 1)/(2 N_th + 1), in (1/2, 1]
//   lambda = 1 - e^{-gamma0 (2 N_th + 1) Delta}, the per-step damping weight
struct gad_params {
    double gamma0 = 0.0;
    double T = 0.0;
    double Delta = 0.0;
    double omega = 1.0;
};

inline void validate(const gad_params& p) {
    if (!(p.gamma0 >= 0)) throw parameter_error("noise coupling gamma0 must be >= 0");
    if (!(p.T >= 0)) throw parameter_error("temperature T must be >= 0");
    if (!(p.Delta >= 0)) throw parameter_error("interaction duration Delta must be >= 0");
    if (!(p.omega > 0)) throw parameter_error("frequency omega must be > 0");
}

inline double thermal_occupation(double T, double omega) {
    if (!(omega > 0)) throw parameter_error("frequency omega must be > 0");
    if (!(T >= 0)) throw parameter_error("temperature T must be >= 0");
    if (T == 0) return 0.0;
    return 1.0 / std::expm1(omega / T);
}

inline double gad_kappa(const gad_params& p) {
    double n = thermal_occupation(p.T, p.omega);
    return (n + 1) / (2 * n + 1);
}

inline double gad_lambda(const gad_params& p) {
    double n = thermal_occupation(p.T, p.omega);
    return -std::expm1(-p.gamma0 * (2 * n + 1) * p.Delta);
}

// Kraus operators act on the coin factor only; application lifts them to
// E (x) I over positions.
template <class Real = double>
struct kraus_set {
    std::vector<coin_matrix<Real>> ops;

    // Largest entrywise deviation of sum_j E_j^dagger E_j from the identity.
    Real completeness_defect() const {
        std::complex<Real> g00 = 0, g01 = 0, g11 = 0;
        for (const auto& e : ops) {
            g00 += std::conj(e[0]) * e[0] + std::conj(e[2]) * e[2];
            g01 += std::conj(e[0]) * e[1] + std::conj(e[2]) * e[3];
            g11 += std::conj(e[1]) * e[1] + std::conj(e[3]) * e[3];
        }
        return std::max({std::abs(g00 - Real(1)), std::abs(g01), std::abs(g11 - Real(1))});
    }
};

// Generalized amplitude damping at finite temperature:
//   E0 = sqrt(kappa) [ sqrt(1-lambda) 0; 0 1 ]
//   E1 = sqrt(kappa) [ 0 0; sqrt(lambda) 0 ]
//   E2 = sqrt(1-kappa) [ 1 0; 0 sqrt(1-lambda) ]
//   E3 = sqrt((1-kappa)/kappa) E1^dagger
// This set damps coin |0> toward |1>: the stationary coin state is
// diag(1-kappa, kappa). At T = 0 (kappa = 1) E2 and E3 vanish and the set
// reduces to plain amplitude damping onto |1>.
template <class Real = double>
kraus_set<Real> gad_kraus(const gad_params& p) {
    validate(p);
    double kappa = gad_kappa(p);
    double lambda = gad_lambda(p);
    if (!(kappa > 0)) throw parameter_error("kappa must be positive");
    Real sk = std::sqrt(Real(kappa));
    Real sk1 = std::sqrt(Real(1 - kappa));
    Real sl = std::sqrt(Real(lambda));
    Real sl1 = std::sqrt(Real(1 - lambda));
    coin_matrix<Real> e0 = {sk * sl1, Real(0), Real(0), sk};
    coin_matrix<Real> e1 = {Real(0), Real(0), sk * sl, Real(0)};
    coin_matrix<Real> e2 = {sk1, Real(0), Real(0), sk1 * sl1};
    Real scale = std::sqrt(Real((1 - kappa) / kappa));
    coin_matrix<Real> e3 = {scale * std::conj(e1[0]), scale * std::conj(e1[2]),
                            scale * std::conj(e1[1]), scale * std::conj(e1[3])};
    return {{e0, e1, e2, e3}};
}

// Two-operator dephasing {diag(1, sqrt(1-lambda)), diag(0, sqrt(lambda))}.
// Leaves every diagonal entry of the density matrix unchanged; scales coin
// off-diagonals by sqrt(1-lambda). Equivalent to a phase flip with
// probability p = lambda/2 up to reparametrization.
template <class Real = double>
kraus_set<Real> phase_damping_kraus(double lambda) {
    if (!(lambda >= 0 && lambda <= 1))
        throw parameter_error("phase damping weight lambda must lie in [0, 1]");
    Real sl = std::sqrt(Real(lambda));
    Real sl1 = std::sqrt(Real(1 - lambda));
    return {{{Real(1), Real(0), Real(0), sl1}, {Real(0), Real(0), Real(0), sl}}};
}

// Completeness violation above which apply_channel refuses to run.
inline constexpr double channel_tolerance = 1e-10;

// rho <- sum_j (E_j (x) I) rho (E_j^dagger (x) I).
template <class Real>
void apply_channel(density_matrix<Real>& rho, const kraus_set<Real>& k) {
    if (k.completeness_defect() > channel_tolerance)
        throw channel_error("Kraus set violates completeness beyond " +
                            std::to_string(channel_tolerance));
    std::vector<std::complex<Real>> acc(rho.a.size());
    density_matrix<Real> term(rho.topo);
    for (const auto& e : k.ops) {
        term.a = rho.a;
        apply_coin(term, e);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term.a[i];
    }
    rho.a = std::move(acc);
}

}  // namespace qwalk

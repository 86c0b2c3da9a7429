#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "topology.hpp"

namespace qwalk {

// Public API angles are degrees throughout; conversion happens exactly once,
// at the point a value enters a formula.
template <class Real>
Real radians(Real degrees) {
    return degrees * std::numbers::pi_v<Real> / Real(180);
}

// Coin qubit cos(theta0/2)|0> + sin(theta0/2) e^{i phi0}|1>, walker at
// `start` (a site label). Note the half angle: the coin state uses theta0/2
// while the coin operator uses theta directly; the two conventions are
// deliberately different and must not be unified.
struct initial_params {
    double theta0_deg = 90.0;
    double phi0_deg = 0.0;
    long start = 0;
};

// Coin-major amplitude layout: amp[c * sites + site], c in {0, 1}.
template <class Real = double>
struct pure_state {
    using complex = std::complex<Real>;

    topology topo;
    std::vector<complex> amp;

    explicit pure_state(const topology& t) : topo(t), amp(2 * t.sites()) {}

    std::size_t sites() const noexcept { return topo.sites(); }

    complex& at(std::size_t coin, std::size_t site) { return amp[coin * sites() + site]; }
    const complex& at(std::size_t coin, std::size_t site) const { return amp[coin * sites() + site]; }
};

// Dense row-major (2N)x(2N) matrix over the coin x position basis; basis
// index u = coin * N + site matches pure_state's layout.
template <class Real = double>
struct density_matrix {
    using complex = std::complex<Real>;

    topology topo;
    std::vector<complex> a;

    explicit density_matrix(const topology& t) : topo(t), a(4 * t.sites() * t.sites()) {}

    std::size_t sites() const noexcept { return topo.sites(); }
    std::size_t dim() const noexcept { return 2 * topo.sites(); }

    complex& at(std::size_t u, std::size_t v) { return a[u * dim() + v]; }
    const complex& at(std::size_t u, std::size_t v) const { return a[u * dim() + v]; }
};

// Flat basis index of (coin, site label) in the coin-major layout shared by
// pure_state amplitudes and density_matrix rows.
inline std::size_t position_index(const topology& topo, std::size_t coin, long label) {
    if (coin > 1) throw range_error("coin index must be 0 or 1");
    return coin * topo.sites() + topo.index_of(label);
}

template <class Real>
Real norm(const pure_state<Real>& psi) {
    Real s = 0;
    for (const auto& z : psi.amp) s += std::norm(z);
    return std::sqrt(s);
}

template <class Real>
Real trace_real(const density_matrix<Real>& rho) {
    Real s = 0;
    for (std::size_t u = 0; u < rho.dim(); ++u) s += rho.at(u, u).real();
    return s;
}

// Largest entrywise deviation from rho = rho^dagger.
template <class Real>
Real hermiticity_defect(const density_matrix<Real>& rho) {
    Real worst = 0;
    for (std::size_t u = 0; u < rho.dim(); ++u)
        for (std::size_t v = u; v < rho.dim(); ++v)
            worst = std::max(worst, std::abs(rho.at(u, v) - std::conj(rho.at(v, u))));
    return worst;
}

template <class Real = double>
pure_state<Real> make_initial_pure(const initial_params& p, const topology& topo) {
    pure_state<Real> psi(topo);
    std::size_t site = topo.index_of(p.start);
    Real half = radians<Real>(Real(p.theta0_deg)) / Real(2);
    Real phi = radians<Real>(Real(p.phi0_deg));
    psi.at(0, site) = std::cos(half);
    psi.at(1, site) = std::polar(std::sin(half), phi);
    return psi;
}

template <class Real>
density_matrix<Real> pure_to_density(const pure_state<Real>& psi) {
    density_matrix<Real> rho(psi.topo);
    std::size_t d = rho.dim();
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            rho.a[u * d + v] = psi.amp[u] * std::conj(psi.amp[v]);
    return rho;
}

}  // namespace qwalk

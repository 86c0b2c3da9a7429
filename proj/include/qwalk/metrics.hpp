#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "state.hpp"

namespace qwalk {

// p(x) = sum over the coin of the squared amplitude (pure) or of the
// diagonal entry (density), indexed by site.
template <class Real>
std::vector<Real> position_distribution(const pure_state<Real>& psi) {
    std::size_t n = psi.sites();
    std::vector<Real> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = std::norm(psi.amp[i]) + std::norm(psi.amp[n + i]);
    return p;
}

template <class Real>
std::vector<Real> position_distribution(const density_matrix<Real>& rho) {
    std::size_t n = rho.sites();
    std::vector<Real> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = rho.at(i, i).real() + rho.at(n + i, n + i).real();
    return p;
}

// Half the l1 distance between two distributions on the same site set.
template <class Real>
Real kolmogorov_distance(const std::vector<Real>& p, const std::vector<Real>& q) {
    if (p.size() != q.size())
        throw shape_error("distributions have different supports (" +
                          std::to_string(p.size()) + " vs " + std::to_string(q.size()) + " sites)");
    Real s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return s / Real(2);
}

// Sum of |rho_uv| over every off-diagonal pair of the coin x position basis,
// each pair counted once per ordered (u, v).
template <class Real>
Real coherence_total(const density_matrix<Real>& rho) {
    Real s = 0;
    std::size_t d = rho.dim();
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            if (u != v) s += std::abs(rho.a[u * d + v]);
    return s;
}

template <class Real = double>
struct coherence_profile {
    Real total = 0;      // equals coherence_total of the same state
    std::vector<Real> bins;  // bins.size() = M; partition of total
};

// Bins off-diagonal magnitudes by raw position-label separation |j - k|
// (not cyclic distance): bin m in 1..M covers (m-1)(s/M) <= |j-k| < m(s/M);
// separations >= s clamp into bin M; coin-only coherences (j = k) land in
// bin 1. The bins partition the off-diagonal set exactly.
template <class Real>
coherence_profile<Real> coherence_function(const density_matrix<Real>& rho,
                                           std::size_t M, std::size_t s) {
    if (M < 1) throw parameter_error("coherence bin count M must be >= 1");
    if (s < 1) throw parameter_error("coherence range s must be >= 1");
    if (M > s)
        throw parameter_error("coherence bin count M = " + std::to_string(M) +
                              " exceeds range s = " + std::to_string(s));
    coherence_profile<Real> out;
    out.bins.assign(M, Real(0));
    std::size_t n = rho.sites(), d = rho.dim();
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            if (u == v) continue;
            std::size_t j = u % n, k = v % n;
            std::size_t sep = j > k ? j - k : k - j;
            std::size_t m = sep * M / s;  // 0-based bin, then clamp
            if (m >= M) m = M - 1;
            Real mag = std::abs(rho.a[u * d + v]);
            out.bins[m] += mag;
            out.total += mag;
        }
    return out;
}

// Reference values below this are treated as zero and flagged undefined.
inline constexpr double reference_floor = 1e-12;

template <class Real = double>
struct symmetry_metrics {
    Real d = 0;
    Real d0 = 0;
    std::optional<Real> D;                  // d/d0, absent when d0 ~ 0
    std::vector<std::optional<Real>> c;     // C(m)/C0(m), absent where C0(m) ~ 0
};

template <class Real>
symmetry_metrics<Real> normalized_metrics(Real d, const coherence_profile<Real>& noisy,
                                          Real d0, const coherence_profile<Real>& reference) {
    if (noisy.bins.size() != reference.bins.size())
        throw shape_error("coherence profiles have different bin counts");
    symmetry_metrics<Real> out;
    out.d = d;
    out.d0 = d0;
    if (std::abs(d0) >= reference_floor) out.D = d / d0;
    out.c.resize(noisy.bins.size());
    for (std::size_t m = 0; m < noisy.bins.size(); ++m)
        if (std::abs(reference.bins[m]) >= reference_floor)
            out.c[m] = noisy.bins[m] / reference.bins[m];
    return out;
}

}  // namespace qwalk

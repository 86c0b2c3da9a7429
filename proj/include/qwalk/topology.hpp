#pragma once

#include <cstddef>
#include <string>

#include "errors.hpp"

namespace qwalk {

enum class topology_kind { line, cycle };

// Site bookkeeping for the two lattices.
//
// Cycle: n sites labelled 0..n-1, |x> identified with |x mod n>.
// Line: an odd-length lattice centered on the origin, labels
// -half..+half, stored at index = label + half. A walk of t steps fits a
// lattice of half size t without ever touching the edge.
class topology {
public:
    static topology line(std::size_t half_width) {
        return topology(topology_kind::line, 2 * half_width + 1);
    }

    static topology cycle(std::size_t n) {
        if (n < 2) throw parameter_error("cycle size must be at least 2");
        return topology(topology_kind::cycle, n);
    }

    topology_kind kind() const noexcept { return kind_; }
    std::size_t sites() const noexcept { return sites_; }

    // Index of the label-0 site.
    std::size_t origin() const noexcept {
        return kind_ == topology_kind::line ? (sites_ - 1) / 2 : 0;
    }

    // Greatest label magnitude on a line; (n-1)/2 on a cycle. For an odd
    // cycle this is s in n = 2s+1, the per-turn step count.
    std::size_t half_size() const noexcept { return (sites_ - 1) / 2; }

    std::size_t index_of(long label) const {
        if (kind_ == topology_kind::cycle) {
            long n = static_cast<long>(sites_);
            long m = label % n;
            if (m < 0) m += n;
            return static_cast<std::size_t>(m);
        }
        long idx = label + static_cast<long>(origin());
        if (idx < 0 || idx >= static_cast<long>(sites_))
            throw range_error("site label " + std::to_string(label) +
                              " outside line lattice of " + std::to_string(sites_) + " sites");
        return static_cast<std::size_t>(idx);
    }

    long label_of(std::size_t index) const {
        if (index >= sites_)
            throw range_error("site index " + std::to_string(index) + " out of range");
        return static_cast<long>(index) - static_cast<long>(origin());
    }

    friend bool operator==(const topology& a, const topology& b) noexcept {
        return a.kind_ == b.kind_ && a.sites_ == b.sites_;
    }

private:
    topology(topology_kind kind, std::size_t sites) : kind_(kind), sites_(sites) {}

    topology_kind kind_;
    std::size_t sites_;
};

// Lattice hosting a t-step walk from `start`: a cycle is its own host; a
// line gets half width |start| + t so the walker never reaches an edge.
inline topology walk_topology(topology_kind kind, std::size_t n, std::size_t t,
                              long start = 0) {
    if (kind == topology_kind::cycle) return topology::cycle(n);
    return topology::line(t + std::size_t(start < 0 ? -start : start));
}

}  // namespace qwalk

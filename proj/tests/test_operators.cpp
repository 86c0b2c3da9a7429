#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace qwalk;
using Catch::Matchers::WithinAbs;

namespace {

void check_entry(const std::complex<double>& got, double re, double im, double tol = 1e-15) {
    CHECK_THAT(std::abs(got - std::complex<double>(re, im)), WithinAbs(0, tol));
}

}  // namespace

TEST_CASE("coin entries at (20, 10, 30) degrees", "[operators]") {
    auto b = build_coin({20.0, 10.0, 30.0});
    check_entry(b[0], 0.92541657839832335, 0.33682408883346517);
    check_entry(b[1], 0.15038373318043530, 0.086824088833465174);
    check_entry(b[2], 0.15038373318043530, -0.086824088833465174);
    check_entry(b[3], -0.92541657839832335, 0.33682408883346517);
}

TEST_CASE("the (0, 45, 0) coin is balanced", "[operators]") {
    auto b = build_coin(tst::balanced_coin());
    double r = 0.70710678118654752;
    check_entry(b[0], r, 0);
    check_entry(b[1], r, 0);
    check_entry(b[2], r, 0);
    check_entry(b[3], -r, 0);
}

TEST_CASE("the coin angle enters directly, not halved", "[operators]") {
    // cos(60) = 1/2 shows up for theta = 60, not theta = 120
    auto b = build_coin({0.0, 60.0, 0.0});
    CHECK_THAT(b[0].real(), WithinAbs(0.5, 1e-15));
}

TEST_CASE("coins are unitary with determinant -1", "[operators]") {
    tst::angle_stream rng;
    for (int i = 0; i < 50; ++i) {
        coin_params p{rng.next(-180, 180), rng.next(-180, 180), rng.next(-180, 180)};
        auto b = build_coin(p);
        CHECK(unitarity_defect(b) <= 1e-15);
        auto det = b[0] * b[3] - b[1] * b[2];
        CHECK_THAT(std::abs(det + 1.0), WithinAbs(0, 1e-15));
    }
    CHECK(unitarity_defect(build_coin({0.0, 0.0, 0.0})) <= 1e-15);
    CHECK(unitarity_defect(build_coin({0.0, 90.0, 0.0})) <= 1e-15);
}

TEST_CASE("phase gate entries", "[operators]") {
    auto g = build_phase_gate({30.0, 50.0});
    check_entry(g[0], 0.86602540378443865, 0.5);
    check_entry(g[1], 0, 0);
    check_entry(g[2], 0, 0);
    check_entry(g[3], 0.64278760968653933, 0.76604444311897804);
    CHECK(unitarity_defect(g) <= 1e-15);
}

TEST_CASE("coin application mixes amplitudes per site", "[operators]") {
    auto topo = topology::cycle(3);
    pure_state<> psi(topo);
    std::complex<double> u(0.3, -0.4), v(-0.1, 0.2);
    psi.at(0, 1) = u;
    psi.at(1, 1) = v;
    auto b = build_coin({20.0, 10.0, 30.0});
    apply_coin(psi, b);
    CHECK_THAT(std::abs(psi.at(0, 1) - (b[0] * u + b[1] * v)), WithinAbs(0, 1e-16));
    CHECK_THAT(std::abs(psi.at(1, 1) - (b[2] * u + b[3] * v)), WithinAbs(0, 1e-16));
    CHECK(psi.at(0, 0) == std::complex<double>(0));
    CHECK(psi.at(1, 2) == std::complex<double>(0));
}

TEST_CASE("density coin application matches the pure route", "[operators]") {
    auto topo = topology::cycle(4);
    pure_state<> psi(topo);
    tst::angle_stream rng;
    for (auto& z : psi.amp) z = {rng.next(-1, 1), rng.next(-1, 1)};
    double s = norm(psi);
    for (auto& z : psi.amp) z /= s;

    auto rho = pure_to_density(psi);
    auto b = build_coin({-70.0, 33.0, 12.0});
    apply_coin(psi, b);
    apply_coin(rho, b);
    auto expect = pure_to_density(psi);
    for (std::size_t i = 0; i < rho.a.size(); ++i)
        CHECK_THAT(std::abs(rho.a[i] - expect.a[i]), WithinAbs(0, 1e-15));
}

TEST_CASE("shift moves coin 0 down and coin 1 up", "[operators]") {
    auto topo = topology::line(2);
    pure_state<> psi(topo);
    psi.at(0, topo.index_of(0)) = 0.6;
    psi.at(1, topo.index_of(0)) = 0.8;
    apply_shift(psi);
    CHECK(psi.at(0, topo.index_of(-1)) == std::complex<double>(0.6));
    CHECK(psi.at(1, topo.index_of(1)) == std::complex<double>(0.8));
    CHECK(psi.at(0, topo.index_of(0)) == std::complex<double>(0));

    auto cyc = topology::cycle(5);
    pure_state<> w(cyc);
    w.at(0, 0) = 0.6;
    w.at(1, 4) = 0.8;
    apply_shift(w);
    CHECK(w.at(0, 4) == std::complex<double>(0.6));  // 0 - 1 wraps to 4
    CHECK(w.at(1, 0) == std::complex<double>(0.8));  // 4 + 1 wraps to 0
}

TEST_CASE("cycle shift is the exact index permutation", "[operators]") {
    auto topo = topology::cycle(5);
    pure_state<> psi(topo);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t x = 0; x < 5; ++x)
            psi.at(c, x) = std::complex<double>(double(c), double(x));
    auto before = psi;
    apply_shift(psi);
    for (long x = 0; x < 5; ++x) {
        CHECK(psi.at(0, topo.index_of(x - 1)) == before.at(0, std::size_t(x)));
        CHECK(psi.at(1, topo.index_of(x + 1)) == before.at(1, std::size_t(x)));
    }
}

TEST_CASE("line shift guards the lattice edge", "[operators]") {
    auto topo = topology::line(1);
    pure_state<> low(topo);
    low.at(0, topo.index_of(-1)) = 1.0;
    CHECK_THROWS_AS(apply_shift(low), boundary_error);

    pure_state<> high(topo);
    high.at(1, topo.index_of(1)) = 1.0;
    CHECK_THROWS_AS(apply_shift(high), boundary_error);

    pure_state<> interior(topo);
    interior.at(0, topo.index_of(1)) = 1.0;  // coin 0 moves down, away from the edge
    CHECK_NOTHROW(apply_shift(interior));

    density_matrix<> rho = pure_to_density(low);
    CHECK_THROWS_AS(apply_shift(rho), boundary_error);
}

TEST_CASE("density shift matches the pure shift", "[operators]") {
    for (auto topo : {topology::line(3), topology::cycle(6)}) {
        pure_state<> psi(topo);
        tst::angle_stream rng;
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t x = 1; x + 1 < topo.sites(); ++x)
                psi.at(c, x) = {rng.next(-1, 1), rng.next(-1, 1)};
        double s = norm(psi);
        for (auto& z : psi.amp) z /= s;

        auto rho = pure_to_density(psi);
        apply_shift(psi);
        apply_shift(rho);
        auto expect = pure_to_density(psi);
        double worst = 0;
        for (std::size_t i = 0; i < rho.a.size(); ++i)
            worst = std::max(worst, std::abs(rho.a[i] - expect.a[i]));
        CHECK_THAT(worst, WithinAbs(0, 1e-15));
    }
}

TEST_CASE("walk step composes coin, shift, then gate", "[operators]") {
    auto topo = topology::cycle(5);
    auto psi = make_initial_pure({30.0, 40.0, 2}, topo);
    auto coin = build_coin({20.0, 10.0, 30.0});
    auto gate = build_phase_gate({40.0, 50.0});

    auto manual = psi;
    apply_coin(manual, coin);
    apply_shift(manual);
    apply_coin(manual, gate);

    walk_step(psi, coin, std::optional<coin_matrix<double>>(gate));
    CHECK_THAT(tst::max_amp_deviation(psi, manual), WithinAbs(0, 1e-16));

    auto bare = make_initial_pure({30.0, 40.0, 2}, topo);
    auto manual2 = bare;
    apply_coin(manual2, coin);
    apply_shift(manual2);
    walk_step(bare, coin, std::optional<coin_matrix<double>>{});
    CHECK_THAT(tst::max_amp_deviation(bare, manual2), WithinAbs(0, 1e-16));
}

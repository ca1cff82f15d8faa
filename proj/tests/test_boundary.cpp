#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "basins/boundary.hpp"
#include "basins/conjugacy.hpp"

using basins::BoundaryProbe;
using basins::BoundaryReport;
using basins::CircleLocus;
using basins::Complex;
using basins::MethodSpec;
using basins::TwoRootPoly;
using doctest::Approx;

TEST_CASE("bisection finds the circle crossing on the real axis") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 2, 1);
    const BoundaryProbe probe = basins::find_boundary_crossing(
        poly, MethodSpec::schroeder(), {-5.0 / 3.0, 0}, {1, 0}, 8.0 / 3.0, 1e-8);
    CHECK(probe.crossing.real() == Approx(-1.0 / 3.0).epsilon(1e-6));
    CHECK(probe.crossing.imag() == 0.0);
}

TEST_CASE("bisection finds the bisector for equal multiplicities") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 1, 1);
    const BoundaryProbe probe = basins::find_boundary_crossing(
        poly, MethodSpec::schroeder(), {-2, 0.7}, {1, 0}, 4.0, 1e-8);
    CHECK(std::abs(probe.crossing.real()) <= 1e-6);
}

TEST_CASE("bisection bracket endpoints classify to different roots") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 5, 1);
    const double tol = 1e-7;
    const BoundaryProbe probe = basins::find_boundary_crossing(
        poly, MethodSpec::schroeder(), {-13.0 / 12.0, 0}, {0, 1}, 1.0, tol);
    const auto side = [&](Complex z) {
        return basins::run_orbit(poly, MethodSpec::schroeder(), z).status;
    };
    const Complex lo = probe.crossing - tol * probe.ray_direction;
    const Complex hi = probe.crossing + tol * probe.ray_direction;
    CHECK(side(lo) != side(hi));
}

TEST_CASE("bisection preconditions are enforced") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 2, 1);
    // both endpoints inside the circle -> same root
    CHECK_THROWS_AS(
        basins::find_boundary_crossing(poly, MethodSpec::schroeder(),
                                       {-5.0 / 3.0, 0}, {1, 0}, 0.5, 1e-8),
        basins::no_sign_change);
}

TEST_CASE("boundary report certifies the analytic circles for the standard configurations") {
    // the figure configurations, roots +-1
    for (const auto& [m, n] :
         {std::pair{2, 1}, {5, 1}, {8, 1}, {7, 6}, {8, 6}, {4, 2}, {6, 3}}) {
        const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, m, n);
        const basins::JuliaLocus locus = basins::julia_locus_normalized(m, n);
        const BoundaryReport report = basins::boundary_report(
            poly, MethodSpec::schroeder(), locus, 64, 1e-8);
        CHECK(report.failed_rays == 0);
        CHECK(report.probes.size() == 64);
        CHECK(report.max_dev <= 1e-5);
    }
}

TEST_CASE("boundary report: line case probes the imaginary axis") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 1, 1);
    const BoundaryReport report = basins::boundary_report(
        poly, MethodSpec::schroeder(), basins::julia_locus_normalized(1, 1), 16, 1e-8);
    CHECK(report.failed_rays == 0);
    CHECK(report.max_dev <= 1e-6);
    for (const auto& probe : report.probes)
        CHECK(std::abs(probe.crossing.real()) <= 1e-6);
}

TEST_CASE("empirical crossings transported by moebius have modulus m/n") {
    const int m = 8, n = 6;
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, m, n);
    const BoundaryReport report =
        basins::boundary_report(poly, MethodSpec::schroeder(),
                                basins::julia_locus_normalized(m, n), 32, 1e-8);
    for (const auto& probe : report.probes) {
        const Complex w = basins::moebius({1, 0}, {-1, 0}, probe.crossing).finite();
        CHECK(std::abs(w) == Approx(static_cast<double>(m) / n).epsilon(1e-5));
    }
}

TEST_CASE("general-roots circle center sign is adjudicated empirically at roots (1, i)") {
    const int m = 2, n = 1;
    const Complex a{1, 0}, b{0, 1};
    const TwoRootPoly poly = TwoRootPoly::make(a, b, m, n);
    const auto circle = std::get<CircleLocus>(basins::julia_locus_general(m, n, a, b));
    const BoundaryReport report = basins::boundary_report(
        poly, MethodSpec::schroeder(), basins::JuliaLocus{circle}, 64, 1e-8);
    CHECK(report.failed_rays == 0);
    CHECK(report.max_dev <= 1e-5);

    // A center of the opposite sign is refuted by the data: most crossings
    // are farther from that circle than its own radius.
    const CircleLocus flipped{-circle.center, circle.radius};
    int far = 0;
    for (const auto& probe : report.probes) {
        const double dev =
            std::abs(std::abs(probe.crossing - flipped.center) - flipped.radius);
        if (dev > flipped.radius) ++far;
    }
    CHECK(far * 2 > static_cast<int>(report.probes.size()));
}

TEST_CASE("convergence report: schroeder quadratic, newton linear at multiple roots") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 5, 3);
    std::vector<Complex> seeds;
    for (int k = 0; k < 10; ++k) {
        const double theta = 0.2 + 2.0 * 3.14159265358979323846 * k / 10.0;
        const double r = 0.05 + 0.025 * k;
        seeds.push_back(Complex{1, 0} + r * Complex{std::cos(theta), std::sin(theta)});
        seeds.push_back(Complex{-1, 0} + r * Complex{std::cos(theta), std::sin(theta)});
    }
    const auto schroeder =
        basins::convergence_report(poly, MethodSpec::schroeder(), seeds);
    CHECK(schroeder.failed_seeds == 0);
    CHECK(schroeder.root_a.count == 10);
    CHECK(schroeder.root_b.count == 10);
    for (const auto& outcome : schroeder.seeds) {
        REQUIRE(outcome.coc.has_value());
        CHECK(*outcome.coc > 1.8);
        CHECK(*outcome.coc < 2.2);
    }
    const auto newton = basins::convergence_report(poly, MethodSpec::newton(), seeds);
    CHECK(newton.failed_seeds == 0);
    for (const auto& outcome : newton.seeds) {
        REQUIRE(outcome.coc.has_value());
        CHECK(*outcome.coc > 0.9);
        CHECK(*outcome.coc < 1.1);
    }
}

TEST_CASE("convergence report: newton on z^6 needs the classical 114 steps") {
    const TwoRootPoly poly = TwoRootPoly::single_root({0, 0}, 6);
    const std::vector<Complex> seeds{Complex{1, 0}};
    const auto report = basins::convergence_report(poly, MethodSpec::newton(), seeds,
                                                   {1e-9, 400, 1e6});
    REQUIRE(report.root_a.count == 1);
    CHECK(report.seeds[0].iters == 114);
    // schroeder needs exactly one
    const auto fast = basins::convergence_report(poly, MethodSpec::schroeder(), seeds);
    CHECK(fast.seeds[0].iters == 1);
}

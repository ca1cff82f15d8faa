#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "basins/basin.hpp"

using basins::BasinGrid;
using basins::Cell;
using basins::Complex;
using basins::MethodSpec;
using basins::OrbitStatus;
using basins::TwoRootPoly;
using basins::Viewport;
using doctest::Approx;

namespace {
const TwoRootPoly kSimplePair = TwoRootPoly::make({1, 0}, {-1, 0}, 1, 1);
}

TEST_CASE("viewport pixel centers") {
    const Viewport vp{Complex{0, 0}, 4.0, 2.0, 4, 2};
    // leftmost-top pixel center: (-2 + 0.5, 1 - 0.5) scaled
    CHECK(vp.pixel_center(0, 0) == Complex{-1.5, 0.5});
    CHECK(vp.pixel_center(3, 1) == Complex{1.5, -0.5});
    // centers are symmetric about the viewport center
    CHECK(vp.pixel_center(0, 0) + vp.pixel_center(3, 1) == Complex{0, 0});
    CHECK(vp.pixel_diagonal() == Approx(std::hypot(1.0, 1.0)));
}

TEST_CASE("classify_grid on the simple pair splits at the imaginary axis") {
    const Viewport vp{Complex{0, 0}, 4.0, 4.0, 64, 64};
    const BasinGrid grid = basins::classify_grid(kSimplePair, MethodSpec::schroeder(), vp);
    REQUIRE(grid.cells.size() == 64u * 64u);
    for (int j = 0; j < vp.px_h; ++j) {
        for (int i = 0; i < vp.px_w; ++i) {
            const Complex z = vp.pixel_center(i, j);
            const Cell& cell = grid.at(i, j);
            if (z.real() > 0) CHECK(cell.status == OrbitStatus::converged_a);
            if (z.real() < 0) CHECK(cell.status == OrbitStatus::converged_b);
        }
    }
}

TEST_CASE("classify_grid: seed exactly at a root converges with zero iterations") {
    // 1x1 viewport centered on the root
    const Viewport vp{Complex{1, 0}, 1.0, 1.0, 1, 1};
    const BasinGrid grid = basins::classify_grid(kSimplePair, MethodSpec::newton(), vp);
    CHECK(grid.at(0, 0).status == OrbitStatus::converged_a);
    CHECK(grid.at(0, 0).iters == 0);
}

TEST_CASE("classify_grid is identical for any thread count") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 3, 2);
    const Viewport vp{Complex{-1, 0}, 6.0, 6.0, 96, 64};
    const BasinGrid one = basins::classify_grid(poly, MethodSpec::schroeder(), vp, {}, 1);
    const BasinGrid many = basins::classify_grid(poly, MethodSpec::schroeder(), vp, {}, 7);
    REQUIRE(one.cells.size() == many.cells.size());
    for (size_t k = 0; k < one.cells.size(); ++k) {
        CHECK(one.cells[k].status == many.cells[k].status);
        CHECK(one.cells[k].iters == many.cells[k].iters);
    }
}

TEST_CASE("grid is mirror symmetric about the real axis for real roots") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 5, 1);
    const Viewport vp{Complex{-1, 0}, 6.0, 6.0, 64, 64};
    const BasinGrid grid = basins::classify_grid(poly, MethodSpec::schroeder(), vp);
    for (int j = 0; j < vp.px_h; ++j)
        for (int i = 0; i < vp.px_w; ++i) {
            CHECK(grid.at(i, j).status == grid.at(i, vp.px_h - 1 - j).status);
            CHECK(grid.at(i, j).iters == grid.at(i, vp.px_h - 1 - j).iters);
        }
}

TEST_CASE("grid matches the analytic circle away from the boundary band") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 2, 1);
    const Viewport vp{Complex{-1, 0}, 6.0, 6.0, 128, 128};
    const basins::JuliaLocus locus = basins::julia_locus_general(2, 1, poly.a, poly.b);
    const BasinGrid grid = basins::classify_grid(poly, MethodSpec::schroeder(), vp);
    int mismatches = 0;
    for (int j = 0; j < vp.px_h; ++j)
        for (int i = 0; i < vp.px_w; ++i) {
            const double dist = basins::signed_distance(locus, vp.pixel_center(i, j));
            const OrbitStatus expect =
                dist < 0 ? OrbitStatus::converged_b : OrbitStatus::converged_a;
            if (grid.at(i, j).status != expect) {
                ++mismatches;
                // disagreements live within one pixel of the circle
                CHECK(std::abs(dist) <= vp.pixel_diagonal());
            }
        }
    CHECK(mismatches <= 128 * 128 / 200);  // 0.5%
}

TEST_CASE("newton and schroeder agree for the simple pair except at the axis") {
    const Viewport vp{Complex{0, 0}, 4.0, 4.0, 64, 64};
    const BasinGrid newton = basins::classify_grid(kSimplePair, MethodSpec::newton(), vp);
    const BasinGrid schroeder =
        basins::classify_grid(kSimplePair, MethodSpec::schroeder(), vp);
    for (int j = 0; j < vp.px_h; ++j)
        for (int i = 0; i < vp.px_w; ++i) {
            if (std::abs(vp.pixel_center(i, j).real()) <= vp.pixel_diagonal()) continue;
            CHECK(newton.at(i, j).status == schroeder.at(i, j).status);
        }
}

TEST_CASE("render_ppm: 1x1 frozen bytes") {
    BasinGrid grid;
    grid.viewport = Viewport{Complex{0, 0}, 1.0, 1.0, 1, 1};
    grid.max_iter = 200;
    grid.cells = {Cell{OrbitStatus::converged_a, 0}};
    const auto bytes = basins::render_ppm(grid);
    const std::string header = "P6\n1 1\n255\n";
    REQUIRE(bytes.size() == header.size() + 3);
    CHECK(std::equal(header.begin(), header.end(), bytes.begin()));
    const basins::Palette palette;
    CHECK(bytes[header.size() + 0] == palette.root_a.r);
    CHECK(bytes[header.size() + 1] == palette.root_a.g);
    CHECK(bytes[header.size() + 2] == palette.root_a.b);
}

TEST_CASE("render_ppm: shading darkens with iteration count") {
    BasinGrid grid;
    grid.viewport = Viewport{Complex{0, 0}, 1.0, 1.0, 2, 1};
    grid.max_iter = 100;
    grid.cells = {Cell{OrbitStatus::converged_a, 0}, Cell{OrbitStatus::converged_a, 100}};
    const auto bytes = basins::render_ppm(grid);
    const size_t off = std::string("P6\n2 1\n255\n").size();
    const basins::Palette palette;
    CHECK(bytes[off] == palette.root_a.r);
    // full darkening is min_shade of the base
    CHECK(bytes[off + 3] ==
          static_cast<std::uint8_t>(std::lround(palette.root_a.r * palette.min_shade)));
}

TEST_CASE("render_ppm: overlay paints the locus white") {
    const TwoRootPoly poly = TwoRootPoly::make({1, 0}, {-1, 0}, 2, 1);
    const Viewport vp{Complex{-1, 0}, 6.0, 6.0, 96, 96};
    const basins::JuliaLocus locus = basins::julia_locus_general(2, 1, poly.a, poly.b);
    const BasinGrid grid = basins::classify_grid(poly, MethodSpec::schroeder(), vp);
    const auto plain = basins::render_ppm(grid);
    const auto overlaid = basins::render_ppm(grid, {}, locus);
    const size_t off = std::string("P6\n96 96\n255\n").size();
    int white = 0, changed = 0;
    for (int j = 0; j < vp.px_h; ++j)
        for (int i = 0; i < vp.px_w; ++i) {
            const size_t at = off + 3 * (static_cast<size_t>(j) * vp.px_w + i);
            const bool is_white = overlaid[at] == 255 && overlaid[at + 1] == 255 &&
                                  overlaid[at + 2] == 255;
            const bool near = std::abs(basins::signed_distance(locus, vp.pixel_center(i, j))) <=
                              0.5 * vp.pixel_diagonal();
            CHECK(is_white == near);
            white += is_white;
            changed += (overlaid[at] != plain[at]);
        }
    // the ring exists and scales like the circumference
    CHECK(white > 100);
    CHECK(white < 96 * 8);
    CHECK(changed >= white / 2);
}

TEST_CASE("render_ppm bytes are reproducible") {
    const Viewport vp{Complex{0, 0}, 4.0, 4.0, 32, 32};
    const BasinGrid g1 = basins::classify_grid(kSimplePair, MethodSpec::schroeder(), vp, {}, 1);
    const BasinGrid g2 = basins::classify_grid(kSimplePair, MethodSpec::schroeder(), vp, {}, 5);
    CHECK(basins::render_ppm(g1) == basins::render_ppm(g2));
}

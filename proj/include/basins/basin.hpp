#ifndef BASINS_BASIN_HPP
#define BASINS_BASIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "basins/iterate.hpp"
#include "basins/julia.hpp"

namespace basins {

/// Rectangular window of the complex plane rasterized to px_w x px_h
/// pixels. Pixel (i, j) samples the complex point at its center,
///
///   z = center + ((i + 0.5)/px_w - 0.5) * width
///              + i * ((0.5 - (j + 0.5)/px_h)) * height,
///
/// with row j = 0 at the top.
struct Viewport {
    Complex center{};
    double width = 4.0;
    double height = 4.0;
    int px_w = 512;
    int px_h = 512;

    Complex pixel_center(int i, int j) const;
    double pixel_diagonal() const;
};

struct Cell {
    OrbitStatus status = OrbitStatus::max_iterations;
    int iters = 0;
};

/// Per-pixel orbit outcomes. Cells keep the full orbit status (diverged,
/// max-iterations and singular hits stay distinguishable for diagnostics);
/// rendering collapses everything that is not converged_a/converged_b into
/// one "no convergence" color.
struct BasinGrid {
    Viewport viewport;
    int max_iter = 200;       // orbit cap the grid was computed with
    std::vector<Cell> cells;  // row-major, size px_w * px_h

    const Cell& at(int i, int j) const {
        return cells[static_cast<size_t>(j) * viewport.px_w + i];
    }
};

/// Classify every pixel-center seed of the viewport by run_orbit outcome.
/// Cells are independent; they are computed in `threads` workers (0 = use
/// hardware concurrency) and written by index, so the result is identical
/// for any thread count.
BasinGrid classify_grid(const TwoRootPoly& poly, const MethodSpec& method,
                        const Viewport& viewport, const OrbitParams& params = {},
                        int threads = 0);

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
};

struct Palette {
    Rgb root_a{204, 51, 41};    // red family
    Rgb root_b{45, 85, 204};    // blue family
    Rgb no_convergence{0, 0, 0};
    Rgb overlay{255, 255, 255};
    double min_shade = 0.35;  // brightness at iters == max_iter
};

/// Binary PPM (P6, maxval 255) of the grid. Base color by attractor,
/// darkened linearly with iteration count from full brightness at 0 to
/// min_shade at max_iter. If an overlay locus is given, pixels whose center
/// lies within half a pixel diagonal of it are drawn in the overlay color.
/// Byte-exact: identical inputs produce identical bytes.
std::vector<std::uint8_t> render_ppm(const BasinGrid& grid,
                                     const Palette& palette = {},
                                     const std::optional<JuliaLocus>& overlay = {});

}  // namespace basins

#endif

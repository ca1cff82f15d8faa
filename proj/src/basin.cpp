#include "basins/basin.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <thread>

namespace basins {

Complex Viewport::pixel_center(int i, int j) const {
    const double re = ((i + 0.5) / px_w - 0.5) * width;
    const double im = (0.5 - (j + 0.5) / px_h) * height;
    return center + Complex{re, im};
}

double Viewport::pixel_diagonal() const {
    return std::hypot(width / px_w, height / px_h);
}

BasinGrid classify_grid(const TwoRootPoly& poly, const MethodSpec& method,
                        const Viewport& viewport, const OrbitParams& params,
                        int threads) {
    if (viewport.px_w < 1 || viewport.px_h < 1 ||
        !(viewport.width > 0) || !(viewport.height > 0))
        throw std::invalid_argument("classify_grid: bad viewport");
    // reject bad orbit parameters here, in the calling thread; the workers
    // must never throw
    validate_orbit_params(poly, params);

    BasinGrid grid;
    grid.viewport = viewport;
    grid.max_iter = params.max_iter;
    grid.cells.resize(static_cast<size_t>(viewport.px_w) * viewport.px_h);

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, viewport.px_h);

    auto worker = [&](int row_begin, int row_end) {
        for (int j = row_begin; j < row_end; ++j) {
            for (int i = 0; i < viewport.px_w; ++i) {
                const OrbitResult orbit =
                    run_orbit(poly, method, viewport.pixel_center(i, j), params);
                grid.cells[static_cast<size_t>(j) * viewport.px_w + i] =
                    Cell{orbit.status, orbit.steps};
            }
        }
    };

    if (threads == 1) {
        worker(0, viewport.px_h);
        return grid;
    }
    // Static row partition; every cell is written once at its own index, so
    // the grid is identical for any worker count.
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int rows_per = (viewport.px_h + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int begin = t * rows_per;
        const int end = std::min(viewport.px_h, begin + rows_per);
        if (begin >= end) break;
        pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
    return grid;
}

static Rgb shade(Rgb base, int iters, int max_iter, double min_shade) {
    if (max_iter < 1) max_iter = 1;
    const double t = std::min(1.0, static_cast<double>(iters) / max_iter);
    const double s = 1.0 - (1.0 - min_shade) * t;
    auto scale = [s](std::uint8_t c) {
        return static_cast<std::uint8_t>(std::lround(c * s));
    };
    return {scale(base.r), scale(base.g), scale(base.b)};
}

std::vector<std::uint8_t> render_ppm(const BasinGrid& grid, const Palette& palette,
                                     const std::optional<JuliaLocus>& overlay) {
    const Viewport& vp = grid.viewport;
    std::string header = "P6\n" + std::to_string(vp.px_w) + " " +
                         std::to_string(vp.px_h) + "\n255\n";
    std::vector<std::uint8_t> bytes;
    bytes.reserve(header.size() + grid.cells.size() * 3);
    bytes.insert(bytes.end(), header.begin(), header.end());

    const double overlay_band = 0.5 * vp.pixel_diagonal();
    for (int j = 0; j < vp.px_h; ++j) {
        for (int i = 0; i < vp.px_w; ++i) {
            const Cell& cell = grid.at(i, j);
            Rgb color;
            switch (cell.status) {
                case OrbitStatus::converged_a:
                    color = shade(palette.root_a, cell.iters, grid.max_iter,
                                  palette.min_shade);
                    break;
                case OrbitStatus::converged_b:
                    color = shade(palette.root_b, cell.iters, grid.max_iter,
                                  palette.min_shade);
                    break;
                default:
                    color = palette.no_convergence;
                    break;
            }
            if (overlay &&
                std::abs(signed_distance(*overlay, vp.pixel_center(i, j))) <=
                    overlay_band)
                color = palette.overlay;
            bytes.push_back(color.r);
            bytes.push_back(color.g);
            bytes.push_back(color.b);
        }
    }
    return bytes;
}

}  // namespace basins

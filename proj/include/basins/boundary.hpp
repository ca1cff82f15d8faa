#ifndef BASINS_BOUNDARY_HPP
#define BASINS_BOUNDARY_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "basins/iterate.hpp"
#include "basins/julia.hpp"

namespace basins {

struct no_sign_change : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct nonconvergent_endpoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One located basin-boundary point along a ray.
struct BoundaryProbe {
    Complex ray_origin{};
    Complex ray_direction{};  // unit
    double t = 0;             // crossing parameter along the ray
    Complex crossing{};       // ray_origin + t * ray_direction
    /// |signed_distance(locus, crossing)| once a locus is attached by
    /// boundary_report; NaN from find_boundary_crossing alone.
    double analytic_distance = 0;
};

/// Locate the basin boundary on the segment [origin, origin + t_max * dir]
/// by bisection on the attractor classification. The two endpoints must
/// converge to different roots (no_sign_change / nonconvergent_endpoint
/// otherwise). The classifier is a black box: each bisection step trusts
/// only the classes of the current bracket endpoints, which is the only
/// sound approach for a discontinuous indicator.
BoundaryProbe find_boundary_crossing(const TwoRootPoly& poly,
                                     const MethodSpec& method, Complex origin,
                                     Complex direction, double t_max,
                                     double bisect_tol,
                                     const OrbitParams& params = {});

struct BoundaryReport {
    std::vector<BoundaryProbe> probes;
    double max_dev = 0;   // max |analytic_distance| over probes
    double mean_dev = 0;  // mean |analytic_distance|
    int failed_rays = 0;
    std::vector<std::string> ray_errors;
};

/// Empirical certification of an analytic locus. Circle: casts n_rays rays
/// at uniformly spaced angles from the center. Line: casts n_rays rays
/// perpendicular to the line from origins spread along it. Per-ray failures
/// are collected; throws std::runtime_error when more than 10% of rays
/// fail. Requires n_rays >= 8.
BoundaryReport boundary_report(const TwoRootPoly& poly, const MethodSpec& method,
                               const JuliaLocus& locus, int n_rays,
                               double bisect_tol = 1e-8,
                               const OrbitParams& params = {});

struct SeedOutcome {
    Complex seed{};
    OrbitStatus status = OrbitStatus::max_iterations;
    int iters = 0;
    std::optional<double> coc;  // convergence-order estimate, when available
};

struct RootStats {
    int count = 0;
    double mean_iters = 0;
    double mean_coc = 0;  // over seeds with an estimate
};

struct ConvergenceReport {
    std::vector<SeedOutcome> seeds;
    RootStats root_a;
    RootStats root_b;
    int failed_seeds = 0;
};

/// Run every seed to convergence and estimate the computational order of
/// convergence per seed. Per-seed failures are recorded, not fatal.
ConvergenceReport convergence_report(const TwoRootPoly& poly,
                                     const MethodSpec& method,
                                     std::span<const Complex> seeds,
                                     const OrbitParams& params = {});

}  // namespace basins

#endif

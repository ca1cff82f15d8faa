#include "basins/boundary.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace basins {

namespace {

enum class Side { root_a, root_b };

Side classify_or_throw(const TwoRootPoly& poly, const MethodSpec& method,
                       Complex z, const OrbitParams& params) {
    const OrbitResult r = run_orbit(poly, method, z, params);
    if (r.status == OrbitStatus::converged_a) return Side::root_a;
    if (r.status == OrbitStatus::converged_b) return Side::root_b;
    throw nonconvergent_endpoint("boundary probe did not converge");
}

}  // namespace

BoundaryProbe find_boundary_crossing(const TwoRootPoly& poly,
                                     const MethodSpec& method, Complex origin,
                                     Complex direction, double t_max,
                                     double bisect_tol,
                                     const OrbitParams& params) {
    if (!(bisect_tol > 0) || !(t_max > 0))
        throw std::invalid_argument("find_boundary_crossing: bad tolerances");

    const Side lo_side = classify_or_throw(poly, method, origin, params);
    const Side hi_side =
        classify_or_throw(poly, method, origin + t_max * direction, params);
    if (lo_side == hi_side)
        throw no_sign_change("both ray endpoints converge to the same root");

    double lo = 0.0, hi = t_max;
    while (hi - lo >= bisect_tol) {
        double mid = 0.5 * (lo + hi);
        Side mid_side;
        try {
            mid_side = classify_or_throw(poly, method, origin + mid * direction, params);
        } catch (const nonconvergent_endpoint&) {
            // the probe landed on the boundary itself (it happens: the Julia
            // set contains exactly representable points); retry off-center,
            // which still shrinks the bracket
            mid = lo + 0.3819660112501051 * (hi - lo);
            mid_side = classify_or_throw(poly, method, origin + mid * direction, params);
        }
        if (mid_side == lo_side)
            lo = mid;
        else
            hi = mid;
    }

    BoundaryProbe probe;
    probe.ray_origin = origin;
    probe.ray_direction = direction;
    probe.t = 0.5 * (lo + hi);
    probe.crossing = origin + probe.t * direction;
    probe.analytic_distance = std::numeric_limits<double>::quiet_NaN();
    return probe;
}

BoundaryReport boundary_report(const TwoRootPoly& poly, const MethodSpec& method,
                               const JuliaLocus& locus, int n_rays,
                               double bisect_tol, const OrbitParams& params) {
    if (n_rays < 8)
        throw std::invalid_argument("boundary_report: need at least 8 rays");

    // Ray families: from the center outward for a circle (one crossing per
    // ray when the locus is the true boundary; a spurious extra crossing
    // would surface as a ray error), across the line for a bisector locus.
    std::vector<std::pair<Complex, double>> rays;  // (origin, t_max), unit dir below
    std::vector<Complex> dirs;
    rays.reserve(n_rays);
    dirs.reserve(n_rays);
    if (const auto* circle = std::get_if<CircleLocus>(&locus)) {
        for (int k = 0; k < n_rays; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / n_rays;
            dirs.push_back(Complex{std::cos(theta), std::sin(theta)});
            rays.emplace_back(circle->center, 2.0 * circle->radius);
        }
    } else {
        const auto& line = std::get<LineLocus>(locus);
        const Complex normal = Complex{0.0, -1.0} * line.direction;  // a's side
        const double scale =
            poly.n >= 1 ? std::abs(poly.a - poly.b) : 2.0;
        // asymmetric heights keep the first bisection probe off the line
        const double h_before = 0.45 * scale;
        const double h_after = 0.55 * scale;
        const double span = scale;
        for (int k = 0; k < n_rays; ++k) {
            const double s =
                n_rays == 1 ? 0.0 : span * (2.0 * k / (n_rays - 1.0) - 1.0);
            rays.emplace_back(line.point + s * line.direction - h_before * normal,
                              h_before + h_after);
            dirs.push_back(normal);
        }
    }

    BoundaryReport report;
    report.probes.reserve(n_rays);
    double sum = 0.0;
    for (int k = 0; k < n_rays; ++k) {
        try {
            BoundaryProbe probe = find_boundary_crossing(
                poly, method, rays[k].first, dirs[k], rays[k].second, bisect_tol,
                params);
            probe.analytic_distance = std::abs(signed_distance(locus, probe.crossing));
            report.max_dev = std::max(report.max_dev, probe.analytic_distance);
            sum += probe.analytic_distance;
            report.probes.push_back(probe);
        } catch (const std::runtime_error& e) {
            ++report.failed_rays;
            report.ray_errors.emplace_back(e.what());
        }
    }
    if (!report.probes.empty()) sum /= static_cast<double>(report.probes.size());
    report.mean_dev = sum;
    if (report.failed_rays * 10 > n_rays)
        throw std::runtime_error("boundary_report: more than 10% of rays failed");
    return report;
}

ConvergenceReport convergence_report(const TwoRootPoly& poly,
                                     const MethodSpec& method,
                                     std::span<const Complex> seeds,
                                     const OrbitParams& params) {
    ConvergenceReport report;
    report.seeds.reserve(seeds.size());
    double iters_a = 0, iters_b = 0, coc_a = 0, coc_b = 0;
    int coc_na = 0, coc_nb = 0;
    for (const Complex& seed : seeds) {
        const OrbitResult orbit = run_orbit(poly, method, seed, params);
        SeedOutcome outcome{seed, orbit.status, orbit.steps, std::nullopt};
        if (orbit.converged()) {
            outcome.coc = estimate_convergence_order(orbit.errors);
            if (orbit.status == OrbitStatus::converged_a) {
                ++report.root_a.count;
                iters_a += orbit.steps;
                if (outcome.coc) { coc_a += *outcome.coc; ++coc_na; }
            } else {
                ++report.root_b.count;
                iters_b += orbit.steps;
                if (outcome.coc) { coc_b += *outcome.coc; ++coc_nb; }
            }
        } else {
            ++report.failed_seeds;
        }
        report.seeds.push_back(outcome);
    }
    if (report.root_a.count > 0) report.root_a.mean_iters = iters_a / report.root_a.count;
    if (report.root_b.count > 0) report.root_b.mean_iters = iters_b / report.root_b.count;
    if (coc_na > 0) report.root_a.mean_coc = coc_a / coc_na;
    if (coc_nb > 0) report.root_b.mean_coc = coc_b / coc_nb;
    return report;
}

}  // namespace basins

#include "basins/report.hpp"

#include <cmath>
#include <sstream>

namespace basins {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

const char* status_name(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::converged_a: return "converged_a";
        case OrbitStatus::converged_b: return "converged_b";
        case OrbitStatus::diverged: return "diverged";
        case OrbitStatus::max_iterations: return "max_iterations";
        case OrbitStatus::hit_singularity: return "hit_singularity";
    }
    return "unknown";
}

Json stats_json(const RootStats& s) {
    Json j;
    j["count"] = s.count;
    j["mean_iters"] = s.mean_iters;
    j["mean_coc"] = s.mean_coc;
    return j;
}

}  // namespace

Json to_json(const JuliaLocus& locus) {
    Json j;
    if (const auto* circle = std::get_if<CircleLocus>(&locus)) {
        j["type"] = "circle";
        j["center"] = complex_json(circle->center);
        j["radius"] = circle->radius;
    } else {
        const auto& line = std::get<LineLocus>(locus);
        j["type"] = "line";
        j["point"] = complex_json(line.point);
        j["direction"] = complex_json(line.direction);
    }
    return j;
}

Json to_json(const BoundaryProbe& probe) {
    Json j;
    j["angle"] = std::atan2(probe.ray_direction.imag(), probe.ray_direction.real());
    j["t"] = probe.t;
    j["crossing_re"] = probe.crossing.real();
    j["crossing_im"] = probe.crossing.imag();
    j["analytic_distance"] = probe.analytic_distance;
    return j;
}

Json to_json(const BoundaryReport& report, Json config) {
    Json j;
    j["config"] = std::move(config);
    Json probes = Json::array();
    for (const auto& probe : report.probes) probes.push_back(to_json(probe));
    j["probes"] = std::move(probes);
    j["max_dev"] = report.max_dev;
    j["mean_dev"] = report.mean_dev;
    j["failed_rays"] = report.failed_rays;
    j["ray_errors"] = report.ray_errors;
    return j;
}

Json to_json(const ConvergenceReport& report, Json config) {
    Json j;
    j["config"] = std::move(config);
    Json coc = Json::array();
    for (const auto& s : report.seeds) {
        Json entry;
        entry["seed_re"] = s.seed.real();
        entry["seed_im"] = s.seed.imag();
        entry["status"] = status_name(s.status);
        entry["iters"] = s.iters;
        if (s.coc)
            entry["coc"] = *s.coc;
        else
            entry["coc"] = nullptr;
        coc.push_back(std::move(entry));
    }
    j["coc"] = std::move(coc);
    j["root_a"] = stats_json(report.root_a);
    j["root_b"] = stats_json(report.root_b);
    j["failed_seeds"] = report.failed_seeds;
    return j;
}

std::string probes_csv(const BoundaryReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "angle,t,crossing_re,crossing_im,analytic_distance\n";
    for (const auto& p : report.probes) {
        out << std::atan2(p.ray_direction.imag(), p.ray_direction.real()) << ","
            << p.t << "," << p.crossing.real() << "," << p.crossing.imag() << ","
            << p.analytic_distance << "\n";
    }
    return out.str();
}

}  // namespace basins

#ifndef BASINS_REPORT_HPP
#define BASINS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "basins/boundary.hpp"

namespace basins {

/// Reports serialize with fixed key order (nlohmann::ordered_json) so that
/// repeated runs diff cleanly and byte-identical outputs are testable.
using Json = nlohmann::ordered_json;

Json to_json(const JuliaLocus& locus);
Json to_json(const BoundaryProbe& probe);

/// {"config": <config>, "probes": [...], "max_dev": .., "mean_dev": ..,
///  "failed_rays": .., "ray_errors": [...]}
Json to_json(const BoundaryReport& report, Json config);

/// {"config": <config>, "coc": [...per-seed...], "root_a": {...},
///  "root_b": {...}, "failed_seeds": ..}
Json to_json(const ConvergenceReport& report, Json config);

/// CSV with header angle,t,crossing_re,crossing_im,analytic_distance.
std::string probes_csv(const BoundaryReport& report);

}  // namespace basins

#endif

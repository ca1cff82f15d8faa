#ifndef BASINS_CLI_HPP
#define BASINS_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "basins/basin.hpp"
#include "basins/report.hpp"

namespace basins::cli {

/// Everything a run needs, mirrored one-to-one by the JSON sidecar so a run
/// can be reproduced with --config. Values of 0 / empty mark "not given";
/// validation per subcommand happens after flags and config are merged.
struct RunConfig {
    std::string subcommand;
    MethodSpec method = MethodSpec::schroeder();
    Complex a{1.0, 0.0};
    Complex b{-1.0, 0.0};
    int m = 0;
    int n = -1;
    Viewport viewport{Complex{-1.0, 0.0}, 6.0, 6.0, 512, 512};
    OrbitParams orbit;
    bool overlay = false;
    int threads = 0;
    std::string out;
    std::string csv;
    int rays = 64;
    double bisect_tol = 1e-8;
    double tolerance = 1e-5;
    int seeds = 20;
    double seed_radius = 0.3;
    std::uint64_t seed = 1;
};

/// Parse "re" or "re,im".
Complex parse_complex(const std::string& text);

/// newton | schroeder | chebyshev | halley | chebyshev-halley (with alpha).
MethodSpec parse_method(const std::string& name, double alpha);
std::string method_name(const MethodSpec& method);

Json config_json(const RunConfig& cfg);
RunConfig config_from_json(const Json& j);

/// Deterministic seed cloud: `count` points alternating between disks of
/// the given radius around the two roots. Pure function of its arguments
/// (hand-rolled generator, identical on every platform).
std::vector<Complex> draw_seeds_near_roots(Complex a, Complex b, int count,
                                           double radius, std::uint64_t seed);

/// Full CLI: subcommands render, certify, converge. Returns the process
/// exit code: 0 success, 1 configuration/usage error, 2 certification
/// failure beyond tolerance.
int run_cli(int argc, const char* const* argv);

}  // namespace basins::cli

#endif

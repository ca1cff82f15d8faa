#ifndef BASINS_ITERATE_HPP
#define BASINS_ITERATE_HPP

#include <optional>
#include <span>
#include <vector>

#include "basins/poly.hpp"

namespace basins {

enum class Method { newton, schroeder, chebyshev_halley };

/// Which one-point iteration to run. The Chebyshev-Halley family is
/// parameterized by alpha: alpha = 0 is Chebyshev's method, alpha = 1/2 is
/// Halley's, and |alpha| -> infinity recovers Newton's.
struct MethodSpec {
    Method kind = Method::schroeder;
    double alpha = 0.0;  // used only by chebyshev_halley

    static MethodSpec newton() { return {Method::newton, 0.0}; }
    static MethodSpec schroeder() { return {Method::schroeder, 0.0}; }
    static MethodSpec chebyshev() { return {Method::chebyshev_halley, 0.0}; }
    static MethodSpec halley() { return {Method::chebyshev_halley, 0.5}; }
    static MethodSpec chebyshev_halley(double alpha) {
        return {Method::chebyshev_halley, alpha};
    }
};

/// One Newton step z - f/f'. nullopt when the correction is singular at z.
std::optional<Complex> newton_step(const TwoRootPoly& p, Complex z);

/// One step of Schroeder's method (Newton applied to f/f'),
///   z - [1 / (1 - L_f(z))] f(z)/f'(z),
/// composed from eval_lf and eval_f_over_fprime. nullopt when 1 - L_f = 0
/// or either closed-form denominator vanishes.
std::optional<Complex> schroeder_step(const TwoRootPoly& p, Complex z);

/// One Chebyshev-Halley step
///   z - [1 + (1/2) L_f / (1 - alpha L_f)] f(z)/f'(z).
/// nullopt when 1 - alpha L_f = 0 or the closed forms are singular.
std::optional<Complex> chebyshev_halley_step(const TwoRootPoly& p, double alpha,
                                             Complex z);

/// Dispatch on MethodSpec.
std::optional<Complex> apply_step(const TwoRootPoly& p, const MethodSpec& method,
                                  Complex z);

enum class OrbitStatus {
    converged_a,
    converged_b,
    diverged,
    max_iterations,
    hit_singularity,
};

struct OrbitParams {
    double conv_tol = 1e-9;
    int max_iter = 200;
    double escape_radius = 1e6;
};

struct OrbitResult {
    OrbitStatus status = OrbitStatus::max_iterations;
    std::vector<Complex> iterates;  // includes the seed; size == steps + 1
    std::vector<double> errors;     // |z_k - attractor|, filled only on convergence
    int steps = 0;

    bool converged() const {
        return status == OrbitStatus::converged_a ||
               status == OrbitStatus::converged_b;
    }
};

/// Throws std::invalid_argument unless conv_tol > 0, max_iter >= 1,
/// escape_radius > max(|a|, |b|) + 1, and (when n >= 1)
/// conv_tol < |a - b| / 2 so the two proximity tests cannot both fire.
void validate_orbit_params(const TwoRootPoly& p, const OrbitParams& params);

/// Iterate `method` from z0. Stops as soon as an iterate is within conv_tol
/// of a root (nearest root wins), |z| exceeds escape_radius (diverged), the
/// step is singular, or max_iter steps have been taken. The convergence test
/// is proximity to a known root, not smallness of |f|: the attractor's
/// identity is the quantity of interest here. Parameter validation as in
/// validate_orbit_params; after that the function is total, every outcome is
/// a status.
OrbitResult run_orbit(const TwoRootPoly& p, const MethodSpec& method, Complex z0,
                      const OrbitParams& params = {});

/// Computational order of convergence from an error sequence:
///   rho = ln(e_{k+1}/e_k) / ln(e_k/e_{k-1})
/// using the last consecutive triple that is strictly decreasing, strictly
/// positive, and above 100 * machine epsilon (below that the sequence is
/// rounding noise). nullopt when no such triple exists.
std::optional<double> estimate_convergence_order(std::span<const double> errors);

}  // namespace basins

#endif

#include "basins/iterate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace basins {

std::optional<Complex> newton_step(const TwoRootPoly& p, Complex z) {
    const auto corr = eval_f_over_fprime(p, z);
    if (!corr) return std::nullopt;
    return z - *corr;
}

std::optional<Complex> schroeder_step(const TwoRootPoly& p, Complex z) {
    const auto lf = eval_lf(p, z);
    const auto corr = eval_f_over_fprime(p, z);
    if (!lf || !corr) return std::nullopt;
    const Complex one_minus = 1.0 - *lf;
    if (one_minus == Complex{}) return std::nullopt;
    return z - *corr / one_minus;
}

std::optional<Complex> chebyshev_halley_step(const TwoRootPoly& p, double alpha,
                                             Complex z) {
    const auto lf = eval_lf(p, z);
    const auto corr = eval_f_over_fprime(p, z);
    if (!lf || !corr) return std::nullopt;
    const Complex damp = 1.0 - alpha * *lf;
    if (damp == Complex{}) return std::nullopt;
    return z - (1.0 + 0.5 * *lf / damp) * *corr;
}

std::optional<Complex> apply_step(const TwoRootPoly& p, const MethodSpec& method,
                                  Complex z) {
    switch (method.kind) {
        case Method::newton:
            return newton_step(p, z);
        case Method::schroeder:
            return schroeder_step(p, z);
        case Method::chebyshev_halley:
            return chebyshev_halley_step(p, method.alpha, z);
    }
    return std::nullopt;
}

void validate_orbit_params(const TwoRootPoly& p, const OrbitParams& params) {
    if (!(params.conv_tol > 0))
        throw std::invalid_argument("orbit: conv_tol must be positive");
    if (params.max_iter < 1)
        throw std::invalid_argument("orbit: max_iter must be >= 1");
    if (p.n >= 1 && !(params.conv_tol < 0.5 * std::abs(p.a - p.b)))
        throw std::invalid_argument("orbit: conv_tol must be < |a-b|/2");
    const double root_reach = std::max(std::abs(p.a), p.n >= 1 ? std::abs(p.b) : 0.0);
    if (!(params.escape_radius > root_reach + 1.0))
        throw std::invalid_argument("orbit: escape_radius too small");
}

OrbitResult run_orbit(const TwoRootPoly& p, const MethodSpec& method, Complex z0,
                      const OrbitParams& params) {
    validate_orbit_params(p, params);

    OrbitResult result;
    result.iterates.reserve(16);
    result.iterates.push_back(z0);

    Complex z = z0;
    for (int k = 0;; ++k) {
        const double da = std::abs(z - p.a);
        const double db = p.n >= 1 ? std::abs(z - p.b)
                                   : std::numeric_limits<double>::infinity();
        if (da < params.conv_tol || db < params.conv_tol) {
            result.status =
                da <= db ? OrbitStatus::converged_a : OrbitStatus::converged_b;
            result.steps = k;
            const Complex root = da <= db ? p.a : p.b;
            result.errors.reserve(result.iterates.size());
            for (const Complex& zk : result.iterates)
                result.errors.push_back(std::abs(zk - root));
            return result;
        }
        if (!(std::abs(z) <= params.escape_radius)) {
            // also catches non-finite iterates
            result.status = OrbitStatus::diverged;
            result.steps = k;
            return result;
        }
        if (k == params.max_iter) {
            result.status = OrbitStatus::max_iterations;
            result.steps = k;
            return result;
        }
        const auto next = apply_step(p, method, z);
        if (!next) {
            result.status = OrbitStatus::hit_singularity;
            result.steps = k;
            return result;
        }
        z = *next;
        result.iterates.push_back(z);
    }
}

std::optional<double> estimate_convergence_order(std::span<const double> errors) {
    const double floor = 100.0 * std::numeric_limits<double>::epsilon();
    // Last triple (e0, e1, e2) with e0 > e1 > e2 > floor.
    for (size_t k = errors.size(); k >= 3; --k) {
        const double e0 = errors[k - 3], e1 = errors[k - 2], e2 = errors[k - 1];
        if (e0 > e1 && e1 > e2 && e2 > floor)
            return std::log(e2 / e1) / std::log(e1 / e0);
    }
    return std::nullopt;
}

}  // namespace basins

#include "basins/julia.hpp"

#include <cmath>
#include <cstdint>

namespace basins {

JuliaLocus julia_locus_normalized(int m, int n) {
    if (n < 1 || m < n)
        throw invalid_multiplicities("julia_locus_normalized: need m >= n >= 1");
    if (m == n) return LineLocus{Complex{}, Complex{0.0, 1.0}};
    // Integer numerators and denominator are exact, so one correctly rounded
    // division gives the same double for every (km, kn).
    const std::int64_t mm = static_cast<std::int64_t>(m) * m;
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    const double den = static_cast<double>(mm - nn);
    const double center = -static_cast<double>(mm + nn) / den;
    const double radius = static_cast<double>(2 * static_cast<std::int64_t>(m) * n) / den;
    return CircleLocus{Complex{center, 0.0}, radius};
}

JuliaLocus julia_locus_general(int m, int n, Complex a, Complex b) {
    if (n < 1 || m < n)
        throw invalid_multiplicities("julia_locus_general: need m >= n >= 1");
    if (a == b) throw std::invalid_argument("julia_locus_general: a == b");
    if (m == n) {
        const Complex mid = (a + b) / 2.0;
        const Complex dir = Complex{0.0, 1.0} * (a - b) / std::abs(a - b);
        return LineLocus{mid, dir};
    }
    const std::int64_t mm = static_cast<std::int64_t>(m) * m;
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    const double den = static_cast<double>(mm - nn);
    const Complex center =
        (static_cast<double>(mm) * b - static_cast<double>(nn) * a) / den;
    const double radius =
        static_cast<double>(static_cast<std::int64_t>(m) * n) * std::abs(a - b) / den;
    return CircleLocus{center, radius};
}

double signed_distance(const JuliaLocus& locus, Complex z) {
    if (const auto* c = std::get_if<CircleLocus>(&locus))
        return std::abs(z - c->center) - c->radius;
    const auto& line = std::get<LineLocus>(locus);
    // Positive to the right of the direction vector; for the bisector loci
    // built above that is the half-plane containing root a.
    return std::imag(std::conj(z - line.point) * line.direction);
}

HyperbolaPoint hyperbola_point(int m, int n) {
    if (n < 1 || m <= n)
        throw invalid_multiplicities("hyperbola_point: need m > n >= 1");
    const std::int64_t mm = static_cast<std::int64_t>(m) * m;
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    const std::int64_t den = mm - nn;
    const std::int64_t num_x = mm + nn;
    const std::int64_t num_y = 2 * static_cast<std::int64_t>(m) * n;
    HyperbolaPoint pt;
    pt.x = static_cast<double>(num_x) / static_cast<double>(den);
    pt.y = static_cast<double>(num_y) / static_cast<double>(den);
    // x^2 - y^2 - 1 = [(m^2+n^2)^2 - (2mn)^2 - (m^2-n^2)^2] / (m^2-n^2)^2,
    // an integer identity; the numerator vanishes identically.
    const std::int64_t residual_num = num_x * num_x - num_y * num_y - den * den;
    pt.residual = std::abs(static_cast<double>(residual_num)) /
                  (static_cast<double>(den) * static_cast<double>(den));
    return pt;
}

JuliaLocus p_class_locus(int num, int den) {
    if (den < 1 || num <= den)
        throw std::invalid_argument("p_class_locus: need p = num/den > 1");
    // -(p^2+1)/(p^2-1) = -(num^2+den^2)/(num^2-den^2) and likewise for the
    // radius, so the reduced fraction lands on the same doubles as any
    // (m, n) with m/n = p.
    return julia_locus_normalized(num, den);
}

}  // namespace basins

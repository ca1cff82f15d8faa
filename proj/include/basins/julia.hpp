#ifndef BASINS_JULIA_HPP
#define BASINS_JULIA_HPP

#include <stdexcept>
#include <variant>

#include "basins/poly.hpp"

namespace basins {

struct invalid_multiplicities : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A line through `point` along unit `direction`. Orientation convention:
/// signed_distance is positive on the half-plane to the right of the
/// direction vector, chosen so that the image of root a is on the positive
/// side (for the normalized imaginary-axis line, the +1 half-plane).
struct LineLocus {
    Complex point{};
    Complex direction{0.0, 1.0};
};

struct CircleLocus {
    Complex center{};
    double radius = 1.0;
};

/// Analytic Julia set of Schroeder's method on a two-root polynomial:
/// a line when the multiplicities are equal, a circle otherwise.
using JuliaLocus = std::variant<LineLocus, CircleLocus>;

/// Julia set for roots normalized to +-1 and multiplicities m >= n >= 1.
/// For m == n this is the imaginary axis; for m > n the circle
///
///   center = -(m^2 + n^2)/(m^2 - n^2),   radius = 2mn/(m^2 - n^2).
///
/// Both values are quotients of exactly representable integers, so equal
/// multiplicity ratios give bit-identical loci. Throws
/// invalid_multiplicities unless m >= n >= 1.
JuliaLocus julia_locus_normalized(int m, int n);

/// Julia set of Schroeder's method on (z-a)^m (z-b)^n, m >= n >= 1, a != b.
/// m == n: the perpendicular bisector of [a, b]. m > n: the circle
///
///   center = (b m^2 - a n^2)/(m^2 - n^2),   radius = m n |a-b|/(m^2 - n^2),
///
/// i.e. the image of the normalized circle under A^{-1}. Note the center's
/// sign: |z - center| = radius, consistent with the normalized locus at
/// (a, b) = (1, -1). The circle surrounds b, the root of smaller
/// multiplicity.
JuliaLocus julia_locus_general(int m, int n, Complex a, Complex b);

/// Circle: |z - center| - radius (negative inside).
/// Line: perpendicular distance, positive on root a's side.
double signed_distance(const JuliaLocus& locus, Complex z);

struct HyperbolaPoint {
    double x = 0;         // (m^2 + n^2)/(m^2 - n^2), the negated circle center
    double y = 0;         // 2mn/(m^2 - n^2), the radius
    double residual = 0;  // |x^2 - y^2 - 1|, from the exact integer identity
};

/// The (center magnitude, radius) pair of the normalized locus lies on the
/// hyperbola x^2 - y^2 = 1: (m^2+n^2)^2 - (2mn)^2 = (m^2-n^2)^2 holds in
/// integers, so the residual is exactly zero. Requires m > n >= 1.
HyperbolaPoint hyperbola_point(int m, int n);

/// Locus for a multiplicity ratio p = num/den > 1 given as a fraction:
///
///   center = -(p^2 + 1)/(p^2 - 1),   radius = 2p/(p^2 - 1).
///
/// Equals julia_locus_normalized(m, n) for every (m, n) with m/n = p; all
/// such pairs share one Julia set. Throws std::invalid_argument when
/// num <= den or den < 1.
JuliaLocus p_class_locus(int num, int den);

}  // namespace basins

#endif

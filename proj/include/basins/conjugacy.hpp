#ifndef BASINS_CONJUGACY_HPP
#define BASINS_CONJUGACY_HPP

#include <array>
#include <stdexcept>

#include "basins/poly.hpp"

namespace basins {

/// Value on the extended complex plane: a finite number or the point at
/// infinity. The Moebius maps below need the infinity tag for totality;
/// full projective coordinates would be overkill for the four maps here.
struct ExtComplex {
    Complex value{};
    bool infinite = false;

    static ExtComplex inf() {
        ExtComplex e;
        e.infinite = true;
        return e;
    }
    ExtComplex() = default;
    ExtComplex(Complex z) : value(z) {}  // implicit: finite values promote freely
    ExtComplex(double x) : value(x) {}

    bool is_inf() const { return infinite; }
    Complex finite() const;  // throws std::logic_error on infinity
};

struct pole_proximity : std::domain_error {
    using std::domain_error::domain_error;
};

/// M(z) = (z - a)/(z - b). Sends a -> 0, b -> inf, inf -> 1. Total on the
/// extended plane; requires a != b.
ExtComplex moebius(Complex a, Complex b, ExtComplex z);

/// Inverse of moebius: w -> (a - b w)/(1 - w), with 1 -> inf, inf -> b.
ExtComplex moebius_inverse(Complex a, Complex b, ExtComplex w);

/// Affine change of coordinates A(z) = 1 + 2(z - a)/(a - b) taking the
/// roots a, b to 1, -1.
Complex affine_to_normalized(Complex a, Complex b, Complex z);

/// A^{-1}(w) = a + (w - 1)(a - b)/2.
Complex affine_from_normalized(Complex a, Complex b, Complex w);

/// Schroeder's iteration in root-normalized coordinates (roots at +-1),
/// i.e. A o S_f o A^{-1}:
///
///   T(z) = [(m-n) z^2 + 2(m+n) z + (m-n)] / [(m+n) z^2 + 2(m-n) z + (m+n)]
///
/// with T(inf) = (m-n)/(m+n) and poles sent to infinity. Depends only on
/// the multiplicities. Requires m >= 1, n >= 1.
ExtComplex normalized_schroeder_map(int m, int n, ExtComplex z);

/// The model power map R(z) = -(n/m) z^2 obtained by conjugating the
/// normalized map with M(z) = (z-1)/(z+1); R(inf) = inf. The circle
/// |z| = m/n is invariant, orbits inside go to 0 and outside to infinity.
ExtComplex model_map(int m, int n, ExtComplex z);

/// Poles (in the normalized w-plane) near which conjugacy_residual is
/// ill-conditioned: the two poles of the normalized map and the image
/// under A of the free critical point of f.
std::array<Complex, 3> conjugacy_residual_poles(int m, int n, Complex a,
                                                Complex b);

/// Residual certifying both conjugacy identities at one sample w:
///
///   r1 = | A(S_f(A^{-1}(w))) - T_{m,n}(w) |          (S_f on (z-a)^m (z-b)^n)
///   r2 = | M(T_{m,n}(M^{-1}(w))) + (n/m) w^2 |        (M with roots 1, -1)
///
/// Returns max(r1, r2); a value at rounding scale certifies both identities
/// at w. S_f here is the production schroeder_step, so the check covers the
/// real code path. Throws pole_proximity when w is within min_pole_distance
/// of any pole from conjugacy_residual_poles (conditioning degrades there).
double conjugacy_residual(int m, int n, Complex a, Complex b, Complex w,
                          double min_pole_distance = 1e-3);

}  // namespace basins

#endif

#include "basins/conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "basins/iterate.hpp"

namespace basins {

Complex ExtComplex::finite() const {
    if (infinite) throw std::logic_error("ExtComplex: value is infinite");
    return value;
}

ExtComplex moebius(Complex a, Complex b, ExtComplex z) {
    if (a == b) throw std::invalid_argument("moebius: a == b");
    if (z.is_inf()) return Complex{1.0, 0.0};
    if (z.value == b) return ExtComplex::inf();
    return (z.value - a) / (z.value - b);
}

ExtComplex moebius_inverse(Complex a, Complex b, ExtComplex w) {
    if (a == b) throw std::invalid_argument("moebius_inverse: a == b");
    if (w.is_inf()) return b;
    if (w.value == Complex{1.0, 0.0}) return ExtComplex::inf();
    return (a - b * w.value) / (1.0 - w.value);
}

Complex affine_to_normalized(Complex a, Complex b, Complex z) {
    if (a == b) throw std::invalid_argument("affine_to_normalized: a == b");
    return 1.0 + 2.0 * (z - a) / (a - b);
}

Complex affine_from_normalized(Complex a, Complex b, Complex w) {
    if (a == b) throw std::invalid_argument("affine_from_normalized: a == b");
    return a + (w - 1.0) * (a - b) / 2.0;
}

static void check_mult(int m, int n, const char* who) {
    if (m < 1 || n < 1) throw std::invalid_argument(std::string(who) + ": m, n must be >= 1");
}

ExtComplex normalized_schroeder_map(int m, int n, ExtComplex z) {
    check_mult(m, n, "normalized_schroeder_map");
    const double dm = m, dn = n;
    if (z.is_inf()) return Complex{(dm - dn) / (dm + dn), 0.0};
    const Complex zz = z.value * z.value;
    const Complex num = (dm - dn) * zz + (2.0 * (dm + dn)) * z.value + (dm - dn);
    const Complex den = (dm + dn) * zz + (2.0 * (dm - dn)) * z.value + (dm + dn);
    if (den == Complex{}) return ExtComplex::inf();
    return num / den;
}

ExtComplex model_map(int m, int n, ExtComplex z) {
    check_mult(m, n, "model_map");
    if (z.is_inf()) return ExtComplex::inf();
    return -(static_cast<double>(n) / m) * (z.value * z.value);
}

std::array<Complex, 3> conjugacy_residual_poles(int m, int n, Complex a, Complex b) {
    check_mult(m, n, "conjugacy_residual_poles");
    const double dm = m, dn = n;
    // Poles of the normalized map: roots of (m+n) z^2 + 2(m-n) z + (m+n),
    // a conjugate pair on the unit circle. These coincide with the images
    // under A of the points where 1 - L_f vanishes.
    const double re = -(dm - dn) / (dm + dn);
    const double im = 2.0 * std::sqrt(dm * dn) / (dm + dn);
    // Image under A of the free critical point of f, where f'/f blows up.
    const Complex wc = affine_to_normalized(
        a, b, critical_point(TwoRootPoly{a, b, m, n}));
    return {Complex{re, im}, Complex{re, -im}, wc};
}

double conjugacy_residual(int m, int n, Complex a, Complex b, Complex w,
                          double min_pole_distance) {
    check_mult(m, n, "conjugacy_residual");
    if (a == b) throw std::invalid_argument("conjugacy_residual: a == b");

    for (const Complex& pole : conjugacy_residual_poles(m, n, a, b)) {
        if (std::abs(w - pole) < min_pole_distance)
            throw pole_proximity("conjugacy_residual: sample too close to a pole");
    }

    const TwoRootPoly poly{a, b, m, n};

    // Route 1: A o S_f o A^{-1} against the normalized map, both at w.
    const Complex z = affine_from_normalized(a, b, w);
    const auto s = schroeder_step(poly, z);
    const ExtComplex t = normalized_schroeder_map(m, n, w);
    if (!s || t.is_inf())
        throw pole_proximity("conjugacy_residual: singular evaluation at sample");
    const double r1 = std::abs(affine_to_normalized(a, b, *s) - t.finite());

    // Route 2: M o T o M^{-1} against -(n/m) w^2, M with roots (1, -1).
    // Total for finite w: intermediate infinities land back at finite values.
    const Complex one{1.0, 0.0}, minus_one{-1.0, 0.0};
    const ExtComplex back = moebius(
        one, minus_one, normalized_schroeder_map(m, n, moebius_inverse(one, minus_one, w)));
    if (back.is_inf())
        throw pole_proximity("conjugacy_residual: singular evaluation at sample");
    const double r2 =
        std::abs(back.finite() + (static_cast<double>(n) / m) * (w * w));

    return std::max(r1, r2);
}

}  // namespace basins

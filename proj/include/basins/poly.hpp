#ifndef BASINS_POLY_HPP
#define BASINS_POLY_HPP

#include <complex>
#include <optional>

namespace basins {

using Complex = std::complex<double>;

/// Polynomial with two roots and integer multiplicities,
///   f(z) = (z - a)^m (z - b)^n.
/// n == 0 encodes the single-root case f(z) = (z - a)^m; b is ignored then.
/// No coefficient form is ever materialized; everything is evaluated from
/// the factored representation.
struct TwoRootPoly {
    Complex a{};
    Complex b{};
    int m = 1;  // multiplicity of a, >= 1
    int n = 0;  // multiplicity of b, >= 0; a != b required when n >= 1

    /// Validating constructor. Throws std::invalid_argument on m < 1,
    /// n < 0, or coincident roots with n >= 1.
    static TwoRootPoly make(Complex a, Complex b, int m, int n);

    /// f(z) = (z - a)^m.
    static TwoRootPoly single_root(Complex a, int m);

    /// Same polynomial with the roles of the two factors exchanged.
    TwoRootPoly swapped() const { return TwoRootPoly{b, a, n, m}; }
};

/// z^e by repeated squaring, e >= 0.
Complex pow_int(Complex z, int e);

/// f(z). Exact zero at either root. Overflows to a non-finite value for
/// huge |z| or huge multiplicities; callers decide what that means.
Complex eval_f(const TwoRootPoly& p, Complex z);

/// L_f(z) = f(z) f''(z) / f'(z)^2 in the reduced closed form
///
///   L_f = [m(m-1) v^2 + 2mn uv + n(n-1) u^2] / (m v + n u)^2,
///   u = z - a, v = z - b.
///
/// The common factor u^(2m-2) v^(2n-2) is cancelled analytically; the naive
/// quotient would overflow for large multiplicities and hit 0/0 at the
/// roots. At a root the reduced form yields the limit value (m-1)/m
/// (resp. (n-1)/n). For n == 0 the value is the constant (m-1)/m.
///
/// Returns nullopt when the denominator m v + n u vanishes, i.e. at the
/// free critical point z = (m b + n a)/(m + n).
std::optional<Complex> eval_lf(const TwoRootPoly& p, Complex z);

/// Newton correction f(z)/f'(z) = u v / (m v + n u), reduced as above.
/// Exactly zero at either root; u/m when n == 0.
/// Returns nullopt when m v + n u vanishes.
std::optional<Complex> eval_f_over_fprime(const TwoRootPoly& p, Complex z);

/// The non-root critical point (m b + n a)/(m + n) where f' vanishes
/// without f vanishing. Requires n >= 1.
Complex critical_point(const TwoRootPoly& p);

}  // namespace basins

#endif

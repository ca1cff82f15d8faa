#include "basins/poly.hpp"

#include <stdexcept>

namespace basins {

TwoRootPoly TwoRootPoly::make(Complex a, Complex b, int m, int n) {
    if (m < 1) throw std::invalid_argument("TwoRootPoly: m must be >= 1");
    if (n < 0) throw std::invalid_argument("TwoRootPoly: n must be >= 0");
    if (n >= 1 && a == b)
        throw std::invalid_argument("TwoRootPoly: roots coincide; raise m instead");
    return TwoRootPoly{a, b, m, n};
}

TwoRootPoly TwoRootPoly::single_root(Complex a, int m) {
    return make(a, Complex{}, m, 0);
}

Complex pow_int(Complex z, int e) {
    Complex acc{1.0, 0.0};
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

Complex eval_f(const TwoRootPoly& p, Complex z) {
    const Complex u = z - p.a;
    if (p.n == 0) return pow_int(u, p.m);
    const Complex v = z - p.b;
    // A zero factor forces an exact zero even if the other factor overflows.
    if (u == Complex{} || v == Complex{}) return Complex{};
    return pow_int(u, p.m) * pow_int(v, p.n);
}

std::optional<Complex> eval_lf(const TwoRootPoly& p, Complex z) {
    const double m = p.m;
    if (p.n == 0) return Complex{(m - 1.0) / m, 0.0};
    const double n = p.n;
    const Complex u = z - p.a;
    const Complex v = z - p.b;
    const Complex den = m * v + n * u;
    if (den == Complex{}) return std::nullopt;
    // Summation order is symmetric under (a,m) <-> (b,n), so swapping the
    // factor labels reproduces bit-identical values.
    const Complex num =
        (m * (m - 1.0)) * (v * v) + (n * (n - 1.0)) * (u * u) + (2.0 * m * n) * (u * v);
    return num / (den * den);
}

std::optional<Complex> eval_f_over_fprime(const TwoRootPoly& p, Complex z) {
    const Complex u = z - p.a;
    if (p.n == 0) return u / static_cast<double>(p.m);
    const Complex v = z - p.b;
    const Complex den = static_cast<double>(p.m) * v + static_cast<double>(p.n) * u;
    if (den == Complex{}) return std::nullopt;
    if (u == Complex{} || v == Complex{}) return Complex{};
    return u * v / den;
}

Complex critical_point(const TwoRootPoly& p) {
    if (p.n < 1) throw std::invalid_argument("critical_point: needs two roots");
    const double m = p.m, n = p.n;
    return (m * p.b + n * p.a) / (m + n);
}

}  // namespace basins

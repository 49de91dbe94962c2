#include "eitdist/geometry.hpp"

#include <cmath>

namespace eitdist {

double normalize_angle(double phi) {
    double t = std::remainder(phi, kTwoPi);
    if (t <= -kPi) t += kTwoPi;
    return t;
}

Inclusion::Inclusion(Complex center, double radius, double contrast)
    : center_(center), radius_(radius), contrast_(contrast) {
    if (!(radius > 0.0))
        throw std::invalid_argument("inclusion radius must be positive");
    if (!(std::abs(center) + radius < 1.0))
        throw std::invalid_argument("inclusion not inside unit disk");
    if (!(contrast > -1.0))
        throw std::invalid_argument("contrast must exceed -1");
    if (!std::isfinite(center.real()) || !std::isfinite(center.imag()))
        throw std::invalid_argument("inclusion center must be finite");
}

MobiusParam make_mobius_param(Complex a, double r) {
    double rho = std::abs(a);
    if (rho >= 1.0)
        throw std::invalid_argument("moebius parameter must lie in the open unit disk");
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("concentric radius must lie in (0,1)");
    double zeta = (rho == 0.0) ? 0.0 : normalize_angle(std::arg(a));
    return MobiusParam{a, rho, zeta, r};
}

Complex mobius_apply(Complex a, Complex x) {
    if (std::abs(a) >= 1.0)
        throw std::invalid_argument("moebius parameter must lie in the open unit disk");
    Complex denom = std::conj(a) * x - 1.0;
    if (std::abs(denom) < 1e-15)
        throw std::invalid_argument("moebius transform singular at this point");
    return (x - a) / denom;
}

double mobius_boundary_angle(Complex a, double theta) {
    return std::arg(mobius_apply(a, std::polar(1.0, theta)));
}

MobiusParam to_concentric(const Inclusion& inc) {
    double c = std::abs(inc.center());
    double R = inc.radius();
    if (c + R >= 1.0)
        throw std::invalid_argument("inclusion not inside unit disk");
    // radicand expressed as ((1-R)^2-c^2)((1+R)^2-c^2) for stability
    double rad = ((1.0 - R) * (1.0 - R) - c * c) * ((1.0 + R) * (1.0 + R) - c * c);
    if (rad < 0.0 && rad > -1e-15) rad = 0.0;
    double r = (1.0 + R * R - c * c - std::sqrt(rad)) / (2.0 * R);
    Complex a = inc.center() / (1.0 - R * r);
    return make_mobius_param(a, r);
}

Inclusion from_concentric(Complex a, double r, double contrast) {
    double rho = std::abs(a);
    if (rho >= 1.0)
        throw std::invalid_argument("moebius parameter must lie in the open unit disk");
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("concentric radius must lie in (0,1)");
    double denom = rho * rho * r * r - 1.0;
    double c = rho * (r * r - 1.0) / denom;
    double R = r * (rho * rho - 1.0) / denom;
    Complex dir = (rho == 0.0) ? Complex(1.0, 0.0) : a / rho;
    return Inclusion(c * dir, R, contrast);
}

double jacobian_sqrt_boundary(Complex a, double theta) {
    double rho = std::abs(a);
    double zeta = (rho == 0.0) ? 0.0 : std::arg(a);
    return (1.0 - rho * rho) / (1.0 + rho * rho - 2.0 * rho * std::cos(theta - zeta));
}

double jacobian_sqrt_boundary(const MobiusParam& p, double theta) {
    return (1.0 - p.rho * p.rho) /
           (1.0 + p.rho * p.rho - 2.0 * p.rho * std::cos(theta - p.zeta));
}

Complex fourier_coeff_h(Complex a, long n) {
    if (std::abs(a) >= 1.0)
        throw std::invalid_argument("moebius parameter must lie in the open unit disk");
    if (n == 0) return Complex(1.0, 0.0);
    if (n > 0) return std::pow(std::conj(a), static_cast<double>(n));
    return std::pow(a, static_cast<double>(-n));
}

Complex basis_phi(Complex a, long n, double theta) {
    // |M_a(e^{i theta})| = 1, so the n'th power is a pure phase
    double psi = mobius_boundary_angle(a, theta);
    return std::polar(1.0 / std::sqrt(kTwoPi), static_cast<double>(n) * psi);
}

Complex basis_psi(Complex a, long n, double theta) {
    if (n == 0)
        throw std::invalid_argument("basis_psi requires a nonzero index");
    return jacobian_sqrt_boundary(a, theta) * basis_phi(a, n, theta);
}

} // namespace eitdist

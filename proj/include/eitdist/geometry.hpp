#pragma once

#include <complex>
#include <stdexcept>

namespace eitdist {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wraps an angle to (-pi, pi].
double normalize_angle(double phi);

/// Circular inclusion B_{C,R} with conductivity contrast A inside the
/// unit disk. The conductivity is 1 + A inside the ball and 1 outside.
class Inclusion {
public:
    Inclusion(Complex center, double radius, double contrast);

    Complex center() const { return center_; }
    double radius() const { return radius_; }
    double contrast() const { return contrast_; }

private:
    Complex center_;
    double radius_;
    double contrast_;
};

/// Parameters of the disk automorphism M_a linking an inclusion to its
/// concentric image B_{0,r}. Cartesian a and polar (rho, zeta) are kept
/// in sync at construction; zeta is normalized to (-pi, pi].
struct MobiusParam {
    Complex a;
    double rho;
    double zeta;
    double r;
};

MobiusParam make_mobius_param(Complex a, double r);

/// M_a(x) = (x - a) / (conj(a) x - 1). Involution on the closed unit disk.
Complex mobius_apply(Complex a, Complex x);

/// Boundary angle map: arg M_a(e^{i theta}).
double mobius_boundary_angle(Complex a, double theta);

/// The unique Moebius parameter moving B_{C,R} to a concentric ball.
MobiusParam to_concentric(const Inclusion& inc);

/// Image geometry of B_{0,r} under M_a, carrying the given contrast.
Inclusion from_concentric(Complex a, double r, double contrast);

/// Boundary Jacobian factor (1-rho^2)/(1+rho^2-2 rho cos(theta-zeta)).
double jacobian_sqrt_boundary(Complex a, double theta);
double jacobian_sqrt_boundary(const MobiusParam& p, double theta);

/// Fourier coefficients of the boundary Jacobian factor:
/// h_0 = 1, h_n = conj(a)^n for n > 0, h_n = a^{|n|} for n < 0.
Complex fourier_coeff_h(Complex a, long n);

/// Transformed Fourier basis phi_n(theta) = (1/sqrt(2 pi)) M_a(e^{i theta})^n,
/// orthonormal in the (+1/2)-weighted inner product.
Complex basis_phi(Complex a, long n, double theta);

/// psi_n = J_a^{1/2} phi_n, orthonormal in the (-1/2)-weighted inner
/// product on the mean-free subspace; n = 0 is excluded.
Complex basis_psi(Complex a, long n, double theta);

} // namespace eitdist

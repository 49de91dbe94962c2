#pragma once

#include <vector>

#include "eitdist/eigensolve.hpp"
#include "eitdist/spectra.hpp"

namespace eitdist {

struct BoundInterval {
    double lower;
    double upper;
};

/// DN distinguishability bounds on the ratio
/// ||Lambda(gamma_{0,r})-Lambda(1)|| / ||Lambda(gamma_{C,R})-Lambda(1)||:
/// lower = (1-rho)/(1+rho), upper = sqrt((1-rho^2)/(1+rho^2)).
BoundInterval dn_bound_interval(double rho);

/// ND bounds on the concentric/non-concentric norm ratio:
/// lower = (1-rho)/(1+rho), upper = sqrt(1+rho^2)/(1-rho^2).
BoundInterval nd_bound_interval(double rho);

/// One sweep point. The ratio is oriented concentric/non-concentric for
/// both kinds; in_bounds allows a relative slack of 1e-9 * upper.
struct BoundsReport {
    double rho = 0.0;
    double concentric_norm = 0.0;
    double nonconcentric_norm = 0.0;
    double ratio = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    OperatorKind kind = OperatorKind::DnDiff;
    bool in_bounds = false;
    bool converged = false;
};

/// Sweeps the depth parameter rho at a fixed concentric radius, computing
/// the non-concentric norm by eigensolve and the concentric norm in closed
/// form. Non-converged points are reported but excluded from pass/fail.
std::vector<BoundsReport> verify_bounds(double r, double contrast,
                                        const std::vector<double>& rho_grid,
                                        OperatorKind kind, double tol = 1e-12,
                                        int threads = 1);

/// One point of a fixed-radius depth sweep: inclusion B_{C,R} with R fixed
/// and |C| varied. For the DN kind the fixed-size upper bound
/// ||Lambda(gamma_{0,R})-Lambda(1)|| <= sqrt((1-rho^2)/(1+rho^2)) * norm
/// is checked, with rho the Moebius parameter of the ball whose concentric
/// radius equals R at this center.
struct FixedSizeReport {
    double c = 0.0;
    double rho_small = 0.0;
    double norm = 0.0;
    std::vector<double> leading; // magnitudes of the k leading eigenvalues
    bool bound_ok = false;
    bool converged = false;
};

std::vector<FixedSizeReport> verify_fixed_size(double radius, double contrast,
                                               const std::vector<double>& c_grid,
                                               OperatorKind kind, int k = 10,
                                               double tol = 1e-12, int threads = 1);

struct MonotonicityReport {
    double radius = 0.0;
    double norm = 0.0;
    bool converged = false;
};

/// DN difference norms for nested balls of growing radius at a fixed center.
std::vector<MonotonicityReport> verify_monotonicity(Complex center,
                                                    const std::vector<double>& radii,
                                                    double contrast,
                                                    double tol = 1e-12);

} // namespace eitdist
